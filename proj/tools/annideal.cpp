#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "annideal/annihilator.hpp"
#include "annideal/benchmark.hpp"
#include "annideal/groebner.hpp"
#include "annideal/io.hpp"
#include "annideal/sequence.hpp"
#include "annideal/text.hpp"
#include "annideal/verify.hpp"

using namespace annideal;

namespace {

constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Config {
  std::string field = "gf2";
  std::vector<std::string> seqs;
  std::string invform;
  std::string file;
  bool json = false;
  bool csv = false;
  bool trace = false;
  bool reduced = false;
  bool profile = false;
  std::uint64_t seed = 20240601;
  std::vector<int> sizes{1024, 2048, 4096};
  int repetitions = 5;
};

using Input = std::variant<Sequence, InverseForm>;

InverseForm parse_invform(const Field& field, const std::string& text) {
  const std::string t(text::trim(text));
  if (!t.empty() && t.front() == '{') return io::inverse_form_from_json(t);
  if (t.rfind("m=", 0) == 0 || t.rfind("m =", 0) == 0) return InverseForm::parse(field, t);
  return InverseForm::parse_polynomial(field, t);
}

std::vector<Input> gather(const Config& cfg, const Field& field) {
  const int sources = (!cfg.seqs.empty()) + (!cfg.invform.empty()) + (!cfg.file.empty());
  if (sources != 1) throw UsageError("give exactly one input source: --seq, --invform or --file");
  std::vector<Input> out;
  for (const auto& s : cfg.seqs) out.emplace_back(parse_sequence(field, s));
  if (!cfg.invform.empty()) out.emplace_back(parse_invform(field, cfg.invform));
  if (!cfg.file.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.file != "-") {
      file.open(cfg.file);
      if (!file) throw ParseError("cannot open " + cfg.file);
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      const std::string t(text::trim(line));
      if (t.empty() || t.front() == '#') continue;
      if (t.front() == '{' || t.rfind("m=", 0) == 0 || t.find('x') != std::string::npos || t.find('z') != std::string::npos)
        out.emplace_back(parse_invform(field, t));
      else
        out.emplace_back(parse_sequence(field, t));
    }
  }
  if (out.empty()) throw UsageError("no input");
  return out;
}

std::string join(std::span<const Form> G) {
  std::string s;
  for (const auto& g : G) s += (s.empty() ? "" : ", ") + g.to_string();
  return s;
}

std::string join(std::span<const int> v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

InverseForm require_form(const Input& in) {
  if (const auto* F = std::get_if<InverseForm>(&in)) return *F;
  const auto& s = std::get<Sequence>(in);
  auto F = inverse_form(s);
  if (!F) throw UsageError("the trivial sequence " + to_string(s) + " has no inverse form");
  return *F;
}

void print_trace(const Config& cfg, const InverseForm& F, bool from_sequence) {
  const auto rows = viable_pair_traced(F).trace;
  std::cout << (cfg.csv ? io::trace_csv(rows, from_sequence) : io::trace_table(rows, from_sequence));
}

void cmd_pair(const Config& cfg, const Input& in) {
  if (const auto* s = std::get_if<Sequence>(&in)) {
    if (cfg.json && !cfg.reduced) {
      std::cout << io::sequence_json(*s) << '\n';
      return;
    }
    if (viable_pair_seq(*s).trivial()) {
      std::cout << "f = (1, 0)\n";
      return;
    }
  }
  const InverseForm F = require_form(in);
  if (cfg.trace) print_trace(cfg, F, std::holds_alternative<Sequence>(in));
  if (cfg.reduced) {
    const auto G = reduced_gb(F);
    std::cout << (cfg.json ? io::forms_json(G) : "basis = " + join(G)) << '\n';
    return;
  }
  if (cfg.json) {
    std::cout << io::result_json(form_vector(F)) << '\n';
    return;
  }
  const ViablePair f = viable_pair(F);
  std::cout << "f1 = " << f.f1.to_string() << "\nf2 = " << f.f2.to_string() << '\n';
}

void cmd_gb(const Config& cfg, const Input& in) {
  const InverseForm F = require_form(in);
  if (cfg.trace) print_trace(cfg, F, std::holds_alternative<Sequence>(in));
  const AnnihilatorResult r = form_vector(F);
  if (cfg.json) {
    std::cout << io::result_json(r) << '\n';
    return;
  }
  std::cout << "basis = " << join(r.form_vector) << "\nN = (" << join(r.degree_vector, ", ") << ")\n"
            << "lambda = " << r.lambda << "\ndimension = " << r.big_lambda << '\n';
}

void cmd_rgb(const Config& cfg, const Input& in) {
  const auto G = reduced_gb(require_form(in));
  std::cout << (cfg.json ? io::forms_json(G) : "basis = " + join(G)) << '\n';
}

void cmd_lc(const Config& cfg, const Input& in) {
  if (const auto* s = std::get_if<Sequence>(&in)) {
    if (cfg.json) {
      std::cout << io::sequence_json(*s) << '\n';
      return;
    }
    std::cout << "lc = " << linear_complexity(*s) << '\n';
    if (cfg.profile) std::cout << "profile = " << join(lc_profile(*s), ",") << '\n';
    std::cout << "mu = " << minimal_polynomial(*s).to_string() << '\n';
    return;
  }
  const InverseForm& F = std::get<InverseForm>(in);
  std::cout << "lambda = " << lambda(F) << '\n';
  if (cfg.profile) std::cout << "profile = " << join(lambda_profile(F), ",") << '\n';
}

int cmd_intersect(const Config& cfg, const std::vector<Input>& inputs) {
  if (inputs.size() != 2) throw UsageError("intersect needs exactly two inputs");
  std::vector<Form> G;
  const auto* s = std::get_if<Sequence>(&inputs[0]);
  const auto* t = std::get_if<Sequence>(&inputs[1]);
  if (s && t) {
    G = intersect_annihilators(*s, *t);
  } else {
    G = intersect_ideals(viable_pair(require_form(inputs[0])), viable_pair(require_form(inputs[1])));
  }
  std::cout << (cfg.json ? io::forms_json(G) : "basis = " + join(G)) << '\n';
  return 0;
}

int cmd_verify(const Config& cfg) {
  bool ok = true;
  for (const auto& c : run_verification(cfg.seed)) {
    ok = ok && c.passed;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (cases=" << c.cases << ", seed=" << c.seed << ")";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_bench(const Config& cfg) {
  const BenchReport rep = run_quadratic_benchmark(cfg.sizes, cfg.seed, cfg.repetitions);
  bool ok = true;
  if (cfg.json) {
    std::cout << "[";
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      const auto& r = rep.rows[k];
      std::cout << (k ? "," : "") << "{\"n\":" << r.n << ",\"multiplications\":" << r.multiplications
                << ",\"bound\":" << r.bound << ",\"seconds\":" << r.seconds << "}";
    }
    std::cout << "]\n";
  } else {
    std::cout << "n,multiplications,bound,seconds\n";
    for (const auto& r : rep.rows)
      std::cout << r.n << ',' << (rep.counted ? std::to_string(r.multiplications) : "-") << ',' << r.bound << ','
                << r.seconds << '\n';
    for (std::size_t k = 0; k < rep.ratios.size(); ++k)
      std::cout << "ratio time(" << rep.rows[k + 1].n << ")/time(" << rep.rows[k].n << ") = " << rep.ratios[k] << '\n';
  }
  for (const auto& r : rep.rows) ok = ok && (!rep.counted || r.multiplications <= r.bound);
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--field", cfg.field, "gf2, gfp:<p> or q")->capture_default_str();
  sub->add_option("--seq", cfg.seqs, "comma-separated sequence, s_0 first (repeatable)");
  sub->add_option("--invform", cfg.invform, "\"m=<int>; F=...\", a Laurent polynomial, or JSON");
  sub->add_option("--file", cfg.file, "one input per line; - reads stdin");
  sub->add_flag("--json", cfg.json, "JSON output");
  sub->add_flag("--csv", cfg.csv, "CSV trace");
  sub->add_flag("--trace", cfg.trace, "print the iteration table");
  sub->add_flag("--reduced", cfg.reduced, "reduced Groebner basis");
  sub->add_flag("--profile", cfg.profile, "linear complexity profile");
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilator ideals of finite sequences and inverse forms"};
  app.require_subcommand(1);
  Config cfg;
  const char* names[] = {"pair", "gb", "rgb", "lc", "intersect", "verify", "bench"};
  const char* help[] = {"viable pair", "form vector (minimal Groebner basis)", "reduced Groebner basis",
                        "linear complexity", "intersection of two annihilator ideals", "oracle cross-checks",
                        "multiplication count and timing"};
  std::vector<CLI::App*> subs;
  for (std::size_t k = 0; k < std::size(names); ++k) {
    subs.push_back(app.add_subcommand(names[k], help[k]));
    add_common(subs.back(), cfg);
  }
  subs.back()->add_option("--sizes", cfg.sizes, "sequence lengths")->capture_default_str();
  subs.back()->add_option("--reps", cfg.repetitions, "repetitions per size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "verify") return cmd_verify(cfg);
    if (cmd == "bench") return cmd_bench(cfg);
    const Field field = Field::parse(cfg.field);
    const auto inputs = gather(cfg, field);
    if (cmd == "intersect") return cmd_intersect(cfg, inputs);
    for (const auto& in : inputs) {
      if (cmd == "pair") cmd_pair(cfg, in);
      else if (cmd == "gb") cmd_gb(cfg, in);
      else if (cmd == "rgb") cmd_rgb(cfg, in);
      else if (cmd == "lc") cmd_lc(cfg, in);
    }
    return 0;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
