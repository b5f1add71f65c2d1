#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "annideal/benchmark.hpp"
#include "annideal/oracle.hpp"
#include "support/support.hpp"

using namespace support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Every inverse form constructed by criteria 3 to 5, rechecked by criterion 8.
std::vector<InverseForm> instances;

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

std::vector<Form> forms(const Field& k, std::initializer_list<const char*> xs) {
  std::vector<Form> out;
  for (const char* s : xs) out.push_back(P(k, s));
  return out;
}

Outcome worked_tables() {
  Outcome o;
  const InverseForm F = IF(gf2(), "x^-6*z^-1 + x^-4*z^-3 + x^-3*z^-4 + z^-7");
  struct Row {
    int i;
    const char* F;
    const char* q;
    int d;
    bool B;
    const char* f1;
    const char* f2;
    std::vector<const char*> gb;
    std::vector<int> N;
  };
  const std::vector<Row> rows = {
      {0, "1", nullptr, 0, false, "x", "z", {"x", "z"}, {0, 1}},
      {-1, "z^-1", "0", 1, false, "x", "z^2", {"x", "z^2"}, {-1, 1}},
      {-2, "z^-2", "0", 2, true, "x", "z^3", {"x", "z^3"}, {-2, 1}},
      {-3, "x^-3 + z^-3", "1", -1, false, "x^3 + z^3", "x*z", {"x^3 + z^3", "x*z", "z^4"}, {-3, -2, 1}},
      {-4, "x^-4 + x^-3*z^-1 + z^-4", "1", 0, false, "x^3 + x^2*z + z^3", "x*z^2",
       {"x^3 + x^2*z + z^3", "x*z^2", "z^5"}, {-4, -2, 1}},
      {-5, "x^-4*z^-1 + x^-3*z^-2 + z^-5", "1", 1, true, "x^3 + x^2*z + x*z^2 + z^3", "x*z^3",
       {"x^3 + x^2*z + x*z^2 + z^3", "x*z^3", "z^6"}, {-5, -2, 1}},
      {-6, "x^-6 + x^-4*z^-2 + x^-3*z^-3 + z^-6", "1", 0, false, "x^4 + x^3*z + x^2*z^2",
       "x^3*z + x^2*z^2 + x*z^3 + z^4",
       {"x^4 + x^3*z + x^2*z^2", "x^3*z + x^2*z^2 + x*z^3 + z^4", "x*z^4", "z^7"}, {-6, -5, -2, 1}},
      {-7, "x^-6*z^-1 + x^-4*z^-3 + x^-3*z^-4 + z^-7", "1", 1, true, "x^4 + x*z^3 + z^4",
       "x^3*z^2 + x^2*z^3 + x*z^4 + z^5",
       {"x^4 + x*z^3 + z^4", "x^3*z^2 + x^2*z^3 + x*z^4 + z^5", "x*z^5", "z^8"}, {-7, -5, -2, 1}},
  };
  const auto trace = viable_pair_traced(F).trace;
  expect(o, trace.size() == rows.size(), "trace has " + std::to_string(trace.size()) + " rows");
  for (std::size_t r = 0; o.ok && r < rows.size(); ++r) {
    const auto& e = rows[r];
    const auto& t = trace[r];
    const std::string at = "row i=" + std::to_string(e.i) + ": ";
    expect(o, t.i == e.i, at + "i");
    expect(o, t.subform == IF(gf2(), e.F), at + "F^(i)");
    expect(o, e.q ? t.q && *t.q == E(gf2(), e.q) : !t.q, at + "q");
    expect(o, t.d == e.d, at + "d");
    expect(o, t.B == e.B, at + "B");
    expect(o, t.f1 == P(gf2(), e.f1) && t.f2 == P(gf2(), e.f2), at + "f");
    std::vector<Form> gb;
    for (const char* s : e.gb) gb.push_back(P(gf2(), s));
    const AnnihilatorResult res = form_vector(subform(F, e.i));
    expect(o, res.form_vector == gb, at + "form vector");
    expect(o, res.degree_vector == e.N, at + "degree vector");
  }
  if (o.ok) o.detail = "8 trace rows, 8 form vectors, final N = (-7, -5, -2, 1)";
  return o;
}

Outcome rgb_fixtures() {
  Outcome o;
  const auto a = reduced_gb(*inverse_form(S(qq(), "2,1,2")));
  expect(o, a == forms(qq(), {"x^2 - z^2", "x*z - 1/2*z^2", "z^3"}), "Q input 2,1,2");
  const auto b = reduced_gb(*inverse_form(S(gf2(), "0,1,1,0,1,0")));
  expect(o, b == forms(gf2(), {"x^4 + x*z^3 + z^4", "x^2*z + x*z^2 + z^3", "z^5"}), "GF(2) input 0,1,1,0,1,0");
  if (o.ok) o.detail = "both reduced bases match exactly";
  return o;
}

Outcome groebner_properties() {
  Outcome o;
  int cases = 0, syz = 0;
  for (const auto& k : all_fields()) {
    Rng rng(20240601);
    for (int t = 0; t < 500 && o.ok; ++t) {
      const Sequence s = random_nontrivial_sequence(k, 1 + t % 24, rng);
      const InverseForm F = *inverse_form(s);
      instances.push_back(F);
      const AnnihilatorResult r = form_vector(F);
      const auto& G = r.form_vector;
      const std::string at = k.name() + " s=" + to_string(s) + ": ";
      expect(o, is_groebner(std::span<const Form>(G)), at + "not a Groebner basis");
      expect(o, is_minimal(std::span<const Form>(G)), at + "not minimal");
      const Form gens[] = {r.pair.f1, r.pair.f2};
      expect(o, same_set(reduced_gb(F), reduce_gb(buchberger(gens))), at + "reduced bases differ");
      expect(o, remainder(spoly(G[0], G[1]), std::span<const Form>(G)).is_zero(), at + "rem Spol(F1, F2) != 0");
      if (G.size() >= 3) {
        const SyzygyTriple w = syzygy_triple(r);
        expect(o, (w.s1 * G[0] + w.s2 * G[1] + G[2].scaled(w.s3)).is_zero(), at + "syzygy triple");
        ++syz;
      }
      ++cases;
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " sequences, " + std::to_string(syz) + " syzygy triples";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const int n = 10;
  for (std::uint32_t bits = 1; bits < (1u << n) && o.ok; ++bits) {
    const Sequence s = bits_to_sequence(bits, n);
    const InverseForm F = *inverse_form(s);
    instances.push_back(F);
    const int m = F.degree();
    const AnnihilatorResult r = form_vector(F);
    const std::string at = "s=" + to_string(s) + ": ";
    expect(o, r.lambda == lambda(F) && lambda(F) == oracle::exhaustive_lc(s), at + "lambda != exhaustive LC");
    const int dim = dimension(F);
    expect(o, dim == oracle::standard_monomial_count(r.form_vector, m), at + "dimension != standard monomials");
    expect(o, dim == r.pair.f1.degree() * r.pair.f2.degree(), at + "dimension != |f1||f2|");
    expect(o, dim == r.lambda * (2 - m - r.lambda), at + "dimension != lambda(2 - m - lambda)");
  }
  if (o.ok) o.detail = "all 1023 nontrivial GF(2) sequences of length 10";
  return o;
}

Outcome correspondence() {
  Outcome o;
  int cases = 0;
  const auto fields = all_fields();
  Rng rng(20240602);
  for (int t = 0; t < 2000 && o.ok; ++t) {
    const Field& k = fields[static_cast<std::size_t>(t) % fields.size()];
    const int n = 1 + t % 32;
    const Sequence s = random_sequence(k, n, rng, t % 3 == 0);
    const SequencePair f = viable_pair_seq(s);
    const BmPair bm = bm_variant(s);
    const std::string at = k.name() + " s=" + to_string(s) + ": ";
    expect(o, dehom_pair(f) == bm, at + "dehomogenised pair != BM variant");
    if (!f.trivial()) {
      expect(o, hom_pair(bm, n) == f.viable(), at + "hom_pair does not invert");
      instances.push_back(*inverse_form(s));
    }
    ++cases;
  }
  if (o.ok) o.detail = std::to_string(cases) + " sequences over GF(2), GF(3), GF(7), Q";
  return o;
}

Outcome intersections() {
  Outcome o;
  const Field k = gf2();
  const Sequence s = S(k, "1,0,0,1,1,1"), t = S(k, "1,0,0,0,1,0,0,1");
  expect(o, oracle::ideal_equal(intersect_annihilators(s, t),
                                forms(k, {"x^6 + x^3*z^3 + x^2*z^4", "x^4*z + x*z^4 + z^5", "x*z^4"})),
         "first intersection");
  expect(o, oracle::ideal_equal(intersect_annihilators(S(k, "1,0,0,1,1,1,0,1"), S(k, "1,0,0,1,1,0,1,0")),
                                forms(k, {"x^6 + x^5*z + x^2*z^4 + z^6", "x^3*z^3 + x^2*z^4 + z^6", "x*z^5", "z^8"})),
         "second intersection");
  const UniPoly good = UniPoly::parse(k, "x^6 + x^3 + x^2");
  expect(o, is_annihilating(good, s) && is_annihilating(good, t), "x^6 + x^3 + x^2 not in Ann_s and Ann_t");
  expect(o, is_annihilating(UniPoly::parse(k, "x^6 + x^5 + x^2 + 1"), S(k, "1,0,0,1,1,1,0,1")) &&
                is_annihilating(UniPoly::parse(k, "x^6 + x^5 + x^2 + 1"), S(k, "1,0,0,1,1,0,1,0")),
         "x^6 + x^5 + x^2 + 1 not in both");
  // [(x^6 + x^3)(1 + x^-3 + x^-4 + x^-5)]_0 with the series read off s
  oracle::LaurentPoly psi(k), series(k);
  psi.add_term(6, 0, k.one());
  psi.add_term(3, 0, k.one());
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!s[j].is_zero()) series.add_term(-static_cast<int>(j), 0, s[j]);
  const FieldElement c0 = (psi * series).coefficient(0, 0);
  expect(o, c0.is_one(), "[(x^6 + x^3) s]_0 != 1");
  const bool windowed = is_annihilating(UniPoly::parse(k, "x^6 + x^3"), s);
  if (o.ok)
    o.detail = "ideals equal; x^6+x^3+x^2 in both; [(x^6+x^3)(1+x^-3+x^-4+x^-5)]_0 = 1, so x^6+x^3 fails the "
               "series test (the windowed membership test is vacuous at degree n and reports " +
               std::string(windowed ? "true" : "false") + ")";
  return o;
}

Outcome complexity() {
  Outcome o;
  std::ostringstream detail;
  if (!instrumentation::counting_enabled()) {
    o.ok = false;
    o.detail = "built without multiplication counting";
    return o;
  }
  const Field k = gf2();
  Rng rng(20240603);
  for (int n : {256, 1024, 4096}) {
    std::uint64_t worst = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const InverseForm F = *inverse_form(random_nontrivial_sequence(k, n, rng));
      instrumentation::reset_multiplications();
      (void)viable_pair(F);
      worst = std::max(worst, instrumentation::multiplications());
    }
    expect(o, worst <= multiplication_bound(n), "count(" + std::to_string(n) + ") exceeds the bound");
    detail << "count(" << n << ")=" << worst << "<=" << multiplication_bound(n) << "; ";
  }
  const int sizes[] = {1024, 2048, 4096};
  const BenchReport rep = run_quadratic_benchmark(sizes, 20240601, 11);
  for (std::size_t j = 0; j < rep.ratios.size(); ++j) {
    const double r = rep.ratios[j];
    expect(o, r >= 3.4 && r <= 4.6, "time ratio " + std::to_string(r) + " outside [3.4, 4.6]");
    char buf[64];
    std::snprintf(buf, sizeof buf, "t(%d)/t(%d)=%.2f", rep.rows[j + 1].n, rep.rows[j].n, r);
    detail << buf << (j + 1 < rep.ratios.size() ? "; " : "");
  }
  o.detail = detail.str() + (o.ok ? "" : " | " + o.detail);
  return o;
}

bool perfect_profile(const std::vector<int>& profile, int m) {
  if (static_cast<int>(profile.size()) != 1 - m) return false;
  for (int i = m; i <= 0; ++i)
    if (profile[static_cast<std::size_t>(i - m)] != (2 - i) / 2) return false;
  return true;
}

Outcome structural_invariants() {
  Outcome o;
  int perfect = 0, essential = 0;
  for (const InverseForm& F : instances) {
    if (!o.ok) break;
    const int m = F.degree(), nu = F.order();
    const AnnihilatorResult r = form_vector(F);
    const auto& G = r.form_vector;
    const auto& p = r.lambda_profile;  // p[i - m] = lambda of F^(i)
    const std::string at = F.to_string() + ": ";
    auto lam = [&](int i) { return i > nu ? 0 : p[static_cast<std::size_t>(i - m)]; };
    for (std::size_t j = 0; j < G.size(); ++j) {
      const int N = r.degree_vector[j];
      expect(o, G[j].leading_monomial() == Monomial{lam(N), N - m}, at + "exponent law");
    }
    expect(o, static_cast<int>(G.size()) <= r.lambda + 1, at + "|F| > lambda + 1");
    if (perfect_profile(p, m)) {
      ++perfect;
      expect(o, static_cast<int>(G.size()) == r.lambda + 1, at + "|F| != lambda + 1 on a perfect profile");
    }
    for (int i = m; i < nu; ++i) expect(o, lam(i) >= lam(i + 1), at + "lambda decreases under augmentation");
    if (r.triple) {
      ++essential;
      const auto& tr = *r.triple;
      expect(o, r.pair.f2 == tr.f1_prime.times_z(tr.m_prime - m), at + "f2 != f1' z^(m'-m)");
      expect(o, r.lambda + tr.f1_prime.degree() == 2 - tr.m_prime, at + "lambda + lambda' != 2 - m'");
      expect(o, lam(tr.m_prime) == tr.f1_prime.degree(), at + "lambda' is not lambda at m'");
    }
  }
  if (o.ok)
    o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(perfect) + " perfect profiles, " +
               std::to_string(essential) + " essential";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"worked example tables reproduced", worked_tables},
      {"reduced basis fixtures", rgb_fixtures},
      {"Groebner properties on random sequences", groebner_properties},
      {"exhaustive oracle equivalence", oracle_equivalence},
      {"sequence and BM correspondence", correspondence},
      {"ideal intersections", intersections},
      {"multiplication bound and quadratic scaling", complexity},
      {"structural invariants on criteria 3-5 instances", structural_invariants},
  };
  const double limits[] = {1, 60, 60, 300, 60, 60, 30, 60};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && sec >= limits[k]) {
      o.ok = false;
      o.detail += " | over the time limit";
    }
    all = all && o.ok;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", sec);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << buf << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
