#include "annideal/verify.hpp"

#include <functional>
#include <optional>

#include "annideal/annihilator.hpp"
#include "annideal/groebner.hpp"
#include "annideal/oracle.hpp"
#include "annideal/random.hpp"
#include "annideal/sequence.hpp"

namespace annideal {

namespace {

const std::vector<Field>& test_fields() {
  static const std::vector<Field> fields{Field::gf2(), Field::gfp(3), Field::gfp(7), Field::rationals()};
  return fields;
}

// Every nonzero GF(2) coefficient vector of the given length.
std::vector<std::vector<FieldElement>> all_binary(int len) {
  const Field f = Field::gf2();
  std::vector<std::vector<FieldElement>> out;
  for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
    std::vector<FieldElement> c;
    for (int k = 0; k < len; ++k) c.push_back(f.from_integer((mask >> k) & 1u));
    out.push_back(std::move(c));
  }
  return out;
}

using Body = std::function<std::optional<std::string>(Rng&, std::size_t&)>;

VerifyCheck run_check(std::string name, std::uint64_t seed, const Body& body) {
  VerifyCheck c{std::move(name), seed, 0, false, {}};
  Rng rng(seed);
  try {
    auto failure = body(rng, c.cases);
    c.passed = !failure;
    if (failure) c.detail = *failure;
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

std::optional<std::string> laurent_agreement(Rng& rng, std::size_t& cases) {
  std::uniform_int_distribution<int> deg(-8, 0);
  std::uniform_int_distribution<int> fdeg(0, 6);
  for (const auto& field : test_fields())
    for (int k = 0; k < 1000; ++k, ++cases) {
      const InverseForm F = random_inverse_form(field, deg(rng), rng);
      Form phi = random_form(field, fdeg(rng), rng);
      if (k % 3 == 0) phi = viable_pair(F).f1 * random_form(field, fdeg(rng) % 2, rng);
      if (oracle::laurent_annihilation_check(phi, F) != annihilates(phi, F))
        return "phi = " + phi.to_string() + ", F = " + F.to_string();
    }
  return std::nullopt;
}

std::optional<std::string> lambda_exhaustive(Rng&, std::size_t& cases) {
  const Field f = Field::gf2();
  for (int len = 1; len <= 8; ++len)
    for (auto& c : all_binary(len)) {
      ++cases;
      const InverseForm F = InverseForm::from_coefficients(f, 1 - len, c);
      if (oracle::exhaustive_lambda(F) != lambda(F)) return "F = " + F.to_string();
    }
  return std::nullopt;
}

std::optional<std::string> lc_exhaustive(Rng&, std::size_t& cases) {
  for (int n = 1; n <= 10; ++n)
    for (auto& s : all_binary(n)) {
      ++cases;
      if (oracle::exhaustive_lc(s) != linear_complexity(s)) return "s = " + to_string(s);
    }
  return std::nullopt;
}

std::optional<std::string> standard_monomials(Rng& rng, std::size_t& cases) {
  std::uniform_int_distribution<int> len(1, 16);
  for (const auto& field : test_fields())
    for (int k = 0; k < 100; ++k, ++cases) {
      const InverseForm F = random_inverse_form(field, 1 - len(rng), rng);
      const AnnihilatorResult r = form_vector(F);
      const int count = oracle::standard_monomial_count(r.form_vector, F.degree());
      if (count != r.big_lambda || count != r.pair.f1.degree() * r.pair.f2.degree())
        return "F = " + F.to_string();
    }
  return std::nullopt;
}

std::optional<std::string> buchberger_agreement(Rng& rng, std::size_t& cases) {
  std::uniform_int_distribution<int> len(1, 14);
  for (const auto& field : test_fields())
    for (int k = 0; k < 60; ++k, ++cases) {
      const InverseForm F = random_inverse_form(field, 1 - len(rng), rng);
      const ViablePair f = viable_pair(F);
      const Form gens[] = {f.f1, f.f2};
      if (reduce_gb(buchberger(std::span<const Form>(gens))) != reduced_gb(F)) return "F = " + F.to_string();
      const AnnihilatorResult r = form_vector(F);
      if (!is_minimal(std::span<const Form>(r.form_vector))) return "form vector not minimal for F = " + F.to_string();
    }
  return std::nullopt;
}

std::optional<std::string> bm_correspondence(Rng& rng, std::size_t& cases) {
  std::uniform_int_distribution<int> len(1, 32);
  for (const auto& field : test_fields())
    for (int k = 0; k < 200; ++k, ++cases) {
      const int n = len(rng);
      const Sequence s = random_nontrivial_sequence(field, n, rng);
      const SequencePair f = viable_pair_seq(s);
      const BmPair bm = bm_variant(s);
      if (dehom_pair(f) != bm || hom_pair(bm, n) != f.viable()) return "s = " + to_string(s);
      const InverseForm F = *inverse_form(s);
      if (viable_pair(F) != f.viable()) return "inverse-form path differs for s = " + to_string(s);
    }
  return std::nullopt;
}

}  // namespace

std::vector<VerifyCheck> run_verification(std::uint64_t seed) {
  std::vector<VerifyCheck> out;
  out.push_back(run_check("laurent-product vs annihilates", seed, laurent_agreement));
  out.push_back(run_check("exhaustive lambda, GF(2), 1-m <= 8", seed, lambda_exhaustive));
  out.push_back(run_check("exhaustive linear complexity, GF(2), n <= 10", seed, lc_exhaustive));
  out.push_back(run_check("standard monomials = dimension = |f1||f2|", seed + 1, standard_monomials));
  out.push_back(run_check("reduced basis vs Buchberger", seed + 2, buchberger_agreement));
  out.push_back(run_check("Berlekamp-Massey correspondence", seed + 3, bm_correspondence));
  return out;
}

}  // namespace annideal
