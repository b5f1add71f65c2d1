#include "annideal/sequence.hpp"

#include <algorithm>

#include "annideal/groebner.hpp"
#include "annideal/text.hpp"

namespace annideal {

namespace {

const Field& field_of(std::span<const FieldElement> s) {
  if (s.empty()) throw UsageError("empty sequence");
  for (const auto& v : s)
    if (!(v.field() == s.front().field())) detail::throw_mixed_fields(v.field(), s.front().field());
  return s.front().field();
}

struct SeqRun {
  SequencePair pair;
  std::vector<int> profile;
};

SeqRun run_sequence(std::span<const FieldElement> s) {
  const Field field = field_of(s);
  const int n = static_cast<int>(s.size());
  const std::vector<FieldElement> window_source(s.rbegin(), s.rend());
  const std::span<const FieldElement> R(window_source);

  Form f1 = Form::monomial(field, Monomial{0, 0});
  Form f2 = Form::zero(field);
  FieldElement delta2_inv = field.one();
  int d = 1;
  std::vector<int> profile;
  profile.reserve(s.size());
  for (int i = 0; i < n; ++i) {
    const FieldElement delta1 = detail::window_discrepancy(f1.coefficients(), R.subspan(static_cast<std::size_t>(n - 1 - i)));
    if (!delta1.is_zero()) {
      const FieldElement q = delta1 * delta2_inv;
      if (d <= 0) {
        f1.sub_scaled(q, f2, -d);
      } else {
        Form g = f1;
        g.mul_x(d);
        g.sub_scaled(q, f2, 0);
        f2 = std::move(f1);
        f1 = std::move(g);
        delta2_inv = delta1.inv();
        d = -d;
      }
    }
    f2.mul_z();
    d += 1;
    profile.push_back(f1.degree());
  }
  return {SequencePair{std::move(f1), std::move(f2), n}, std::move(profile)};
}

}  // namespace

Sequence parse_sequence(const Field& field, std::string_view src) {
  if (text::trim(src).empty()) throw ParseError("empty sequence");
  Sequence s;
  for (const auto& tok : text::split(src, ',')) {
    if (tok.empty()) throw ParseError("empty sequence term in '" + std::string(src) + "'");
    s.push_back(field.parse_element(tok));
  }
  return s;
}

std::string to_string(std::span<const FieldElement> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].to_string();
  }
  return out;
}

bool is_trivial(std::span<const FieldElement> s) {
  return std::all_of(s.begin(), s.end(), [](const FieldElement& v) { return v.is_zero(); });
}

ViablePair SequencePair::viable() const {
  if (trivial()) throw UsageError("the trivial sequence has no viable pair");
  return ViablePair{f1, f2, 1 - length};
}

std::optional<InverseForm> inverse_form(std::span<const FieldElement> s) {
  const Field field = field_of(s);
  if (is_trivial(s)) return std::nullopt;
  const int n = static_cast<int>(s.size());
  return InverseForm::from_coefficients(field, 1 - n, std::vector<FieldElement>(s.rbegin(), s.rend()));
}

SequencePair viable_pair_seq(std::span<const FieldElement> s) { return run_sequence(s).pair; }

bool is_annihilating(const UniPoly& psi, std::span<const FieldElement> s) {
  const Field field = field_of(s);
  if (!(psi.field() == field)) detail::throw_mixed_fields(psi.field(), field);
  if (psi.is_zero()) return true;
  const int L = psi.degree();
  const int n = static_cast<int>(s.size());
  for (int k = 0; k + L <= n - 1; ++k) {
    FieldElement acc = field.zero();
    for (int j = 0; j <= L; ++j) acc += psi.coeff(j) * s[static_cast<std::size_t>(j + k)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

int linear_complexity(std::span<const FieldElement> s) { return run_sequence(s).pair.f1.degree(); }

std::vector<int> lc_profile(std::span<const FieldElement> s) { return run_sequence(s).profile; }

BmPair bm_variant(std::span<const FieldElement> s) {
  const Field field = field_of(s);
  UniPoly mu = UniPoly::monomial(field.one(), 0);
  UniPoly mu_prime = UniPoly::zero(field);
  FieldElement delta_prime = field.one();
  int d = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int L = mu.degree();
    if (static_cast<std::size_t>(L) > i) throw InvariantViolation("bm_variant: degree exceeds prefix length");
    FieldElement delta = field.zero();
    for (int j = 0; j <= L; ++j) delta += mu.coeff(j) * s[i + static_cast<std::size_t>(j) - static_cast<std::size_t>(L)];
    if (delta.is_zero()) {
      d += 1;
      continue;
    }
    const FieldElement q = delta / delta_prime;
    if (d <= 0) {
      mu = mu - mu_prime.times_x(-d).scaled(q);
    } else {
      UniPoly psi = mu;
      mu = mu.times_x(d) - mu_prime.scaled(q);
      mu_prime = std::move(psi);
      delta_prime = delta;
      d = -d;
    }
    d += 1;
  }
  return {std::move(mu), std::move(mu_prime)};
}

BmPair dehom_pair(const ViablePair& f) { return {dehomogenise(f.f1), dehomogenise(f.f2)}; }

BmPair dehom_pair(const SequencePair& f) {
  return {dehomogenise(f.f1), f.f2.is_zero() ? UniPoly::zero(f.f1.field()) : dehomogenise(f.f2)};
}

ViablePair hom_pair(const BmPair& p, int n) {
  if (p.mu.is_zero() || p.mu_prime.is_zero()) throw UsageError("hom_pair needs nonzero mu and mu'");
  const int e = n + 1 - p.mu.degree() - p.mu_prime.degree();
  if (e < 1) throw UsageError("hom_pair: inconsistent pair, z-exponent " + std::to_string(e));
  return ViablePair{homogenise(p.mu), homogenise(p.mu_prime).times_z(e), 1 - n};
}

UniPoly minimal_polynomial(std::span<const FieldElement> s) { return dehomogenise(viable_pair_seq(s).f1); }

std::vector<Form> intersect_annihilators(std::span<const FieldElement> s, std::span<const FieldElement> t) {
  if (is_trivial(s) || is_trivial(t)) throw UsageError("intersect_annihilators: trivial sequence");
  return intersect_ideals(viable_pair_seq(s).viable(), viable_pair_seq(t).viable());
}

}  // namespace annideal
