#include "annideal/annihilator.hpp"

#include <numeric>

#include "annideal/groebner.hpp"

namespace annideal {

namespace {

// rem_g p for forms: one pass over the terms of p in decreasing order.
Form reduce_by(const Form& p, const Form& g) {
  const int D = p.degree();
  const int b = g.z_valuation();
  const int a = g.degree() - b;
  const FieldElement lc_inv = g.leading_coefficient().inv();
  std::vector<FieldElement> c(p.coefficients().begin(), p.coefficients().end());
  auto gc = g.coefficients();
  for (int j = b; j <= D - a; ++j) {
    if (c[static_cast<std::size_t>(j)].is_zero()) continue;
    FieldElement s = c[static_cast<std::size_t>(j)] * lc_inv;
    for (int t = b; t <= g.degree(); ++t)
      if (!gc[static_cast<std::size_t>(t)].is_zero()) c[static_cast<std::size_t>(j - b + t)] -= s * gc[static_cast<std::size_t>(t)];
  }
  return Form::from_coefficients(p.field(), std::move(c));
}

struct Options {
  bool accumulate = false;
  bool reduce = false;
  bool trace = false;
};

struct Run {
  std::vector<Form> vec;  // vec[0], vec[1] are the current pair
  std::vector<int> N;
  std::vector<int> profile;  // lambda_i in visiting order nu, nu-1, ..., m
  std::vector<TraceRow> rows;
};

Run solve(const InverseForm& F, const Options& opt) {
  const Field field = F.field();
  const int m = F.degree();
  const int nu = F.order();
  const auto coeffs = F.coefficients();

  Run run;
  run.vec.push_back(Form::monomial(field, Monomial{1 - nu, 0}));
  run.vec.push_back(Form::monomial(field, Monomial{0, 1}));
  if (opt.accumulate) run.N = {nu, nu + 1};
  run.profile.push_back(1 - nu);

  FieldElement delta2 = F.coefficient(nu);
  FieldElement delta2_inv = delta2.inv();
  int d = nu;
  if (opt.trace) run.rows.push_back({nu, subform(F, nu), std::nullopt, d, false, run.vec[0], run.vec[1]});

  for (int i = nu - 1; i >= m; --i) {
    const auto window = coeffs.subspan(static_cast<std::size_t>(i - m));
    const FieldElement delta1 = detail::window_discrepancy(run.vec[0].coefficients(), window);
    if (opt.trace) run.rows.back().B = !delta1.is_zero() && run.rows.back().d > 0;
    FieldElement q = field.zero();
    if (!delta1.is_zero()) {
      q = delta1 * delta2_inv;
      if (d <= 0) {
        run.vec[0].sub_scaled(q, run.vec[1], -d);
        if (opt.accumulate) run.N[0] = i;
      } else {
        Form g = run.vec[0];
        g.mul_x(d);
        g.sub_scaled(q, run.vec[1], 0);
        run.vec.insert(run.vec.begin(), std::move(g));
        if (!opt.accumulate) run.vec.pop_back();
        if (opt.accumulate) run.N.insert(run.N.begin(), i);
        delta2 = delta1;
        delta2_inv = delta1.inv();
        d = -d;
      }
    } else if (opt.accumulate) {
      run.N[0] = i;
    }
    for (std::size_t k = 1; k < run.vec.size(); ++k) run.vec[k].mul_z();
    d += 1;
    if (opt.reduce && d <= 0) run.vec[0] = reduce_by(run.vec[0], run.vec[1]);
    run.profile.push_back(run.vec[0].degree());
    if (opt.trace) run.rows.push_back({i, subform(F, i), q, d, false, run.vec[0], run.vec[1]});
  }

  if (opt.trace) {
    std::vector<FieldElement> ahead{field.zero()};
    ahead.insert(ahead.end(), coeffs.begin(), coeffs.end());
    const FieldElement next = detail::window_discrepancy(run.vec[0].coefficients(), ahead);
    run.rows.back().B = !next.is_zero() && d > 0;
  }
  return run;
}

int lambda_at(const std::vector<int>& profile, int nu, int i) {
  if (i > nu) return 0;
  return profile[static_cast<std::size_t>(nu - i)];
}

std::optional<AuxiliaryTriple> triple_from_profile(const InverseForm& F, const std::vector<int>& profile,
                                                   const Form& f2) {
  const int m = F.degree();
  const int nu = F.order();
  const int lam = lambda_at(profile, nu, m);
  std::optional<int> m_prime;
  for (int i = m + 1; i <= 0 && !m_prime; ++i)
    if (lambda_at(profile, nu, i) < lam) m_prime = i;
  if (!m_prime) return std::nullopt;

  const Field field = F.field();
  Form f1p = *m_prime > nu ? Form::monomial(field, Monomial{0, 0}) : viable_pair(subform(F, *m_prime)).f1;
  FieldElement delta = discrepancy(f1p, subform(F, *m_prime - 1));
  if (delta.is_zero()) throw InvariantViolation("auxiliary discrepancy vanishes");
  if (!(f2 == f1p.times_z(*m_prime - m)))
    throw InvariantViolation("f2 is not f1' z^(m'-m) for " + F.to_string());
  if (lam + f1p.degree() != 2 - *m_prime)
    throw InvariantViolation("lambda_F + lambda_F' != 2 - m' for " + F.to_string());
  return AuxiliaryTriple{*m_prime, std::move(f1p), std::move(delta)};
}

void check_structure(const AnnihilatorResult& r, const InverseForm& F, const std::vector<int>& visit_profile) {
  const int m = F.degree();
  const int nu = F.order();
  const auto& Fv = r.form_vector;
  const auto& N = r.degree_vector;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(what + " for F = " + F.to_string());
  };
  if (Fv.size() != N.size() || Fv.size() < 2) fail("form and degree vectors disagree in length");
  if (N.front() != m) fail("N_1 != m");
  if (N.back() != nu + 1) fail("last degree-vector entry != nu + 1");
  for (std::size_t k = 1; k < N.size(); ++k)
    if (N[k - 1] >= N[k]) fail("degree vector not strictly increasing");
  for (std::size_t k = 0; k < Fv.size(); ++k) {
    if (!Fv[k].is_monic()) fail("form-vector component not monic");
    Monomial expect{lambda_at(visit_profile, nu, N[k]), N[k] - m};
    if (!(Fv[k].leading_monomial() == expect)) fail("exponent law ee(F_i) = (lambda_{N_i}, N_i - m) fails");
  }
  if (static_cast<int>(Fv.size()) > r.lambda + 1) fail("|F| > lambda + 1");
  if (r.big_lambda != r.lambda * (2 - m - r.lambda)) fail("Lambda != lambda (2 - m - lambda)");
  if (r.big_lambda != r.pair.f1.degree() * r.pair.f2.degree()) fail("Lambda != |f1| |f2|");
}

}  // namespace

Form ominus(const Form& f1, const Form& f2, int d, const FieldElement& q) {
  if (q.is_zero()) throw UsageError("ominus with q = 0");
  if (f1.is_zero() || f2.is_zero() || d != f2.degree() - f1.degree())
    throw UsageError("ominus: d must equal |f2| - |f1|");
  Form g = f1.times_x(std::max(d, 0));
  g.sub_scaled(q, f2, -std::min(d, 0));
  return g;
}

ViablePair viable_pair(const InverseForm& F) {
  Run run = solve(F, {});
  return ViablePair{std::move(run.vec[0]), std::move(run.vec[1]), F.degree()};
}

TracedPair viable_pair_traced(const InverseForm& F) {
  Run run = solve(F, {false, false, true});
  return TracedPair{ViablePair{std::move(run.vec[0]), std::move(run.vec[1]), F.degree()}, std::move(run.rows)};
}

AnnihilatorResult form_vector(const InverseForm& F) {
  Run run = solve(F, {true, false, false});
  ViablePair pair{run.vec[0], run.vec[1], F.degree()};
  const int lam = pair.f1.degree();
  const int big = std::accumulate(run.profile.begin(), run.profile.end(), 0);
  AnnihilatorResult r{std::move(pair), std::move(run.vec), std::move(run.N), lam, big, std::nullopt,
                      std::vector<int>(run.profile.rbegin(), run.profile.rend())};
  check_structure(r, F, run.profile);
  r.triple = triple_from_profile(F, run.profile, r.pair.f2);
  return r;
}

std::vector<Form> reduced_gb(const InverseForm& F) { return solve(F, {true, true, false}).vec; }

int lambda(const InverseForm& F) { return viable_pair(F).f1.degree(); }

std::vector<int> lambda_profile(const InverseForm& F) {
  auto p = solve(F, {}).profile;
  return {p.rbegin(), p.rend()};
}

int big_lambda(const InverseForm& F) {
  auto p = solve(F, {}).profile;
  return std::accumulate(p.begin(), p.end(), 0);
}

int dimension(const InverseForm& F) { return big_lambda(F); }

std::optional<AuxiliaryTriple> essential_triple(const InverseForm& F) {
  Run run = solve(F, {});
  return triple_from_profile(F, run.profile, run.vec[1]);
}

SyzygyTriple syzygy_triple(const AnnihilatorResult& result) {
  const auto& Fv = result.form_vector;
  if (Fv.size() < 3) throw UsageError("syzygy_triple needs at least three form-vector components");
  const Field field = Fv[0].field();
  const Monomial L = lcm(Fv[0].leading_monomial(), Fv[1].leading_monomial());
  const Monomial t1 = L / Fv[0].leading_monomial();
  const Monomial t2 = L / Fv[1].leading_monomial();
  const Poly s = spoly(Poly::from_form(Fv[0]), Poly::from_form(Fv[1]));
  const Poly divisors[] = {Poly::from_form(Fv[1]), Poly::from_form(Fv[2])};
  Division div = divide(s, divisors);
  if (!div.remainder.is_zero()) throw InvariantViolation("Spol(F1, F2) does not reduce to zero by (F2, F3)");

  const int m = result.degree_vector.at(0);
  const int m_prime = result.degree_vector.at(1);
  if (!(t1 == Monomial{0, m_prime - m})) throw InvariantViolation("syzygy triple: s1 != z^(m'-m)");
  const Poly xp = Poly::from_form(Form::monomial(field, t2));
  const Poly s2 = -xp - div.quotients[0];
  const Poly h = s2 + xp;
  for (const auto& t : h.terms())
    if (t.monomial.z == 0) throw InvariantViolation("syzygy triple: z does not divide h");
  const Poly s3 = -div.quotients[1];
  if (!s3.is_zero() && !(s3.leading_monomial() == Monomial{0, 0}))
    throw InvariantViolation("syzygy triple: s3 is not a scalar");
  FieldElement c3 = s3.is_zero() ? field.zero() : s3.leading_term().coeff;
  return SyzygyTriple{Form::monomial(field, t1), s2.to_form(), std::move(c3)};
}

bool is_viable(const ViablePair& pair, const InverseForm& F) {
  const Form& f1 = pair.f1;
  const Form& f2 = pair.f2;
  if (f1.is_zero() || f2.is_zero()) return false;
  if (!(f1.field() == F.field()) || !(f2.field() == F.field())) return false;
  if (!f1.in_phi() || !f2.is_monic() || f2.z_valuation() < 1) return false;
  if (f1.degree() + f2.degree() != 2 - F.degree()) return false;
  if (!annihilates(f1, F) || !annihilates(f2, F)) return false;
  const Poly gens[] = {Poly::from_form(f1), Poly::from_form(f2)};
  const auto gb = buchberger(gens);
  const auto rgb = to_polys(reduced_gb(F));
  for (const auto& r : rgb)
    if (!remainder(r, gb).is_zero()) return false;
  for (const auto& g : gens)
    if (!remainder(g, rgb).is_zero()) return false;
  return true;
}

}  // namespace annideal
