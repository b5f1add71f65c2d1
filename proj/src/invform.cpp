#include "annideal/invform.hpp"

#include <algorithm>
#include <map>

#include "annideal/text.hpp"

namespace annideal {

InverseForm::InverseForm(const Field& field, int degree, std::vector<FieldElement> coeffs)
    : field_(field), degree_(degree), order_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ > 0) throw UsageError("inverse form degree must be <= 0");
  if (coeffs_.size() != static_cast<std::size_t>(1 - degree_))
    throw UsageError("inverse form of degree " + std::to_string(degree_) + " needs " +
                     std::to_string(1 - degree_) + " coefficients");
  bool nonzero = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!(coeffs_[k].field() == field_)) detail::throw_mixed_fields(field_, coeffs_[k].field());
    if (!coeffs_[k].is_zero()) {
      nonzero = true;
      order_ = degree_ + static_cast<int>(k);
    }
  }
  if (!nonzero) throw UsageError("the zero inverse form is not admissible");
}

InverseForm InverseForm::from_coefficients(const Field& field, int degree, std::vector<FieldElement> coeffs) {
  return InverseForm(field, degree, std::move(coeffs));
}

InverseForm InverseForm::monomial(const FieldElement& c, int i, int degree) {
  if (i < degree || i > 0) throw UsageError("monomial exponent out of range");
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(1 - degree), c.field().zero());
  coeffs[static_cast<std::size_t>(i - degree)] = c;
  return InverseForm(c.field(), degree, std::move(coeffs));
}

InverseForm InverseForm::parse(const Field& field, std::string_view src) {
  auto parts = text::split(src, ';');
  if (parts.size() != 2 || parts[0].rfind("m", 0) != 0 || parts[1].rfind("F", 0) != 0)
    throw ParseError("inverse form must read 'm=<int>; F=<F_m>,...,<F_0>': '" + std::string(src) + "'");
  auto value_of = [&](const std::string& part) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in '" + part + "'");
    return std::string(text::trim(std::string_view(part).substr(eq + 1)));
  };
  int degree = 0;
  try {
    std::size_t used = 0;
    std::string m = value_of(parts[0]);
    degree = std::stoi(m, &used);
    if (used != m.size()) throw ParseError("bad degree '" + m + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad degree in '" + std::string(src) + "'");
  }
  if (degree > 0) throw ParseError("inverse form degree must be <= 0");
  std::vector<FieldElement> coeffs;
  for (const auto& tok : text::split(value_of(parts[1]), ',')) coeffs.push_back(field.parse_element(tok));
  if (coeffs.size() != static_cast<std::size_t>(1 - degree))
    throw ParseError("expected " + std::to_string(1 - degree) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  bool nonzero = std::any_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (!nonzero) throw ParseError("the zero inverse form is not admissible");
  return InverseForm(field, degree, std::move(coeffs));
}

InverseForm InverseForm::parse_polynomial(const Field& field, std::string_view src) {
  auto terms = text::parse_terms(field, src);
  std::optional<int> degree;
  std::map<int, FieldElement> by_x;
  for (const auto& t : terms) {
    if (t.x > 0 || t.z > 0) throw ParseError("positive exponent in inverse form '" + std::string(src) + "'");
    if (degree && *degree != t.x + t.z) throw ParseError("inverse form '" + std::string(src) + "' is not homogeneous");
    degree = t.x + t.z;
    auto [it, fresh] = by_x.try_emplace(t.x, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(1 - *degree), field.zero());
  for (auto& [i, c] : by_x) coeffs[static_cast<std::size_t>(i - *degree)] = c;
  bool nonzero = std::any_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (!nonzero) throw ParseError("the zero inverse form is not admissible");
  return InverseForm(field, *degree, std::move(coeffs));
}

const FieldElement& InverseForm::coefficient(int i) const {
  if (i < degree_ || i > 0) throw UsageError("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(i - degree_)];
}

InverseForm InverseForm::normalised() const {
  FieldElement s = coefficient(order_).inv();
  std::vector<FieldElement> c(coeffs_);
  for (auto& v : c) v *= s;
  return InverseForm(field_, degree_, std::move(c));
}

std::string InverseForm::to_string() const {
  std::vector<text::Term> terms;
  for (int i = degree_; i <= 0; ++i) terms.push_back({i, degree_ - i, coefficient(i)});
  return text::render_terms(terms);
}

std::string InverseForm::to_text() const {
  std::string out = "m=" + std::to_string(degree_) + "; F=";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- action

namespace {

// [phi . F]_i for d <= i <= 0, d = |phi| + |F|.
FieldElement product_coefficient(const Form& phi, const InverseForm& F, int i) {
  const int e = phi.degree();
  const int m = F.degree();
  FieldElement acc = F.field().zero();
  const int top = std::min(e, i - m);
  for (int k = 0; k <= top; ++k) {
    const FieldElement& a = phi.coefficient(e - k);
    if (a.is_zero()) continue;
    const FieldElement& b = F.coefficient(i - k);
    if (!b.is_zero()) acc += a * b;
  }
  return acc;
}

}  // namespace

std::optional<InverseForm> act(const Form& phi, const InverseForm& F) {
  if (phi.is_zero()) throw UsageError("act: zero form");
  if (!(phi.field() == F.field())) detail::throw_mixed_fields(phi.field(), F.field());
  const int d = phi.degree() + F.degree();
  if (d > 0) return std::nullopt;
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(1 - d));
  bool nonzero = false;
  for (int i = d; i <= 0; ++i) {
    out.push_back(product_coefficient(phi, F, i));
    nonzero = nonzero || !out.back().is_zero();
  }
  if (!nonzero) return std::nullopt;
  return InverseForm::from_coefficients(F.field(), d, std::move(out));
}

bool annihilates(const Form& phi, const InverseForm& F) {
  if (phi.is_zero()) throw UsageError("annihilates: zero form");
  if (!(phi.field() == F.field())) detail::throw_mixed_fields(phi.field(), F.field());
  const int d = phi.degree() + F.degree();
  for (int i = d; i <= 0; ++i)
    if (!product_coefficient(phi, F, i).is_zero()) return false;
  return true;
}

InverseForm augment(const FieldElement& a, const InverseForm& F) {
  if (!(a.field() == F.field())) detail::throw_mixed_fields(a.field(), F.field());
  std::vector<FieldElement> coeffs;
  coeffs.reserve(F.coefficients().size() + 1);
  coeffs.push_back(a);
  coeffs.insert(coeffs.end(), F.coefficients().begin(), F.coefficients().end());
  return InverseForm::from_coefficients(F.field(), F.degree() - 1, std::move(coeffs));
}

InverseForm subform(const InverseForm& F, int i) {
  if (i < F.degree() || i > F.order())
    throw UsageError("subform index " + std::to_string(i) + " outside [" + std::to_string(F.degree()) + ", " +
                     std::to_string(F.order()) + "]");
  auto c = F.coefficients().subspan(static_cast<std::size_t>(i - F.degree()));
  return InverseForm::from_coefficients(F.field(), i, {c.begin(), c.end()});
}

FieldElement discrepancy(const Form& phi, const InverseForm& G) {
  if (phi.is_zero()) throw UsageError("discrepancy: zero form");
  if (!(phi.field() == G.field())) detail::throw_mixed_fields(phi.field(), G.field());
  if (phi.degree() + G.degree() > 0) return G.field().zero();
  return detail::window_discrepancy(phi.coefficients(), G.coefficients());
}

std::optional<FieldElement> is_geometric(const InverseForm& F) {
  const int m = F.degree();
  if (m > -1 || !F.coefficient(0).is_one()) return std::nullopt;
  FieldElement r = F.coefficient(-1);
  for (int i = m; i <= -1; ++i)
    if (!(F.coefficient(i) == r * F.coefficient(i + 1))) return std::nullopt;
  return r;
}

FieldElement detail::window_discrepancy(std::span<const FieldElement> phi, std::span<const FieldElement> window) {
  if (phi.empty() || window.size() < phi.size()) throw UsageError("window_discrepancy: window too short");
  FieldElement acc = phi[0].is_one() ? window[0] : phi[0] * window[0];
  for (std::size_t t = 1; t < phi.size(); ++t)
    if (!phi[t].is_zero() && !window[t].is_zero()) acc += phi[t] * window[t];
  return acc;
}

}  // namespace annideal
