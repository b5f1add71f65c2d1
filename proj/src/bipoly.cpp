#include "annideal/bipoly.hpp"

#include <algorithm>
#include <map>

#include "annideal/text.hpp"

namespace annideal {

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.x <=> b.x;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  return {std::max(a.x, b.x), std::max(a.z, b.z)};
}

Monomial operator*(const Monomial& a, const Monomial& b) noexcept { return {a.x + b.x, a.z + b.z}; }

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw UsageError("monomial quotient is not exact");
  return {a.x - b.x, a.z - b.z};
}

std::string to_string(const Monomial& m) {
  return text::render_terms({text::Term{m.x, m.z, Field::gf2().one()}});
}

// ---------------------------------------------------------------- Form

Form Form::monomial(const Field& field, Monomial m) { return monomial(field.one(), m); }

Form Form::monomial(const FieldElement& c, Monomial m) {
  if (m.x < 0 || m.z < 0) throw UsageError("negative exponent in a form");
  Form f(c.field());
  if (c.is_zero()) return f;
  f.degree_ = m.degree();
  f.coeffs_.assign(static_cast<std::size_t>(f.degree_ + 1), c.field().zero());
  f.coeffs_[static_cast<std::size_t>(m.z)] = c;
  return f;
}

Form Form::from_coefficients(const Field& field, std::vector<FieldElement> coeffs) {
  for (const auto& c : coeffs)
    if (!(c.field() == field)) detail::throw_mixed_fields(field, c.field());
  Form f(field);
  f.degree_ = static_cast<int>(coeffs.size()) - 1;
  f.coeffs_ = std::move(coeffs);
  f.normalize_zero();
  return f;
}

Form Form::parse(const Field& field, std::string_view src) {
  auto terms = text::parse_terms(field, src);
  int degree = -1;
  std::map<int, FieldElement> by_z;
  for (const auto& t : terms) {
    if (t.x < 0 || t.z < 0) throw ParseError("negative exponent in form '" + std::string(src) + "'");
    if (degree >= 0 && t.x + t.z != degree)
      throw ParseError("form '" + std::string(src) + "' is not homogeneous");
    degree = t.x + t.z;
    auto [it, fresh] = by_z.try_emplace(t.z, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(degree + 1), field.zero());
  for (auto& [z, c] : by_z) coeffs[static_cast<std::size_t>(z)] = c;
  return from_coefficients(field, std::move(coeffs));
}

int Form::degree() const {
  if (is_zero()) throw UsageError("degree of the zero form");
  return degree_;
}

void Form::normalize_zero() {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return;
  coeffs_.clear();
  degree_ = -1;
}

std::pair<Monomial, FieldElement> Form::leading() const {
  int j = z_valuation();
  return {Monomial{degree_ - j, j}, coeffs_[static_cast<std::size_t>(j)]};
}

Monomial Form::leading_monomial() const {
  int j = z_valuation();
  return Monomial{degree_ - j, j};
}

const FieldElement& Form::leading_coefficient() const {
  return coeffs_[static_cast<std::size_t>(z_valuation())];
}

int Form::z_valuation() const {
  if (is_zero()) throw UsageError("leading term of the zero form");
  int j = 0;
  while (coeffs_[static_cast<std::size_t>(j)].is_zero()) ++j;
  return j;
}

bool Form::is_monic() const { return !is_zero() && leading_coefficient().is_one(); }

bool Form::in_phi() const { return !is_zero() && coeffs_.front().is_one(); }

Form Form::monic() const { return scaled(leading_coefficient().inv()); }

Form Form::operator-() const {
  Form out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& other) {
  if (!(field_ == other.field_)) detail::throw_mixed_fields(field_, other.field_);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (degree_ != other.degree_) throw UsageError("adding forms of different degrees");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  normalize_zero();
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form operator*(const Form& a, const Form& b) {
  if (!(a.field_ == b.field_)) detail::throw_mixed_fields(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Form(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Form::from_coefficients(a.field_, std::move(out));
}

Form Form::scaled(const FieldElement& c) const {
  if (!(c.field() == field_)) detail::throw_mixed_fields(field_, c.field());
  if (c.is_zero()) return Form(field_);
  Form out(*this);
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

Form Form::times(Monomial m) const {
  if (m.x < 0 || m.z < 0) throw UsageError("negative exponent in a form");
  if (is_zero()) return *this;
  Form out(field_);
  out.degree_ = degree_ + m.degree();
  out.coeffs_.reserve(static_cast<std::size_t>(out.degree_ + 1));
  out.coeffs_.assign(static_cast<std::size_t>(m.z), field_.zero());
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  out.coeffs_.resize(static_cast<std::size_t>(out.degree_ + 1), field_.zero());
  return out;
}

Form Form::divided_by_z(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0 || z_valuation() < k) throw UsageError("z^" + std::to_string(k) + " does not divide " + to_string());
  Form out(field_);
  out.degree_ = degree_ - k;
  out.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return out;
}

void Form::mul_z() {
  if (is_zero()) return;
  coeffs_.insert(coeffs_.begin(), field_.zero());
  ++degree_;
}

void Form::mul_x(int k) {
  if (is_zero() || k == 0) return;
  coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k), field_.zero());
  degree_ += k;
}

void Form::sub_scaled(const FieldElement& q, const Form& other, int k) {
  if (other.is_zero() || q.is_zero()) return;
  if (is_zero()) {
    *this = other.times_x(k).scaled(-q);
    return;
  }
  if (other.degree_ + k != degree_) throw UsageError("sub_scaled: degree mismatch");
  const std::size_t lead = static_cast<std::size_t>(other.z_valuation());
  if (other.coeffs_[lead].is_one())
    coeffs_[lead] -= q;
  else
    coeffs_[lead] -= q * other.coeffs_[lead];
  for (std::size_t j = lead + 1; j < other.coeffs_.size(); ++j)
    if (!other.coeffs_[j].is_zero()) coeffs_[j] -= q * other.coeffs_[j];
  if (coeffs_.front().is_zero()) normalize_zero();
}

std::string Form::to_string() const {
  std::vector<text::Term> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    terms.push_back({degree_ - static_cast<int>(j), static_cast<int>(j), coeffs_[j]});
  return text::render_terms(terms);
}

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::from_coefficients(const Field& field, std::vector<FieldElement> descending) {
  for (const auto& c : descending)
    if (!(c.field() == field)) detail::throw_mixed_fields(field, c.field());
  UniPoly p(field);
  p.coeffs_ = std::move(descending);
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(const FieldElement& c, int degree) {
  if (degree < 0) throw UsageError("negative degree");
  std::vector<FieldElement> v(static_cast<std::size_t>(degree + 1), c.field().zero());
  v.front() = c;
  return from_coefficients(c.field(), std::move(v));
}

UniPoly UniPoly::parse(const Field& field, std::string_view src) {
  UniPoly out(field);
  for (const auto& t : text::parse_terms(field, src)) {
    if (t.z != 0 || t.x < 0) throw ParseError("not a polynomial in x: '" + std::string(src) + "'");
    out = out + monomial(t.coeff, t.x);
  }
  return out;
}

void UniPoly::trim() {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return !c.is_zero(); });
  coeffs_.erase(coeffs_.begin(), it);
}

int UniPoly::degree() const {
  if (is_zero()) throw UsageError("degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

FieldElement UniPoly::coeff(int j) const {
  int d = static_cast<int>(coeffs_.size()) - 1;
  if (j < 0 || j > d) return field_.zero();
  return coeffs_[static_cast<std::size_t>(d - j)];
}

const FieldElement& UniPoly::leading_coefficient() const {
  if (is_zero()) throw UsageError("leading coefficient of the zero polynomial");
  return coeffs_.front();
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) detail::throw_mixed_fields(a.field_, b.field_);
  const UniPoly& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const UniPoly& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  UniPoly out(big);
  std::size_t off = big.coeffs_.size() - small.coeffs_.size();
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) out.coeffs_[off + i] += small.coeffs_[i];
  out.trim();
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) detail::throw_mixed_fields(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly::from_coefficients(a.field_, std::move(out));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  UniPoly out(*this);
  for (auto& v : out.coeffs_) v *= c;
  out.trim();
  return out;
}

UniPoly UniPoly::times_x(int k) const {
  if (is_zero()) return *this;
  UniPoly out(*this);
  out.coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k), field_.zero());
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw UsageError("polynomial division by zero");
  UniPoly quotient(field_);
  UniPoly rem(*this);
  const FieldElement lead_inv = divisor.leading_coefficient().inv();
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    UniPoly t = monomial(rem.leading_coefficient() * lead_inv, rem.degree() - dd);
    quotient = quotient + t;
    rem = rem - t * divisor;
  }
  return {quotient, rem};
}

std::string UniPoly::to_string() const {
  std::vector<text::Term> terms;
  int d = static_cast<int>(coeffs_.size()) - 1;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) terms.push_back({d - static_cast<int>(j), 0, coeffs_[j]});
  return text::render_terms(terms);
}

// ---------------------------------------------------------------- (de)homogenisation

Form homogenise(const UniPoly& psi) {
  if (psi.is_zero()) throw UsageError("homogenise of zero");
  return Form::from_coefficients(psi.field(), {psi.coefficients().begin(), psi.coefficients().end()});
}

UniPoly dehomogenise(const Form& phi) {
  if (phi.is_zero()) throw UsageError("dehomogenise of zero");
  return UniPoly::from_coefficients(phi.field(), {phi.coefficients().begin(), phi.coefficients().end()});
}

FormDivision divide_by_phi(const Form& phi, const Form& g) {
  if (phi.is_zero()) throw UsageError("divide_by_phi: zero dividend");
  if (!g.in_phi()) throw UsageError("divide_by_phi: divisor " + g.to_string() + " is not in Phi");
  const int d = phi.degree();
  if (phi.z_valuation() == 0 && g.degree() > d)
    throw UsageError("divide_by_phi: divisor degree exceeds that of a z-free dividend");
  auto [q, r] = dehomogenise(phi).divmod(dehomogenise(g));
  FormDivision out{Form::zero(phi.field()), Form::zero(phi.field())};
  if (!q.is_zero()) out.quotient = homogenise(q).times_z(d - g.degree() - q.degree());
  if (!r.is_zero()) out.remainder = homogenise(r).times_z(d - r.degree());
  return out;
}

}  // namespace annideal
