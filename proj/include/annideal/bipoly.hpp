#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annideal/field.hpp"

namespace annideal {

/// x^x * z^z with non-negative exponents.
struct Monomial {
  int x = 0;
  int z = 0;

  int degree() const noexcept { return x + z; }
  bool divides(const Monomial& other) const noexcept { return x <= other.x && z <= other.z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > z.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept;
inline std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  return grlex_compare(a, b);
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
Monomial operator*(const Monomial& a, const Monomial& b) noexcept;
/// Exact quotient; requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m);

/// Homogeneous polynomial in k[x,z], or the distinguished zero.
/// Coefficient j is that of x^{d-j} z^j.
class Form {
 public:
  static Form zero(const Field& field) { return Form(field); }
  static Form monomial(const Field& field, Monomial m);
  static Form monomial(const FieldElement& c, Monomial m);
  /// All-zero coefficient lists give the zero form.
  static Form from_coefficients(const Field& field, std::vector<FieldElement> coeffs);
  /// Text such as "x^4 + x*z^3 + z^4"; "0" is the zero form.
  static Form parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Total degree; usage error on zero.
  int degree() const;
  std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^{d-j} z^j.
  const FieldElement& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  std::pair<Monomial, FieldElement> leading() const;
  Monomial leading_monomial() const;
  const FieldElement& leading_coefficient() const;
  int z_valuation() const;
  bool is_monic() const;
  /// Monic with z not dividing the leading monomial.
  bool in_phi() const;
  Form monic() const;

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  Form scaled(const FieldElement& c) const;
  Form times(Monomial m) const;
  Form times_x(int k) const { return times(Monomial{k, 0}); }
  Form times_z(int k) const { return times(Monomial{0, k}); }
  /// Exact division by z^k; usage error unless z^k divides.
  Form divided_by_z(int k) const;

  /// In place: *this *= z.
  void mul_z();
  /// In place: *this *= x^k.
  void mul_x(int k);
  /// In place: *this -= q * x^k * other, where |other| + k = |*this|.
  /// Leading coefficients of monic operands are not multiplied.
  void sub_scaled(const FieldElement& q, const Form& other, int k);

  std::string to_string() const;
  friend bool operator==(const Form& a, const Form& b) {
    return a.field_ == b.field_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  explicit Form(const Field& field) : field_(field) {}
  void normalize_zero();

  Field field_;
  int degree_ = -1;
  std::vector<FieldElement> coeffs_;
};

/// Univariate polynomial in x, coefficients by descending power; empty means zero.
class UniPoly {
 public:
  static UniPoly zero(const Field& field) { return UniPoly(field); }
  static UniPoly from_coefficients(const Field& field, std::vector<FieldElement> descending);
  static UniPoly monomial(const FieldElement& c, int degree);
  static UniPoly parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const;
  std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^j; zero outside the support.
  FieldElement coeff(int j) const;
  const FieldElement& leading_coefficient() const;
  bool is_monic() const { return !is_zero() && leading_coefficient().is_one(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const FieldElement& c) const;
  UniPoly times_x(int k) const;
  /// Euclidean division; usage error on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  explicit UniPoly(const Field& field) : field_(field) {}
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// psi(x/z) z^{|psi|}.
Form homogenise(const UniPoly& psi);
/// phi(x, 1).
UniPoly dehomogenise(const Form& phi);

struct FormDivision {
  Form quotient;
  Form remainder;
};

/// phi = alpha g + beta with beta zero or |beta| = |phi| and z | beta.
/// Requires g in Phi, and |g| <= |phi| whenever z does not divide phi.
FormDivision divide_by_phi(const Form& phi, const Form& g);

}  // namespace annideal
