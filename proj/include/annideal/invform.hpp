#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annideal/bipoly.hpp"

namespace annideal {

/// Nonzero homogeneous element of k[x^-1, z^-1] of degree m <= 0.
/// Coefficient index i - m holds F_i, the coefficient of x^i z^{m-i}.
class InverseForm {
 public:
  /// Usage error when all coefficients vanish, m > 0, or the length is not 1 - m.
  static InverseForm from_coefficients(const Field& field, int degree, std::vector<FieldElement> coeffs);
  /// c x^i z^{m-i}.
  static InverseForm monomial(const FieldElement& c, int i, int degree);
  /// "m=<int>; F=<F_m>,...,<F_0>".
  static InverseForm parse(const Field& field, std::string_view text);
  /// Sum of c*x^i*z^j terms with i, j <= 0, e.g. "x^-3 + z^-3".
  static InverseForm parse_polynomial(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  /// nu(F), the largest i with F_i nonzero.
  int order() const noexcept { return order_; }
  /// F_i for m <= i <= 0.
  const FieldElement& coefficient(int i) const;
  std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }

  /// Scaled so that F_nu = 1.
  InverseForm normalised() const;

  /// Terms by increasing x-exponent, e.g. "x^-4*z^-1 + x^-3*z^-2 + z^-5".
  std::string to_string() const;
  /// "m=<int>; F=..." form accepted by parse().
  std::string to_text() const;

  friend bool operator==(const InverseForm&, const InverseForm&) = default;

 private:
  InverseForm(const Field& field, int degree, std::vector<FieldElement> coeffs);

  Field field_;
  int degree_;
  int order_;
  std::vector<FieldElement> coeffs_;
};

/// phi o F; nullopt stands for zero.
std::optional<InverseForm> act(const Form& phi, const InverseForm& F);
bool annihilates(const Form& phi, const InverseForm& F);
/// a x^{m-1} + F z^{-1}.
InverseForm augment(const FieldElement& a, const InverseForm& F);
/// F^{(i)} = sum_{i <= j <= nu} F_j x^j z^{i-j}, for m <= i <= nu.
InverseForm subform(const InverseForm& F, int i);
/// [phi . G] at degree |phi| + |G|, or zero when that degree is positive.
FieldElement discrepancy(const Form& phi, const InverseForm& G);
std::optional<FieldElement> is_geometric(const InverseForm& F);
inline int order(const InverseForm& F) { return F.order(); }

namespace detail {

/// Sum_t phi[t] * window[t] over the coefficients of phi. A unit
/// leading coefficient phi[0] is not multiplied.
FieldElement window_discrepancy(std::span<const FieldElement> phi, std::span<const FieldElement> window);

}  // namespace detail

}  // namespace annideal
