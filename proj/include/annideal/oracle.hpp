#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include "annideal/bipoly.hpp"
#include "annideal/invform.hpp"

namespace annideal::oracle {

/// Sparse element of k[x^-1, z^-1, x, z] keyed by (x-exponent, z-exponent).
class LaurentPoly {
 public:
  explicit LaurentPoly(const Field& field) : field_(field) {}
  static LaurentPoly from_form(const Form& f);
  static LaurentPoly from_inverse_form(const InverseForm& F);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<std::pair<int, int>, FieldElement>& terms() const noexcept { return terms_; }
  FieldElement coefficient(int i, int j) const;
  void add_term(int i, int j, const FieldElement& c);

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  std::string to_string() const;

 private:
  Field field_;
  std::map<std::pair<int, int>, FieldElement> terms_;
};

/// Full Laurent product, then every coefficient with both exponents <= 0 must vanish.
bool laurent_annihilation_check(const Form& phi, const InverseForm& F);

/// min |phi| over monic annihilating forms with z not dividing the leader.
/// GF(2) with 1 - m <= 14 or GF(3) with 1 - m <= 9; BudgetExceeded beyond.
int exhaustive_lambda(const InverseForm& F);

/// Points of [0, 1 - m]^2 outside ee(G) + N^2.
int standard_monomial_count(std::span<const Form> G, int m);

/// Least degree of a monic annihilating polynomial by enumeration.
/// GF(2) with n <= 14 or GF(3) with n <= 9.
int exhaustive_lc(std::span<const FieldElement> s);

bool ideal_equal(std::span<const Form> A, std::span<const Form> B);

}  // namespace annideal::oracle
