#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annideal/bipoly.hpp"
#include "annideal/viable_pair.hpp"

namespace annideal {

struct Term {
  Monomial monomial;
  FieldElement coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in k[x,z], terms in strictly decreasing grlex order.
class Poly {
 public:
  static Poly zero(const Field& field) { return Poly(field); }
  static Poly from_form(const Form& f);
  /// Sorts and merges like terms; drops zeros.
  static Poly from_terms(const Field& field, std::vector<Term> terms);
  static Poly parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  bool is_homogeneous() const;
  /// Homogeneous parts by decreasing degree, zero parts omitted.
  std::vector<Form> homogeneous_components() const;
  /// Usage error unless homogeneous.
  Form to_form() const;

  Poly monic() const;
  Poly scaled(const FieldElement& c) const;
  Poly times(const Monomial& m) const;
  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  std::string to_string() const;
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  explicit Poly(const Field& field) : field_(field) {}

  Field field_;
  std::vector<Term> terms_;
};

/// Element of R^e.
class PolyVector {
 public:
  explicit PolyVector(std::vector<Poly> components);
  std::size_t size() const noexcept { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_.at(i); }
  std::span<const Poly> components() const noexcept { return components_; }
  const Field& field() const { return components_.front().field(); }
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  std::vector<Poly> components_;
};

/// Position-over-term key: lower position dominates, ties by grlex.
struct ModuleTerm {
  int position = 0;
  Monomial monomial;
};
std::strong_ordering pot_compare(const ModuleTerm& a, const ModuleTerm& b) noexcept;

/// sum_i w[i] * rows[i] with every row of the same length.
PolyVector combine(std::span<const Poly> w, std::span<const PolyVector> rows);

std::vector<Poly> to_polys(std::span<const Form> forms);
std::vector<Form> to_forms(std::span<const Poly> polys);

Poly spoly(const Poly& g, const Poly& h);
Form spoly(const Form& g, const Form& h);

struct Division {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division by G in its stored order.
Division divide(const Poly& p, std::span<const Poly> G);
Poly remainder(const Poly& p, std::span<const Poly> G);
Form remainder(const Form& p, std::span<const Form> G);

/// Monic grlex Groebner basis (normal strategy, Buchberger's two criteria).
std::vector<Poly> buchberger(std::span<const Poly> gens);
std::vector<Form> buchberger(std::span<const Form> gens);

/// Buchberger's criterion on the list as given.
bool is_groebner(std::span<const Poly> G);
/// A Groebner basis of monic elements whose leaders do not divide one another.
bool is_minimal(std::span<const Poly> G);
/// Minimal, and no monomial of an element is divisible by another leader.
bool is_reduced(std::span<const Poly> G);
bool is_groebner(std::span<const Form> G);
bool is_minimal(std::span<const Form> G);
bool is_reduced(std::span<const Form> G);

/// Drops elements whose leader is a multiple of another; makes the rest monic.
std::vector<Poly> minimalize(std::span<const Poly> G);
/// The reduced basis of a Groebner basis, sorted by decreasing x-degree of the leader.
std::vector<Poly> reduce_gb(std::span<const Poly> G);
std::vector<Form> reduce_gb(std::span<const Form> G);

/// Generators w of {w : sum_i w[i] rows[i] = 0}, by tagged lifting in a POT module basis.
std::vector<PolyVector> syzygy_basis(std::span<const PolyVector> rows);

/// Reduced basis of <A> intersected with <B>, split into forms.
std::vector<Form> intersect_ideals(std::span<const Form> A, std::span<const Form> B);
std::vector<Form> intersect_ideals(const ViablePair& f, const ViablePair& g);

}  // namespace annideal
