#include "annideal/oracle.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "annideal/groebner.hpp"
#include "annideal/sequence.hpp"

namespace annideal::oracle {

namespace {

std::size_t budget(const Field& field) {
  if (field.kind() == FieldKind::binary) return 14;
  if (field.kind() == FieldKind::prime && field.characteristic() == 3) return 9;
  throw UsageError("exhaustive search needs GF(2) or GF(3), got " + field.name());
}

// Calls visit with each coefficient tail of length len, stopping when it returns true.
template <class Visit>
bool enumerate_tails(const Field& field, std::size_t len, Visit&& visit) {
  const auto elems = field.elements();
  std::vector<std::size_t> digit(len, 0);
  std::vector<FieldElement> tail(len, field.zero());
  for (;;) {
    if (visit(tail)) return true;
    std::size_t k = 0;
    while (k < len && digit[k] + 1 == elems.size()) {
      digit[k] = 0;
      tail[k] = elems[0];
      ++k;
    }
    if (k == len) return false;
    ++digit[k];
    tail[k] = elems[digit[k]];
  }
}

}  // namespace

LaurentPoly LaurentPoly::from_form(const Form& f) {
  LaurentPoly p(f.field());
  if (f.is_zero()) return p;
  const int d = f.degree();
  for (int j = 0; j <= d; ++j) p.add_term(d - j, j, f.coefficient(j));
  return p;
}

LaurentPoly LaurentPoly::from_inverse_form(const InverseForm& F) {
  LaurentPoly p(F.field());
  const int m = F.degree();
  for (int i = m; i <= 0; ++i) p.add_term(i, m - i, F.coefficient(i));
  return p;
}

FieldElement LaurentPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_.zero() : it->second;
}

void LaurentPoly::add_term(int i, int j, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*x^" + std::to_string(e.first) + "*z^" + std::to_string(e.second);
  }
  return out;
}

bool laurent_annihilation_check(const Form& phi, const InverseForm& F) {
  if (phi.is_zero()) throw UsageError("laurent_annihilation_check: phi = 0");
  const LaurentPoly prod = LaurentPoly::from_form(phi) * LaurentPoly::from_inverse_form(F);
  for (const auto& [e, c] : prod.terms())
    if (e.first <= 0 && e.second <= 0) return false;
  return true;
}

int exhaustive_lambda(const InverseForm& F) {
  const Field& field = F.field();
  const int top = 1 - F.degree();
  if (static_cast<std::size_t>(top) > budget(field))
    throw BudgetExceeded("exhaustive_lambda: 1 - m = " + std::to_string(top) + " exceeds the budget for " +
                         field.name());
  for (int d = 0; d <= top; ++d) {
    const bool found = enumerate_tails(field, static_cast<std::size_t>(d), [&](const std::vector<FieldElement>& tail) {
      std::vector<FieldElement> c{field.one()};
      c.insert(c.end(), tail.begin(), tail.end());
      return laurent_annihilation_check(Form::from_coefficients(field, std::move(c)), F);
    });
    if (found) return d;
  }
  throw InvariantViolation("exhaustive_lambda: x^(1-m) does not annihilate " + F.to_string());
}

int standard_monomial_count(std::span<const Form> G, int m) {
  const int top = 1 - m;
  std::vector<Monomial> leaders;
  for (const auto& g : G) {
    if (g.is_zero()) throw UsageError("standard_monomial_count: zero generator");
    leaders.push_back(g.leading_monomial());
  }
  auto has_pure = [&](bool x_axis) {
    return std::any_of(leaders.begin(), leaders.end(), [&](const Monomial& t) {
      return x_axis ? (t.z == 0 && t.x <= top) : (t.x == 0 && t.z <= top);
    });
  };
  if (!has_pure(true) || !has_pure(false))
    throw UsageError("standard_monomial_count: leaders do not bound the box [0, 1 - m]^2");
  int count = 0;
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      const Monomial t{i, j};
      if (std::none_of(leaders.begin(), leaders.end(), [&](const Monomial& l) { return l.divides(t); })) ++count;
    }
  return count;
}

int exhaustive_lc(std::span<const FieldElement> s) {
  if (s.empty()) throw UsageError("exhaustive_lc: empty sequence");
  const Field& field = s.front().field();
  const std::size_t n = s.size();
  if (n > budget(field))
    throw BudgetExceeded("exhaustive_lc: n = " + std::to_string(n) + " exceeds the budget for " + field.name());
  for (std::size_t L = 0; L <= n; ++L) {
    const bool found = enumerate_tails(field, L, [&](const std::vector<FieldElement>& tail) {
      std::vector<FieldElement> c{field.one()};
      c.insert(c.end(), tail.begin(), tail.end());
      return is_annihilating(UniPoly::from_coefficients(field, std::move(c)), s);
    });
    if (found) return static_cast<int>(L);
  }
  throw InvariantViolation("exhaustive_lc: x^n does not annihilate the sequence");
}

bool ideal_equal(std::span<const Form> A, std::span<const Form> B) {
  const auto pa = to_polys(A);
  const auto pb = to_polys(B);
  const auto ga = buchberger(std::span<const Poly>(pa));
  const auto gb = buchberger(std::span<const Poly>(pb));
  for (const auto& b : pb)
    if (!remainder(b, ga).is_zero()) return false;
  for (const auto& a : pa)
    if (!remainder(a, gb).is_zero()) return false;
  return true;
}

}  // namespace annideal::oracle
