#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "annideal/annihilator.hpp"
#include "annideal/groebner.hpp"
#include "annideal/random.hpp"
#include "annideal/sequence.hpp"

namespace support {

using namespace annideal;

inline Field gf2() { return Field::gf2(); }
inline Field gf3() { return Field::gfp(3); }
inline Field gf7() { return Field::gfp(7); }
inline Field qq() { return Field::rationals(); }
inline std::vector<Field> all_fields() { return {gf2(), gf3(), gf7(), qq()}; }

inline Form P(const Field& k, const std::string& s) { return Form::parse(k, s); }
inline Sequence S(const Field& k, const std::string& s) { return parse_sequence(k, s); }
inline InverseForm IF(const Field& k, const std::string& s) { return InverseForm::parse_polynomial(k, s); }
inline FieldElement E(const Field& k, const std::string& s) { return k.parse_element(s); }

/// GF(2) bivariate polynomial as a set of exponent pairs, arithmetic by symmetric difference.
struct Bits2 {
  std::set<std::pair<int, int>> terms;

  Bits2() = default;
  Bits2(std::initializer_list<std::pair<int, int>> t) {
    for (auto e : t) toggle(e);
  }
  void toggle(std::pair<int, int> e) {
    if (!terms.erase(e)) terms.insert(e);
  }
  friend Bits2 operator+(const Bits2& a, const Bits2& b) {
    Bits2 r = a;
    for (auto e : b.terms) r.toggle(e);
    return r;
  }
  friend Bits2 operator*(const Bits2& a, const Bits2& b) {
    Bits2 r;
    for (auto [i, j] : a.terms)
      for (auto [k, l] : b.terms) r.toggle({i + k, j + l});
    return r;
  }
  friend bool operator==(const Bits2&, const Bits2&) = default;
};

inline Bits2 to_bits(const Form& f) {
  Bits2 r;
  if (f.is_zero()) return r;
  for (int j = 0; j <= f.degree(); ++j)
    if (!f.coefficient(j).is_zero()) r.toggle({f.degree() - j, j});
  return r;
}

/// Independent GF(2) annihilation test: coefficients as bit masks, phi o F = 0 by XOR sums.
/// phi has degree d with bit j for x^{d-j} z^j; F has bit i - m for F_i.
inline bool gf2_annihilates(std::uint32_t phi, int d, std::uint32_t F, int m) {
  for (int t = d + m; t <= 0; ++t) {
    // coefficient of x^t z^{d+m-t}
    unsigned acc = 0;
    for (int j = 0; j <= d; ++j) {
      const int i = t - (d - j);
      if (i < m || i > 0) continue;
      acc ^= ((phi >> j) & 1u) & ((F >> (i - m)) & 1u);
    }
    if (acc) return false;
  }
  return true;
}

/// Least degree of a monic GF(2) polynomial annihilating the bits s_0..s_{n-1}, by brute force.
inline int gf2_brute_lc(std::uint32_t s, int n) {
  for (int L = 0; L <= n; ++L)
    for (std::uint32_t low = 0; low < (1u << L); ++low) {
      const std::uint32_t psi = low | (1u << L);  // bit j is the coefficient of x^j
      bool ok = true;
      for (int k = 0; k + L <= n - 1 && ok; ++k) {
        unsigned acc = 0;
        for (int j = 0; j <= L; ++j) acc ^= ((psi >> j) & 1u) & ((s >> (j + k)) & 1u);
        ok = acc == 0;
      }
      if (ok) return L;
    }
  return -1;
}

inline Sequence bits_to_sequence(std::uint32_t s, int n) {
  Sequence out;
  for (int k = 0; k < n; ++k) out.push_back(gf2().from_integer((s >> k) & 1u));
  return out;
}

/// Lattice points of [0, top]^2 not divisible by any leader.
inline int count_standard(const std::vector<std::pair<int, int>>& leaders, int top) {
  int count = 0;
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      bool hit = false;
      for (auto [a, b] : leaders) hit = hit || (a <= i && b <= j);
      if (!hit) ++count;
    }
  return count;
}

/// Sum of rows weighted by w, each row a single polynomial.
inline Poly dot(const std::vector<Poly>& w, const std::vector<Poly>& g) {
  Poly acc = Poly::zero(g.front().field());
  for (std::size_t k = 0; k < w.size(); ++k) acc = acc + w[k] * g[k];
  return acc;
}

inline bool same_set(std::vector<Form> a, std::vector<Form> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || x == y;
    if (!found) return false;
  }
  return true;
}

}  // namespace support
