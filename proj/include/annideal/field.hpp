#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "annideal/errors.hpp"

namespace annideal {

enum class FieldKind : std::uint8_t { binary, prime, rational };

class FieldElement;

/// Runtime descriptor of a coefficient field: GF(2), GF(p) or Q.
class Field {
 public:
  static Field gf2() noexcept { return Field(FieldKind::binary, 2); }
  /// GF(p) for a prime p < 2^31; GF(2) is returned as gf2().
  static Field gfp(std::uint32_t p);
  static Field rationals() noexcept { return Field(FieldKind::rational, 0); }
  /// Accepts "gf2", "gfp:<p>" and "q".
  static Field parse(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::rational; }
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(std::int64_t v) const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement parse_element(std::string_view text) const;
  /// All elements of a finite field, zero first.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

namespace detail {
#ifdef ANNIDEAL_COUNT_MULTIPLICATIONS
inline thread_local std::uint64_t multiplication_counter = 0;
inline void count_multiplication() noexcept { ++multiplication_counter; }
#else
inline void count_multiplication() noexcept {}
#endif
[[noreturn]] void throw_mixed_fields(const Field& a, const Field& b);
}  // namespace detail

/// Exact field value; carries the identity of its field.
class FieldElement {
 public:
  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  /// Residue in [0, p); finite fields only.
  std::uint32_t residue() const;
  /// Canonical fraction; Q only.
  const mpq_class& rational() const;

  /// Throws DivisionByZero on zero.
  FieldElement inv() const;
  FieldElement operator-() const;

  FieldElement& operator+=(const FieldElement& b) {
    same_field(b);
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
      std::uint32_t s = *r + std::get<std::uint32_t>(b.value_);
      *r = s >= field_.characteristic() ? s - field_.characteristic() : s;
    } else {
      std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
    }
    return *this;
  }
  FieldElement& operator-=(const FieldElement& b) {
    same_field(b);
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
      std::uint32_t c = std::get<std::uint32_t>(b.value_);
      *r = *r >= c ? *r - c : *r + (field_.characteristic() - c);
    } else {
      std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
    }
    return *this;
  }
  FieldElement& operator*=(const FieldElement& b) {
    same_field(b);
    detail::count_multiplication();
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
      std::uint64_t prod = std::uint64_t{*r} * std::get<std::uint32_t>(b.value_);
      *r = static_cast<std::uint32_t>(prod % field_.characteristic());
    } else {
      std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
    }
    return *this;
  }
  FieldElement& operator/=(const FieldElement& b) { return *this *= b.inv(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Canonical text: decimal residue, or "a" / "a/b" in lowest terms.
  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(Field f, std::uint32_t r) : field_(f), value_(r) {}
  FieldElement(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  void same_field(const FieldElement& b) const {
    if (!(field_ == b.field_)) detail::throw_mixed_fields(field_, b.field_);
  }

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Counts field multiplications when built with ANNIDEAL_COUNT_MULTIPLICATIONS.
namespace instrumentation {
bool counting_enabled() noexcept;
std::uint64_t multiplications() noexcept;
void reset_multiplications() noexcept;
}  // namespace instrumentation

}  // namespace annideal
