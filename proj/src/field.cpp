#include "annideal/field.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace annideal {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal(s)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

void detail::throw_mixed_fields(const Field& a, const Field& b) {
  throw UsageError("operands from different fields: " + a.name() + " and " + b.name());
}

Field Field::gfp(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
    throw UsageError("gfp modulus must be a prime below 2^31, got " + std::to_string(p));
  if (p == 2) return gf2();
  return Field(FieldKind::prime, p);
}

Field Field::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "gf2") return gf2();
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.substr(0, 4) == "gfp:") {
    std::string_view digits = spec.substr(4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("bad field modulus: '" + std::string(spec) + "'");
    if (p >= (std::uint64_t{1} << 31) || !is_prime(static_cast<std::uint32_t>(p)))
      throw ParseError("gfp modulus must be a prime below 2^31: '" + std::string(spec) + "'");
    return gfp(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown field '" + std::string(spec) + "' (expected gf2, gfp:<p> or q)");
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::binary: return "gf2";
    case FieldKind::prime: return "gfp:" + std::to_string(p_);
    case FieldKind::rational: return "q";
  }
  return {};
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(std::int64_t v) const {
  if (kind_ == FieldKind::rational) return FieldElement(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(*this, static_cast<std::uint32_t>(r));
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (kind_ != FieldKind::rational) throw UsageError("from_rational on a finite field");
  mpq_class c(q);
  c.canonicalize();
  return FieldElement(*this, std::move(c));
}

FieldElement Field::parse_element(std::string_view text) const {
  text = trim(text);
  if (kind_ == FieldKind::rational) {
    auto slash = text.find('/');
    mpz_class num = parse_integer(trim(text.substr(0, slash)));
    mpz_class den = 1;
    if (slash != std::string_view::npos) den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(*this, std::move(q));
  }
  mpz_class v = parse_integer(text);
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return FieldElement(*this, static_cast<std::uint32_t>(r.get_ui()));
}

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw UsageError("elements() of an infinite field");
  std::vector<FieldElement> out;
  out.reserve(p_);
  for (std::uint32_t r = 0; r < p_; ++r) out.push_back(FieldElement(*this, r));
  return out;
}

std::uint32_t FieldElement::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw UsageError("residue() of a rational");
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw UsageError("rational() of a finite-field element");
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    std::int64_t a = *r, m = field_.characteristic(), x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    std::int64_t p = field_.characteristic();
    x0 %= p;
    if (x0 < 0) x0 += p;
    return FieldElement(field_, static_cast<std::uint32_t>(x0));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return FieldElement(field_, mpq_class(q));
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_))
    return FieldElement(field_, *r == 0 ? 0u : field_.characteristic() - *r);
  return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

namespace instrumentation {

#ifdef ANNIDEAL_COUNT_MULTIPLICATIONS
bool counting_enabled() noexcept { return true; }
std::uint64_t multiplications() noexcept { return detail::multiplication_counter; }
void reset_multiplications() noexcept { detail::multiplication_counter = 0; }
#else
bool counting_enabled() noexcept { return false; }
std::uint64_t multiplications() noexcept { return 0; }
void reset_multiplications() noexcept {}
#endif

}  // namespace instrumentation

}  // namespace annideal
