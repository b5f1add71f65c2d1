#include <numeric>

#include "doctest.h"
#include "support/support.hpp"

using namespace support;

namespace {

struct Frac {
  long long n, d;
  Frac(long long a, long long b) {
    const long long g = std::gcd(a, b) * (b < 0 ? -1 : 1);
    n = a / g;
    d = b / g;
  }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

}  // namespace

TEST_CASE("addition") {
  CHECK((E(gf2(), "1") + E(gf2(), "1")).is_zero());
  CHECK((E(qq(), "1/2") + E(qq(), "1/3")).to_string() == "5/6");
  CHECK(E(gf7(), "5") + E(gf7(), "4") == E(gf7(), "2"));
  CHECK_THROWS_AS(E(gf2(), "1") + E(gf3(), "1"), UsageError);
}

TEST_CASE("multiplication, subtraction, negation") {
  CHECK((E(qq(), "3/2") * E(qq(), "2/3")).is_one());
  CHECK(E(gf2(), "0") - E(gf2(), "1") == E(gf2(), "1"));
  CHECK((-E(gf7(), "3")).to_string() == "4");
  CHECK_THROWS_AS(E(gf7(), "3") * E(qq(), "3"), UsageError);
  CHECK_THROWS_AS(E(gf7(), "3") - E(Field::gfp(5), "3"), UsageError);
}

TEST_CASE("inverse") {
  CHECK(E(gf7(), "3").inv().to_string() == "5");
  CHECK(E(qq(), "-2/5").inv().to_string() == "-5/2");
  CHECK(E(gf2(), "1").inv().is_one());
  CHECK_THROWS_AS(gf7().zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(qq().zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(E(qq(), "1") / qq().zero(), DivisionByZero);
}

TEST_CASE("field construction and parsing") {
  CHECK(Field::parse("gf2") == gf2());
  CHECK(Field::parse("gfp:7") == gf7());
  CHECK(Field::parse("gfp:2") == gf2());
  CHECK(Field::parse("q") == qq());
  CHECK_THROWS_AS(Field::gfp(9), UsageError);
  CHECK_THROWS_AS(Field::gfp(1), UsageError);
  CHECK_THROWS_AS(Field::gfp(2147483659u), UsageError);
  CHECK_THROWS(Field::parse("gf4"));
  CHECK(Field::gfp(2147483647u).characteristic() == 2147483647u);
  CHECK(E(gf7(), "12").to_string() == "5");
  CHECK(E(gf7(), "-1").to_string() == "6");
  CHECK(E(qq(), "4/-6").to_string() == "-2/3");
  CHECK(E(qq(), "0/5").to_string() == "0");
  CHECK(E(qq(), "10/5").to_string() == "2");
  CHECK_THROWS_AS(E(qq(), "1/0"), ParseError);
  CHECK_THROWS_AS(E(gf7(), "1/2"), ParseError);
  CHECK_THROWS_AS(E(gf7(), "abc"), ParseError);
  CHECK_THROWS_AS(E(qq(), ""), ParseError);
}

TEST_CASE("parse and print round trip") {
  for (const auto& k : all_fields()) {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      const FieldElement a = random_element(k, rng);
      CHECK(k.parse_element(a.to_string()) == a);
    }
  }
}

TEST_CASE("GF(p) arithmetic agrees with integer arithmetic mod p") {
  for (std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
    const Field k = Field::gfp(p);
    Rng rng(p);
    std::uniform_int_distribution<long long> d(-5'000'000'000LL, 5'000'000'000LL);
    for (int t = 0; t < 1000; ++t) {
      const long long a = d(rng), b = d(rng);
      const FieldElement x = k.from_integer(a), y = k.from_integer(b);
      const long long ra = mod(a, p), rb = mod(b, p);
      REQUIRE(x.residue() == static_cast<std::uint32_t>(ra));
      CHECK((x + y).residue() == static_cast<std::uint32_t>(mod(ra + rb, p)));
      CHECK((x - y).residue() == static_cast<std::uint32_t>(mod(ra - rb, p)));
      CHECK((x * y).residue() == static_cast<std::uint32_t>(static_cast<unsigned __int128>(ra) * rb % p));
    }
  }
}

TEST_CASE("Q arithmetic agrees with small fractions") {
  Rng rng(11);
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
  for (int t = 0; t < 1000; ++t) {
    const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const FieldElement x = E(qq(), std::to_string(a) + "/" + std::to_string(b));
    const FieldElement y = E(qq(), std::to_string(c) + "/" + std::to_string(d));
    CHECK((x + y).to_string() == Frac(a * d + c * b, b * d).str());
    CHECK((x - y).to_string() == Frac(a * d - c * b, b * d).str());
    CHECK((x * y).to_string() == Frac(a * c, b * d).str());
    if (c != 0) CHECK((x / y).to_string() == Frac(a * d, b * c).str());
  }
}

TEST_CASE("field axioms on random triples") {
  for (const auto& k : all_fields()) {
    Rng rng(1234);
    for (int t = 0; t < 1000; ++t) {
      const FieldElement a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == k.zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("Fermat: a^(p-1) = 1") {
  for (const auto& k : {gf2(), gf3(), gf7(), Field::gfp(101)}) {
    for (const auto& a : k.elements()) {
      if (a.is_zero()) continue;
      FieldElement pw = k.one();
      for (std::uint32_t e = 1; e < k.characteristic(); ++e) pw = pw * a;
      CHECK(pw.is_one());
    }
  }
}

TEST_CASE("Q results are in lowest terms") {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const FieldElement a = random_element(qq(), rng), b = random_element(qq(), rng);
    for (const auto& r : {a + b, a - b, a * b}) {
      const mpq_class& v = r.rational();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      CHECK(g == 1);
      CHECK(v.get_den() > 0);
    }
  }
}

TEST_CASE("elements of a finite field") {
  CHECK(gf7().elements().size() == 7);
  CHECK(gf7().elements().front().is_zero());
  CHECK_THROWS_AS(qq().elements(), UsageError);
}

TEST_CASE("multiplication counter") {
  if (!instrumentation::counting_enabled()) return;
  instrumentation::reset_multiplications();
  const FieldElement a = E(gf7(), "3");
  FieldElement b = a * a;
  b *= a;
  CHECK(instrumentation::multiplications() == 2);
  instrumentation::reset_multiplications();
  CHECK(instrumentation::multiplications() == 0);
}
