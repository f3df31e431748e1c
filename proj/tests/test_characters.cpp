#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeuler/characters.hpp"
#include "qeuler/errors.hpp"
#include "support.hpp"

using namespace qeuler;

namespace {

DirichletCharacter quadratic3() { return character_from_table(3, {Number(0), Number(1), Number(-1)}); }

/// The quartic character mod 5 with chi(2) = i, built from powers of the generator 2.
DirichletCharacter quartic5() {
  const Number i = parse_number("0+1i");
  return character_from_table(5, {Number(0), Number(1), i, -i, Number(-1)});
}

}  // namespace

TEST_CASE("evaluation is periodic and completely multiplicative") {
  const DirichletCharacter chi = quadratic3();
  CHECK(chi.conductor() == 3);
  CHECK(chi(4) == Number(1));
  CHECK(chi(-1) == Number(-1));
  CHECK(chi(3) == Number(0));
  CHECK(character_value(chi, 11) == Number(-1));
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
  }
}

TEST_CASE("trivial character") {
  const DirichletCharacter t = DirichletCharacter::trivial();
  CHECK(t.is_trivial());
  CHECK(t(0) == Number(1));
  CHECK(t(-17) == Number(1));
  CHECK(t.max_modulus() == 1.0);
}

TEST_CASE("complex-valued character") {
  const DirichletCharacter chi = quartic5();
  for (long a = 0; a < 25; ++a) {
    for (long b = 0; b < 25; ++b) CHECK((chi(a * b) - chi(a) * chi(b)).abs() < 1e-15);
  }
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(character_from_table(4, {Number(0), Number(1), Number(0), Number(-1)}), DomainError);
  CHECK_THROWS_AS(character_from_table(3, {Number(0), Number(1)}), DomainError);
  CHECK_THROWS_AS(character_from_table(3, {Number(1), Number(1), Number(-1)}), DomainError);
  CHECK_THROWS_AS(character_from_table(3, {Number(0), Number(-1), Number(1)}), DomainError);
  CHECK_THROWS_AS(character_from_table(5, {Number(0), Number(1), Number(-1), Number(1), Number(-1)}), DomainError);
  CHECK_THROWS_AS(character_from_table(3, {Number(0), Number(1), Number(2)}), DomainError);
}

TEST_CASE("truncated Cauchy product against the naive double loop") {
  oracle::Gen gen(3);
  std::vector<Number> a, b;
  for (int i = 0; i < 12; ++i) {
    a.push_back(gen.rational());
    b.push_back(gen.rational());
  }
  const std::vector<Number> c = truncated_cauchy_product(a, b, 9);
  REQUIRE(c.size() == 10);
  for (std::size_t m = 0; m <= 9; ++m) {
    Number expected(0);
    for (std::size_t i = 0; i <= m; ++i) expected += a[i] * b[m - i];
    CHECK(c[m] == expected);
  }
}

TEST_CASE("character convolution against a brute-force lattice count") {
  const DirichletCharacter chi = quadratic3();
  const std::vector<Number> ratios = {Number::rational(1, 2), Number::rational(-1, 3), Number(2)};
  const std::size_t M = 10;
  const std::vector<Number> w = character_convolution(chi, ratios, M);
  REQUIRE(w.size() == M + 1);
  for (std::size_t m = 0; m <= M; ++m) {
    Number expected(0);
    for (std::size_t m1 = 0; m1 <= m; ++m1) {
      for (std::size_t m2 = 0; m1 + m2 <= m; ++m2) {
        const std::size_t m3 = m - m1 - m2;
        expected += pow_int(ratios[0], static_cast<long>(m1)) * chi(static_cast<long>(m1)) *
                    pow_int(ratios[1], static_cast<long>(m2)) * chi(static_cast<long>(m2)) *
                    pow_int(ratios[2], static_cast<long>(m3)) * chi(static_cast<long>(m3));
      }
    }
    CHECK(w[m] == expected);
  }
}

TEST_CASE("property: generated characters modulo primes validate") {
  // chi(g^k) = omega^k for a primitive root g of p and omega a root of unity of order dividing p - 1.
  struct Case {
    long p, g;
  };
  for (const Case c : {Case{3, 2}, Case{5, 2}, Case{7, 3}, Case{11, 2}, Case{13, 2}}) {
    for (long order : {1L, 2L}) {
      if ((c.p - 1) % order != 0) continue;
      std::vector<Number> values(static_cast<std::size_t>(c.p), Number(0));
      long power = 1;
      for (long k = 0; k < c.p - 1; ++k) {
        values[static_cast<std::size_t>(power)] = (k % order == 0) ? Number(1) : Number(-1);
        power = power * c.g % c.p;
      }
      const DirichletCharacter chi = character_from_table(c.p, values);
      for (long a = 0; a < 3 * c.p; ++a) {
        for (long b = 0; b < 3 * c.p; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
      }
    }
  }
}
