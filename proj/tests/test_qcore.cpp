#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeuler/errors.hpp"
#include "qeuler/qcore.hpp"
#include "support.hpp"

using namespace qeuler;

namespace {

/// [n]_q = 1 + q + ... + q^{n-1}.
Number geometric_q_number(long n, const Number& q) {
  Number out(0), p(1);
  for (long i = 0; i < n; ++i) {
    out += p;
    p *= q;
  }
  return out;
}

/// Gaussian binomial from its generating product: coefficients of prod_{i<n} (1 + q^i t), read at t^k,
/// divided by q^{k(k-1)/2}.
Number gaussian_via_product(long n, long k, const Number& q) {
  std::vector<Number> poly = {Number(1)};
  Number qi(1);
  for (long i = 0; i < n; ++i) {
    std::vector<Number> next(poly.size() + 1, Number(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * qi;
    }
    poly = next;
    qi *= q;
  }
  return poly[static_cast<std::size_t>(k)] / pow_int(q, k * (k - 1) / 2);
}

}  // namespace

TEST_CASE("q-numbers") {
  const QParam q = QParam::exact(Number::rational(1, 2));
  CHECK(q_number(Number(3), q) == Number::rational(7, 4));
  CHECK(q_number(Number(0), q) == Number(0));
  CHECK(q_number(Number(-1), q) == Number(-2));
  CHECK_THROWS_AS(q_number(Number::rational(1, 2), q), ExactnessError);
  const QParam qf = QParam::floating(Number::rational(1, 2));
  CHECK(q_number(Number::rational(1, 2), qf).to_std().real() == doctest::Approx((1 - std::sqrt(0.5)) / 0.5));
}

TEST_CASE("q-factorials") {
  const QParam q = QParam::exact(Number::rational(1, 2));
  CHECK(q_factorial(0, q) == Number(1));
  CHECK(q_factorial(3, q) == Number::rational(21, 8));
  CHECK_THROWS_AS(q_factorial(-1, q), DomainError);
}

TEST_CASE("Gaussian binomial small cases") {
  const QParam q = QParam::exact(Number::rational(1, 2));
  // 1 + q + 2q^2 + q^3 + q^4 at q = 1/2
  CHECK(q_binomial(4, 2, q) == Number::rational(35, 16));
  CHECK(q_binomial(5, 0, q) == Number(1));
  CHECK(q_binomial(5, 5, q) == Number(1));
  CHECK(q_binomial(5, 6, q) == Number(0));
  CHECK(q_binomial(5, -1, q) == Number(0));
}

TEST_CASE("Gaussian binomial matches the generating product") {
  oracle::Gen gen(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Number qv = gen.q_rational();
    const QParam q = QParam::exact(qv);
    const long n = gen.integer(0, 14);
    for (long k = 0; k <= n; ++k) CHECK(q_binomial(n, k, q) == gaussian_via_product(n, k, qv));
  }
}

TEST_CASE("float Gaussian binomial agrees with exact") {
  const Number qv = Number::rational(-3, 7);
  const QParam qe = QParam::exact(qv);
  const QParam qf = QParam::floating(qv, 113);
  for (long n = 0; n <= 25; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Number exact = to_float(q_binomial(n, k, qe), 113);
      CHECK((q_binomial(n, k, qf) - exact).abs() <= 1e-25 * std::max(1.0, exact.abs()));
    }
  }
}

TEST_CASE("q-Pochhammer") {
  const QParam q = QParam::exact(Number::rational(1, 2));
  CHECK(q_pochhammer(Number::rational(1, 2), q, 0) == Number(1));
  CHECK(q_pochhammer(Number::rational(1, 2), q, 2) == Number::rational(3, 8));
  CHECK(q_pochhammer(Number(-1), q, 3) == Number(2) * Number::rational(3, 2) * Number::rational(5, 4));
  CHECK_THROWS_AS(q_pochhammer(Number(1), q, -1), DomainError);
}

TEST_CASE("q-binomial table") {
  const QParam q = QParam::exact(Number::rational(2, 5));
  const QBinomialTable table(q, 40);
  for (std::size_t n = 0; n <= 40; n += 7) {
    for (std::size_t k = 0; k <= n; ++k) CHECK(table(n, k) == q_binomial(static_cast<long>(n), static_cast<long>(k), q));
  }
  CHECK_THROWS_AS(table(41, 0), DomainError);
  const QBinomialTable banded(q, 100, 3);
  CHECK(banded(100, 3) == q_binomial(100, 3, q));
  CHECK_THROWS_AS(banded(10, 4), DomainError);
}

TEST_CASE("property: q-Pascal rules") {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Number qv = gen.q_rational();
    const QParam q = QParam::exact(qv);
    const long n = gen.integer(1, 16), k = gen.integer(1, n);
    const Number lhs = q_binomial(n, k, q);
    CHECK(lhs == q_binomial(n - 1, k - 1, q) + pow_int(qv, k) * q_binomial(n - 1, k, q));
    CHECK(lhs == pow_int(qv, n - k) * q_binomial(n - 1, k - 1, q) + q_binomial(n - 1, k, q));
    CHECK(lhs == q_binomial(n, n - k, q));
  }
}

TEST_CASE("property: Gauss expansion of the q-Pochhammer symbol") {
  oracle::Gen gen(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Number qv = gen.q_rational();
    const QParam q = QParam::exact(qv);
    const Number x = gen.rational();
    const long n = gen.integer(0, 12);
    Number sum(0);
    for (long i = 0; i <= n; ++i) sum += q_binomial(n, i, q) * pow_int(qv, i * (i - 1) / 2) * pow_int(-x, i);
    CHECK(q_pochhammer(x, q, n) == sum);
  }
}

TEST_CASE("property: q-number addition rule") {
  oracle::Gen gen(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Number qv = gen.q_rational();
    const QParam q = QParam::exact(qv);
    const long a = gen.integer(-10, 10), b = gen.integer(-10, 10);
    CHECK(q_number(Number(a + b), q) == q_number(Number(a), q) + pow_int(qv, a) * q_number(Number(b), q));
    if (a >= 0) CHECK(q_number(Number(a), q) == geometric_q_number(a, qv));
  }
}
