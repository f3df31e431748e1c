#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeuler/errors.hpp"
#include "qeuler/scalar.hpp"
#include "support.hpp"

using namespace qeuler;

TEST_CASE("rational literals are exact and canonical") {
  CHECK(parse_number("3/7").is_exact());
  CHECK(parse_number("2/4") == Number::rational(1, 2));
  CHECK(parse_number("-6") == Number(-6));
  CHECK(parse_number("0.25") == Number::rational(1, 4));
  CHECK(parse_number("-1.5e-2") == Number::rational(-3, 200));
  CHECK(render(Number::rational(-4, 6)) == "-2/3");
  CHECK(render(Number(7)) == "7");
}

TEST_CASE("complex literals are floats") {
  const Number z = parse_number("0.4+0.3i");
  REQUIRE(z.is_float());
  CHECK(z.to_std().real() == doctest::Approx(0.4));
  CHECK(z.to_std().imag() == doctest::Approx(0.3));
  const Number w = parse_number("1e-3-2.5e2i");
  CHECK(w.to_std().real() == doctest::Approx(1e-3));
  CHECK(w.to_std().imag() == doctest::Approx(-250.0));
  CHECK(parse_number("-2i").to_std().imag() == doctest::Approx(-2.0));
  CHECK_THROWS_AS(parse_number("1/0"), DomainError);
  CHECK_THROWS_AS(parse_number("abc"), DomainError);
  CHECK_THROWS_AS(parse_number(""), DomainError);
}

TEST_CASE("render then parse round-trips") {
  oracle::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Number r = gen.rational(1000, 997);
    CHECK(parse_number(render(r)) == r);
    for (unsigned prec : {53U, 113U, 200U}) {
      const auto z = gen.q_complex(5.0);
      const Number c = Number::from_double(z.real() * 1e-3, z.imag() * 1e5, prec) * Number::rational(1, 3);
      CHECK(parse_number(render(c), prec) == c);
    }
  }
}

TEST_CASE("exact and float promotion") {
  const Number a = Number::rational(1, 3);
  const Number b = Number::from_double(0.5);
  CHECK((a + a).is_exact());
  CHECK((a + b).is_float());
  CHECK((a * b).to_std().real() == doctest::Approx(1.0 / 6.0));
  CHECK(((a + b) - b).to_std().real() == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(a / Number(0), DomainError);
}

TEST_CASE("float arithmetic agrees with long double complex") {
  oracle::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    const auto u = gen.q_complex(3.0), v = gen.q_complex(3.0);
    const Number x = Number::from_double(u.real(), u.imag()), y = Number::from_double(v.real(), v.imag());
    const oracle::cld xu(u.real(), u.imag()), yv(v.real(), v.imag());
    CHECK(oracle::dist(x * y, xu * yv) < 1e-14L * std::abs(xu * yv));
    CHECK(oracle::dist(x / y, xu / yv) < 1e-14L * std::abs(xu / yv));
    CHECK(oracle::dist(x - y, xu - yv) < 1e-14L * (std::abs(xu) + std::abs(yv)));
  }
}

TEST_CASE("integer powers") {
  CHECK(pow_int(Number(0), 0) == Number(1));
  CHECK(pow_int(Number::rational(1, 2), -3) == Number(8));
  CHECK(pow_int(Number::rational(-2, 3), 3) == Number::rational(-8, 27));
  CHECK_THROWS_AS(pow_int(Number(0), -1), DomainError);
  const Number z = parse_number("0.4+0.3i");
  const oracle::cld zc(0.4L, 0.3L);
  CHECK(oracle::dist(pow_int(z, 17), std::pow(zc, 17)) < 1e-15L);
  CHECK(oracle::dist(pow_int(z, -5), std::pow(zc, -5)) < 1e-11L);
}

TEST_CASE("principal powers") {
  const Number i = pow_principal(Number(-1), Number::rational(1, 2));
  CHECK(i.to_std().real() == doctest::Approx(0.0));
  CHECK(i.to_std().imag() == doctest::Approx(1.0));
  CHECK(pow_principal(Number(4), Number::rational(1, 2)).to_std().real() == doctest::Approx(2.0));
  CHECK(pow_principal(Number::rational(1, 2), Number(3), Mode::Exact) == Number::rational(1, 8));
  CHECK_THROWS_AS(pow_principal(Number::rational(1, 2), Number::rational(1, 3), Mode::Exact), ExactnessError);
  const Number s = parse_number("2+1i");
  const oracle::cld expected = std::exp(oracle::cld(2, 1) * std::log(oracle::cld(1.5L, 0)));
  CHECK(oracle::dist(pow_principal(Number::rational(3, 2), s), expected) < 1e-14L);
}

TEST_CASE("higher precision carries more digits") {
  const Number third = to_float(Number::rational(1, 3), 200);
  CHECK(third.precision() == 200);
  const Number diff = third * Number(3) - to_float(Number(1), 200);
  CHECK(diff.abs() < 1e-59);
}

TEST_CASE("QParam validation") {
  CHECK_THROWS_AS(QParam::exact(Number(1)), DomainError);
  CHECK_THROWS_AS(QParam::exact(Number(0)), DomainError);
  CHECK_THROWS_AS(QParam::exact(Number::rational(-3, 2)), DomainError);
  CHECK_THROWS_AS(QParam::exact(parse_number("0.4+0.3i")), ExactnessError);
  CHECK_THROWS_AS(QParam::floating(parse_number("0.8+0.6i")), DomainError);
  const QParam q = QParam::floating(parse_number("0.4+0.3i"));
  CHECK(q.modulus() == doctest::Approx(0.5));
  CHECK(q.mode() == Mode::Float);
  const QParam e = QParam::exact(Number::rational(-1, 2));
  CHECK(e.power(3).value() == Number::rational(-1, 8));
  CHECK_THROWS_AS(e.lift(parse_number("0.1+0i")), ExactnessError);
  CHECK(e.lift(Number(3)) == Number(3));
}

TEST_CASE("integer detection") {
  CHECK(Number(5).as_integer() == 5);
  CHECK(!Number::rational(5, 2).as_integer());
  CHECK(to_float(Number(-3)).as_integer() == -3);
  CHECK(!parse_number("1+1i").as_integer());
}
