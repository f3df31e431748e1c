/**
 * @file scalar.hpp
 * @brief Numeric tower: exact rationals and complex multiprecision floats.
 *
 * Number is the single value type used throughout the library. It holds either
 * an exact GMP rational or a complex value whose parts are MPFR reals carrying
 * their own precision. Exact op Exact stays exact; anything touching a float
 * becomes a float at the larger of the operand precisions.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace qeuler {

enum class Mode { Exact, Float };

inline constexpr unsigned kDefaultPrecision = 53;

/// Moduli below this are treated as zero when dividing.
inline constexpr double kUnderflowGuard = 1e-300;

/// RAII wrapper over an mpfr_t. Binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(unsigned precision = kDefaultPrecision);
  Real(double value, unsigned precision);
  Real(const mpq_class& value, unsigned precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  /// Copy of this value rounded to a new precision.
  Real rounded(unsigned precision) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

/// Complex float with MPFR parts of a common precision.
class Complex {
 public:
  explicit Complex(unsigned precision = kDefaultPrecision) : re_(precision), im_(precision) {}
  Complex(Real re, Real im);
  Complex(const mpq_class& re, unsigned precision) : re_(re, precision), im_(precision) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  unsigned precision() const { return re_.precision(); }
  Complex rounded(unsigned precision) const { return {re_.rounded(precision), im_.rounded(precision)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }

  /// |z| correctly rounded at the value's precision.
  Real modulus() const;
  /// Principal argument in (-pi, pi]; a signed-zero imaginary part counts as +0.
  Real argument() const;

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a);
  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

Complex exp(const Complex& z);
/// Principal logarithm, imaginary part in (-pi, pi].
Complex log(const Complex& z);

/// Exact rational or complex float. Values are immutable once built.
class Number {
 public:
  Number() : value_(mpq_class(0)) {}
  Number(int value) : value_(mpq_class(value)) {}                   // NOLINT
  Number(long value) : value_(mpq_class(value)) {}                  // NOLINT
  Number(long long value) : value_(mpq_class(static_cast<long>(value))) {}  // NOLINT
  Number(mpq_class value);                                          // NOLINT
  Number(Complex value) : value_(std::move(value)) {}               // NOLINT

  static Number rational(long numerator, long denominator);
  static Number from_double(double re, double im = 0.0, unsigned precision = kDefaultPrecision);

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_float() const { return !is_exact(); }
  Mode mode() const { return is_exact() ? Mode::Exact : Mode::Float; }

  /// Exact payload; throws if this is a float.
  const mpq_class& exact() const;
  /// Float payload; throws if this is exact.
  const Complex& complex() const;
  /// 0 for exact values.
  unsigned precision() const;

  /// Value as a complex float at the given precision.
  Complex to_complex(unsigned precision) const;
  std::complex<double> to_std() const;
  double abs() const { return std::abs(to_std()); }

  bool is_zero() const;
  bool is_real() const;
  /// Integer value when this is an exact integer or a float with integral real part and zero imaginary part.
  std::optional<long> as_integer() const;

  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  friend Number operator-(const Number& a);
  Number& operator+=(const Number& b) { return *this = *this + b; }
  Number& operator-=(const Number& b) { return *this = *this - b; }
  Number& operator*=(const Number& b) { return *this = *this * b; }
  Number& operator/=(const Number& b) { return *this = *this / b; }

  /// Structural equality: same kind and same value.
  friend bool operator==(const Number& a, const Number& b);
  friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

 private:
  std::variant<mpq_class, Complex> value_;
};

/// Integer power by squaring; 0^0 = 1, 0^negative throws.
Number pow_int(const Number& base, long exponent);

/// base^exponent on the principal branch exp(exponent * Log base).
/// Integer exponents on an exact base stay exact; otherwise the result is a float.
Number pow_principal(const Number& base, const Number& exponent);
/// As above, but Mode::Exact refuses any result that would not be exact.
Number pow_principal(const Number& base, const Number& exponent, Mode mode);

Number to_float(const Number& x, unsigned precision = kDefaultPrecision);

/// Parses "p", "p/q", decimal literals (exact) and "a+bi" complex literals (float).
Number parse_number(std::string_view text, unsigned precision = kDefaultPrecision);

/// "p/q" (or "p") for exact values, "a+bi" for floats. digits = 0 picks a round-trip width.
std::string render(const Number& x, int digits = 0);

/// The deformation parameter, 0 < |q| < 1, with the evaluation mode it implies.
class QParam {
 public:
  static QParam exact(const Number& value);
  static QParam floating(const Number& value, unsigned precision = kDefaultPrecision);

  const Number& value() const { return value_; }
  Mode mode() const { return mode_; }
  unsigned precision() const { return precision_; }
  double modulus() const { return value_.abs(); }

  /// Converts an input to this parameter's mode. Exact mode rejects floats.
  Number lift(const Number& x) const;
  /// q^k as a parameter in the same mode.
  QParam power(long k) const;

 private:
  QParam(Number value, Mode mode, unsigned precision);

  Number value_;
  Mode mode_;
  unsigned precision_;
};

}  // namespace qeuler
