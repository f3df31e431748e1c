#include "qeuler/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <utility>

#include "qeuler/errors.hpp"

namespace qeuler {

// ---------------------------------------------------------------- Real

Real::Real(unsigned precision) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, unsigned precision) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, unsigned precision) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(unsigned precision) const {
  Real out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

unsigned joint_precision(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Real out(joint_precision(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a) {
  Real out(a.precision());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------- Complex

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const unsigned p = std::max(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_.rounded(p);
  if (im_.precision() != p) im_ = im_.rounded(p);
}

Real Complex::modulus() const {
  Real out(precision());
  mpfr_hypot(out.get(), re_.get(), im_.get(), MPFR_RNDN);
  return out;
}

Real Complex::argument() const {
  Real out(precision());
  if (im_.is_zero()) {
    Real zero(precision());
    mpfr_atan2(out.get(), zero.get(), re_.get(), MPFR_RNDN);
  } else {
    mpfr_atan2(out.get(), im_.get(), re_.get(), MPFR_RNDN);
  }
  return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }

Complex operator*(const Complex& a, const Complex& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) {
    return {a.re_ * b.re_, Real(std::max(a.precision(), b.precision()))};
  }
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im_.is_zero()) {
    if (b.re_.is_zero() || mpfr_get_exp(b.re_.get()) < -996) throw DomainError("division by (near) zero");
    return {a.re_ / b.re_, a.im_ / b.re_};
  }
  const Real denom = b.re_ * b.re_ + b.im_ * b.im_;
  if (denom.is_zero() || mpfr_get_exp(denom.get()) < -1993) throw DomainError("division by (near) zero");
  return {(a.re_ * b.re_ + a.im_ * b.im_) / denom, (a.im_ * b.re_ - a.re_ * b.im_) / denom};
}

Complex exp(const Complex& z) {
  const unsigned p = z.precision();
  Real magnitude(p), s(p), c(p);
  mpfr_exp(magnitude.get(), z.re().get(), MPFR_RNDN);
  if (z.im().is_zero()) return {magnitude, Real(p)};
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {magnitude * c, magnitude * s};
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  const unsigned p = z.precision();
  Real ln_abs(p);
  if (z.im().is_zero() && z.re().sign() > 0) {
    mpfr_log(ln_abs.get(), z.re().get(), MPFR_RNDN);
    return {ln_abs, Real(p)};
  }
  const Real m = z.modulus();
  mpfr_log(ln_abs.get(), m.get(), MPFR_RNDN);
  return {ln_abs, z.argument()};
}

// ---------------------------------------------------------------- Number

Number::Number(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Number Number::rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  mpq_class q(numerator, 1);
  q /= mpq_class(denominator);
  return Number(std::move(q));
}

Number Number::from_double(double re, double im, unsigned precision) {
  return Number(Complex(Real(re, precision), Real(im, precision)));
}

const mpq_class& Number::exact() const {
  if (!is_exact()) throw DomainError("expected an exact value");
  return std::get<mpq_class>(value_);
}

const Complex& Number::complex() const {
  if (is_exact()) throw DomainError("expected a float value");
  return std::get<Complex>(value_);
}

unsigned Number::precision() const { return is_exact() ? 0U : std::get<Complex>(value_).precision(); }

Complex Number::to_complex(unsigned precision) const {
  if (is_exact()) return Complex(std::get<mpq_class>(value_), precision);
  const auto& z = std::get<Complex>(value_);
  return z.precision() == precision ? z : z.rounded(precision);
}

std::complex<double> Number::to_std() const {
  if (is_exact()) return {std::get<mpq_class>(value_).get_d(), 0.0};
  return std::get<Complex>(value_).to_std();
}

bool Number::is_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<Complex>(value_).is_zero();
}

bool Number::is_real() const { return is_exact() || std::get<Complex>(value_).im().is_zero(); }

std::optional<long> Number::as_integer() const {
  if (is_exact()) {
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
  }
  const auto& z = std::get<Complex>(value_);
  if (!z.im().is_zero() || !z.re().is_integer()) return std::nullopt;
  if (!mpfr_fits_slong_p(z.re().get(), MPFR_RNDN)) return std::nullopt;
  return mpfr_get_si(z.re().get(), MPFR_RNDN);
}

namespace {

unsigned float_precision(const Number& a, const Number& b) {
  const unsigned p = std::max(a.precision(), b.precision());
  return p == 0 ? kDefaultPrecision : p;
}

}  // namespace

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(mpq_class(a.exact() + b.exact()));
  const unsigned p = float_precision(a, b);
  return Number(a.to_complex(p) + b.to_complex(p));
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(mpq_class(a.exact() - b.exact()));
  const unsigned p = float_precision(a, b);
  return Number(a.to_complex(p) - b.to_complex(p));
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(mpq_class(a.exact() * b.exact()));
  const unsigned p = float_precision(a, b);
  return Number(a.to_complex(p) * b.to_complex(p));
}

Number operator/(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    if (sgn(b.exact()) == 0) throw DomainError("division by exact zero");
    return Number(mpq_class(a.exact() / b.exact()));
  }
  const unsigned p = float_precision(a, b);
  return Number(a.to_complex(p) / b.to_complex(p));
}

Number operator-(const Number& a) {
  if (a.is_exact()) return Number(mpq_class(-a.exact()));
  return Number(-a.complex());
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.complex() == b.complex();
}

// ---------------------------------------------------------------- powers

namespace {

unsigned bit_length(unsigned long v) {
  unsigned n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

Complex complex_pow_int(const Complex& base, long exponent) {
  const unsigned p = base.precision();
  const unsigned long magnitude = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
  if (base.im().is_zero()) {
    Real out(p);
    mpfr_pow_si(out.get(), base.re().get(), exponent, MPFR_RNDN);
    return {out, Real(p)};
  }
  // Squaring at extra precision keeps the rounded result within a few ulp.
  const unsigned work = p + 2 * bit_length(magnitude) + 8;
  Complex acc(mpq_class(1), work);
  Complex square = base.rounded(work);
  for (unsigned long e = magnitude; e != 0; e >>= 1) {
    if (e & 1UL) acc = acc * square;
    if (e > 1) square = square * square;
  }
  if (exponent < 0) acc = Complex(mpq_class(1), work) / acc;
  return acc.rounded(p);
}

}  // namespace

Number pow_int(const Number& base, long exponent) {
  if (base.is_zero() && exponent < 0) throw DomainError("zero base with negative exponent");
  if (base.is_exact()) {
    if (exponent == 0) return Number(1);
    const mpq_class& q = base.exact();
    const unsigned long magnitude = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), magnitude);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), magnitude);
    mpq_class out = exponent < 0 ? mpq_class(den, num) : mpq_class(num, den);
    return Number(std::move(out));
  }
  if (exponent == 0) return Number(Complex(mpq_class(1), base.precision()));
  return Number(complex_pow_int(base.complex(), exponent));
}

Number pow_principal(const Number& base, const Number& exponent) {
  if (auto k = exponent.as_integer()) {
    if (base.is_zero() && *k <= 0) throw DomainError("zero base with non-positive exponent");
    Number out = pow_int(base, *k);
    if (exponent.is_float() && out.is_exact()) out = to_float(out, exponent.precision());
    return out;
  }
  const unsigned p = float_precision(base, exponent);
  const Complex e = exponent.to_complex(p);
  if (base.is_zero()) {
    if (e.re().sign() <= 0) throw DomainError("zero base with non-positive exponent");
    return Number(Complex(p));
  }
  const Complex b = base.to_complex(p);
  if (b.im().is_zero() && b.re().sign() > 0 && e.im().is_zero()) {
    Real out(p);
    mpfr_pow(out.get(), b.re().get(), e.re().get(), MPFR_RNDN);
    return Number(Complex(out, Real(p)));
  }
  const unsigned work = p + 32;
  const Complex result = exp(e.rounded(work) * log(b.rounded(work)));
  return Number(result.rounded(p));
}

Number pow_principal(const Number& base, const Number& exponent, Mode mode) {
  if (mode == Mode::Exact) {
    if (!base.is_exact() || !exponent.is_exact()) throw ExactnessError("exact mode received a float operand");
    if (!exponent.as_integer()) {
      throw ExactnessError("exact mode cannot raise to the non-integer power " + render(exponent));
    }
    return pow_principal(base, exponent);
  }
  Number out = pow_principal(base, exponent);
  if (out.is_exact()) out = to_float(out, float_precision(base, exponent));
  return out;
}

Number to_float(const Number& x, unsigned precision) { return Number(x.to_complex(precision)); }

// ---------------------------------------------------------------- literals

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

const std::regex& rational_pattern() {
  static const std::regex re(R"(^[+-]?\d+(/\d+)?$)");
  return re;
}

const std::regex& decimal_pattern() {
  static const std::regex re(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  return re;
}

mpq_class parse_exact_decimal(const std::smatch& m, std::string_view original) {
  const std::string int_part = m[2].str();
  const std::string frac_part = m[3].str();
  if (int_part.empty() && frac_part.empty()) throw DomainError("invalid number literal '" + std::string(original) + "'");
  long exponent = 0;
  if (m[4].matched) {
    const std::string e = m[4].str();
    if (e.size() > 6) throw DomainError("exponent out of range in '" + std::string(original) + "'");
    exponent = std::stol(e);
  }
  exponent -= static_cast<long>(frac_part.size());
  mpz_class digits(int_part + frac_part + (int_part.empty() && frac_part.empty() ? "0" : ""), 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class out = exponent < 0 ? mpq_class(digits, scale) : mpq_class(digits * scale);
  out.canonicalize();
  if (m[1].str() == "-") out = -out;
  return out;
}

Real parse_real_part(const std::string& text, unsigned precision, std::string_view original) {
  std::smatch m;
  if (!std::regex_match(text, m, decimal_pattern()) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw DomainError("invalid number literal '" + std::string(original) + "'");
  }
  Real out(precision);
  mpfr_set_str(out.get(), text.c_str(), 10, MPFR_RNDN);
  return out;
}

}  // namespace

Number parse_number(std::string_view text, unsigned precision) {
  const std::string s = trim(text);
  if (s.empty()) throw DomainError("empty number literal");
  if (s.back() == 'i') {
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string re_text = "0";
    std::string im_text = body;
    if (split != std::string::npos) {
      re_text = body.substr(0, split);
      im_text = body.substr(split);
    }
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return Number(Complex(parse_real_part(re_text, precision, s), parse_real_part(im_text, precision, s)));
  }
  if (std::regex_match(s, rational_pattern())) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("invalid rational literal '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    return Number(std::move(q));
  }
  std::smatch m;
  if (std::regex_match(s, m, decimal_pattern())) return Number(parse_exact_decimal(m, s));
  throw DomainError("invalid number literal '" + s + "'");
}

namespace {

std::string format_real(const Real& x, int digits) {
  char buffer[4096];
  mpfr_snprintf(buffer, sizeof buffer, "%.*RNg", digits, x.get());
  return buffer;
}

}  // namespace

std::string render(const Number& x, int digits) {
  if (x.is_exact()) {
    const mpq_class& q = x.exact();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  const Complex& z = x.complex();
  if (digits <= 0) digits = static_cast<int>(std::ceil(z.precision() * 0.30102999566398120)) + 1;
  std::string out = format_real(z.re(), digits);
  if (mpfr_signbit(z.im().get()) != 0 && !z.im().is_zero()) {
    out += "-" + format_real(-z.im(), digits);
  } else {
    Real im = z.im();
    mpfr_abs(im.get(), im.get(), MPFR_RNDN);
    out += "+" + format_real(im, digits);
  }
  return out + "i";
}

// ---------------------------------------------------------------- QParam

QParam::QParam(Number value, Mode mode, unsigned precision)
    : value_(std::move(value)), mode_(mode), precision_(precision) {}

QParam QParam::exact(const Number& value) {
  if (!value.is_exact()) throw ExactnessError("exact q must be a rational literal");
  const mpq_class& q = value.exact();
  if (sgn(q) == 0 || mpz_cmpabs(q.get_num_mpz_t(), q.get_den_mpz_t()) >= 0) throw DomainError("q must satisfy 0 < |q| < 1");
  return QParam(value, Mode::Exact, 0);
}

QParam QParam::floating(const Number& value, unsigned precision) {
  if (precision < 2) throw DomainError("precision must be at least 2 bits");
  Number v = to_float(value, precision);
  const Complex& z = v.complex();
  // Squares at doubled precision are exact, so the comparison with 1 is exact.
  const unsigned wide = 2 * precision + 2;
  const Real re = z.re().rounded(wide), im = z.im().rounded(wide);
  const Real norm = re * re + im * im;
  if (norm.is_zero() || mpfr_cmp_ui(norm.get(), 1) >= 0) throw DomainError("q must satisfy 0 < |q| < 1");
  return QParam(std::move(v), Mode::Float, precision);
}

Number QParam::lift(const Number& x) const {
  if (mode_ == Mode::Exact) {
    if (!x.is_exact()) throw ExactnessError("exact mode received a float input " + render(x));
    return x;
  }
  return to_float(x, precision_);
}

QParam QParam::power(long k) const {
  if (k < 1) throw DomainError("q power must be positive");
  return QParam(pow_int(value_, k), mode_, precision_);
}

}  // namespace qeuler
