// Test-side oracles and generators. Nothing here calls the library's summation kernels:
// the direct sums below evaluate the defining lattice series in long double.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qeuler/scalar.hpp"

namespace oracle {

using ld = long double;
using cld = std::complex<long double>;

inline cld to_cld(const qeuler::Number& v) {
  const auto z = v.to_std();
  return {static_cast<ld>(z.real()), static_cast<ld>(z.imag())};
}

inline ld dist(const qeuler::Number& a, cld b) { return std::abs(to_cld(a) - b); }

/// [y]_q = (1 - q^y)/(1 - q) with q^y = exp(y Log q).
inline cld bracket(cld q, cld y) { return (ld(1) - std::exp(y * std::log(q))) / (ld(1) - q); }

/// b^e with the principal logarithm; integer e uses repeated multiplication.
inline cld power(cld b, cld e) {
  if (e.imag() == 0 && e.real() == std::floor(e.real()) && std::abs(e.real()) < 64) {
    cld out = 1;
    const long k = static_cast<long>(e.real());
    for (long i = 0; i < std::labs(k); ++i) out *= b;
    return k < 0 ? ld(1) / out : out;
  }
  return std::exp(e * std::log(b));
}

/// prefactor * sum over [0,M]^r of prod_j w(j, m_j) * [sum_j a_j m_j + x]_q^e.
inline cld lattice_sum(cld q, cld x, int r, int M, const std::vector<ld>& a, cld e,
                       const std::function<cld(int, int)>& weight, cld prefactor) {
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  cld total = 0;
  while (true) {
    cld w = 1;
    cld arg = x;
    for (int j = 0; j < r; ++j) {
      w *= weight(j, m[static_cast<std::size_t>(j)]);
      arg += a[static_cast<std::size_t>(j)] * ld(m[static_cast<std::size_t>(j)]);
    }
    if (w != cld(0)) total += w * power(bracket(q, arg), e);
    int k = 0;
    while (k < r && ++m[static_cast<std::size_t>(k)] > M) m[static_cast<std::size_t>(k++)] = 0;
    if (k == r) break;
  }
  return prefactor * total;
}

/// chi values as a callable over integers.
inline std::function<ld(long)> chi_of(const std::vector<int>& table) {
  return [table](long m) {
    const long f = static_cast<long>(table.size());
    return static_cast<ld>(table[static_cast<std::size_t>(((m % f) + f) % f)]);
  };
}

inline const std::vector<int>& quadratic3() {
  static const std::vector<int> t = {0, 1, -1};
  return t;
}

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Rational with 0 < |q| < 1.
  qeuler::Number q_rational(bool allow_negative = true) {
    const long d = integer(2, 15);
    long p = 0;
    while (p == 0) p = integer(allow_negative ? 1 - d : 1, d - 1);
    return qeuler::Number::rational(p, d);
  }

  qeuler::Number rational(long span = 20, long max_den = 12) {
    return qeuler::Number::rational(integer(-span, span), integer(1, max_den));
  }

  /// Complex q inside the disk |q| <= radius, away from the origin.
  std::complex<double> q_complex(double radius = 0.7) {
    std::uniform_real_distribution<double> u(0.15, radius), t(-3.1, 3.1);
    return std::polar(u(rng_), t(rng_));
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
