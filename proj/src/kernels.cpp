#include "kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/qcore.hpp"

namespace qeuler::detail {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
// Relative slack on bounds computed in double arithmetic.
constexpr double kBoundSlack = 1.0 + 1e-9;

template <class CoordinateFactor>
Number finite_l_sum(long n, long r, const QParam& q, const Number& qx, CoordinateFactor&& factor) {
  if (n < 0) throw DomainError("degree n must be nonnegative");
  if (r < 1) throw DomainError("order r must be at least 1");
  const Number one = q.lift(Number(1));
  Number sum = q.lift(Number(0));
  Number signed_power = one;
  const Number neg_qx = -qx;
  for (long l = 0; l <= n; ++l) {
    sum += binomial(n, l) * signed_power * factor(l);
    signed_power *= neg_qx;
  }
  return two_q_pow(q, r) * sum / pow_int(one - q.value(), n);
}

// Extra working bits for the alternating l-sums, whose terms cancel by roughly (1 - q)^{-n}.
constexpr unsigned kGuardBits = 64;

/// Runs body at widened precision in Float mode and rounds the result back.
template <class Body>
Number guarded(const QParam& q, const Number& qx, Body&& body) {
  if (q.mode() == Mode::Exact) return body(q, qx);
  const unsigned wide = q.precision() + kGuardBits;
  return to_float(body(QParam::floating(q.value(), wide), to_float(qx, wide)), q.precision());
}

/// Copies of values at q's precision (unchanged in Exact mode).
std::vector<Number> at_precision_of(const QParam& q, const std::vector<Number>& values) {
  if (q.mode() == Mode::Exact) return values;
  std::vector<Number> out;
  out.reserve(values.size());
  for (const Number& v : values) out.push_back(to_float(v, q.precision()));
  return out;
}

Number reciprocal(const Number& denominator, const char* what) {
  if (denominator.is_zero() || (denominator.is_float() && denominator.abs() < kUnderflowGuard)) {
    throw DomainError(std::string("vanishing denominator in ") + what);
  }
  return Number(1) / denominator;
}

std::complex<double> as_std(const Number& x) { return x.to_std(); }

}  // namespace

Number q_power(const QParam& q, const Number& x) { return pow_principal(q.value(), q.lift(x), q.mode()); }

Number two_q_pow(const QParam& q, long r) { return pow_int(q.lift(Number(1)) + q.value(), r); }

Number binomial(long n, long k) {
  if (k < 0 || k > n) return Number(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Number(mpq_class(out));
}

Number bracket_power(const Number& bracket, const Number& exponent, Mode mode) {
  if (auto k = exponent.as_integer(); k && *k >= 0) {
    Number out = pow_int(bracket, *k);
    if (mode == Mode::Float && out.is_exact()) out = to_float(out, std::max(exponent.precision(), kDefaultPrecision));
    return out;
  }
  if (bracket.is_zero()) throw DomainError("vanishing q-bracket raised to a non-positive power");
  return pow_principal(bracket, exponent, mode);
}

Number twisted_geometric(const DirichletCharacter& chi, const Number& z) {
  const std::int64_t f = chi.conductor();
  Number sum(0);
  Number power(1);
  const Number neg_z = -z;
  for (std::int64_t c = 0; c < f; ++c) {
    const Number& value = chi.values()[static_cast<std::size_t>(c)];
    if (!value.is_zero()) sum += value * power;
    power *= neg_z;
  }
  return sum * reciprocal(Number(1) + pow_int(z, f), "twisted geometric sum");
}

Number closed_order(long n, long r, const QParam& q_in, const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    return finite_l_sum(n, r, q, qx, [&](long l) {
      return pow_int(reciprocal(Number(1) + pow_int(q.value(), l + 1), "(1 + q^{l+1})"), r);
    });
  });
}

Number closed_hr(long n, long h, long r, const QParam& q_in, const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    return finite_l_sum(n, r, q, qx, [&](long l) {
      const Number start = -pow_int(q.value(), h - r + l + 1);
      return reciprocal(q_pochhammer(start, q, r), "(-q^{h-r+l+1}:q)_r");
    });
  });
}

Number closed_chi_order(long n, long r, const DirichletCharacter& chi, const QParam& q_in, const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    return finite_l_sum(n, r, q, qx,
                        [&](long l) { return pow_int(twisted_geometric(chi, pow_int(q.value(), l + 1)), r); });
  });
}

Number closed_chi_hr(long n, long h, long r, const DirichletCharacter& chi, const QParam& q_in, const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    return finite_l_sum(n, r, q, qx, [&](long l) {
      Number product(1);
      for (long j = 1; j <= r; ++j) product *= twisted_geometric(chi, pow_int(q.value(), h - j + 1 + l));
      return product;
    });
  });
}

Number closed_barnes(long n, const std::vector<Number>& qa_in, const std::vector<long>& b, const QParam& q_in,
                     const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    const std::vector<Number> qa = at_precision_of(q, qa_in);
    const long r = static_cast<long>(qa.size());
    return finite_l_sum(n, r, q, qx, [&](long l) {
      Number product(1);
      for (long j = 0; j < r; ++j) {
        const Number z = pow_int(q.value(), b[j] + 1) * pow_int(qa[j], l);
        product *= reciprocal(Number(1) + z, "(1 + q^{l a_j + b_j + 1})");
      }
      return product;
    });
  });
}

Number closed_barnes_chi(long n, const DirichletCharacter& chi, const std::vector<Number>& qa_in,
                         const std::vector<long>& b, const QParam& q_in, const Number& qx_in) {
  return guarded(q_in, qx_in, [&](const QParam& q, const Number& qx) {
    const std::vector<Number> qa = at_precision_of(q, qa_in);
    const long r = static_cast<long>(qa.size());
    return finite_l_sum(n, r, q, qx, [&](long l) {
      Number product(1);
      for (long j = 0; j < r; ++j) {
        product *= twisted_geometric(chi, pow_int(q.value(), b[j] + 1) * pow_int(qa[j], l));
      }
      return product;
    });
  });
}

// ---------------------------------------------------------------- weights

std::vector<Number> order_weights(long r, const QParam& q, std::size_t max_index) {
  std::vector<Number> w;
  w.reserve(max_index + 1);
  const Number neg_q = -q.value();
  Number power = q.lift(Number(1));
  for (std::size_t m = 0; m <= max_index; ++m) {
    w.push_back(binomial(static_cast<long>(m) + r - 1, r - 1) * power);
    power *= neg_q;
  }
  return w;
}

std::vector<Number> hr_weights(long h, long r, const QParam& q, std::size_t max_index) {
  const QBinomialTable table(q, max_index + static_cast<std::size_t>(r) - 1, static_cast<std::size_t>(r - 1));
  const Number ratio = -pow_int(q.value(), h - r + 1);
  std::vector<Number> w;
  w.reserve(max_index + 1);
  Number power = q.lift(Number(1));
  for (std::size_t m = 0; m <= max_index; ++m) {
    w.push_back(table(m + static_cast<std::size_t>(r) - 1, static_cast<std::size_t>(r - 1)) * power);
    power *= ratio;
  }
  return w;
}

std::vector<Number> chi_order_weights(long r, const DirichletCharacter& chi, const QParam& q, std::size_t max_index) {
  const std::vector<Number> ones(static_cast<std::size_t>(r), Number(1));
  std::vector<Number> w = character_convolution(chi, ones, max_index);
  const Number neg_q = -q.value();
  Number power = q.lift(Number(1));
  for (auto& c : w) {
    c = c * power;
    power *= neg_q;
  }
  return w;
}

std::vector<Number> chi_hr_weights(long h, long r, const DirichletCharacter& chi, const QParam& q,
                                   std::size_t max_index) {
  std::vector<Number> ratios;
  for (long j = 1; j <= r; ++j) ratios.push_back(-pow_int(q.value(), h - j + 1));
  std::vector<Number> w = character_convolution(chi, ratios, max_index);
  for (auto& c : w) c = q.lift(c);
  return w;
}

// ---------------------------------------------------------------- tail bounds

double binomial_weight_tail(double rho, long r, std::size_t max_index) {
  if (rho >= 1.0) return kInfinity;
  const double m = static_cast<double>(max_index);
  return kBoundSlack * std::pow(rho, m + 1.0) * std::pow(m + 1.0 + static_cast<double>(r), static_cast<double>(r - 1)) /
         std::pow(1.0 - rho, static_cast<double>(r));
}

double qbinomial_weight_tail(double rho, double q_abs, long r, std::size_t max_index) {
  if (rho >= 1.0) return kInfinity;
  double pochhammer = 1.0;
  for (long i = 1; i < r; ++i) pochhammer *= 1.0 - std::pow(q_abs, static_cast<double>(i));
  return kBoundSlack * std::pow(rho, static_cast<double>(max_index) + 1.0) / ((1.0 - rho) * pochhammer);
}

double box_weight_tail(const std::vector<double>& rhos, std::size_t max_index) {
  double full = 1.0;
  double outside = 0.0;
  for (double rho : rhos) {
    if (rho >= 1.0) return kInfinity;
    full /= 1.0 - rho;
    outside += std::pow(rho, static_cast<double>(max_index) + 1.0);
  }
  return kBoundSlack * full * outside;
}

double bracket_power_bound(std::complex<double> one_minus_q, double delta, std::complex<double> exponent) {
  const double scale = std::abs(one_minus_q);
  const double hi = (1.0 + delta) / scale;
  if (exponent.imag() == 0.0 && exponent.real() >= 0.0) return kBoundSlack * std::pow(hi, exponent.real());
  if (delta >= 1.0) return kInfinity;
  const double lo = (1.0 - delta) / scale;
  const double theta = std::asin(delta) + std::abs(std::arg(one_minus_q));
  const double log_modulus = std::max(exponent.real() * std::log(lo), exponent.real() * std::log(hi));
  return kBoundSlack * std::exp(log_modulus + std::abs(exponent.imag()) * theta);
}

void enforce_tail(const SeriesConfig& cfg, double tail, const char* what) {
  if (!cfg.enforce_tail_bound || tail <= cfg.tolerance) return;
  std::ostringstream os;
  os << what << ": tail bound " << tail << " exceeds tolerance " << cfg.tolerance << " at M=" << cfg.max_terms;
  throw TailBoundError(os.str());
}

void require_hr_convergent(long h, long r) {
  if (h - r + 1 < 1) {
    throw DivergenceError("divergence guard: requires h−r+1 ≥ 1 (got h=" + std::to_string(h) +
                          ", r=" + std::to_string(r) + ")");
  }
}

// ---------------------------------------------------------------- series

Evaluation collapsed_series(const QParam& q, const Number& qx, const Number& prefactor,
                            const std::vector<Number>& weights, const Number& exponent, double weight_tail,
                            const SeriesConfig& cfg, const char* what) {
  cfg.validate();
  const Number one = q.lift(Number(1));
  const Number one_minus_q = one - q.value();
  Number sum = q.lift(Number(0));
  Number q_pow = one;
  for (const auto& w : weights) {
    if (!w.is_zero()) {
      const Number bracket = (one - q_pow * qx) / one_minus_q;
      sum += w * bracket_power(bracket, exponent, q.mode());
    }
    q_pow *= q.value();
  }
  const std::size_t max_index = weights.empty() ? 0 : weights.size() - 1;
  const double delta = std::pow(q.modulus(), static_cast<double>(max_index) + 1.0) * qx.abs();
  const double tail = prefactor.abs() * weight_tail * bracket_power_bound(as_std(one_minus_q), delta, as_std(exponent));
  enforce_tail(cfg, tail, what);
  return {prefactor * sum, tail};
}

std::vector<Number> barnes_powers(const QParam& q, const BarnesParams& params) {
  std::vector<Number> out;
  out.reserve(params.a().size());
  for (const auto& a : params.a()) out.push_back(q_power(q, a));
  return out;
}

namespace {

struct BoxSum {
  const std::vector<std::vector<Number>>& weights;
  const std::vector<std::vector<Number>>& powers;
  const Number& one;
  const Number& one_minus_q;
  const Number& exponent;
  Mode mode;
  Number total;

  void visit(std::size_t j, const Number& weight, const Number& q_pow) {
    if (j == weights.size()) {
      const Number bracket = (one - q_pow) / one_minus_q;
      total += weight * bracket_power(bracket, exponent, mode);
      return;
    }
    for (std::size_t m = 0; m < weights[j].size(); ++m) {
      if (weights[j][m].is_zero()) continue;
      visit(j + 1, weight * weights[j][m], q_pow * powers[j][m]);
    }
  }
};

}  // namespace

Evaluation barnes_series(const QParam& q, const Number& qx, const Number& prefactor, const std::vector<Number>& qa,
                         const std::vector<long>& b, const DirichletCharacter& chi, const Number& exponent,
                         const SeriesConfig& cfg, const char* what) {
  cfg.validate();
  const std::size_t r = qa.size();
  for (long bj : b) {
    if (bj < 0) throw DivergenceError("divergence guard: requires b_j ≥ 0 for the Barnes series");
  }
  const std::size_t M = cfg.max_terms;
  double terms = 1.0;
  for (std::size_t j = 0; j < r; ++j) terms *= static_cast<double>(M + 1);
  if (terms > static_cast<double>(cfg.max_total_terms)) {
    throw DomainError(std::string(what) + ": (M+1)^r = " + std::to_string(static_cast<long double>(terms)) +
                      " exceeds the term cap " + std::to_string(cfg.max_total_terms));
  }

  const Number one = q.lift(Number(1));
  std::vector<std::vector<Number>> weights(r), powers(r);
  std::vector<double> rhos(r);
  double alpha_max = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const Number ratio = -pow_int(q.value(), b[j] + 1);
    rhos[j] = ratio.abs();
    alpha_max = std::max(alpha_max, qa[j].abs());
    Number w = one, p = one;
    weights[j].reserve(M + 1);
    powers[j].reserve(M + 1);
    for (std::size_t m = 0; m <= M; ++m) {
      weights[j].push_back(w * chi(static_cast<std::int64_t>(m)));
      powers[j].push_back(p);
      w *= ratio;
      p *= qa[j];
    }
  }

  const Number one_minus_q = one - q.value();
  BoxSum box{weights, powers, one, one_minus_q, exponent, q.mode(), q.lift(Number(0))};
  box.visit(0, one, qx);

  double tail = kInfinity;
  if (alpha_max < 1.0) {
    const double delta = qx.abs() * std::pow(alpha_max, static_cast<double>(M) + 1.0);
    tail = prefactor.abs() * std::pow(chi.max_modulus(), static_cast<double>(r)) * box_weight_tail(rhos, M) *
           bracket_power_bound(as_std(one_minus_q), delta, as_std(exponent));
  }
  enforce_tail(cfg, tail, what);
  return {prefactor * box.total, tail};
}

}  // namespace qeuler::detail
