#include "qeuler/eulerpoly.hpp"

#include <cmath>
#include <string>

#include "kernels.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

using detail::binomial_weight_tail;
using detail::collapsed_series;
using detail::q_power;
using detail::qbinomial_weight_tail;
using detail::two_q_pow;

std::string method_name(Method method) {
  switch (method) {
    case Method::Closed: return "closed";
    case Method::Series: return "series";
    case Method::Distribution: return "distribution";
  }
  return "unknown";
}

std::string family_name(EulerFamily family) {
  switch (family) {
    case EulerFamily::Basic: return "basic";
    case EulerFamily::OrderR: return "order-r";
    case EulerFamily::HR: return "hr";
    case EulerFamily::Chi: return "chi";
    case EulerFamily::ChiOrderR: return "chi-order-r";
    case EulerFamily::ChiHR: return "chi-hr";
    case EulerFamily::Barnes: return "barnes";
    case EulerFamily::BarnesChi: return "barnes-chi";
  }
  return "unknown";
}

void SeriesConfig::validate() const {
  if (max_terms < 1) throw DomainError("series: max_terms must be at least 1");
  if (!(tolerance > 0.0)) throw DomainError("series: tolerance must be positive");
}

BarnesParams::BarnesParams(std::vector<Number> a, std::vector<long> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw DomainError("barnes: r must be at least 1");
  if (a_.size() != b_.size()) throw DomainError("barnes: a and b must have the same length");
  for (const auto& aj : a_) {
    if (!(aj.to_std().real() > 0.0)) throw DomainError("barnes: every a_j needs a positive real part");
  }
}

BarnesParams BarnesParams::uniform(long r) {
  if (r < 1) throw DomainError("barnes: r must be at least 1");
  return BarnesParams(std::vector<Number>(static_cast<std::size_t>(r), Number(1)),
                      std::vector<long>(static_cast<std::size_t>(r), 0));
}

void EulerFamilySpec::validate() const {
  if (n < 0) throw DomainError("degree n must be nonnegative");
  if (r < 1) throw DomainError("order r must be at least 1");
  const bool needs_chi =
      family == EulerFamily::Chi || family == EulerFamily::ChiOrderR || family == EulerFamily::ChiHR ||
      family == EulerFamily::BarnesChi;
  const bool needs_barnes = family == EulerFamily::Barnes || family == EulerFamily::BarnesChi;
  if (needs_chi && !chi) throw DomainError(family_name(family) + " requires a character");
  if (!needs_chi && chi) throw DomainError(family_name(family) + " does not take a character");
  if (needs_barnes && !barnes) throw DomainError(family_name(family) + " requires Barnes parameters");
  if (!needs_barnes && barnes) throw DomainError(family_name(family) + " does not take Barnes parameters");
  if (needs_barnes && barnes->r() != r) throw DomainError("Barnes parameter length must equal r");
  if ((family == EulerFamily::Basic || family == EulerFamily::Chi) && r != 1) {
    throw DomainError(family_name(family) + " has order r = 1");
  }
}

namespace {

void check_degree(long n) {
  if (n < 0) throw DomainError("degree n must be nonnegative");
}

void check_order(long r) {
  if (r < 1) throw DomainError("order r must be at least 1");
}

[[noreturn]] void unsupported(const char* family, Method method) {
  throw DomainError(std::string(family) + " does not support method '" + method_name(method) + "'");
}

Number degree(const QParam& q, long n) { return q.lift(Number(n)); }

}  // namespace

Number euler_poly(long n, const QParam& q, const Number& x) {
  check_degree(n);
  return detail::closed_order(n, 1, q, q_power(q, x));
}

Evaluation euler_poly_order(long n, long r, const QParam& q, const Number& x, Method method, const SeriesConfig& cfg) {
  check_degree(n);
  check_order(r);
  const Number qx = q_power(q, x);
  switch (method) {
    case Method::Closed: return {detail::closed_order(n, r, q, qx), 0.0};
    case Method::Series:
      return collapsed_series(q, qx, two_q_pow(q, r), detail::order_weights(r, q, cfg.max_terms), degree(q, n),
                              binomial_weight_tail(q.modulus(), r, cfg.max_terms), cfg, "euler_poly_order");
    default: unsupported("euler_poly_order", method);
  }
}

Evaluation euler_poly_hr(long n, long h, long r, const QParam& q, const Number& x, Method method,
                         const SeriesConfig& cfg) {
  check_degree(n);
  check_order(r);
  const Number qx = q_power(q, x);
  switch (method) {
    case Method::Closed: return {detail::closed_hr(n, h, r, q, qx), 0.0};
    case Method::Series: {
      detail::require_hr_convergent(h, r);
      const double rho = std::pow(q.modulus(), static_cast<double>(h - r + 1));
      return collapsed_series(q, qx, two_q_pow(q, r), detail::hr_weights(h, r, q, cfg.max_terms), degree(q, n),
                              qbinomial_weight_tail(rho, q.modulus(), r, cfg.max_terms), cfg, "euler_poly_hr");
    }
    default: unsupported("euler_poly_hr", method);
  }
}

Evaluation euler_chi(long n, const DirichletCharacter& chi, const QParam& q, const Number& x, Method method,
                     const SeriesConfig& cfg) {
  check_degree(n);
  const Number qx = q_power(q, x);
  switch (method) {
    case Method::Closed: return {detail::closed_chi_order(n, 1, chi, q, qx), 0.0};
    case Method::Series:
      return collapsed_series(q, qx, two_q_pow(q, 1), detail::chi_order_weights(1, chi, q, cfg.max_terms),
                              degree(q, n), chi.max_modulus() * binomial_weight_tail(q.modulus(), 1, cfg.max_terms),
                              cfg, "euler_chi");
    case Method::Distribution: {
      // m = a + f k splits [m+x]_q = [f]_q [k + (x+a)/f]_{q^f} and (-q)^m = (-q)^a (-q^f)^k (f odd).
      const std::int64_t f = chi.conductor();
      const QParam qf = q.power(f);
      const Number one = q.lift(Number(1));
      const Number q_f_number = (one - pow_int(q.value(), f)) / (one - q.value());
      Number sum = q.lift(Number(0));
      Number q_a = one;
      const Number neg_q = -q.value();
      Number neg_q_a = one;
      for (std::int64_t a = 0; a < f; ++a) {
        const Number& value = chi.values()[static_cast<std::size_t>(a)];
        if (!value.is_zero()) sum += neg_q_a * value * detail::closed_order(n, 1, qf, qx * q_a);
        q_a *= q.value();
        neg_q_a *= neg_q;
      }
      return {two_q_pow(q, 1) / two_q_pow(qf, 1) * pow_int(q_f_number, n) * sum, 0.0};
    }
  }
  unsupported("euler_chi", method);
}

Evaluation euler_chi_order(long n, long r, const DirichletCharacter& chi, const QParam& q, const Number& x,
                           Method method, const SeriesConfig& cfg) {
  check_degree(n);
  check_order(r);
  const Number qx = q_power(q, x);
  switch (method) {
    case Method::Closed: return {detail::closed_chi_order(n, r, chi, q, qx), 0.0};
    case Method::Series:
      return collapsed_series(q, qx, two_q_pow(q, r), detail::chi_order_weights(r, chi, q, cfg.max_terms),
                              degree(q, n),
                              std::pow(chi.max_modulus(), static_cast<double>(r)) *
                                  binomial_weight_tail(q.modulus(), r, cfg.max_terms),
                              cfg, "euler_chi_order");
    default: unsupported("euler_chi_order", method);
  }
}

namespace {

// [2]_q^r/[2]_{q^f}^r [f]_q^n sum_{a in [0,f)^r} (-1)^{sum a} prod chi(a_j) q^{sum (h-j+1) a_j}
//   * E^{(h,r)}_{n,q^f}((x + sum a)/f), with (q^f)^{(x+sum a)/f} taken as q^x q^{sum a}.
Number chi_hr_distribution(long n, long h, long r, const DirichletCharacter& chi, const QParam& q, const Number& qx) {
  const std::int64_t f = chi.conductor();
  const QParam qf = q.power(f);
  const Number one = q.lift(Number(1));
  const Number q_f_number = (one - pow_int(q.value(), f)) / (one - q.value());
  Number total = q.lift(Number(0));
  std::vector<std::int64_t> residues(static_cast<std::size_t>(r), 0);
  while (true) {
    Number coefficient = one;
    long shift = 0;
    long sign_exponent = 0;
    long weight_exponent = 0;
    for (long j = 1; j <= r; ++j) {
      const std::int64_t a = residues[static_cast<std::size_t>(j - 1)];
      coefficient *= chi.values()[static_cast<std::size_t>(a)];
      shift += a;
      sign_exponent += a;
      weight_exponent += (h - j + 1) * a;
    }
    if (!coefficient.is_zero()) {
      if (sign_exponent % 2 != 0) coefficient = -coefficient;
      coefficient *= pow_int(q.value(), weight_exponent);
      total += coefficient * detail::closed_hr(n, h, r, qf, qx * pow_int(q.value(), shift));
    }
    std::size_t k = 0;
    while (k < residues.size() && ++residues[k] == f) residues[k++] = 0;
    if (k == residues.size()) break;
  }
  return two_q_pow(q, r) / two_q_pow(qf, r) * pow_int(q_f_number, n) * total;
}

}  // namespace

Evaluation euler_chi_hr(long n, long h, long r, const DirichletCharacter& chi, const QParam& q, const Number& x,
                        Method method, const SeriesConfig& cfg) {
  check_degree(n);
  check_order(r);
  const Number qx = q_power(q, x);
  switch (method) {
    case Method::Closed: return {detail::closed_chi_hr(n, h, r, chi, q, qx), 0.0};
    case Method::Distribution: return {chi_hr_distribution(n, h, r, chi, q, qx), 0.0};
    case Method::Series: {
      detail::require_hr_convergent(h, r);
      const double rho = std::pow(q.modulus(), static_cast<double>(h - r + 1));
      return collapsed_series(q, qx, two_q_pow(q, r), detail::chi_hr_weights(h, r, chi, q, cfg.max_terms),
                              degree(q, n),
                              std::pow(chi.max_modulus(), static_cast<double>(r)) *
                                  qbinomial_weight_tail(rho, q.modulus(), r, cfg.max_terms),
                              cfg, "euler_chi_hr");
    }
  }
  unsupported("euler_chi_hr", method);
}

Evaluation barnes_euler(long n, const BarnesParams& params, const QParam& q, const Number& x, Method method,
                        const SeriesConfig& cfg) {
  check_degree(n);
  const Number qx = q_power(q, x);
  const std::vector<Number> qa = detail::barnes_powers(q, params);
  switch (method) {
    case Method::Closed: return {detail::closed_barnes(n, qa, params.b(), q, qx), 0.0};
    case Method::Series:
      return detail::barnes_series(q, qx, two_q_pow(q, params.r()), qa, params.b(), DirichletCharacter::trivial(),
                                   degree(q, n), cfg, "barnes_euler");
    default: unsupported("barnes_euler", method);
  }
}

Evaluation barnes_euler_chi(long n, const DirichletCharacter& chi, const BarnesParams& params, const QParam& q,
                            const Number& x, Method method, const SeriesConfig& cfg) {
  check_degree(n);
  const Number qx = q_power(q, x);
  const std::vector<Number> qa = detail::barnes_powers(q, params);
  switch (method) {
    case Method::Closed: return {detail::closed_barnes_chi(n, chi, qa, params.b(), q, qx), 0.0};
    case Method::Series:
      return detail::barnes_series(q, qx, two_q_pow(q, params.r()), qa, params.b(), chi, degree(q, n), cfg,
                                   "barnes_euler_chi");
    default: unsupported("barnes_euler_chi", method);
  }
}

Method default_method(EulerFamily family) {
  switch (family) {
    case EulerFamily::Basic:
    case EulerFamily::OrderR:
    case EulerFamily::HR:
    case EulerFamily::Barnes: return Method::Closed;
    case EulerFamily::Chi:
    case EulerFamily::ChiOrderR:
    case EulerFamily::ChiHR:
    case EulerFamily::BarnesChi: return Method::Series;
  }
  return Method::Closed;
}

Evaluation evaluate(const EulerFamilySpec& spec, const QParam& q, const Number& x, std::optional<Method> method,
                    const SeriesConfig& cfg) {
  spec.validate();
  const Method m = method.value_or(default_method(spec.family));
  switch (spec.family) {
    case EulerFamily::Basic:
      if (m != Method::Closed) return euler_poly_order(spec.n, 1, q, x, m, cfg);
      return {euler_poly(spec.n, q, x), 0.0};
    case EulerFamily::OrderR: return euler_poly_order(spec.n, spec.r, q, x, m, cfg);
    case EulerFamily::HR: return euler_poly_hr(spec.n, spec.h, spec.r, q, x, m, cfg);
    case EulerFamily::Chi: return euler_chi(spec.n, *spec.chi, q, x, m, cfg);
    case EulerFamily::ChiOrderR: return euler_chi_order(spec.n, spec.r, *spec.chi, q, x, m, cfg);
    case EulerFamily::ChiHR: return euler_chi_hr(spec.n, spec.h, spec.r, *spec.chi, q, x, m, cfg);
    case EulerFamily::Barnes: return barnes_euler(spec.n, *spec.barnes, q, x, m, cfg);
    case EulerFamily::BarnesChi: return barnes_euler_chi(spec.n, *spec.chi, *spec.barnes, q, x, m, cfg);
  }
  throw DomainError("unknown family");
}

}  // namespace qeuler
