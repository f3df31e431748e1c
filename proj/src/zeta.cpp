#include "qeuler/zeta.hpp"

#include <cmath>
#include <vector>

#include "kernels.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

using detail::collapsed_series;
using detail::q_power;
using detail::two_q_pow;

std::string zeta_family_name(ZetaFamily family) {
  switch (family) {
    case ZetaFamily::OrderR: return "zeta";
    case ZetaFamily::Chi: return "l";
    case ZetaFamily::HR: return "zeta-h";
    case ZetaFamily::ChiHR: return "l-h";
    case ZetaFamily::Barnes: return "barnes-zeta";
    case ZetaFamily::BarnesChi: return "barnes-l";
  }
  return "unknown";
}

void ZetaQuery::validate() const {
  if (r < 1) throw DomainError("order r must be at least 1");
  const bool needs_chi = family == ZetaFamily::Chi || family == ZetaFamily::ChiHR || family == ZetaFamily::BarnesChi;
  const bool needs_barnes = family == ZetaFamily::Barnes || family == ZetaFamily::BarnesChi;
  if (needs_chi != chi.has_value()) {
    throw DomainError(zeta_family_name(family) + (needs_chi ? " requires" : " does not take") + " a character");
  }
  if (needs_barnes != barnes.has_value()) {
    throw DomainError(zeta_family_name(family) + (needs_barnes ? " requires" : " does not take") +
                      " Barnes parameters");
  }
  if (needs_barnes && barnes->r() != r) throw DomainError("Barnes parameter length must equal r");
}

std::optional<long> interpolation_degree(const Number& s) {
  if (auto k = s.as_integer(); k && *k <= 0) return -*k;
  return std::nullopt;
}

namespace {

void check_argument(const Number& x) {
  if (auto k = x.as_integer(); k && *k <= 0) throw DomainError("x must not be 0, -1, -2, ...");
}

void check_order(long r) {
  if (r < 1) throw DomainError("order r must be at least 1");
}

void no_factored(ZetaMethod method, const char* what) {
  if (method == ZetaMethod::Factored) throw DomainError(std::string(what) + " has no factored evaluation path");
}

bool use_closed_form(ZetaMethod method, const Number& s) {
  return method == ZetaMethod::Auto && interpolation_degree(s).has_value();
}

}  // namespace

Evaluation zeta_multi(const Number& s, long r, const QParam& q, const Number& x, const SeriesConfig& cfg,
                      ZetaMethod method) {
  check_order(r);
  check_argument(x);
  no_factored(method, "zeta_multi");
  const Number qx = q_power(q, x);
  if (use_closed_form(method, s)) return {detail::closed_order(*interpolation_degree(s), r, q, qx), 0.0};
  return collapsed_series(q, qx, two_q_pow(q, r), detail::order_weights(r, q, cfg.max_terms), q.lift(-s),
                          detail::binomial_weight_tail(q.modulus(), r, cfg.max_terms), cfg, "zeta_multi");
}

Evaluation zeta_multi_h(const Number& s, long h, long r, const QParam& q, const Number& x, const SeriesConfig& cfg,
                        ZetaMethod method) {
  check_order(r);
  check_argument(x);
  no_factored(method, "zeta_multi_h");
  detail::require_hr_convergent(h, r);
  const Number qx = q_power(q, x);
  if (use_closed_form(method, s)) return {detail::closed_hr(*interpolation_degree(s), h, r, q, qx), 0.0};
  const double rho = std::pow(q.modulus(), static_cast<double>(h - r + 1));
  return collapsed_series(q, qx, two_q_pow(q, r), detail::hr_weights(h, r, q, cfg.max_terms), q.lift(-s),
                          detail::qbinomial_weight_tail(rho, q.modulus(), r, cfg.max_terms), cfg, "zeta_multi_h");
}

Evaluation l_multi(const Number& s, const DirichletCharacter& chi, long r, const QParam& q, const Number& x,
                   const SeriesConfig& cfg, ZetaMethod method) {
  check_order(r);
  check_argument(x);
  no_factored(method, "l_multi");
  const Number qx = q_power(q, x);
  if (use_closed_form(method, s)) return {detail::closed_chi_order(*interpolation_degree(s), r, chi, q, qx), 0.0};
  return collapsed_series(q, qx, two_q_pow(q, r), detail::chi_order_weights(r, chi, q, cfg.max_terms), q.lift(-s),
                          std::pow(chi.max_modulus(), static_cast<double>(r)) *
                              detail::binomial_weight_tail(q.modulus(), r, cfg.max_terms),
                          cfg, "l_multi");
}

namespace {

Evaluation l_multi_h_factored(const Number& s, const DirichletCharacter& chi, long h, long r, const QParam& q,
                              const Number& qx, const SeriesConfig& cfg) {
  const std::int64_t f = chi.conductor();
  const QParam qf = q.power(f);
  const Number one = q.lift(Number(1));
  const Number exponent = q.lift(-s);
  const Number q_f_number = (one - pow_int(q.value(), f)) / (one - q.value());
  const Number outer = two_q_pow(q, r) / two_q_pow(qf, r) * detail::bracket_power(q_f_number, exponent, q.mode());

  const std::vector<Number> weights = detail::hr_weights(h, r, qf, cfg.max_terms);
  const double rho = std::pow(qf.modulus(), static_cast<double>(h - r + 1));
  const double weight_tail = detail::qbinomial_weight_tail(rho, qf.modulus(), r, cfg.max_terms);
  SeriesConfig inner_cfg = cfg;
  inner_cfg.enforce_tail_bound = false;

  Number total = q.lift(Number(0));
  double tail = 0.0;
  std::vector<std::int64_t> residues(static_cast<std::size_t>(r), 0);
  while (true) {
    Number coefficient = one;
    long shift = 0;
    long weight_exponent = 0;
    for (long j = 1; j <= r; ++j) {
      const std::int64_t a = residues[static_cast<std::size_t>(j - 1)];
      coefficient *= chi.values()[static_cast<std::size_t>(a)];
      shift += a;
      weight_exponent += (h - j + 1) * a;
    }
    if (!coefficient.is_zero()) {
      if (shift % 2 != 0) coefficient = -coefficient;
      coefficient *= pow_int(q.value(), weight_exponent);
      const Evaluation inner = collapsed_series(qf, qx * pow_int(q.value(), shift), two_q_pow(qf, r), weights,
                                                exponent, weight_tail, inner_cfg, "l_multi_h");
      total += coefficient * inner.value;
      tail += coefficient.abs() * inner.tail_bound;
    }
    std::size_t k = 0;
    while (k < residues.size() && ++residues[k] == f) residues[k++] = 0;
    if (k == residues.size()) break;
  }
  tail *= outer.abs();
  detail::enforce_tail(cfg, tail, "l_multi_h");
  return {outer * total, tail};
}

}  // namespace

Evaluation l_multi_h(const Number& s, const DirichletCharacter& chi, long h, long r, const QParam& q,
                     const Number& x, const SeriesConfig& cfg, ZetaMethod method) {
  check_order(r);
  check_argument(x);
  detail::require_hr_convergent(h, r);
  const Number qx = q_power(q, x);
  if (use_closed_form(method, s)) return {detail::closed_chi_hr(*interpolation_degree(s), h, r, chi, q, qx), 0.0};
  if (method == ZetaMethod::Factored) {
    cfg.validate();
    return l_multi_h_factored(s, chi, h, r, q, qx, cfg);
  }
  const double rho = std::pow(q.modulus(), static_cast<double>(h - r + 1));
  return collapsed_series(q, qx, two_q_pow(q, r), detail::chi_hr_weights(h, r, chi, q, cfg.max_terms), q.lift(-s),
                          std::pow(chi.max_modulus(), static_cast<double>(r)) *
                              detail::qbinomial_weight_tail(rho, q.modulus(), r, cfg.max_terms),
                          cfg, "l_multi_h");
}

Evaluation barnes_zeta(const Number& s, const BarnesParams& params, const QParam& q, const Number& x,
                       const SeriesConfig& cfg, ZetaMethod method) {
  check_argument(x);
  no_factored(method, "barnes_zeta");
  const Number qx = q_power(q, x);
  const std::vector<Number> qa = detail::barnes_powers(q, params);
  if (use_closed_form(method, s)) {
    return {detail::closed_barnes(*interpolation_degree(s), qa, params.b(), q, qx), 0.0};
  }
  return detail::barnes_series(q, qx, two_q_pow(q, params.r()), qa, params.b(), DirichletCharacter::trivial(),
                               q.lift(-s), cfg, "barnes_zeta");
}

Evaluation barnes_l(const Number& s, const DirichletCharacter& chi, const BarnesParams& params, const QParam& q,
                    const Number& x, const SeriesConfig& cfg, ZetaMethod method) {
  check_argument(x);
  no_factored(method, "barnes_l");
  const Number qx = q_power(q, x);
  const std::vector<Number> qa = detail::barnes_powers(q, params);
  if (use_closed_form(method, s)) {
    return {detail::closed_barnes_chi(*interpolation_degree(s), chi, qa, params.b(), q, qx), 0.0};
  }
  return detail::barnes_series(q, qx, two_q_pow(q, params.r()), qa, params.b(), chi, q.lift(-s), cfg, "barnes_l");
}

Evaluation evaluate(const ZetaQuery& query, const QParam& q, const SeriesConfig& cfg, ZetaMethod method) {
  query.validate();
  switch (query.family) {
    case ZetaFamily::OrderR: return zeta_multi(query.s, query.r, q, query.x, cfg, method);
    case ZetaFamily::Chi: return l_multi(query.s, *query.chi, query.r, q, query.x, cfg, method);
    case ZetaFamily::HR: return zeta_multi_h(query.s, query.h, query.r, q, query.x, cfg, method);
    case ZetaFamily::ChiHR: return l_multi_h(query.s, *query.chi, query.h, query.r, q, query.x, cfg, method);
    case ZetaFamily::Barnes: return barnes_zeta(query.s, *query.barnes, q, query.x, cfg, method);
    case ZetaFamily::BarnesChi: return barnes_l(query.s, *query.chi, *query.barnes, q, query.x, cfg, method);
  }
  throw DomainError("unknown zeta family");
}

}  // namespace qeuler
