/**
 * @file zeta.hpp
 * @brief Multiple q-zeta and q-l functions interpolating the q-Euler families.
 *
 * Each function replaces [.]_q^n in the corresponding polynomial series by
 * [.]_q^{-s}. For |q| < 1 the weights decay geometrically, so the truncated
 * series converge for every complex s and the reported tail bound is uniform
 * in s. At s = -n the value coincides with the degree-n polynomial; Auto
 * evaluation uses the finite closed form there.
 */

#pragma once

#include <optional>
#include <string>

#include "qeuler/characters.hpp"
#include "qeuler/eulerpoly.hpp"
#include "qeuler/scalar.hpp"

namespace qeuler {

enum class ZetaMethod {
  Auto,      ///< closed form at s = -n, series elsewhere
  Series,    ///< always the truncated series
  Factored,  ///< l_multi_h only: residue classes mod f through the (h,q)-zeta at q^f
};

enum class ZetaFamily { OrderR, Chi, HR, ChiHR, Barnes, BarnesChi };

std::string zeta_family_name(ZetaFamily family);

struct ZetaQuery {
  ZetaFamily family = ZetaFamily::OrderR;
  Number s;
  Number x{1};
  long r = 1;
  long h = 0;
  std::optional<DirichletCharacter> chi;
  std::optional<BarnesParams> barnes;

  void validate() const;
};

/// n when s = -n for a nonnegative integer n.
std::optional<long> interpolation_degree(const Number& s);

/// zeta_{q,r}(s,x) = [2]_q^r sum_m binom(m+r-1,m) (-q)^m [m+x]_q^{-s}.
Evaluation zeta_multi(const Number& s, long r, const QParam& q, const Number& x, const SeriesConfig& cfg = {},
                      ZetaMethod method = ZetaMethod::Auto);

/// zeta^{(h)}_{q,r}(s,x) = [2]_q^r sum_m binom(m+r-1,m)_q (-q^{h-r+1})^m [m+x]_q^{-s}; needs h - r + 1 >= 1.
Evaluation zeta_multi_h(const Number& s, long h, long r, const QParam& q, const Number& x,
                        const SeriesConfig& cfg = {}, ZetaMethod method = ZetaMethod::Auto);

/// l_q(s,x|chi), the r-fold character-twisted q-zeta function.
Evaluation l_multi(const Number& s, const DirichletCharacter& chi, long r, const QParam& q, const Number& x,
                   const SeriesConfig& cfg = {}, ZetaMethod method = ZetaMethod::Auto);

/// l^{(h)}_q(s,x|chi). Factored evaluates through zeta^{(h)}_{q^f,r} at the shifted arguments (x + sum a)/f.
Evaluation l_multi_h(const Number& s, const DirichletCharacter& chi, long h, long r, const QParam& q,
                     const Number& x, const SeriesConfig& cfg = {}, ZetaMethod method = ZetaMethod::Auto);

/// Barnes-type multiple q-zeta function; needs every b_j >= 0.
Evaluation barnes_zeta(const Number& s, const BarnesParams& params, const QParam& q, const Number& x,
                       const SeriesConfig& cfg = {}, ZetaMethod method = ZetaMethod::Auto);

/// Barnes-type multiple q-l function; needs every b_j >= 0.
Evaluation barnes_l(const Number& s, const DirichletCharacter& chi, const BarnesParams& params, const QParam& q,
                    const Number& x, const SeriesConfig& cfg = {}, ZetaMethod method = ZetaMethod::Auto);

Evaluation evaluate(const ZetaQuery& query, const QParam& q, const SeriesConfig& cfg = {},
                    ZetaMethod method = ZetaMethod::Auto);

}  // namespace qeuler
