/**
 * @file eulerpoly.hpp
 * @brief q-Euler polynomial families.
 *
 * Every family is generated by an r-fold lattice sum
 *
 *     [2]_q^r  sum_{m_1..m_r >= 0}  weight(m_1..m_r)  e^{[m_1 + ... + m_r + x]_q t}
 *
 * and the degree-n member is the coefficient of t^n/n!. Two routes are offered
 * wherever they exist: a finite closed form obtained by expanding [m+x]_q^n
 * binomially and summing each coordinate geometrically, and the (collapsed)
 * truncated series itself. Truncated series report a certified bound on the
 * discarded tail.
 *
 * Exact evaluation is available when q is an exact rational and every power of q
 * that occurs has an integer exponent (integer x, integer a_j).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qeuler/characters.hpp"
#include "qeuler/scalar.hpp"

namespace qeuler {

enum class Method { Closed, Series, Distribution };

std::string method_name(Method method);

/// Truncation policy shared by every infinite series.
struct SeriesConfig {
  /// Terms kept per collapsed index, or per coordinate for r-fold sums.
  std::size_t max_terms = 400;
  double tolerance = 1e-10;
  bool enforce_tail_bound = true;
  /// Cap on (max_terms + 1)^r for uncollapsed r-fold sums.
  std::uint64_t max_total_terms = 10'000'000;

  void validate() const;
};

/// A value together with a certified bound on its truncation error (0 for finite sums).
struct Evaluation {
  Number value;
  double tail_bound = 0.0;
};

/// Barnes-type parameters (a_1..a_r; b_1..b_r), Re(a_j) > 0.
class BarnesParams {
 public:
  BarnesParams(std::vector<Number> a, std::vector<long> b);

  /// a = (1,..,1), b = (0,..,0).
  static BarnesParams uniform(long r);

  long r() const { return static_cast<long>(a_.size()); }
  const std::vector<Number>& a() const { return a_; }
  const std::vector<long>& b() const { return b_; }

 private:
  std::vector<Number> a_;
  std::vector<long> b_;
};

enum class EulerFamily { Basic, OrderR, HR, Chi, ChiOrderR, ChiHR, Barnes, BarnesChi };

std::string family_name(EulerFamily family);

/// Selects one polynomial family member E_n.
struct EulerFamilySpec {
  EulerFamily family = EulerFamily::Basic;
  long n = 0;
  long r = 1;
  long h = 0;
  std::optional<DirichletCharacter> chi;
  std::optional<BarnesParams> barnes;

  /// Throws DomainError when the family tag and the optional fields disagree.
  void validate() const;
};

/// E_{n,q}(x) by the finite closed form.
Number euler_poly(long n, const QParam& q, const Number& x);

/// E^{(r)}_{n,q}(x). Closed: finite l-sum. Series: sum_m binom(m+r-1,m)(-q)^m [m+x]_q^n.
Evaluation euler_poly_order(long n, long r, const QParam& q, const Number& x, Method method = Method::Closed,
                            const SeriesConfig& cfg = {});

/// E^{(h,r)}_{n,q}(x). Closed: l-sum over (-q^{h-r+l+1}:q)_r. Series needs h - r + 1 >= 1.
Evaluation euler_poly_hr(long n, long h, long r, const QParam& q, const Number& x, Method method = Method::Closed,
                         const SeriesConfig& cfg = {});

/// E_{n,chi,q}(x). Series, Distribution (residue classes mod f at modulus q^f), or Closed.
Evaluation euler_chi(long n, const DirichletCharacter& chi, const QParam& q, const Number& x,
                     Method method = Method::Series, const SeriesConfig& cfg = {});

/// E^{(r)}_{n,chi,q}(x). Series collapses the r-fold sum with character_convolution; Closed is the finite l-sum.
Evaluation euler_chi_order(long n, long r, const DirichletCharacter& chi, const QParam& q, const Number& x,
                           Method method = Method::Series, const SeriesConfig& cfg = {});

/// E^{(h,r)}_{n,chi,q}(x). Series (h - r + 1 >= 1), Distribution over (a_1..a_r) in [0,f)^r, or Closed.
Evaluation euler_chi_hr(long n, long h, long r, const DirichletCharacter& chi, const QParam& q, const Number& x,
                        Method method = Method::Series, const SeriesConfig& cfg = {});

/// Barnes-type E^{(r)}_{n,q}(x | a; b). Series needs every b_j >= 0.
Evaluation barnes_euler(long n, const BarnesParams& params, const QParam& q, const Number& x,
                        Method method = Method::Closed, const SeriesConfig& cfg = {});

/// Barnes-type E^{(r)}_{n,chi,q}(x | a; b). Series needs every b_j >= 0.
Evaluation barnes_euler_chi(long n, const DirichletCharacter& chi, const BarnesParams& params, const QParam& q,
                            const Number& x, Method method = Method::Series, const SeriesConfig& cfg = {});

/// The method each family uses when none is requested.
Method default_method(EulerFamily family);

/// Dispatches on spec.family.
Evaluation evaluate(const EulerFamilySpec& spec, const QParam& q, const Number& x, std::optional<Method> method,
                    const SeriesConfig& cfg = {});

}  // namespace qeuler
