// Summation engines shared by the polynomial and zeta modules.
//
// Everything here is parameterized by qx = q^x rather than x itself: the
// families depend on x only through q^x, and the distribution identities need
// to substitute (q^f)^{(x+a)/f} := q^x q^a on the same branch as q^x.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qeuler/characters.hpp"
#include "qeuler/eulerpoly.hpp"
#include "qeuler/scalar.hpp"

namespace qeuler::detail {

/// q^x on the principal branch, in q's mode.
Number q_power(const QParam& q, const Number& x);

/// [2]_q^r.
Number two_q_pow(const QParam& q, long r);

/// Ordinary binomial coefficient as an exact Number.
Number binomial(long n, long k);

/// b^e for a q-bracket b; nonnegative integer e uses 0^0 = 1.
Number bracket_power(const Number& bracket, const Number& exponent, Mode mode);

/// sum_{m>=0} chi(m) (-z)^m = sum_{c<f} chi(c) (-z)^c / (1 + z^f), valid for odd f.
Number twisted_geometric(const DirichletCharacter& chi, const Number& z);

// Finite closed forms [2]_q^r/(1-q)^n sum_l binom(n,l) (-q^x)^l D(l).
Number closed_order(long n, long r, const QParam& q, const Number& qx);
Number closed_hr(long n, long h, long r, const QParam& q, const Number& qx);
Number closed_chi_order(long n, long r, const DirichletCharacter& chi, const QParam& q, const Number& qx);
Number closed_chi_hr(long n, long h, long r, const DirichletCharacter& chi, const QParam& q, const Number& qx);
Number closed_barnes(long n, const std::vector<Number>& qa, const std::vector<long>& b, const QParam& q,
                     const Number& qx);
Number closed_barnes_chi(long n, const DirichletCharacter& chi, const std::vector<Number>& qa,
                         const std::vector<long>& b, const QParam& q, const Number& qx);

// Collapsed single-index weights for m = 0..M.
std::vector<Number> order_weights(long r, const QParam& q, std::size_t max_index);
std::vector<Number> hr_weights(long h, long r, const QParam& q, std::size_t max_index);
std::vector<Number> chi_order_weights(long r, const DirichletCharacter& chi, const QParam& q, std::size_t max_index);
std::vector<Number> chi_hr_weights(long h, long r, const DirichletCharacter& chi, const QParam& q,
                                   std::size_t max_index);

// Bounds on the discarded weight mass sum_{m>M} |w(m)|.
double binomial_weight_tail(double rho, long r, std::size_t max_index);
double qbinomial_weight_tail(double rho, double q_abs, long r, std::size_t max_index);
double box_weight_tail(const std::vector<double>& rhos, std::size_t max_index);

/// Upper bound on |[y]_q^e| over every bracket with |q^y| <= delta.
double bracket_power_bound(std::complex<double> one_minus_q, double delta, std::complex<double> exponent);

/// prefactor * sum_{m=0}^{M} weights[m] [m+x]_q^exponent with its certified tail.
Evaluation collapsed_series(const QParam& q, const Number& qx, const Number& prefactor,
                            const std::vector<Number>& weights, const Number& exponent, double weight_tail,
                            const SeriesConfig& cfg, const char* what);

/// prefactor * sum over [0,M]^r of (-1)^{sum m} q^{sum (b_j+1) m_j} prod chi(m_j) [a.m + x]_q^exponent.
Evaluation barnes_series(const QParam& q, const Number& qx, const Number& prefactor, const std::vector<Number>& qa,
                         const std::vector<long>& b, const DirichletCharacter& chi, const Number& exponent,
                         const SeriesConfig& cfg, const char* what);

/// q^{a_j} for each Barnes parameter.
std::vector<Number> barnes_powers(const QParam& q, const BarnesParams& params);

/// Throws TailBoundError when enforcement is on and the tail exceeds the tolerance.
void enforce_tail(const SeriesConfig& cfg, double tail, const char* what);

/// Throws DivergenceError unless h - r + 1 >= 1.
void require_hr_convergent(long h, long r);

}  // namespace qeuler::detail
