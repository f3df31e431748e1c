#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <vector>

#include "qeuler/scalar.hpp"

namespace qeuler {

/// [x]_q = (1 - q^x)/(1 - q). Exact mode needs an integer x.
Number q_number(const Number& x, const QParam& q);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
Number q_factorial(long n, const QParam& q);

/// Gaussian binomial coefficient; 0 for k outside [0, n].
/// Exact mode runs the Pascal-type recurrence, float mode the falling-factorial quotient.
Number q_binomial(long n, long k, const QParam& q);

/// (x:q)_n = prod_{i=1}^{n} (1 - x q^{i-1}).
Number q_pochhammer(const Number& x, const QParam& q, long n);

/**
 * Lazily grown triangle of Gaussian binomials binom(n,k)_q for k <= min(n, max_k).
 *
 * Rows are produced by binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k) on first use
 * and memoized. Concurrent readers are serialized on an internal mutex, so a caller
 * never observes a partially built row.
 */
class QBinomialTable {
 public:
  QBinomialTable(QParam q, std::size_t max_n, std::optional<std::size_t> max_k = std::nullopt);

  QBinomialTable(const QBinomialTable&) = delete;
  QBinomialTable& operator=(const QBinomialTable&) = delete;

  /// binom(n,k)_q. Throws if n > max_n or k > max_k.
  Number operator()(std::size_t n, std::size_t k) const;

  std::size_t max_n() const { return max_n_; }
  std::size_t max_k() const { return max_k_; }
  const QParam& q() const { return q_; }
  /// Number of rows materialized so far.
  std::size_t rows_built() const;

 private:
  void grow_to(std::size_t n) const;

  QParam q_;
  std::size_t max_n_;
  std::size_t max_k_;
  std::vector<Number> q_powers_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<Number>> rows_;
};

}  // namespace qeuler
