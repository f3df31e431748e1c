#include "qeuler/qcore.hpp"

#include <algorithm>
#include <string>

#include "qeuler/errors.hpp"

namespace qeuler {

Number q_number(const Number& x, const QParam& q) {
  const Number xx = q.lift(x);
  const Number one = q.lift(Number(1));
  return (one - pow_principal(q.value(), xx, q.mode())) / (one - q.value());
}

Number q_factorial(long n, const QParam& q) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
  Number out = q.lift(Number(1));
  for (long k = 2; k <= n; ++k) out *= q_number(Number(k), q);
  return out;
}

Number q_binomial(long n, long k, const QParam& q) {
  if (n < 0) throw DomainError("q_binomial: n must be nonnegative");
  if (k < 0 || k > n) return q.lift(Number(0));
  k = std::min(k, n - k);
  if (q.mode() == Mode::Exact) {
    // Band of the Pascal triangle restricted to columns 0..k.
    std::vector<Number> q_pow(static_cast<std::size_t>(k) + 1);
    q_pow[0] = Number(1);
    for (long j = 1; j <= k; ++j) q_pow[j] = q_pow[j - 1] * q.value();
    std::vector<Number> row(static_cast<std::size_t>(k) + 1, Number(0));
    row[0] = Number(1);
    for (long m = 1; m <= n; ++m) {
      for (long j = std::min(m, k); j >= 1; --j) {
        row[j] = row[j - 1] + q_pow[j] * row[j];
      }
    }
    return row[k];
  }
  Number num = q.lift(Number(1));
  for (long i = 0; i < k; ++i) num *= q_number(Number(n - i), q);
  return num / q_factorial(k, q);
}

Number q_pochhammer(const Number& x, const QParam& q, long n) {
  if (n < 0) throw DomainError("q_pochhammer: negative n is not supported");
  const Number xx = q.lift(x);
  const Number one = q.lift(Number(1));
  Number out = one;
  Number q_pow = one;
  for (long i = 1; i <= n; ++i) {
    out *= one - xx * q_pow;
    q_pow *= q.value();
  }
  return out;
}

// ---------------------------------------------------------------- QBinomialTable

QBinomialTable::QBinomialTable(QParam q, std::size_t max_n, std::optional<std::size_t> max_k)
    : q_(std::move(q)), max_n_(max_n), max_k_(std::min(max_n, max_k.value_or(max_n))) {
  q_powers_.reserve(max_k_ + 1);
  q_powers_.push_back(q_.lift(Number(1)));
  for (std::size_t j = 1; j <= max_k_; ++j) q_powers_.push_back(q_powers_.back() * q_.value());
}

Number QBinomialTable::operator()(std::size_t n, std::size_t k) const {
  if (n > max_n_) throw DomainError("QBinomialTable: n=" + std::to_string(n) + " exceeds max_n");
  if (k > max_k_) throw DomainError("QBinomialTable: k=" + std::to_string(k) + " exceeds max_k");
  if (k > n) return q_.lift(Number(0));
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(n);
  return rows_[n][k];
}

std::size_t QBinomialTable::rows_built() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return rows_.size();
}

void QBinomialTable::grow_to(std::size_t n) const {
  if (rows_.empty()) rows_.push_back({q_.lift(Number(1))});
  while (rows_.size() <= n) {
    const std::vector<Number>& prev = rows_.back();
    const std::size_t m = rows_.size();
    const std::size_t width = std::min(m, max_k_) + 1;
    std::vector<Number> row;
    row.reserve(width);
    row.push_back(q_powers_[0]);
    for (std::size_t k = 1; k < width; ++k) {
      Number value = prev[k - 1];
      if (k < prev.size()) value += q_powers_[k] * prev[k];
      row.push_back(std::move(value));
    }
    rows_.push_back(std::move(row));
  }
}

}  // namespace qeuler
