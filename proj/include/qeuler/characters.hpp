#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qeuler/scalar.hpp"

namespace qeuler {

/// Dirichlet character of odd conductor f, stored as its value table on 0..f-1.
/// f = 1 is the trivial character with chi(m) = 1 for every m.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial();

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Number>& values() const { return values_; }
  bool is_trivial() const { return conductor_ == 1; }
  /// Largest |chi(a)|; 1 for exact tables, 1 up to rounding for float tables.
  double max_modulus() const;

  Number operator()(std::int64_t m) const;

 private:
  DirichletCharacter(std::int64_t f, std::vector<Number> values);
  friend DirichletCharacter character_from_table(std::int64_t f, std::vector<Number> values, double tolerance);

  std::int64_t conductor_;
  std::vector<Number> values_;
};

/**
 * Validates a value table and wraps it as a character.
 *
 * Checks: f odd and positive, one value per residue, zero exactly off the units,
 * chi(1) = 1, complete multiplicativity and chi(a)^phi(f) = 1 on units. Exact tables
 * are checked exactly; float tables to `tolerance`.
 */
DirichletCharacter character_from_table(std::int64_t f, std::vector<Number> values, double tolerance = 1e-10);

/// chi(m) = values[m mod f].
Number character_value(const DirichletCharacter& chi, std::int64_t m);

/// c[m] = sum_{i+j=m} a[i] b[j] for m = 0..max_index.
std::vector<Number> truncated_cauchy_product(std::span<const Number> a, std::span<const Number> b, std::size_t max_index);

/**
 * Collapses an r-fold character-twisted sum onto one index.
 *
 * Coordinate j carries the weight w_j(m) = ratios[j]^m chi(m); the result is
 * c[m] = sum over m_1+...+m_r = m of prod_j w_j(m_j), for m = 0..max_index,
 * built with r-1 truncated Cauchy products.
 */
std::vector<Number> character_convolution(const DirichletCharacter& chi, std::span<const Number> ratios,
                                          std::size_t max_index);

}  // namespace qeuler
