#include "qeuler/characters.hpp"

#include <numeric>
#include <string>

#include "qeuler/errors.hpp"

namespace qeuler {

DirichletCharacter::DirichletCharacter(std::int64_t f, std::vector<Number> values)
    : conductor_(f), values_(std::move(values)) {}

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter(1, {Number(1)}); }

double DirichletCharacter::max_modulus() const {
  double out = 0.0;
  for (const auto& v : values_) out = std::max(out, v.abs());
  return out;
}

Number DirichletCharacter::operator()(std::int64_t m) const {
  std::int64_t r = m % conductor_;
  if (r < 0) r += conductor_;
  return values_[static_cast<std::size_t>(r)];
}

namespace {

bool close(const Number& a, const Number& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::abs(a.to_std() - b.to_std()) <= tolerance;
}

std::int64_t euler_phi(std::int64_t f) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    if (std::gcd(a, f) == 1) ++count;
  }
  return count;
}

}  // namespace

DirichletCharacter character_from_table(std::int64_t f, std::vector<Number> values, double tolerance) {
  if (f < 1) throw DomainError("character: conductor must be positive");
  if (f % 2 == 0) throw DomainError("character: conductor must be odd, got f=" + std::to_string(f));
  if (f > 1'000'000) throw DomainError("character: conductor too large");
  if (static_cast<std::int64_t>(values.size()) != f) {
    throw DomainError("character: expected " + std::to_string(f) + " values, got " + std::to_string(values.size()));
  }
  for (std::int64_t a = 0; a < f; ++a) {
    const bool unit = std::gcd(a, f) == 1;
    const bool zero = values[a].is_exact() ? values[a].is_zero() : values[a].abs() <= tolerance;
    if (unit && zero) throw DomainError("character: zero value at unit residue " + std::to_string(a));
    if (!unit && !zero) throw DomainError("character: nonzero value at non-unit residue " + std::to_string(a));
  }
  if (f == 1) {
    if (!close(values[0], Number(1), tolerance)) throw DomainError("character: the conductor-1 character must be 1");
    return DirichletCharacter(1, std::move(values));
  }
  if (!close(values[1], Number(1), tolerance)) throw DomainError("character: chi(1) must be 1");
  for (std::int64_t a = 0; a < f; ++a) {
    for (std::int64_t b = a; b < f; ++b) {
      if (!close(values[(a * b) % f], values[a] * values[b], tolerance)) {
        throw DomainError("character: not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  const std::int64_t order = euler_phi(f);
  for (std::int64_t a = 1; a < f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    if (!close(pow_int(values[a], order), Number(1), tolerance * static_cast<double>(order))) {
      throw DomainError("character: value at residue " + std::to_string(a) + " is not a root of unity");
    }
  }
  return DirichletCharacter(f, std::move(values));
}

Number character_value(const DirichletCharacter& chi, std::int64_t m) { return chi(m); }

std::vector<Number> truncated_cauchy_product(std::span<const Number> a, std::span<const Number> b,
                                             std::size_t max_index) {
  std::vector<Number> out(max_index + 1, Number(0));
  for (std::size_t i = 0; i <= max_index && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= max_index && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Number> character_convolution(const DirichletCharacter& chi, std::span<const Number> ratios,
                                          std::size_t max_index) {
  if (ratios.empty()) throw DomainError("character_convolution: need at least one coordinate");
  auto coordinate = [&](const Number& ratio) {
    std::vector<Number> w;
    w.reserve(max_index + 1);
    Number power = Number(1);
    for (std::size_t m = 0; m <= max_index; ++m) {
      w.push_back(power * chi(static_cast<std::int64_t>(m)));
      power *= ratio;
    }
    return w;
  };
  std::vector<Number> acc = coordinate(ratios[0]);
  for (std::size_t j = 1; j < ratios.size(); ++j) {
    const std::vector<Number> next = coordinate(ratios[j]);
    acc = truncated_cauchy_product(acc, next, max_index);
  }
  return acc;
}

}  // namespace qeuler
