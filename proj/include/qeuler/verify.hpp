/**
 * @file verify.hpp
 * @brief Classical Euler oracles and the executable identity suite.
 *
 * Every check evaluates its two sides through different code paths (closed
 * form against truncated series, direct against residue-class factored, q-form
 * against classical limit) and compares them either as reduced rationals or
 * within tau plus the certified tails of both sides.
 */

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeuler/scalar.hpp"

namespace qeuler {

/// E_n(x) from sum_k binom(n,k) E_k(x) + E_n(x) = 2 x^n.
mpq_class classical_euler_poly(long n, const mpq_class& x);

/// E_n^{(r)}(x) = sum_k binom(n,k) E_k^{(r-1)}(0) E_{n-k}(x).
mpq_class classical_euler_order(long n, long r, const mpq_class& x);

/// Coefficients of 2^r / prod(e^{a_j t} + 1) e^{xt}.
mpq_class classical_barnes_euler(long n, const std::vector<mpq_class>& a, const mpq_class& x);

enum class IdentityTag {
  Prop1,
  Recurrence,
  Thm3,
  Thm5,
  Thm7,
  Thm8,
  Thm10,
  Thm11,
  FinalDisplay,
  GaussBinomial,
  NegBinomial,
  QLimit,
  Distribution,
  SpecializationLattice,
  Normalization,
};

const std::vector<IdentityTag>& all_identity_tags();
std::string tag_name(IdentityTag tag);
/// Case-insensitive; accepts e.g. "thm7", "Thm7", "gauss-binomial", "lattice".
std::optional<IdentityTag> parse_tag(std::string_view text);

/// Both sides of an identity with the certified truncation error of each.
struct Sides {
  Number lhs;
  Number rhs;
  double lhs_tail = 0.0;
  double rhs_tail = 0.0;
};

struct IdentityCheck {
  IdentityTag tag = IdentityTag::Prop1;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double tolerance = 0.0;
  Mode mode = Mode::Float;
  bool informational = false;
  std::function<Sides()> compute;
};

struct CheckEntry {
  std::string id;
  nlohmann::ordered_json params;
  std::string lhs;
  std::string rhs;
  double abs_diff = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string note;  ///< set when a side could not be evaluated

  nlohmann::ordered_json to_json() const;
};

/// Runs one check. Evaluation failures become a failing entry with a note; nothing is thrown.
CheckEntry run_check(const IdentityCheck& check, const std::string& id);

struct SuiteConfig {
  std::set<IdentityTag> only;       ///< empty means every tag
  bool exact_only = false;
  std::optional<double> tolerance;  ///< overrides every Float-mode tolerance
  std::optional<long> n_max;
  std::optional<long> h;
  std::optional<long> r;
  std::optional<unsigned> precision;
  std::optional<std::size_t> max_terms;
  unsigned threads = 0;  ///< 0 selects the hardware concurrency

  nlohmann::ordered_json to_json() const;
};

/// Throws DomainError or DivergenceError for configurations no grid can honor.
void validate_suite_config(const SuiteConfig& config);

std::vector<IdentityCheck> build_suite(const SuiteConfig& config);

struct CheckReport {
  std::string config_fingerprint;
  std::vector<CheckEntry> entries;
  std::vector<CheckEntry> informational;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double wall_ms = 0.0;

  bool ok() const { return failed == 0 && !entries.empty(); }
  nlohmann::ordered_json to_json() const;
};

CheckReport run_suite(const SuiteConfig& config);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace qeuler
