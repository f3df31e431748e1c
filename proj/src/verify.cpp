#include "qeuler/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "kernels.hpp"
#include "qeuler/characters.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/eulerpoly.hpp"
#include "qeuler/qcore.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

namespace {

using json = nlohmann::ordered_json;

mpq_class binom(long n, long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(c);
}

mpq_class power(const mpq_class& base, long e) {
  mpq_class out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

/// E_0(x), ..., E_n(x).
std::vector<mpq_class> classical_row(long n, const mpq_class& x) {
  std::vector<mpq_class> e(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) acc += binom(m, k) * e[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(m)] = power(x, m) - acc / 2;
  }
  return e;
}

/// c * d as exponential generating functions, truncated at degree n.
std::vector<mpq_class> egf_product(const std::vector<mpq_class>& c, const std::vector<mpq_class>& d, long n) {
  std::vector<mpq_class> out(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    for (long k = 0; k <= m; ++k) {
      out[static_cast<std::size_t>(m)] += binom(m, k) * c[static_cast<std::size_t>(k)] *
                                          d[static_cast<std::size_t>(m - k)];
    }
  }
  return out;
}

}  // namespace

mpq_class classical_euler_poly(long n, const mpq_class& x) {
  if (n < 0) throw DomainError("degree n must be nonnegative");
  return classical_row(n, x).back();
}

mpq_class classical_euler_order(long n, long r, const mpq_class& x) {
  if (n < 0) throw DomainError("degree n must be nonnegative");
  if (r < 1) throw DomainError("order r must be at least 1");
  const std::vector<mpq_class> at_zero = classical_row(n, 0);
  std::vector<mpq_class> acc = at_zero;
  for (long j = 1; j < r; ++j) acc = egf_product(acc, at_zero, n);
  std::vector<mpq_class> shift(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) shift[static_cast<std::size_t>(k)] = power(x, k);
  return egf_product(acc, shift, n).back();
}

mpq_class classical_barnes_euler(long n, const std::vector<mpq_class>& a, const mpq_class& x) {
  if (n < 0) throw DomainError("degree n must be nonnegative");
  if (a.empty()) throw DomainError("Barnes parameters must be nonempty");
  const std::vector<mpq_class> at_zero = classical_row(n, 0);
  std::vector<mpq_class> acc(static_cast<std::size_t>(n + 1));
  acc[0] = 1;
  for (const mpq_class& aj : a) {
    std::vector<mpq_class> scaled(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) scaled[static_cast<std::size_t>(k)] = power(aj, k) * at_zero[static_cast<std::size_t>(k)];
    acc = egf_product(acc, scaled, n);
  }
  std::vector<mpq_class> shift(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) shift[static_cast<std::size_t>(k)] = power(x, k);
  return egf_product(acc, shift, n).back();
}

const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags = {
      IdentityTag::Prop1,         IdentityTag::Recurrence,    IdentityTag::Thm3,
      IdentityTag::Thm5,          IdentityTag::Thm7,          IdentityTag::Thm8,
      IdentityTag::Thm10,         IdentityTag::Thm11,         IdentityTag::FinalDisplay,
      IdentityTag::GaussBinomial, IdentityTag::NegBinomial,   IdentityTag::QLimit,
      IdentityTag::Distribution,  IdentityTag::SpecializationLattice, IdentityTag::Normalization,
  };
  return tags;
}

std::string tag_name(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::Prop1: return "prop1";
    case IdentityTag::Recurrence: return "recurrence";
    case IdentityTag::Thm3: return "thm3";
    case IdentityTag::Thm5: return "thm5";
    case IdentityTag::Thm7: return "thm7";
    case IdentityTag::Thm8: return "thm8";
    case IdentityTag::Thm10: return "thm10";
    case IdentityTag::Thm11: return "thm11";
    case IdentityTag::FinalDisplay: return "final-display";
    case IdentityTag::GaussBinomial: return "gauss-binomial";
    case IdentityTag::NegBinomial: return "neg-binomial";
    case IdentityTag::QLimit: return "q-limit";
    case IdentityTag::Distribution: return "distribution";
    case IdentityTag::SpecializationLattice: return "lattice";
    case IdentityTag::Normalization: return "normalization";
  }
  return "unknown";
}

std::optional<IdentityTag> parse_tag(std::string_view text) {
  auto squash = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c == '-' || c == '_') continue;
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
  };
  const std::string key = squash(text);
  if (key == "specializationlattice") return IdentityTag::SpecializationLattice;
  for (IdentityTag tag : all_identity_tags()) {
    if (squash(tag_name(tag)) == key) return tag;
  }
  return std::nullopt;
}

json CheckEntry::to_json() const {
  json j;
  j["id"] = id;
  j["params"] = params;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["abs_diff"] = std::isfinite(abs_diff) ? json(abs_diff) : json(nullptr);
  j["bound"] = bound;
  j["pass"] = pass;
  if (!note.empty()) j["note"] = note;
  return j;
}

namespace {

double difference(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return mpq_class(abs(a.exact() - b.exact())).get_d();
  const unsigned prec = std::max({a.precision(), b.precision(), kDefaultPrecision});
  return (a.to_complex(prec) - b.to_complex(prec)).modulus().to_double();
}

}  // namespace

CheckEntry run_check(const IdentityCheck& check, const std::string& id) {
  CheckEntry entry;
  entry.id = id;
  entry.params = check.params;
  entry.params["mode"] = check.mode == Mode::Exact ? "exact" : "float";
  entry.abs_diff = std::numeric_limits<double>::quiet_NaN();
  try {
    const Sides sides = check.compute();
    entry.lhs = render(sides.lhs);
    entry.rhs = render(sides.rhs);
    entry.abs_diff = difference(sides.lhs, sides.rhs);
    if (check.mode == Mode::Exact) {
      entry.bound = 0.0;
      if (!sides.lhs.is_exact() || !sides.rhs.is_exact()) {
        entry.note = "exact check produced a float side";
      } else {
        entry.pass = sides.lhs.exact() == sides.rhs.exact();
      }
    } else {
      entry.bound = check.tolerance + sides.lhs_tail + sides.rhs_tail;
      entry.pass = std::isfinite(entry.abs_diff) && entry.abs_diff <= entry.bound;
    }
  } catch (const std::exception& e) {
    entry.pass = false;
    entry.note = std::string("skipped: ") + e.what();
  }
  return entry;
}

json SuiteConfig::to_json() const {
  json j;
  json tags = json::array();
  for (IdentityTag tag : all_identity_tags()) {
    if (only.count(tag) != 0) tags.push_back(tag_name(tag));
  }
  j["only"] = tags;
  j["exact_only"] = exact_only;
  j["tolerance"] = tolerance ? json(*tolerance) : json(nullptr);
  j["n_max"] = n_max ? json(*n_max) : json(nullptr);
  j["h"] = h ? json(*h) : json(nullptr);
  j["r"] = r ? json(*r) : json(nullptr);
  j["precision"] = precision ? json(*precision) : json(nullptr);
  j["max_terms"] = max_terms ? json(*max_terms) : json(nullptr);
  return j;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

bool selected(const SuiteConfig& config, IdentityTag tag) { return config.only.empty() || config.only.count(tag) != 0; }

/// Grids whose h-family series need h - r + 1 >= 1 for every (h, r) they will run.
constexpr IdentityTag kHrTags[] = {IdentityTag::Thm7, IdentityTag::Thm8, IdentityTag::Thm10};

std::vector<long> r_values(const SuiteConfig& config, long lo, long hi) {
  if (config.r) return {*config.r};
  std::vector<long> out;
  for (long r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

std::vector<long> h_offsets_for(const SuiteConfig& config, long r, std::initializer_list<long> offsets) {
  if (config.h) return {*config.h};
  std::vector<long> out;
  for (long d : offsets) out.push_back(r + d);
  return out;
}

}  // namespace

void validate_suite_config(const SuiteConfig& config) {
  if (config.r && *config.r < 1) throw DomainError("--r: order r must be at least 1");
  if (config.n_max && *config.n_max < 0) throw DomainError("--n-max: must be nonnegative");
  if (config.tolerance && !(*config.tolerance >= 0.0)) throw DomainError("--tau: tolerance must be nonnegative");
  if (config.precision && (*config.precision < 2 || *config.precision > 100000)) {
    throw DomainError("--mode: precision must lie in [2, 100000] bits");
  }
  if (config.max_terms && *config.max_terms < 1) throw DomainError("--M: must be at least 1");
  if (!config.h) return;
  for (IdentityTag tag : kHrTags) {
    if (!selected(config, tag)) continue;
    for (long r : r_values(config, 1, 3)) {
      if (*config.h - r + 1 < 1) {
        throw DivergenceError("divergence guard: requires h−r+1 ≥ 1 (got h=" + std::to_string(*config.h) +
                              ", r=" + std::to_string(r) + " for " + tag_name(tag) + ")");
      }
    }
  }
}

namespace {

const DirichletCharacter& quadratic3() {
  static const DirichletCharacter chi = character_from_table(3, {Number(0), Number(1), Number(-1)});
  return chi;
}

struct Builder {
  const SuiteConfig& config;
  std::vector<IdentityCheck> checks;

  long n_cap(long n) const { return config.n_max ? std::min(n, *config.n_max) : n; }
  double tol(double default_tol) const { return config.tolerance.value_or(default_tol); }
  unsigned prec(double default_tol) const {
    if (config.precision) return *config.precision;
    return default_tol <= 1e-12 ? 113U : kDefaultPrecision;
  }
  SeriesConfig series(std::size_t default_terms = 400) const {
    SeriesConfig cfg;
    cfg.max_terms = config.max_terms.value_or(default_terms);
    cfg.enforce_tail_bound = false;
    return cfg;
  }

  void add(IdentityTag tag, json params, Mode mode, double tolerance, std::function<Sides()> compute,
           bool informational = false) {
    if (config.exact_only && mode != Mode::Exact) return;
    IdentityCheck check;
    check.tag = tag;
    check.params = std::move(params);
    check.tolerance = mode == Mode::Exact ? 0.0 : tolerance;
    check.mode = mode;
    check.informational = informational;
    check.compute = std::move(compute);
    checks.push_back(std::move(check));
  }
};

Number num(const std::string& text, unsigned prec) { return parse_number(text, prec); }

/// Exact QParam when the literal is rational, otherwise floating.
QParam q_of(const std::string& text, unsigned prec) {
  const Number v = num(text, prec);
  return v.is_exact() ? QParam::exact(v) : QParam::floating(v, prec);
}

QParam q_float(const std::string& text, unsigned prec) { return QParam::floating(num(text, prec), prec); }

/// Exact when both q and x permit it, floating otherwise.
QParam q_for(const std::string& q_text, const Number& x, unsigned prec) {
  const QParam q = q_of(q_text, prec);
  if (q.mode() == Mode::Exact && x.as_integer()) return q;
  return q_float(q_text, prec);
}

Sides from_evals(const Evaluation& lhs, const Evaluation& rhs) {
  return {lhs.value, rhs.value, lhs.tail_bound, rhs.tail_bound};
}

BarnesParams barnes_prefix(const std::vector<long>& a, const std::vector<long>& b, long r) {
  std::vector<Number> av;
  std::vector<long> bv;
  for (long j = 0; j < r; ++j) {
    av.emplace_back(a[static_cast<std::size_t>(j)]);
    bv.push_back(b[static_cast<std::size_t>(j)]);
  }
  return BarnesParams(std::move(av), std::move(bv));
}

json barnes_json(const BarnesParams& p) {
  json a = json::array(), b = json::array();
  for (const Number& v : p.a()) a.push_back(render(v));
  for (long v : p.b()) b.push_back(v);
  return json{{"a", a}, {"b", b}};
}

void build_prop1(Builder& B) {
  const double tau = B.tol(1e-10);
  const unsigned prec = B.prec(1e-10);
  const SeriesConfig cfg = B.series();
  for (long n = 0; n <= B.n_cap(8); ++n) {
    for (long r : r_values(B.config, 1, 4)) {
      for (const std::string qs : {"3/10", "1/2", "0.4+0.3i"}) {
        for (long xi : {1L, 2L}) {
          json p{{"n", n}, {"r", r}, {"q", qs}, {"x", xi}, {"M", cfg.max_terms}, {"lhs", "closed"}, {"rhs", "series"}};
          B.add(IdentityTag::Prop1, p, Mode::Float, tau, [=] {
            const Evaluation closed = euler_poly_order(n, r, q_of(qs, prec), Number(xi), Method::Closed);
            const Evaluation series = euler_poly_order(n, r, q_float(qs, prec), Number(xi), Method::Series, cfg);
            return from_evals(closed, series);
          });
        }
      }
    }
  }
}

void build_recurrence(Builder& B) {
  for (const std::string qs : {"1/3", "2/5", "7/10"}) {
    for (long n = 1; n <= B.n_cap(10); ++n) {
      json p{{"n", n}, {"q", qs}, {"lhs", "q(qE+1)^n"}, {"rhs", "-E_n"}};
      B.add(IdentityTag::Recurrence, p, Mode::Exact, 0.0, [=] {
        const QParam q = QParam::exact(num(qs, kDefaultPrecision));
        Number acc(0);
        for (long k = 0; k <= n; ++k) {
          acc += detail::binomial(n, k) * pow_int(q.value(), k) * euler_poly(k, q, Number(0));
        }
        return Sides{q.value() * acc, -euler_poly(n, q, Number(0))};
      });
    }
  }
}

constexpr const char* kInterpQs[] = {"1/2", "0.4+0.3i"};

void build_thm3(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (long n = 0; n <= B.n_cap(6); ++n) {
    for (long r : r_values(B.config, 1, 3)) {
      for (const std::string qs : kInterpQs) {
        for (const std::string xs : {"1", "3/2"}) {
          json p{{"n", n}, {"r", r}, {"q", qs}, {"x", xs}, {"s", -n}, {"lhs", "zeta series"}, {"rhs", "closed"}};
          B.add(IdentityTag::Thm3, p, Mode::Float, tau, [=] {
            const Number x = num(xs, prec);
            const Evaluation zeta = zeta_multi(Number(-n), r, q_float(qs, prec), x, cfg, ZetaMethod::Series);
            const Evaluation poly = euler_poly_order(n, r, q_for(qs, x, prec), x, Method::Closed);
            return from_evals(zeta, poly);
          });
        }
      }
    }
  }
}

void build_thm5(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (long n = 0; n <= B.n_cap(4); ++n) {
    for (long r : r_values(B.config, 1, 2)) {
      for (const std::string qs : kInterpQs) {
        for (const std::string xs : {"1", "3/2"}) {
          json p{{"n", n}, {"r", r}, {"q", qs}, {"x", xs}, {"s", -n}, {"character", "f=3;values=0,1,-1"},
                 {"lhs", "l series"}, {"rhs", "closed"}};
          B.add(IdentityTag::Thm5, p, Mode::Float, tau, [=] {
            const Number x = num(xs, prec);
            const Evaluation l = l_multi(Number(-n), quadratic3(), r, q_float(qs, prec), x, cfg, ZetaMethod::Series);
            const Evaluation poly = euler_chi_order(n, r, quadratic3(), q_for(qs, x, prec), x, Method::Closed);
            return from_evals(l, poly);
          });
        }
      }
    }
  }
}

void build_thm7(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (long n = 0; n <= B.n_cap(4); ++n) {
    for (long r : r_values(B.config, 1, 3)) {
      for (long h : h_offsets_for(B.config, r, {0, 1, 2})) {
        for (const std::string qs : kInterpQs) {
          json p{{"n", n}, {"h", h}, {"r", r}, {"q", qs}, {"x", 1}, {"s", -n}, {"lhs", "zeta-h series"},
                 {"rhs", "closed"}};
          B.add(IdentityTag::Thm7, p, Mode::Float, tau, [=] {
            const Evaluation zeta =
                zeta_multi_h(Number(-n), h, r, q_float(qs, prec), Number(1), cfg, ZetaMethod::Series);
            const Evaluation poly = euler_poly_hr(n, h, r, q_of(qs, prec), Number(1), Method::Closed);
            return from_evals(zeta, poly);
          });
        }
      }
    }
  }
}

void build_thm10(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (long n = 0; n <= B.n_cap(3); ++n) {
    for (long r : r_values(B.config, 1, 2)) {
      for (long h : h_offsets_for(B.config, r, {1})) {
        for (const std::string qs : kInterpQs) {
          for (const std::string xs : {"1", "3/2"}) {
            json p{{"n", n}, {"h", h}, {"r", r}, {"q", qs}, {"x", xs}, {"s", -n},
                   {"character", "f=3;values=0,1,-1"}, {"lhs", "l-h series"}, {"rhs", "closed"}};
            B.add(IdentityTag::Thm10, p, Mode::Float, tau, [=] {
              const Number x = num(xs, prec);
              const Evaluation l =
                  l_multi_h(Number(-n), quadratic3(), h, r, q_float(qs, prec), x, cfg, ZetaMethod::Series);
              const Evaluation poly = euler_chi_hr(n, h, r, quadratic3(), q_for(qs, x, prec), x, Method::Closed);
              return from_evals(l, poly);
            });
          }
        }
      }
    }
  }
}

struct BarnesCase {
  long r;
  std::vector<long> b;
};

const std::vector<BarnesCase>& barnes_cases() {
  static const std::vector<BarnesCase> cases = {{1, {0}}, {1, {1}}, {2, {0, 0}}, {2, {0, 1}}};
  return cases;
}

void build_thm11(Builder& B, bool twisted) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series(60);
  const IdentityTag tag = twisted ? IdentityTag::FinalDisplay : IdentityTag::Thm11;
  for (long n = 0; n <= B.n_cap(3); ++n) {
    for (const BarnesCase& bc : barnes_cases()) {
      if (B.config.r && *B.config.r != bc.r) continue;
      const BarnesParams params = barnes_prefix({1, 2}, bc.b, bc.r);
      for (const std::string qs : kInterpQs) {
        json p{{"n", n}, {"r", bc.r}, {"barnes", barnes_json(params)}, {"q", qs}, {"x", 1}, {"s", -n},
               {"M", cfg.max_terms}};
        if (twisted) p["character"] = "f=3;values=0,1,-1";
        p["lhs"] = twisted ? "barnes-l series" : "barnes-zeta series";
        p["rhs"] = "closed";
        B.add(tag, p, Mode::Float, tau, [=] {
          const QParam qf = q_float(qs, prec);
          const QParam qc = q_of(qs, prec);
          if (twisted) {
            return from_evals(barnes_l(Number(-n), quadratic3(), params, qf, Number(1), cfg, ZetaMethod::Series),
                              barnes_euler_chi(n, quadratic3(), params, qc, Number(1), Method::Closed));
          }
          return from_evals(barnes_zeta(Number(-n), params, qf, Number(1), cfg, ZetaMethod::Series),
                            barnes_euler(n, params, qc, Number(1), Method::Closed));
        });
      }
    }
  }
}

void build_thm8(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (long r : r_values(B.config, 1, 2)) {
    for (long h : h_offsets_for(B.config, r, {1})) {
      for (long n = 0; n <= B.n_cap(4); ++n) {
        for (long xi : {1L, 2L}) {
          json pe{{"n", n}, {"h", h}, {"r", r}, {"q", "1/8"}, {"u", "1/2"}, {"x", xi},
                  {"character", "f=3;values=0,1,-1"}, {"lhs", "closed"}, {"rhs", "distribution"}};
          B.add(IdentityTag::Thm8, pe, Mode::Exact, 0.0, [=] {
            const QParam q = QParam::exact(Number::rational(1, 8));
            return from_evals(euler_chi_hr(n, h, r, quadratic3(), q, Number(xi), Method::Closed),
                              euler_chi_hr(n, h, r, quadratic3(), q, Number(xi), Method::Distribution));
          });
          json pf{{"n", n}, {"h", h}, {"r", r}, {"q", "0.5"}, {"x", xi}, {"character", "f=3;values=0,1,-1"},
                  {"lhs", "series"}, {"rhs", "distribution"}};
          B.add(IdentityTag::Thm8, pf, Mode::Float, tau, [=] {
            const QParam q = q_float("0.5", prec);
            return from_evals(euler_chi_hr(n, h, r, quadratic3(), q, Number(xi), Method::Series, cfg),
                              euler_chi_hr(n, h, r, quadratic3(), q, Number(xi), Method::Distribution));
          });
        }
      }
    }
  }
}

/// The first line of the residue-class expansion with the per-coordinate exponent read as
/// (h - j + l + 1) a_j summed over j, or with every coordinate using j = 1.
Number residue_expansion(long n, long h, long r, const DirichletCharacter& chi, const QParam& q, long x,
                         bool sum_over_j) {
  const long f = static_cast<long>(chi.conductor());
  const Number& qv = q.value();
  const Number one(1);
  Number total(0);
  std::vector<long> a(static_cast<std::size_t>(r), 0);
  while (true) {
    Number coeff = one;
    long sum_a = 0;
    for (long j = 1; j <= r; ++j) {
      coeff *= chi(a[static_cast<std::size_t>(j - 1)]);
      sum_a += a[static_cast<std::size_t>(j - 1)];
    }
    if (!coeff.is_zero()) {
      if (sum_a % 2 != 0) coeff = -coeff;
      Number inner(0);
      for (long l = 0; l <= n; ++l) {
        long e = l * x;
        for (long j = 1; j <= r; ++j) e += (sum_over_j ? h - j + l + 1 : h + l) * a[static_cast<std::size_t>(j - 1)];
        Number denom = one;
        for (long i = 0; i < r; ++i) denom *= one + pow_int(qv, (h - r + l + 1) * f + f * i);
        Number term = detail::binomial(n, l) * pow_int(qv, e) / denom;
        inner += (l % 2 == 0) ? term : -term;
      }
      total += coeff * inner;
    }
    std::size_t k = 0;
    while (k < a.size() && ++a[k] == f) a[k++] = 0;
    if (k == a.size()) break;
  }
  return pow_int(one + qv, r) / pow_int(one - qv, n) * total;
}

void build_residue_informational(Builder& B) {
  for (long n = 0; n <= B.n_cap(2); ++n) {
    for (bool sum_over_j : {true, false}) {
      const long r = 2, h = 3;
      json p{{"n", n}, {"h", h}, {"r", r}, {"q", "1/8"}, {"x", 1}, {"character", "f=3;values=0,1,-1"},
             {"lhs", sum_over_j ? "residue expansion, exponent summed over j" : "residue expansion, j = 1"},
             {"rhs", "closed"}};
      B.add(IdentityTag::Thm8, p, Mode::Exact, 0.0, [=] {
        const QParam q = QParam::exact(Number::rational(1, 8));
        return Sides{residue_expansion(n, h, r, quadratic3(), q, 1, sum_over_j),
                     euler_chi_hr(n, h, r, quadratic3(), q, Number(1), Method::Closed).value};
      }, true);
    }
  }
}

void build_distribution(Builder& B) {
  const double tau = B.tol(1e-9);
  const unsigned prec = B.prec(1e-9);
  const SeriesConfig cfg = B.series();
  for (const std::string us : {"1/2", "2/3"}) {
    for (long n = 0; n <= B.n_cap(4); ++n) {
      for (long xi : {0L, 1L, 2L}) {
        json p{{"n", n}, {"u", us}, {"q", "u^3"}, {"x", xi}, {"character", "f=3;values=0,1,-1"},
               {"lhs", "closed"}, {"rhs", "distribution"}};
        B.add(IdentityTag::Distribution, p, Mode::Exact, 0.0, [=] {
          const QParam q = QParam::exact(pow_int(num(us, kDefaultPrecision), 3));
          return from_evals(euler_chi(n, quadratic3(), q, Number(xi), Method::Closed),
                            euler_chi(n, quadratic3(), q, Number(xi), Method::Distribution));
        });
      }
    }
  }
  for (const std::string qs : kInterpQs) {
    for (long n = 0; n <= B.n_cap(4); ++n) {
      for (const std::string xs : {"1", "3/2"}) {
        json p{{"n", n}, {"q", qs}, {"x", xs}, {"character", "f=3;values=0,1,-1"}, {"lhs", "series"},
               {"rhs", "distribution"}};
        B.add(IdentityTag::Distribution, p, Mode::Float, tau, [=] {
          const QParam q = q_float(qs, prec);
          const Number x = num(xs, prec);
          return from_evals(euler_chi(n, quadratic3(), q, x, Method::Series, cfg),
                            euler_chi(n, quadratic3(), q, x, Method::Distribution));
        });
      }
    }
  }
  for (long r : r_values(B.config, 1, 2)) {
    for (const std::string ss : {"3/2", "2+1i", "0.5-0.5i"}) {
      const long h = r + 1;
      json p{{"s", ss}, {"h", h}, {"r", r}, {"q", "0.5"}, {"x", 1}, {"character", "f=3;values=0,1,-1"},
             {"lhs", "l-h series"}, {"rhs", "l-h factored"}};
      B.add(IdentityTag::Distribution, p, Mode::Float, tau, [=] {
        const QParam q = q_float("0.5", prec);
        const Number s = num(ss, prec);
        return from_evals(l_multi_h(s, quadratic3(), h, r, q, Number(1), cfg, ZetaMethod::Series),
                          l_multi_h(s, quadratic3(), h, r, q, Number(1), cfg, ZetaMethod::Factored));
      });
    }
  }
}

void build_gauss(Builder& B) {
  std::mt19937_64 rng(20240531);
  std::uniform_int_distribution<long> den(2, 12), xnum(-36, 36), xden(1, 12);
  for (long n = 0; n <= B.n_cap(12); ++n) {
    for (int draw = 0; draw < 2; ++draw) {
      const long d = den(rng);
      std::uniform_int_distribution<long> qnum(1 - d, d - 1);
      long p = 0;
      while (p == 0) p = qnum(rng);
      const Number qv = Number::rational(p, d);
      const Number x = Number::rational(xnum(rng), xden(rng));
      json params{{"n", n}, {"q", render(qv)}, {"x", render(x)}, {"lhs", "(x:q)_n"}, {"rhs", "Gauss expansion"}};
      B.add(IdentityTag::GaussBinomial, params, Mode::Exact, 0.0, [=] {
        const QParam q = QParam::exact(qv);
        Number sum(0);
        for (long i = 0; i <= n; ++i) {
          sum += q_binomial(n, i, q) * pow_int(qv, i * (i - 1) / 2) * pow_int(-x, i);
        }
        return Sides{q_pochhammer(x, q, n), sum};
      });
    }
  }
}

void build_neg_binomial(Builder& B) {
  const double tau = B.tol(1e-12);
  const unsigned prec = B.prec(1e-12);
  const std::size_t M = B.config.max_terms.value_or(200);
  for (long n = 1; n <= std::max(1L, B.n_cap(4)); ++n) {
    for (const std::string qs : {"1/2", "0.4+0.3i"}) {
      for (const std::string xs : {"3/10", "-1/2", "0.2+0.3i"}) {
        json p{{"n", n}, {"q", qs}, {"x", xs}, {"M", M}, {"lhs", "1/(x:q)_n"}, {"rhs", "q-binomial series"}};
        B.add(IdentityTag::NegBinomial, p, Mode::Float, tau, [=] {
          const QParam q = q_float(qs, prec);
          const Number x = q.lift(num(xs, prec));
          const QBinomialTable table(q, static_cast<std::size_t>(n) + M, static_cast<std::size_t>(n - 1));
          Number sum = q.lift(Number(0));
          Number xi = q.lift(Number(1));
          for (std::size_t i = 0; i <= M; ++i) {
            sum += table(static_cast<std::size_t>(n - 1) + i, static_cast<std::size_t>(n - 1)) * xi;
            xi *= x;
          }
          const double tail = detail::qbinomial_weight_tail(x.abs(), q.modulus(), n, M);
          return Sides{q.lift(Number(1)) / q_pochhammer(x, q, n), sum, 0.0, tail};
        });
      }
    }
  }
}

Number exact_q_limit(const std::function<Number(const QParam&)>& f, const mpq_class& eps) {
  return f(QParam::exact(Number(mpq_class(1 - eps))));
}

void build_q_limit(Builder& B) {
  const mpq_class eps(1, 10000), half_eps(1, 20000), single(1, 100000);
  auto richardson = [=](const std::function<Number(const QParam&)>& f) {
    return Number(2) * exact_q_limit(f, half_eps) - exact_q_limit(f, eps);
  };
  for (long n = 0; n <= B.n_cap(5); ++n) {
    for (long xi : {0L, 1L}) {
      json p{{"n", n}, {"x", xi}, {"family", "basic"}, {"eps", json::array({"1/10000", "1/20000"})},
             {"lhs", "richardson"}, {"rhs", "classical"}};
      B.add(IdentityTag::QLimit, p, Mode::Float, B.tol(1e-7), [=] {
        auto f = [=](const QParam& q) { return euler_poly(n, q, Number(xi)); };
        return Sides{richardson(f), Number(classical_euler_poly(n, xi))};
      });
    }
    json p1{{"n", n}, {"x", 0}, {"family", "basic"}, {"eps", "1/100000"}, {"lhs", "single eps"}, {"rhs", "classical"}};
    B.add(IdentityTag::QLimit, p1, Mode::Float, B.tol(1e-3), [=] {
      return Sides{exact_q_limit([=](const QParam& q) { return euler_poly(n, q, Number(0)); }, single),
                   Number(classical_euler_poly(n, 0))};
    });
    for (long r : {2L, 3L}) {
      for (long xi : {0L, 1L}) {
        json p{{"n", n}, {"r", r}, {"x", xi}, {"family", "order-r"}, {"eps", json::array({"1/10000", "1/20000"})},
               {"lhs", "richardson"}, {"rhs", "classical"}};
        B.add(IdentityTag::QLimit, p, Mode::Float, B.tol(1e-5), [=] {
          auto f = [=](const QParam& q) { return euler_poly_order(n, r, q, Number(xi), Method::Closed).value; };
          return Sides{richardson(f), Number(classical_euler_order(n, r, xi))};
        });
      }
    }
    for (long xi : {0L, 1L}) {
      const BarnesParams params({Number(1), Number(2)}, {0, 0});
      json p{{"n", n}, {"x", xi}, {"family", "barnes"}, {"barnes", barnes_json(params)},
             {"eps", json::array({"1/10000", "1/20000"})}, {"lhs", "richardson"}, {"rhs", "classical"}};
      B.add(IdentityTag::QLimit, p, Mode::Float, B.tol(1e-5), [=] {
        auto f = [=](const QParam& q) { return barnes_euler(n, params, q, Number(xi), Method::Closed).value; };
        return Sides{richardson(f), Number(classical_barnes_euler(n, {1, 2}, xi))};
      });
    }
  }
}

/// sum_{m>=0} chi(m) (-z)^m by summing each residue class as a geometric series.
Number twisted_sum_oracle(const DirichletCharacter& chi, const Number& z) {
  const long f = static_cast<long>(chi.conductor());
  Number total(0);
  for (long c = 0; c < f; ++c) {
    const Number v = chi(c);
    if (v.is_zero()) continue;
    // sum_k (-z)^{c + f k} = (-z)^c / (1 - (-z)^f)
    total += v * pow_int(-z, c) / (Number(1) - pow_int(-z, f));
  }
  return total;
}

/// Value of each family at n = 0 (and of each zeta family at s = 0), coordinate by coordinate.
Number hr_normalization(long h, long r, const Number& q) {
  Number out(1);
  for (long j = 1; j <= r; ++j) out *= (Number(1) + q) / (Number(1) + pow_int(q, h - j + 1));
  return out;
}

Number chi_hr_normalization(const DirichletCharacter& chi, long h, long r, const Number& q) {
  Number out(1);
  for (long j = 1; j <= r; ++j) out *= (Number(1) + q) * twisted_sum_oracle(chi, pow_int(q, h - j + 1));
  return out;
}

Number barnes_normalization(const BarnesParams& p, const DirichletCharacter& chi, const Number& q) {
  Number out(1);
  for (long b : p.b()) out *= (Number(1) + q) * twisted_sum_oracle(chi, pow_int(q, b + 1));
  return out;
}

void build_normalization(Builder& B) {
  const double tau = B.tol(1e-10);
  const unsigned prec = B.prec(1e-10);
  const SeriesConfig cfg = B.series();
  const SeriesConfig box_cfg = B.series(60);
  const DirichletCharacter& chi = quadratic3();
  const DirichletCharacter trivial = DirichletCharacter::trivial();
  for (const std::string qs : {"1/2", "3/10"}) {
    for (long xi : {1L, 2L}) {
      for (long r : r_values(B.config, 1, 3)) {
        const long h = r + 1;
        const BarnesParams bp = barnes_prefix({1, 2, 3}, {0, 1, 0}, r);
        const BarnesParams uniform = BarnesParams::uniform(r);
        struct Item {
          std::string family;
          bool zeta;
          std::function<Evaluation(const QParam&, bool exact)> eval;
          std::function<Number(const Number& q)> oracle;
        };
        std::vector<Item> items = {
            {"basic", false, [=](const QParam& q, bool) { return Evaluation{euler_poly(0, q, Number(xi)), 0.0}; },
             [](const Number&) { return Number(1); }},
            {"order-r", false,
             [=](const QParam& q, bool e) {
               return euler_poly_order(0, r, q, Number(xi), e ? Method::Closed : Method::Series, cfg);
             },
             [](const Number&) { return Number(1); }},
            {"hr", false,
             [=](const QParam& q, bool e) {
               return euler_poly_hr(0, h, r, q, Number(xi), e ? Method::Closed : Method::Series, cfg);
             },
             [=](const Number& q) { return hr_normalization(h, r, q); }},
            {"chi-order-r", false,
             [=](const QParam& q, bool e) {
               return euler_chi_order(0, r, chi, q, Number(xi), e ? Method::Closed : Method::Series, cfg);
             },
             [=](const Number& q) { return pow_int((Number(1) + q) * twisted_sum_oracle(chi, q), r); }},
            {"chi-hr", false,
             [=](const QParam& q, bool e) {
               return euler_chi_hr(0, h, r, chi, q, Number(xi), e ? Method::Closed : Method::Series, cfg);
             },
             [=](const Number& q) { return chi_hr_normalization(chi, h, r, q); }},
            {"zeta", true,
             [=](const QParam& q, bool e) {
               return zeta_multi(Number(0), r, q, Number(xi), cfg, e ? ZetaMethod::Auto : ZetaMethod::Series);
             },
             [](const Number&) { return Number(1); }},
            {"zeta-h", true,
             [=](const QParam& q, bool e) {
               return zeta_multi_h(Number(0), h, r, q, Number(xi), cfg, e ? ZetaMethod::Auto : ZetaMethod::Series);
             },
             [=](const Number& q) { return hr_normalization(h, r, q); }},
            {"l", true,
             [=](const QParam& q, bool e) {
               return l_multi(Number(0), chi, r, q, Number(xi), cfg, e ? ZetaMethod::Auto : ZetaMethod::Series);
             },
             [=](const Number& q) { return pow_int((Number(1) + q) * twisted_sum_oracle(chi, q), r); }},
            {"l-h", true,
             [=](const QParam& q, bool e) {
               return l_multi_h(Number(0), chi, h, r, q, Number(xi), cfg, e ? ZetaMethod::Auto : ZetaMethod::Series);
             },
             [=](const Number& q) { return chi_hr_normalization(chi, h, r, q); }},
        };
        if (r <= 2) {
          items.push_back({"chi", false,
                           [=](const QParam& q, bool e) {
                             return euler_chi(0, chi, q, Number(xi), e ? Method::Closed : Method::Series, cfg);
                           },
                           [=](const Number& q) { return chi_hr_normalization(chi, 1, 1, q); }});
          items.push_back({"barnes", false,
                           [=](const QParam& q, bool e) {
                             return barnes_euler(0, bp, q, Number(xi), e ? Method::Closed : Method::Series, box_cfg);
                           },
                           [=](const Number& q) { return barnes_normalization(bp, trivial, q); }});
          items.push_back({"barnes-uniform", false,
                           [=](const QParam& q, bool e) {
                             return barnes_euler(0, uniform, q, Number(xi), e ? Method::Closed : Method::Series,
                                                 box_cfg);
                           },
                           [](const Number&) { return Number(1); }});
          items.push_back({"barnes-chi", false,
                           [=](const QParam& q, bool e) {
                             return barnes_euler_chi(0, chi, bp, q, Number(xi), e ? Method::Closed : Method::Series,
                                                     box_cfg);
                           },
                           [=](const Number& q) { return barnes_normalization(bp, chi, q); }});
          items.push_back({"barnes-zeta", true,
                           [=](const QParam& q, bool e) {
                             return barnes_zeta(Number(0), bp, q, Number(xi), box_cfg,
                                                e ? ZetaMethod::Auto : ZetaMethod::Series);
                           },
                           [=](const Number& q) { return barnes_normalization(bp, trivial, q); }});
          items.push_back({"barnes-l", true,
                           [=](const QParam& q, bool e) {
                             return barnes_l(Number(0), chi, bp, q, Number(xi), box_cfg,
                                             e ? ZetaMethod::Auto : ZetaMethod::Series);
                           },
                           [=](const Number& q) { return barnes_normalization(bp, chi, q); }});
        }
        for (const Item& item : items) {
          const bool multi_order = item.family != "basic" && item.family != "chi";
          if (!multi_order && r != 1 && !B.config.r) continue;
          json base{{"family", item.family}, {item.zeta ? "s" : "n", 0}, {"q", qs}, {"x", xi}};
          if (multi_order) base["r"] = r;
          if (item.family == "hr" || item.family == "chi-hr" || item.family == "zeta-h" || item.family == "l-h") {
            base["h"] = h;
          }
          if (item.family.rfind("barnes", 0) == 0) base["barnes"] = barnes_json(item.family == "barnes-uniform" ? uniform : bp);
          json pe = base;
          pe["lhs"] = item.zeta ? "auto" : "closed";
          pe["rhs"] = "product oracle";
          B.add(IdentityTag::Normalization, pe, Mode::Exact, 0.0, [=] {
            const QParam q = QParam::exact(num(qs, kDefaultPrecision));
            return Sides{item.eval(q, true).value, item.oracle(q.value())};
          });
          if (item.family == "basic") continue;
          json pf = base;
          pf["lhs"] = "series";
          pf["rhs"] = "product oracle";
          B.add(IdentityTag::Normalization, pf, Mode::Float, tau, [=] {
            const Evaluation e = item.eval(q_float(qs, prec), false);
            return Sides{e.value, item.oracle(num(qs, kDefaultPrecision)), e.tail_bound, 0.0};
          });
        }
      }
    }
  }
}

void build_lattice(Builder& B) {
  const double tau = B.tol(1e-12);
  const unsigned prec = B.prec(1e-12);
  const SeriesConfig cfg = B.series();
  const SeriesConfig box_cfg = B.series(60);
  const DirichletCharacter& chi = quadratic3();
  const DirichletCharacter trivial = DirichletCharacter::trivial();
  struct Arrow {
    std::string name;
    std::function<Sides(long n, long r, const QParam& q, const Number& x, const Number& s)> run;
  };
  const std::vector<Arrow> arrows = {
      {"chi trivial -> basic",
       [=](long n, long, const QParam& q, const Number& x, const Number&) {
         return from_evals(euler_chi(n, trivial, q, x, Method::Series, cfg), Evaluation{euler_poly(n, q, x), 0.0});
       }},
      {"chi-order-r trivial -> order-r",
       [=](long n, long r, const QParam& q, const Number& x, const Number&) {
         return from_evals(euler_chi_order(n, r, trivial, q, x, Method::Series, cfg),
                           euler_poly_order(n, r, q, x, Method::Closed));
       }},
      {"chi-hr trivial -> hr",
       [=](long n, long r, const QParam& q, const Number& x, const Number&) {
         return from_evals(euler_chi_hr(n, r + 1, r, trivial, q, x, Method::Series, cfg),
                           euler_poly_hr(n, r + 1, r, q, x, Method::Closed));
       }},
      {"hr h=r=1 -> basic",
       [=](long n, long, const QParam& q, const Number& x, const Number&) {
         return from_evals(euler_poly_hr(n, 1, 1, q, x, Method::Series, cfg), Evaluation{euler_poly(n, q, x), 0.0});
       }},
      {"chi-hr h=r=1 -> chi",
       [=](long n, long, const QParam& q, const Number& x, const Number&) {
         return from_evals(euler_chi_hr(n, 1, 1, chi, q, x, Method::Series, cfg),
                           euler_chi(n, chi, q, x, Method::Closed));
       }},
      {"barnes a=1,b=0 -> order-r",
       [=](long n, long r, const QParam& q, const Number& x, const Number&) {
         return from_evals(barnes_euler(n, BarnesParams::uniform(r), q, x, Method::Series, box_cfg),
                           euler_poly_order(n, r, q, x, Method::Closed));
       }},
      {"barnes-chi a=1,b=0 -> chi-order-r",
       [=](long n, long r, const QParam& q, const Number& x, const Number&) {
         return from_evals(barnes_euler_chi(n, chi, BarnesParams::uniform(r), q, x, Method::Series, box_cfg),
                           euler_chi_order(n, r, chi, q, x, Method::Closed));
       }},
      {"barnes-chi trivial -> barnes",
       [=](long n, long r, const QParam& q, const Number& x, const Number&) {
         const BarnesParams p = barnes_prefix({1, 2}, {0, 1}, r);
         return from_evals(barnes_euler_chi(n, trivial, p, q, x, Method::Series, box_cfg),
                           barnes_euler(n, p, q, x, Method::Closed));
       }},
      {"l trivial -> zeta",
       [=](long, long r, const QParam& q, const Number& x, const Number& s) {
         return from_evals(l_multi(s, trivial, r, q, x, cfg), zeta_multi(s, r, q, x, cfg));
       }},
      {"zeta-h h=r=1 -> zeta",
       [=](long, long, const QParam& q, const Number& x, const Number& s) {
         return from_evals(zeta_multi_h(s, 1, 1, q, x, cfg), zeta_multi(s, 1, q, x, cfg));
       }},
      {"l-h trivial -> zeta-h",
       [=](long, long r, const QParam& q, const Number& x, const Number& s) {
         return from_evals(l_multi_h(s, trivial, r + 1, r, q, x, cfg), zeta_multi_h(s, r + 1, r, q, x, cfg));
       }},
      {"barnes-zeta a=1,b=0 -> zeta",
       [=](long, long r, const QParam& q, const Number& x, const Number& s) {
         return from_evals(barnes_zeta(s, BarnesParams::uniform(r), q, x, box_cfg), zeta_multi(s, r, q, x, cfg));
       }},
      {"barnes-l a=1,b=0 -> l",
       [=](long, long r, const QParam& q, const Number& x, const Number& s) {
         return from_evals(barnes_l(s, chi, BarnesParams::uniform(r), q, x, box_cfg), l_multi(s, chi, r, q, x, cfg));
       }},
  };
  for (long n = 0; n <= B.n_cap(4); ++n) {
    const long r = B.config.r.value_or(1 + n % 2);
    const std::string ss = std::to_string(n) + ".5+0.25i";
    for (const std::string qs : kInterpQs) {
      for (const std::string xs : {"1", "3/2"}) {
        for (const Arrow& arrow : arrows) {
          json p{{"arrow", arrow.name}, {"n", n}, {"r", r}, {"s", ss}, {"q", qs}, {"x", xs}};
          B.add(IdentityTag::SpecializationLattice, p, Mode::Float, tau, [=] {
            const QParam q = q_float(qs, prec);
            return arrow.run(n, r, q, num(xs, prec), num(ss, prec));
          });
        }
      }
    }
  }
}

std::vector<IdentityCheck> build_all(const SuiteConfig& config, bool informational) {
  Builder B{config, {}};
  if (informational) {
    if (selected(config, IdentityTag::Thm8)) build_residue_informational(B);
    return std::move(B.checks);
  }
  if (selected(config, IdentityTag::Prop1)) build_prop1(B);
  if (selected(config, IdentityTag::Recurrence)) build_recurrence(B);
  if (selected(config, IdentityTag::Thm3)) build_thm3(B);
  if (selected(config, IdentityTag::Thm5)) build_thm5(B);
  if (selected(config, IdentityTag::Thm7)) build_thm7(B);
  if (selected(config, IdentityTag::Thm8)) build_thm8(B);
  if (selected(config, IdentityTag::Thm10)) build_thm10(B);
  if (selected(config, IdentityTag::Thm11)) build_thm11(B, false);
  if (selected(config, IdentityTag::FinalDisplay)) build_thm11(B, true);
  if (selected(config, IdentityTag::GaussBinomial)) build_gauss(B);
  if (selected(config, IdentityTag::NegBinomial)) build_neg_binomial(B);
  if (selected(config, IdentityTag::QLimit)) build_q_limit(B);
  if (selected(config, IdentityTag::Distribution)) build_distribution(B);
  if (selected(config, IdentityTag::SpecializationLattice)) build_lattice(B);
  if (selected(config, IdentityTag::Normalization)) build_normalization(B);
  return std::move(B.checks);
}

/// Runs the checks on a small worker pool; entries keep the input order.
std::vector<CheckEntry> run_all(const std::vector<IdentityCheck>& checks, unsigned threads) {
  std::vector<std::string> ids(checks.size());
  std::map<IdentityTag, std::size_t> counters;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03zu", counters[checks[i].tag]++);
    ids[i] = tag_name(checks[i].tag) + "-" + buf;
  }
  std::vector<CheckEntry> entries(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) entries[i] = run_check(checks[i], ids[i]);
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return entries;
}

}  // namespace

std::vector<IdentityCheck> build_suite(const SuiteConfig& config) {
  validate_suite_config(config);
  return build_all(config, false);
}

json CheckReport::to_json() const {
  json j;
  j["config_fingerprint"] = config_fingerprint;
  json list = json::array();
  for (const CheckEntry& e : entries) list.push_back(e.to_json());
  j["entries"] = list;
  json info = json::array();
  for (const CheckEntry& e : informational) info.push_back(e.to_json());
  j["informational"] = info;
  j["summary"] = json{{"total", entries.size()}, {"passed", passed}, {"failed", failed}, {"wall_ms", wall_ms}};
  return j;
}

CheckReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<IdentityCheck> checks = build_suite(config);
  CheckReport report;
  report.config_fingerprint = fnv1a_hex(config.to_json().dump());
  report.entries = run_all(checks, config.threads);
  report.informational = run_all(build_all(config, true), config.threads);
  for (const CheckEntry& e : report.entries) (e.pass ? report.passed : report.failed)++;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qeuler
