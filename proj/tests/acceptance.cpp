// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qeuler/verify.hpp"
#include "schema_check.hpp"

using namespace qeuler;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      detail = why;
    }
  }
};

struct Timed {
  CheckReport report;
  double seconds;
};

Timed run(const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r = run_suite(cfg);
  return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

std::string tag_of(const CheckEntry& e) { return e.id.substr(0, e.id.rfind('-')); }

/// Every entry passes; returns the first failing id otherwise.
void all_pass(Outcome& o, const CheckReport& r) {
  o.require(!r.entries.empty(), "no entries");
  for (const CheckEntry& e : r.entries) {
    o.require(e.pass, e.id + " failed: |" + e.lhs + " - " + e.rhs + "| > " + std::to_string(e.bound) +
                          (e.note.empty() ? "" : " (" + e.note + ")"));
  }
}

std::set<std::string> keys(const CheckReport& r, const std::string& tag, const std::vector<std::string>& fields) {
  std::set<std::string> out;
  for (const CheckEntry& e : r.entries) {
    if (tag_of(e) != tag) continue;
    std::string k;
    for (const std::string& f : fields) k += (e.params.contains(f) ? e.params[f].dump() : "-") + "|";
    out.insert(k);
  }
  return out;
}

void budget(Outcome& o, double seconds, double limit) {
  o.require(seconds < limit, "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(limit) + " s");
}

Outcome criterion1() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::Prop1};
  cfg.tolerance = 1e-10;
  cfg.max_terms = 400;
  const Timed t = run(cfg);
  all_pass(o, t.report);
  o.require(keys(t.report, "prop1", {"n", "r", "q", "x"}).size() == 9 * 4 * 3 * 2, "grid is not 9 x 4 x 3 x 2");
  budget(o, t.seconds, 5);
  return o;
}

Outcome criterion2() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::Recurrence};
  const Timed t = run(cfg);
  all_pass(o, t.report);
  o.require(keys(t.report, "recurrence", {"n", "q"}).size() == 30, "grid is not n 1..10 x 3 q");
  for (const CheckEntry& e : t.report.entries) {
    o.require(e.params["mode"] == "exact" && e.abs_diff == 0.0 && e.lhs == e.rhs, e.id + " not an exact equality");
  }
  budget(o, t.seconds, 1);
  return o;
}

Outcome criterion3() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::Thm3, IdentityTag::Thm5, IdentityTag::Thm7, IdentityTag::Thm10, IdentityTag::Thm11,
              IdentityTag::FinalDisplay};
  cfg.tolerance = 1e-9;
  const Timed t = run(cfg);
  all_pass(o, t.report);
  o.require(keys(t.report, "thm3", {"n", "r"}).size() == 7 * 3, "thm3 grid");
  o.require(keys(t.report, "thm5", {"n", "r", "character"}).size() == 5 * 2, "thm5 grid");
  o.require(keys(t.report, "thm7", {"n", "r", "h"}).size() == 5 * 3 * 3, "thm7 grid");
  o.require(keys(t.report, "thm10", {"n", "r", "h"}).size() == 4 * 2, "thm10 grid");
  for (const std::string tag : {"thm11", "final-display"}) {
    const auto k = keys(t.report, tag, {"n", "r", "barnes"});
    o.require(k.count("3|2|{\"a\":[\"1\",\"2\"],\"b\":[0,0]}|") && k.count("3|2|{\"a\":[\"1\",\"2\"],\"b\":[0,1]}|") &&
                  k.count("0|2|{\"a\":[\"1\",\"2\"],\"b\":[0,0]}|"),
              tag + " grid misses a=(1,2)");
    o.require(keys(t.report, tag, {"n", "r"}).size() == 4 * 2, tag + " grid");
  }
  for (const CheckEntry& e : t.report.entries) {
    o.require(e.params.contains("s") && e.params["s"].get<long>() == -e.params["n"].get<long>(), e.id + " not at s=-n");
  }
  budget(o, t.seconds, 30);
  return o;
}

Outcome criterion4() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::Thm8};
  cfg.tolerance = 1e-9;
  const Timed t = run(cfg);
  all_pass(o, t.report);
  std::set<std::string> exact, fl;
  for (const CheckEntry& e : t.report.entries) {
    const long r = e.params["r"], h = e.params["h"];
    o.require(h == r + 1, e.id + " has h != r+1");
    o.require(e.params["character"] == "f=3;values=0,1,-1", e.id + " character");
    const std::string k = e.params["n"].dump() + "|" + e.params["r"].dump();
    if (e.params["mode"] == "exact") {
      o.require(e.params["q"] == "1/8" && e.params["u"] == "1/2" && e.lhs == e.rhs, e.id + " exact side");
      exact.insert(k);
    } else {
      o.require(e.params["q"] == "0.5", e.id + " float q");
      fl.insert(k);
    }
  }
  o.require(exact.size() == 5 * 2 && fl.size() == 5 * 2, "grid is not n 0..4 x r 1..2 in both modes");
  o.require(!t.report.informational.empty(), "informational residue expansion missing");
  budget(o, t.seconds, 10);
  return o;
}

Outcome criterion5() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::QLimit};
  const Timed t = run(cfg);
  all_pass(o, t.report);
  std::set<std::string> basic, order, barnes;
  for (const CheckEntry& e : t.report.entries) {
    if (e.params["lhs"] != "richardson") continue;
    const std::string fam = e.params["family"];
    const std::string k = e.params["n"].dump() + "|" + e.params["x"].dump() + "|" + e.params.value("r", json(1)).dump();
    if (fam == "basic") {
      o.require(e.bound <= 1e-7, e.id + " bound above 1e-7");
      basic.insert(k);
    } else {
      o.require(e.bound <= 1e-5, e.id + " bound above 1e-5");
      (fam == "barnes" ? barnes : order).insert(k);
      if (fam == "barnes") o.require(e.params["barnes"] == json::parse(R"({"a":["1","2"],"b":[0,0]})"), e.id);
    }
  }
  o.require(basic.size() == 6 * 2, "basic grid is not n 0..5 x x {0,1}");
  o.require(order.size() >= 2 * 2, "order-r grid");
  o.require(!barnes.empty(), "Barnes grid");
  budget(o, t.seconds, 10);
  return o;
}

Outcome criterion6() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::GaussBinomial, IdentityTag::NegBinomial};
  const Timed t = run(cfg);
  all_pass(o, t.report);
  long gauss_max = -1;
  std::set<long> neg_n;
  for (const CheckEntry& e : t.report.entries) {
    if (tag_of(e) == "gauss-binomial") {
      o.require(e.params["mode"] == "exact" && e.lhs == e.rhs, e.id + " not exact");
      gauss_max = std::max(gauss_max, e.params["n"].get<long>());
    } else {
      neg_n.insert(e.params["n"].get<long>());
    }
  }
  o.require(gauss_max == 12, "Gauss expansion does not reach n = 12");
  o.require(neg_n == std::set<long>{1, 2, 3, 4}, "negative-binomial grid is not n 1..4");
  budget(o, t.seconds, 2);
  return o;
}

Outcome criterion7() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::Normalization};
  const Timed t = run(cfg);
  all_pass(o, t.report);
  std::set<std::string> exact_families;
  for (const CheckEntry& e : t.report.entries) {
    if (e.params["mode"] == "exact") exact_families.insert(e.params["family"].get<std::string>());
  }
  for (const char* fam : {"basic", "order-r", "hr", "chi", "chi-order-r", "chi-hr", "barnes", "barnes-chi", "zeta",
                          "zeta-h", "l", "l-h", "barnes-zeta", "barnes-l"}) {
    o.require(exact_families.count(fam) == 1, std::string("no exact normalization entry for ") + fam);
  }
  budget(o, t.seconds, 1);
  return o;
}

Outcome criterion8() {
  Outcome o;
  SuiteConfig cfg;
  cfg.only = {IdentityTag::SpecializationLattice};
  cfg.tolerance = 1e-12;
  const Timed t = run(cfg);
  all_pass(o, t.report);
  o.require(keys(t.report, "lattice", {"n", "r", "s", "q", "x"}).size() == 20, "grid is not 20 points");
  o.require(keys(t.report, "lattice", {"arrow"}).size() >= 3, "too few arrows");
  budget(o, t.seconds, 5);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string report_path = std::string(QEULER_BUILD_DIR) + "/acceptance_report.json";
  const std::string cmd = std::string(QEULER_CLI) + " verify --suite default --output " + report_path;
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "exit status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
  budget(o, seconds, 60);
  std::ifstream in(report_path), schema_in(QEULER_SCHEMA);
  o.require(in.good() && schema_in.good(), "missing report or schema file");
  if (!o.pass) return o;
  const json report = json::parse(in);
  const std::vector<std::string> errors = schema::Validator(json::parse(schema_in)).validate(report);
  o.require(errors.empty(), errors.empty() ? "" : "schema: " + errors.front());
  o.require(report["entries"].size() >= 200, "fewer than 200 entries");
  o.require(report["summary"]["failed"] == 0, "report lists failures");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 closed form vs collapsed series", criterion1},
      {"2 recurrence exactness", criterion2},
      {"3 interpolation at s=-n", criterion3},
      {"4 distribution relation", criterion4},
      {"5 classical limits", criterion5},
      {"6 q-binomial formulae", criterion6},
      {"7 normalizations", criterion7},
      {"8 specialization lattice", criterion8},
      {"9 end-to-end verify", criterion9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name;
    if (!o.pass) std::cout << "  [" << o.detail << "]";
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
