#include "qeuler/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <mpfr.h>

#include "qeuler/errors.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler::cli {

namespace {

using json = nlohmann::ordered_json;

/// A bad value for a specific flag.
class FlagError : public std::runtime_error {
 public:
  FlagError(const std::string& flag, const std::string& message) : std::runtime_error(flag + ": " + message) {}
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long to_long(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw FlagError(flag, "expected an integer, got '" + text + "'");
}

double to_double(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw FlagError(flag, "expected a real number, got '" + text + "'");
}

Number to_number(const std::string& flag, const std::string& text, unsigned precision) {
  try {
    return parse_number(text, precision);
  } catch (const std::exception& e) {
    throw FlagError(flag, e.what());
  }
}

std::string mpfr_text(const Real& v) {
  char* buf = nullptr;
  const int digits = static_cast<int>(std::ceil(v.precision() * std::log10(2.0))) + 1;
  mpfr_asprintf(&buf, "%.*RNg", digits, v.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

ModeSpec parse_mode(std::string_view text) {
  const std::string t = trim(text);
  if (t == "exact") return {Mode::Exact, kDefaultPrecision};
  if (t == "float") return {Mode::Float, kDefaultPrecision};
  if (t.rfind("float:", 0) == 0) {
    const long p = to_long("--mode", t.substr(6));
    if (p < 2 || p > 100000) throw FlagError("--mode", "precision must lie in [2, 100000] bits");
    return {Mode::Float, static_cast<unsigned>(p)};
  }
  throw FlagError("--mode", "expected exact, float or float:N, got '" + t + "'");
}

DirichletCharacter parse_character(std::string_view text, unsigned precision) {
  std::optional<long> f;
  std::optional<std::vector<Number>> values;
  for (const std::string& part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw FlagError("--character", "expected key=value, got '" + part + "'");
    const std::string key = trim(part.substr(0, eq));
    const std::string val = trim(part.substr(eq + 1));
    if (key == "f") {
      f = to_long("--character", val);
    } else if (key == "values") {
      values.emplace();
      for (const std::string& v : split(val, ',')) values->push_back(to_number("--character", v, precision));
    } else {
      throw FlagError("--character", "unknown key '" + key + "'");
    }
  }
  if (!f || !values) throw FlagError("--character", "needs both f= and values=");
  try {
    return character_from_table(*f, std::move(*values));
  } catch (const Error& e) {
    throw FlagError("--character", e.what());
  }
}

BarnesParams parse_barnes(std::string_view text, unsigned precision) {
  std::optional<std::vector<Number>> a;
  std::optional<std::vector<long>> b;
  for (const std::string& part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw FlagError("--barnes", "expected key=value, got '" + part + "'");
    const std::string key = trim(part.substr(0, eq));
    const std::string val = trim(part.substr(eq + 1));
    if (key == "a") {
      a.emplace();
      for (const std::string& v : split(val, ',')) a->push_back(to_number("--barnes", v, precision));
    } else if (key == "b") {
      b.emplace();
      for (const std::string& v : split(val, ',')) b->push_back(to_long("--barnes", v));
    } else {
      throw FlagError("--barnes", "unknown key '" + key + "'");
    }
  }
  if (!a) throw FlagError("--barnes", "needs a=");
  if (!b) b = std::vector<long>(a->size(), 0);
  try {
    return BarnesParams(std::move(*a), std::move(*b));
  } catch (const Error& e) {
    throw FlagError("--barnes", e.what());
  }
}

std::pair<long, long> parse_range(std::string_view text) {
  const std::string t = trim(text);
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    const long n = to_long("--n", t);
    return {n, n};
  }
  const long lo = to_long("--n", trim(t.substr(0, dots)));
  const long hi = to_long("--n", trim(t.substr(dots + 2)));
  if (hi < lo) throw FlagError("--n", "empty range '" + t + "'");
  return {lo, hi};
}

json number_json(const Number& value, int digits) {
  json j;
  j["display"] = render(value, digits);
  if (value.is_exact()) {
    j["numerator"] = value.exact().get_num().get_str();
    j["denominator"] = value.exact().get_den().get_str();
  } else {
    j["re"] = mpfr_text(value.complex().re());
    j["im"] = mpfr_text(value.complex().im());
  }
  return j;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct Options {
  std::string family;
  std::string n;
  std::string r;
  std::string h;
  std::string q;
  std::string x = "1";
  std::string s;
  std::string character;
  std::string barnes;
  std::string mode = "float:53";
  std::string M = "400";
  std::string tau = "1e-10";
  std::string method;
  std::string format = "json";
  std::string output;
  std::string digits = "0";
  // verify
  std::string suite = "default";
  std::string only;
  bool exact_only = false;
  std::string n_max;
  std::string threads = "0";
};

enum class Kind { Poly, Zeta };

struct FamilyChoice {
  Kind kind;
  EulerFamily poly = EulerFamily::Basic;
  ZetaFamily zeta = ZetaFamily::OrderR;
};

FamilyChoice parse_family(const std::string& name) {
  for (EulerFamily f : {EulerFamily::Basic, EulerFamily::OrderR, EulerFamily::HR, EulerFamily::Chi,
                        EulerFamily::ChiOrderR, EulerFamily::ChiHR, EulerFamily::Barnes, EulerFamily::BarnesChi}) {
    if (family_name(f) == name) return {Kind::Poly, f};
  }
  for (ZetaFamily f : {ZetaFamily::OrderR, ZetaFamily::Chi, ZetaFamily::HR, ZetaFamily::ChiHR, ZetaFamily::Barnes,
                       ZetaFamily::BarnesChi}) {
    if (zeta_family_name(f) == name) return {Kind::Zeta, EulerFamily::Basic, f};
  }
  if (name.empty()) throw FlagError("--family", "required");
  throw FlagError("--family", "unknown family '" + name + "'");
}

bool family_uses_chi(const FamilyChoice& fc) {
  if (fc.kind == Kind::Poly) {
    return fc.poly == EulerFamily::Chi || fc.poly == EulerFamily::ChiOrderR || fc.poly == EulerFamily::ChiHR ||
           fc.poly == EulerFamily::BarnesChi;
  }
  return fc.zeta == ZetaFamily::Chi || fc.zeta == ZetaFamily::ChiHR || fc.zeta == ZetaFamily::BarnesChi;
}

bool family_uses_h(const FamilyChoice& fc) {
  return fc.kind == Kind::Poly ? (fc.poly == EulerFamily::HR || fc.poly == EulerFamily::ChiHR)
                               : (fc.zeta == ZetaFamily::HR || fc.zeta == ZetaFamily::ChiHR);
}

bool family_uses_barnes(const FamilyChoice& fc) {
  return fc.kind == Kind::Poly ? (fc.poly == EulerFamily::Barnes || fc.poly == EulerFamily::BarnesChi)
                               : (fc.zeta == ZetaFamily::Barnes || fc.zeta == ZetaFamily::BarnesChi);
}

bool family_has_order(const FamilyChoice& fc) {
  return !(fc.kind == Kind::Poly && (fc.poly == EulerFamily::Basic || fc.poly == EulerFamily::Chi));
}

/// Everything except the degree/argument that varies across table rows.
struct Request {
  FamilyChoice family;
  ModeSpec mode;
  long r = 1;
  long h = 0;
  std::optional<DirichletCharacter> chi;
  std::optional<BarnesParams> barnes;
  Number x;
  SeriesConfig cfg;
  std::optional<Method> method;
  ZetaMethod zeta_method = ZetaMethod::Auto;
  int digits = 0;
};

Request build_request(const Options& o) {
  Request req;
  req.family = parse_family(o.family);
  req.mode = parse_mode(o.mode);
  const unsigned prec = req.mode.precision;
  const FamilyChoice& fc = req.family;

  if (family_uses_chi(fc)) {
    if (o.character.empty()) throw FlagError("--character", "required for family " + o.family);
    req.chi = parse_character(o.character, prec);
  } else if (!o.character.empty()) {
    throw FlagError("--character", "family " + o.family + " takes no character");
  }
  if (family_uses_barnes(fc)) {
    if (o.barnes.empty()) throw FlagError("--barnes", "required for family " + o.family);
    req.barnes = parse_barnes(o.barnes, prec);
  } else if (!o.barnes.empty()) {
    throw FlagError("--barnes", "family " + o.family + " takes no Barnes parameters");
  }
  if (!o.r.empty()) {
    req.r = to_long("--r", o.r);
    if (req.r < 1) throw FlagError("--r", "order r must be at least 1");
    if (!family_has_order(fc) && req.r != 1) throw FlagError("--r", "family " + o.family + " has order 1");
    if (req.barnes && req.barnes->r() != req.r) throw FlagError("--r", "must equal the Barnes parameter count");
  } else if (req.barnes) {
    req.r = req.barnes->r();
  }
  if (family_uses_h(fc)) {
    if (o.h.empty()) throw FlagError("--h", "required for family " + o.family);
    req.h = to_long("--h", o.h);
  } else if (!o.h.empty()) {
    throw FlagError("--h", "family " + o.family + " takes no h");
  }

  req.x = to_number("--x", o.x, prec);
  if (req.mode.mode == Mode::Exact && !req.x.is_exact()) throw FlagError("--x", "exact mode needs a rational x");

  const long M = to_long("--M", o.M);
  if (M < 1) throw FlagError("--M", "must be at least 1");
  req.cfg.max_terms = static_cast<std::size_t>(M);
  req.cfg.tolerance = to_double("--tau", o.tau);
  if (!(req.cfg.tolerance > 0.0)) throw FlagError("--tau", "must be positive");
  req.digits = static_cast<int>(to_long("--digits", o.digits));
  if (req.digits < 0) throw FlagError("--digits", "must be nonnegative");

  if (!o.method.empty()) {
    if (fc.kind == Kind::Poly) {
      if (o.method == "closed") req.method = Method::Closed;
      else if (o.method == "series") req.method = Method::Series;
      else if (o.method == "distribution") req.method = Method::Distribution;
      else throw FlagError("--method", "expected closed, series or distribution for polynomial families");
    } else {
      if (o.method == "auto") req.zeta_method = ZetaMethod::Auto;
      else if (o.method == "series") req.zeta_method = ZetaMethod::Series;
      else if (o.method == "factored") req.zeta_method = ZetaMethod::Factored;
      else throw FlagError("--method", "expected auto, series or factored for zeta families");
    }
  }
  return req;
}

QParam build_q(const std::string& text, const ModeSpec& mode) {
  if (text.empty()) throw FlagError("--q", "required");
  const Number v = to_number("--q", text, mode.precision);
  try {
    if (mode.mode == Mode::Exact) {
      if (!v.is_exact()) throw FlagError("--q", "exact mode needs a rational q");
      return QParam::exact(v);
    }
    return QParam::floating(v, mode.precision);
  } catch (const Error& e) {
    throw FlagError("--q", e.what());
  }
}

struct Cell {
  Evaluation eval;
  bool series = false;
  std::string method;
};

/// One evaluation; poly families use degree n, zeta families use s.
Cell evaluate_cell(const Request& req, const QParam& q, long n, const Number& s) {
  Cell cell;
  if (req.family.kind == Kind::Poly) {
    EulerFamilySpec spec;
    spec.family = req.family.poly;
    spec.n = n;
    spec.r = req.r;
    spec.h = req.h;
    spec.chi = req.chi;
    spec.barnes = req.barnes;
    const Method m = req.method.value_or(default_method(spec.family));
    cell.eval = evaluate(spec, q, req.x, m, req.cfg);
    cell.series = m == Method::Series;
    cell.method = method_name(m);
    return cell;
  }
  ZetaQuery query;
  query.family = req.family.zeta;
  query.s = s;
  query.x = req.x;
  query.r = req.r;
  query.h = req.h;
  query.chi = req.chi;
  query.barnes = req.barnes;
  cell.eval = evaluate(query, q, req.cfg, req.zeta_method);
  const bool closed = req.zeta_method == ZetaMethod::Auto && interpolation_degree(s).has_value();
  cell.series = !closed;
  cell.method = closed ? "closed" : (req.zeta_method == ZetaMethod::Factored ? "factored" : "series");
  return cell;
}

std::string mode_text(const ModeSpec& m) {
  return m.mode == Mode::Exact ? "exact" : "float:" + std::to_string(m.precision);
}

json tail_json(const Cell& c) { return c.series ? json(c.eval.tail_bound) : json(nullptr); }

std::string tail_text(const Cell& c) {
  if (!c.series) return "";
  std::ostringstream os;
  os << std::setprecision(6) << c.eval.tail_bound;
  return os.str();
}

/// Writes to --output when given, else to out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw FlagError("--output", "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : out_; }

 private:
  std::ofstream file_;
  std::ostream& out_;
};

void check_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "plain") {
    throw FlagError("--format", "expected json, csv or plain, got '" + format + "'");
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  check_format(o.format);
  const Request req = build_request(o);
  const QParam q = build_q(o.q, req.mode);
  long n = 0;
  Number s;
  if (req.family.kind == Kind::Poly) {
    if (o.n.empty()) throw FlagError("--n", "required for family " + o.family);
    n = to_long("--n", o.n);
    if (n < 0) throw FlagError("--n", "degree must be nonnegative");
    if (!o.s.empty()) throw FlagError("--s", "only zeta families take s");
  } else {
    if (o.s.empty()) throw FlagError("--s", "required for family " + o.family);
    if (!o.n.empty()) throw FlagError("--n", "zeta families take --s instead");
    s = to_number("--s", o.s, req.mode.precision);
    if (req.mode.mode == Mode::Exact && !s.is_exact()) throw FlagError("--s", "exact mode needs a rational s");
  }
  const Cell cell = evaluate_cell(req, q, n, s);

  json inputs;
  if (req.family.kind == Kind::Poly) inputs["n"] = n;
  else inputs["s"] = o.s;
  if (family_has_order(req.family)) inputs["r"] = req.r;
  if (family_uses_h(req.family)) inputs["h"] = req.h;
  inputs["q"] = o.q;
  inputs["x"] = o.x;
  if (req.chi) inputs["character"] = o.character;
  if (req.barnes) inputs["barnes"] = o.barnes;
  inputs["M"] = req.cfg.max_terms;
  inputs["tau"] = req.cfg.tolerance;

  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    json j;
    j["command"] = "eval";
    j["family"] = o.family;
    j["inputs"] = inputs;
    j["mode"] = mode_text(req.mode);
    j["method"] = cell.method;
    j["value"] = number_json(cell.eval.value, req.digits);
    j["tail_bound"] = tail_json(cell);
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::vector<std::string> keys = {"family"}, vals = {o.family};
    for (const auto& [k, v] : inputs.items()) {
      keys.push_back(k);
      vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    for (auto [k, v] : {std::pair<std::string, std::string>{"mode", mode_text(req.mode)},
                        {"method", cell.method},
                        {"value", render(cell.eval.value, req.digits)},
                        {"tail_bound", tail_text(cell)}}) {
      keys.push_back(k);
      vals.push_back(v);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_field(keys[i]);
    os << "\n";
    for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << csv_field(vals[i]);
    os << "\n";
  } else {
    os << "family     " << o.family << "\n";
    for (const auto& [k, v] : inputs.items()) {
      os << std::left << std::setw(11) << k << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    os << "mode       " << mode_text(req.mode) << "\n";
    os << "method     " << cell.method << "\n";
    os << "value      " << render(cell.eval.value, req.digits) << "\n";
    if (cell.series) os << "tail_bound " << tail_text(cell) << "\n";
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_format(o.format);
  const Request req = build_request(o);
  if (o.n.empty()) throw FlagError("--n", "required (a range such as 0..5)");
  if (!o.s.empty()) throw FlagError("--s", "tables run over --n; zeta families use s = -n");
  const auto [lo, hi] = parse_range(o.n);
  if (lo < 0) throw FlagError("--n", "degrees must be nonnegative");
  std::vector<std::string> q_texts = split(o.q, ',');
  if (o.q.empty()) throw FlagError("--q", "required");

  struct Row {
    long n;
    std::string q;
    Cell cell;
  };
  std::vector<Row> rows;
  for (const std::string& qt : q_texts) {
    const QParam q = build_q(qt, req.mode);
    for (long n = lo; n <= hi; ++n) rows.push_back({n, qt, evaluate_cell(req, q, n, Number(-n))});
  }

  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    json j;
    j["command"] = "table";
    j["family"] = o.family;
    j["mode"] = mode_text(req.mode);
    json list = json::array();
    for (const Row& row : rows) {
      json r;
      r["n"] = row.n;
      r["q"] = row.q;
      r["x"] = o.x;
      r["value"] = number_json(row.cell.eval.value, req.digits);
      r["tail_bound"] = tail_json(row.cell);
      list.push_back(r);
    }
    j["rows"] = list;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "n,q,x,value,tail_bound\n";
    for (const Row& row : rows) {
      os << row.n << "," << csv_field(row.q) << "," << csv_field(o.x) << ","
         << csv_field(render(row.cell.eval.value, req.digits)) << "," << tail_text(row.cell) << "\n";
    }
  } else {
    os << std::left << std::setw(6) << "n" << std::setw(14) << "q" << std::setw(10) << "x" << "value\n";
    for (const Row& row : rows) {
      os << std::left << std::setw(6) << row.n << std::setw(14) << row.q << std::setw(10) << o.x
         << render(row.cell.eval.value, req.digits);
      if (row.cell.series) os << "  (tail " << tail_text(row.cell) << ")";
      os << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out) {
  check_format(o.format);
  if (o.suite != "default") throw FlagError("--suite", "only the 'default' suite exists");
  SuiteConfig config;
  if (!o.only.empty()) {
    for (const std::string& name : split(o.only, ',')) {
      const auto tag = parse_tag(name);
      if (!tag) throw FlagError("--only", "unknown identity tag '" + name + "'");
      config.only.insert(*tag);
    }
  }
  config.exact_only = o.exact_only;
  if (!o.n_max.empty()) config.n_max = to_long("--n-max", o.n_max);
  if (!o.h.empty()) config.h = to_long("--h", o.h);
  if (!o.r.empty()) config.r = to_long("--r", o.r);
  if (sub.count("--tau") > 0) config.tolerance = to_double("--tau", o.tau);
  if (sub.count("--M") > 0) {
    const long M = to_long("--M", o.M);
    if (M < 1) throw FlagError("--M", "must be at least 1");
    config.max_terms = static_cast<std::size_t>(M);
  }
  if (sub.count("--mode") > 0) {
    const ModeSpec m = parse_mode(o.mode);
    if (m.mode == Mode::Exact) config.exact_only = true;
    else config.precision = m.precision;
  }
  const long threads = to_long("--threads", o.threads);
  if (threads < 0) throw FlagError("--threads", "must be nonnegative");
  config.threads = static_cast<unsigned>(threads);
  validate_suite_config(config);

  const CheckReport report = run_suite(config);
  Sink sink(o.output, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    os << report.to_json().dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "id,pass,abs_diff,bound,lhs,rhs,params,note\n";
    for (const CheckEntry& e : report.entries) {
      std::ostringstream diff;
      if (std::isfinite(e.abs_diff)) diff << std::setprecision(6) << e.abs_diff;
      std::ostringstream bound;
      bound << std::setprecision(6) << e.bound;
      os << csv_field(e.id) << "," << (e.pass ? "true" : "false") << "," << diff.str() << "," << bound.str() << ","
         << csv_field(e.lhs) << "," << csv_field(e.rhs) << "," << csv_field(e.params.dump()) << ","
         << csv_field(e.note) << "\n";
    }
  } else {
    for (const CheckEntry& e : report.entries) {
      os << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << e.id << " diff=" << std::setprecision(3)
         << e.abs_diff << " bound=" << e.bound << " " << e.params.dump();
      if (!e.note.empty()) os << " [" << e.note << "]";
      os << "\n";
    }
    for (const CheckEntry& e : report.informational) {
      os << "INFO " << (e.pass ? "agrees   " : "disagrees ") << e.id << " " << e.params.dump() << "\n";
    }
    os << "total " << report.entries.size() << ", passed " << report.passed << ", failed " << report.failed
       << ", " << std::fixed << std::setprecision(0) << report.wall_ms << " ms\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

/// Splices a JSON config file in front of the command-line flags so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw FlagError("--config", "expects a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  std::ifstream in(*path);
  if (!in) throw FlagError("--config", "cannot read '" + *path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const std::exception& e) {
    throw FlagError("--config", std::string("invalid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw FlagError("--config", "top level must be an object");

  std::string subcommand;
  std::vector<std::string> flags;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "subcommand") {
      if (!value.is_string()) throw FlagError("--config", "subcommand must be a string");
      subcommand = value.get<std::string>();
      continue;
    }
    std::string flag = "--" + key;
    std::replace(flag.begin() + 2, flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) flags.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
      flags.push_back(flag + "=" + joined);
    } else if (value.is_string()) {
      flags.push_back(flag + "=" + value.get<std::string>());
    } else if (value.is_number()) {
      flags.push_back(flag + "=" + value.dump());
    } else {
      throw FlagError("--config", "unsupported value for key '" + key + "'");
    }
  }
  std::vector<std::string> out;
  if (!rest.empty() && (rest.front() == "eval" || rest.front() == "table" || rest.front() == "verify")) {
    out.push_back(rest.front());
    rest.erase(rest.begin());
  } else if (!subcommand.empty()) {
    out.push_back(subcommand);
  } else {
    throw FlagError("--config", "no subcommand given on the command line or in the file");
  }
  out.insert(out.end(), flags.begin(), flags.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

void add_common(CLI::App& app, Options& o) {
  app.add_option("--family", o.family, "family: basic, order-r, hr, chi, chi-order-r, chi-hr, barnes, barnes-chi, "
                                       "zeta, zeta-h, l, l-h, barnes-zeta, barnes-l");
  app.add_option("--r", o.r, "order r");
  app.add_option("--h", o.h, "h parameter of the (h,r) families");
  app.add_option("--q", o.q, "q literal, e.g. 1/2 or 0.4+0.3i");
  app.add_option("--x", o.x, "x literal")->capture_default_str();
  app.add_option("--character", o.character, "Dirichlet character, e.g. \"f=3;values=0,1,-1\"");
  app.add_option("--barnes", o.barnes, "Barnes parameters, e.g. \"a=1,2;b=0,1\"");
  app.add_option("--mode", o.mode, "exact | float | float:N")->capture_default_str();
  app.add_option("--M", o.M, "series terms per index")->capture_default_str();
  app.add_option("--tau", o.tau, "tail bound tolerance")->capture_default_str();
  app.add_option("--method", o.method, "closed | series | distribution (polynomials); auto | series | factored (zeta)");
  app.add_option("--format", o.format, "json | csv | plain")->capture_default_str();
  app.add_option("--output", o.output, "write to this file instead of stdout");
  app.add_option("--digits", o.digits, "significant digits for float display (0 = full precision)");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q-Euler polynomials, multiple q-zeta and q-l functions"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", "qeuler 1.0.0");

  CLI::App* eval = app.add_subcommand("eval", "evaluate one family member at a point");
  add_common(*eval, o);
  eval->add_option("--n", o.n, "degree n");
  eval->add_option("--s", o.s, "s literal (zeta families)");

  CLI::App* table = app.add_subcommand("table", "tabulate a family over a range of degrees");
  add_common(*table, o);
  table->add_option("--n", o.n, "degree range a..b");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--suite", o.suite, "suite name")->capture_default_str();
  verify->add_option("--only", o.only, "comma-separated identity tags");
  verify->add_flag("--exact-only", o.exact_only, "run only exact-equality checks");
  verify->add_option("--n-max", o.n_max, "cap on the degree in every grid");
  verify->add_option("--h", o.h, "fix h in the (h,r) grids");
  verify->add_option("--r", o.r, "fix r in every grid that varies it");
  verify->add_option("--tau", o.tau, "override every float tolerance");
  verify->add_option("--M", o.M, "override series terms");
  verify->add_option("--mode", o.mode, "exact (exact-only) or float:N (working precision)");
  verify->add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)");
  verify->add_option("--format", o.format, "json | csv | plain")->capture_default_str();
  verify->add_option("--output", o.output, "write the report to this file");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (table->parsed()) return cmd_table(o, out);
    return cmd_verify(o, *verify, out);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return verify->parsed() ? kUsage : kDivergence;
  } catch (const TailBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kDivergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qeuler::cli
