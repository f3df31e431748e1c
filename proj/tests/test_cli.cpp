#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qeuler/cli.hpp"
#include "qeuler/errors.hpp"

using namespace qeuler;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::ordered_json j() const { return nlohmann::ordered_json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qeuler_cli_" + name);
}

}  // namespace

TEST_CASE("eval examples") {
  Result r = call({"eval", "--family", "order-r", "--n", "1", "--r", "1", "--q", "1/2", "--x", "1", "--mode", "exact"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["value"]["display"] == "4/5");
  CHECK(r.j()["value"]["numerator"] == "4");
  CHECK(r.j()["value"]["denominator"] == "5");

  r = call({"eval", "--family", "zeta", "--s", "0", "--r", "3", "--q", "1/3", "--x", "2"});
  REQUIRE(r.code == 0);
  CHECK(parse_number(r.j()["value"]["display"].get<std::string>()) == to_float(Number(1)));

  r = call({"eval", "--family", "chi", "--n", "0", "--q", "1/2", "--x", "0", "--character", "f=3;values=0,1,-1"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(parse_number(r.j()["value"]["display"].get<std::string>()).to_std().real() + 1.0) < 1e-14);
  CHECK(!r.j()["tail_bound"].is_null());
}

TEST_CASE("eval JSON layout") {
  const Result r = call({"eval", "--family", "hr", "--n", "1", "--h", "2", "--r", "2", "--q", "1/2", "--x", "0"});
  REQUIRE(r.code == 0);
  std::vector<std::string> keys;
  const auto doc = r.j();
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "family", "inputs", "mode", "method", "value", "tail_bound"});
  CHECK(r.j()["mode"] == "float:53");
  CHECK(r.j()["inputs"]["h"] == 2);
  CHECK(r.j()["value"].contains("re"));
  CHECK(r.j()["value"].contains("im"));
}

TEST_CASE("plain output") {
  const Result r = call({"eval", "--family", "basic", "--n", "1", "--q", "1/2", "--x", "0", "--mode", "exact",
                         "--format", "plain"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("value") != std::string::npos);
  CHECK(r.out.find("-2/5") != std::string::npos);
}

TEST_CASE("basic table in csv") {
  Result r = call({"table", "--family", "basic", "--n", "0..5", "--q", "1/2", "--x", "0", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<std::string>{"n", "q", "x", "value", "tail_bound"});
  CHECK(rows[1][0] == "0");
  CHECK(parse_number(rows[1][3]) == to_float(Number(1)));
  CHECK(std::abs(parse_number(rows[2][3]).to_std().real() + 0.4) < 1e-15);

  r = call({"table", "--family", "basic", "--n", "0..5", "--q", "1/2", "--x", "0", "--format", "csv", "--mode", "exact"});
  REQUIRE(r.code == 0);
  rows = csv_rows(r.out);
  CHECK(rows[1][3] == "1");
  CHECK(rows[2][3] == "-2/5");
}

TEST_CASE("table cells equal eval output") {
  const Result t = call({"table", "--family", "hr", "--n", "0..3", "--h", "2", "--r", "2", "--q", "1/2", "--x", "0"});
  REQUIRE(t.code == 0);
  const auto rows = t.j()["rows"];
  REQUIRE(rows.size() == 4);
  for (int n = 0; n <= 3; ++n) {
    const Result e = call({"eval", "--family", "hr", "--n", std::to_string(n), "--h", "2", "--r", "2", "--q", "1/2",
                           "--x", "0"});
    REQUIRE(e.code == 0);
    CHECK(rows[static_cast<std::size_t>(n)]["n"] == n);
    CHECK(rows[static_cast<std::size_t>(n)]["value"] == e.j()["value"]);
  }
  const Result multi = call({"table", "--family", "l", "--n", "0..2", "--q", "1/2,1/3", "--x", "1", "--character",
                             "f=3;values=0,1,-1", "--mode", "exact"});
  REQUIRE(multi.code == 0);
  CHECK(multi.j()["rows"].size() == 6);
  CHECK(multi.j()["rows"][0]["value"]["display"] == "-1");
}

TEST_CASE("exit codes") {
  CHECK(call({"verify", "--only", "recurrence", "--n-max", "10"}).code == 0);
  const Result guard = call({"verify", "--only", "thm7", "--h", "1", "--r", "2"});
  CHECK(guard.code == 2);
  CHECK(guard.err.find("divergence guard: requires h−r+1 ≥ 1") != std::string::npos);
  CHECK(call({"verify", "--tau", "0", "--only", "prop1", "--n-max", "0"}).code == 1);

  const Result bad_q = call({"eval", "--family", "basic", "--n", "1", "--q", "3/2", "--x", "0"});
  CHECK(bad_q.code == 2);
  CHECK(bad_q.err.find("--q") != std::string::npos);
  const Result bad_n = call({"eval", "--family", "basic", "--n", "-1", "--q", "1/2"});
  CHECK(bad_n.code == 2);
  CHECK(bad_n.err.find("--n") != std::string::npos);
  CHECK(call({"eval", "--family", "nope", "--n", "1", "--q", "1/2"}).code == 2);
  CHECK(call({"eval", "--n", "1", "--q", "1/2"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"eval", "--family", "chi", "--n", "1", "--q", "1/2", "--character", "f=4;values=0,1,0,1"}).code == 2);
  CHECK(call({"verify", "--only", "thm99"}).code == 2);

  CHECK(call({"eval", "--family", "hr", "--n", "1", "--h", "1", "--r", "2", "--q", "1/2", "--method", "series"}).code ==
        3);
  CHECK(call({"eval", "--family", "zeta-h", "--s", "2", "--h", "1", "--r", "2", "--q", "1/2"}).code == 3);
  CHECK(call({"eval", "--family", "order-r", "--n", "2", "--r", "2", "--q", "1/2", "--method", "series", "--M", "3"})
            .code == 3);
}

TEST_CASE("verify report on stdout") {
  const Result r = call({"verify", "--only", "recurrence", "--n-max", "2"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["entries"].size() == 6);
  CHECK(j["summary"]["passed"] == 6);
  CHECK(j["entries"][0]["id"] == "recurrence-000");
  const Result ex = call({"verify", "--only", "prop1,recurrence", "--mode", "exact", "--n-max", "1"});
  REQUIRE(ex.code == 0);
  const auto ex_doc = ex.j();
  for (const auto& e : ex_doc["entries"]) CHECK(e["params"]["mode"] == "exact");
}

TEST_CASE("config file with command-line override") {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"subcommand": "eval", "family": "order-r", "n": 1, "r": 1, "q": "1/2", "x": "1", "mode": "exact"})";
  }
  Result r = call({"--config", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.j()["value"]["display"] == "4/5");
  r = call({"eval", "--config", path.string(), "--n", "0"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["value"]["display"] == "1");
  CHECK(call({"--config", (path.string() + ".missing")}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("output path") {
  const auto path = temp_file("out.csv");
  const Result r = call({"table", "--family", "basic", "--n", "0..2", "--q", "1/2", "--x", "0", "--format", "csv",
                         "--mode", "exact", "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(csv_rows(body.str()).size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("rendered values parse back to the same number") {
  for (const char* q : {"1/3", "0.4+0.3i"}) {
    for (const char* mode : {"float:53", "float:113"}) {
      const Result r = call({"eval", "--family", "order-r", "--n", "3", "--r", "2", "--q", q, "--x", "3/2", "--mode", mode});
      REQUIRE(r.code == 0);
      const unsigned prec = std::string(mode) == "float:53" ? 53 : 113;
      const Number v = parse_number(r.j()["value"]["display"].get<std::string>(), prec);
      CHECK(v.is_float());
      CHECK(render(v) == r.j()["value"]["display"].get<std::string>());
      const Number re = to_float(parse_number(r.j()["value"]["re"].get<std::string>()), prec);
      const Number im = to_float(parse_number(r.j()["value"]["im"].get<std::string>()), prec);
      CHECK(re.to_std() == v.to_std().real());
      CHECK(im.to_std() == v.to_std().imag());
    }
  }
  const Result e = call({"eval", "--family", "barnes", "--n", "2", "--barnes", "a=1,2;b=0,1", "--q", "1/2", "--x", "1",
                         "--mode", "exact"});
  REQUIRE(e.code == 0);
  const auto v = e.j()["value"];
  CHECK(parse_number(v["display"].get<std::string>()) ==
        Number(mpq_class(mpz_class(v["numerator"].get<std::string>()), mpz_class(v["denominator"].get<std::string>()))));
}

TEST_CASE("flag value parsers") {
  CHECK(cli::parse_mode("exact").mode == Mode::Exact);
  CHECK(cli::parse_mode("float").precision == 53);
  CHECK(cli::parse_mode("float:200").precision == 200);
  CHECK_THROWS(cli::parse_mode("float:x"));
  CHECK_THROWS(cli::parse_mode("fuzzy"));
  CHECK(cli::parse_range("2..5") == std::pair<long, long>{2, 5});
  CHECK(cli::parse_range("4") == std::pair<long, long>{4, 4});
  CHECK_THROWS(cli::parse_range("5..2"));
  const DirichletCharacter chi = cli::parse_character("f=3;values=0,1,-1");
  CHECK(chi.conductor() == 3);
  CHECK(chi(2) == Number(-1));
  const BarnesParams p = cli::parse_barnes("a=1,2");
  CHECK(p.r() == 2);
  CHECK(p.b() == std::vector<long>{0, 0});
  CHECK(cli::parse_barnes("a=1,1/2;b=0,3").b() == std::vector<long>{0, 3});
  CHECK_THROWS(cli::parse_barnes("a=1,2;b=0"));
}

TEST_CASE("csv quoting") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("number_json shapes") {
  const auto e = cli::number_json(Number::rational(-6, 13));
  CHECK(e["display"] == "-6/13");
  CHECK(e["numerator"] == "-6");
  CHECK(e["denominator"] == "13");
  const auto f = cli::number_json(parse_number("0.25-2i"), 4);
  CHECK(f.contains("re"));
  CHECK(f.contains("im"));
  CHECK(parse_number(f["im"].get<std::string>()) == Number::rational(-2, 1));
}
