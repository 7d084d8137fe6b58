#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "twistor/form_io.hpp"
#include "twistor/suites.hpp"

using namespace twistor;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Exit code of the installed CLI binary, or -1 when unavailable.
int run_cli(const std::string& args) {
  const char* bin = std::getenv("TWISTOR_CLI");
  if (!bin) return -1;
  int status = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool have_cli() { return std::getenv("TWISTOR_CLI") != nullptr; }

}  // namespace

TEST_CASE("document round-trip") {
  std::string doc =
      R"({"n": 2, "k": 1, "terms": [)"
      R"({"coeff": "1/2+1/3*i", "xi": [0,1], "xibar": [1,0], "index": [1]},)"
      R"({"coeff": "-2", "xi": [0,0], "xibar": [0,0], "index": [2]}]})";
  DolbeaultForm f = parse_form(doc);
  CHECK(f.n() == 2);
  CHECK(f.k() == 1);
  CHECK(f.comp({2}) ==
        Poly::constant(base_table(2).nvars(), GaussRat(-2)));
  // Canonical serialization is a fixed point.
  std::string canon = serialize_form(f);
  CHECK(parse_form(canon) == f);
  CHECK(serialize_form(parse_form(canon)) == canon);
  // The zero form survives too.
  CHECK(parse_form(serialize_form(DolbeaultForm(3, 2))) == DolbeaultForm(3, 2));
}

TEST_CASE("parse diagnostics are specific") {
  auto message = [](const std::string& text) {
    try {
      parse_form(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{").find("malformed document") != std::string::npos);
  CHECK(message(R"({"n": 2})").find("malformed document") != std::string::npos);
  CHECK(message(
            R"({"n": 2, "k": 1, "terms": [{"coeff": "1", "xi": [0,0], "xibar": [0,0], "index": [1,2]}]})")
            .find("index length mismatch") != std::string::npos);
  CHECK(message(
            R"({"n": 2, "k": 1, "terms": [{"coeff": "1", "xi": [0,0], "xibar": [0,0], "index": [3]}]})")
            .find("index entry out of range") != std::string::npos);
  CHECK(message(
            R"({"n": 2, "k": 1, "terms": [{"coeff": "??", "xi": [0,0], "xibar": [0,0], "index": [1]}]})")
            .find("malformed document") != std::string::npos);
}

TEST_CASE("chart form serialization names the generators") {
  Chart c = canonical_chart(2, 1);
  DolbeaultForm f(2, 1);
  f.add({1}, Poly::variable(base_table(2).nvars(), base_table(2).xi(2)));
  std::string out = serialize_chart_form(a_operator(f, c));
  CHECK(out.find("dxi1") != std::string::npos);
  CHECK(out.find("dwbar12") != std::string::npos);
  CHECK(out.find("-1/2") != std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteParams{}), Error);
  SuiteParams bad;
  bad.n = 5;
  CHECK_THROWS_AS(run_suite("clifford", bad), Error);
  SuiteParams p;
  p.n = 3;
  p.k = 1;
  Report r = run_suite("plucker", p);
  CHECK(!r.checks.empty());
  CHECK(r.all_pass());
  // Every registered suite produces records at the smallest rank.
  SuiteParams small;
  small.degree = 1;
  for (const auto& name : suite_names())
    CHECK(!run_suite(name, small).checks.empty());
}

TEST_CASE("report output is byte-stable and sorted") {
  SuiteParams p;
  p.seed = 42;
  std::string a = report_json(run_suite("series", p));
  std::string b = report_json(run_suite("series", p));
  CHECK(a == b);
  // Each line is one record; lines are ordered by suite and ref.
  std::istringstream ss(a);
  std::string line, prev;
  int lines = 0;
  while (std::getline(ss, line)) {
    ++lines;
    CHECK(line.find("\"suite\"") != std::string::npos);
    CHECK(line.find("\"pass\"") != std::string::npos);
  }
  CHECK(lines == static_cast<int>(run_suite("series", p).checks.size()));
}

TEST_CASE("cli verify") {
  if (!have_cli()) return;
  CHECK(run_cli("verify --suite series --n 2 --k 1") == 0);
  CHECK(run_cli("verify --suite no-such-suite --n 2 --k 1") == 2);
  CHECK(run_cli("verify --bogus-flag") == 2);
}

TEST_CASE("cli apply and check round-trip") {
  if (!have_cli()) return;
  std::string dir = "cli_harness_tmp";
  std::system(("mkdir -p " + dir).c_str());
  std::string in = dir + "/in.json", out = dir + "/out.json";
  spit(in,
       R"({"n": 2, "k": 1, "terms": [{"coeff": "1", "xi": [0,1], "xibar": [0,0], "index": [1]}]})");
  CHECK(run_cli("apply --input " + in + " --chart 1 --output " + out) == 0);
  std::string text = slurp(out);
  CHECK(text.find("dwbar12") != std::string::npos);
  // check agrees on a harmonic input and fails cleanly on bad documents.
  CHECK(run_cli("check --input " + in) == 0);
  spit(in, "{ not json");
  CHECK(run_cli("check --input " + in) == 2);
  CHECK(run_cli("apply --input " + in + " --chart 1 --output " + out) == 2);
  CHECK(run_cli("apply --input missing-file.json --chart 1 --output " + out) == 2);
}
