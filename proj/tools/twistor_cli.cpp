// Command-line surface: run verification suites, apply the inverse
// correspondence to a serialized form, and test harmonicity.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistor/form_io.hpp"
#include "twistor/suites.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw twistor::Error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw twistor::Error("bad chart index list: " + text);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for the twisted-form correspondence"};
  app.require_subcommand(1);

  std::string suite_name = "all";
  twistor::SuiteParams params;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite_name, "Suite id (or 'all')")->required();
  verify->add_option("--n", params.n, "Base dimension")->required();
  verify->add_option("--k", params.k, "Form degree")->required();
  verify->add_option("--degree", params.degree, "Polynomial degree bound");
  verify->add_option("--seed", params.seed, "Random seed");

  std::string input_path, output_path, chart_list;
  auto* apply = app.add_subcommand("apply", "Apply the correspondence to a form");
  apply->add_option("--input", input_path, "Form document (JSON)")->required();
  apply->add_option("--chart", chart_list, "Chart base index, comma separated")
      ->required();
  apply->add_option("--output", output_path, "Output file")->required();

  std::string check_path;
  auto* check = app.add_subcommand("check", "Harmonicity / closedness verdict");
  check->add_option("--input", check_path, "Form document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      twistor::Report rep;
      try {
        rep = twistor::run_suite(suite_name, params);
      } catch (const twistor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      std::cout << twistor::report_json(rep);
      return rep.all_pass() ? 0 : 1;
    }
    if (apply->parsed()) {
      twistor::DolbeaultForm f = [&] {
        try {
          return twistor::parse_form(read_file(input_path));
        } catch (const twistor::Error& e) {
          std::cerr << "error: " << e.what() << "\n";
          std::exit(2);
        }
      }();
      twistor::Chart c = [&]() -> twistor::Chart {
        try {
          return twistor::Chart(f.n(), f.k(), parse_index_list(chart_list));
        } catch (const twistor::Error& e) {
          std::cerr << "error: " << e.what() << "\n";
          std::exit(2);
        }
      }();
      twistor::ChartForm out = twistor::a_operator(f, c);
      std::ofstream os(output_path, std::ios::binary);
      if (!os) throw twistor::Error("cannot open output file: " + output_path);
      os << twistor::serialize_chart_form(out) << "\n";
      return 0;
    }
    if (check->parsed()) {
      twistor::DolbeaultForm f = [&] {
        try {
          return twistor::parse_form(read_file(check_path));
        } catch (const twistor::Error& e) {
          std::cerr << "error: " << e.what() << "\n";
          std::exit(2);
        }
      }();
      twistor::Verdict v = twistor::theorem_verdict(f);
      std::cout << "{\"harmonic\":" << (v.harmonic ? "true" : "false")
                << ",\"dbar_closed\":" << (v.dbar_closed ? "true" : "false")
                << "}\n";
      return v.harmonic == v.dbar_closed ? 0 : 1;
    }
  } catch (const twistor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
