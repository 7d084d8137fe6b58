#include "twistor/form_io.hpp"

#include <bit>

#include "json.hpp"

namespace twistor {

namespace {
using nlohmann::json;
using nlohmann::ordered_json;

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("malformed document: ") + what + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw Error(std::string("malformed document: ") + what + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}
}  // namespace

DolbeaultForm parse_form(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") ||
      !doc.contains("terms") || !doc["n"].is_number_integer() ||
      !doc["k"].is_number_integer() || !doc["terms"].is_array())
    throw Error("malformed document: need integer n, k and a terms array");
  int n = doc["n"].get<int>();
  int k = doc["k"].get<int>();
  if (n < 1) throw Error("malformed document: n must be positive");
  if (k < 0 || k > n) throw Error("form degree out of range: k must be in 0..n");
  DolbeaultForm f(n, k);
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("xi") ||
        !t.contains("xibar") || !t.contains("index") || !t["coeff"].is_string())
      throw Error("malformed document: each term needs coeff, xi, xibar, index");
    std::vector<int> xi = int_list(t["xi"], "xi");
    std::vector<int> xibar = int_list(t["xibar"], "xibar");
    std::vector<int> index = int_list(t["index"], "index");
    if (static_cast<int>(xi.size()) != n || static_cast<int>(xibar.size()) != n)
      throw Error("malformed document: exponent vectors must have length n");
    for (int e : xi)
      if (e < 0) throw Error("malformed document: negative exponent");
    for (int e : xibar)
      if (e < 0) throw Error("malformed document: negative exponent");
    if (static_cast<int>(index.size()) != k)
      throw Error("index length mismatch: |index| must equal k");
    for (int v : index)
      if (v < 1 || v > n)
        throw Error("index entry out of range: entries must be in 1..n");
    GaussRat coeff;
    try {
      coeff = GaussRat::parse(t["coeff"].get<std::string>());
    } catch (const Error& e) {
      throw Error(std::string("malformed document: bad coefficient: ") + e.what());
    }
    Monomial m(2 * n, 0);
    for (int a = 0; a < n; ++a) {
      m[a] = xi[a];
      m[n + a] = xibar[a];
    }
    Poly p(2 * n);
    p.add_term(m, coeff);
    f.add(index, p);
  }
  return f;
}

std::string serialize_form(const DolbeaultForm& f) {
  ordered_json doc;
  doc["n"] = f.n();
  doc["k"] = f.k();
  doc["terms"] = ordered_json::array();
  for (const auto& [I, p] : f.comps()) {
    for (const auto& [m, co] : p.terms()) {
      ordered_json t;
      t["coeff"] = co.str();
      t["xi"] = std::vector<int>(m.begin(), m.begin() + f.n());
      t["xibar"] = std::vector<int>(m.begin() + f.n(), m.begin() + 2 * f.n());
      t["index"] = I;
      doc["terms"].push_back(std::move(t));
    }
  }
  return doc.dump();
}

std::string serialize_chart_form(const ChartForm& w) {
  ordered_json doc;
  if (w.is_zero()) {
    doc["twist"] = w.twist();
    doc["terms"] = ordered_json::array();
    return doc.dump();
  }
  const Chart& c = w.chart();
  doc["n"] = c.n();
  doc["k"] = c.k();
  doc["chart"] = c.base_index();
  doc["twist"] = w.twist();
  doc["terms"] = ordered_json::array();
  const auto& names = c.var_names();
  for (const auto& [m, co] : w.terms()) {
    ordered_json t;
    std::vector<std::string> gens;
    for (GenMask mm = m; mm; mm &= mm - 1)
      gens.push_back("d" + names[std::countr_zero(mm)]);
    t["generators"] = gens;
    t["coeff"] = co.str(names);
    doc["terms"].push_back(std::move(t));
  }
  return doc.dump();
}

}  // namespace twistor
