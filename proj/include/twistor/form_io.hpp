#ifndef TWISTOR_FORM_IO_HPP
#define TWISTOR_FORM_IO_HPP

#include <string>

#include "twistor/correspondence.hpp"

namespace twistor {

/// Document format (JSON, UTF-8):
///   {"n": 2, "k": 1, "terms": [
///      {"coeff": "1/2+1/3*i", "xi": [0,1], "xibar": [0,0], "index": [1]}]}
/// Exponent vectors have length n; |index| = k; coefficients are exact
/// Gaussian rational strings.
DolbeaultForm parse_form(const std::string& text);

/// Canonical serialization; parse(serialize(f)) == f and serialization
/// of a parsed canonical document is byte-identical.
std::string serialize_form(const DolbeaultForm& f);

/// Serialized chart form: named cotangent generators per term, exact
/// coefficient strings, terms in canonical generator order.
std::string serialize_chart_form(const ChartForm& w);

}  // namespace twistor

#endif
