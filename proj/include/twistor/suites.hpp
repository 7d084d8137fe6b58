#ifndef TWISTOR_SUITES_HPP
#define TWISTOR_SUITES_HPP

#include <random>
#include <string>
#include <vector>

#include "twistor/correspondence.hpp"

namespace twistor {

/// One verified identity instance.  ref is a stable machine-readable
/// name of the identity; instance carries the concrete parameters.
struct CheckRecord {
  std::string suite;
  std::string ref;
  std::string instance;
  bool pass = false;
  std::string detail;  // counterexample / explanation when failing
};

struct Report {
  std::vector<CheckRecord> checks;
  bool all_pass() const;
};

struct SuiteParams {
  int n = 2;
  int k = 1;
  int degree = 2;
  unsigned long seed = 1;
};

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all").  Deterministic given params.
/// Throws Error for an unknown suite id.
Report run_suite(const std::string& name, const SuiteParams& p);

/// One JSON record per line, order-normalized; byte-stable given params.
std::string report_json(const Report& r);

/// Seeded generator of small exact values and polynomial test data.
class SmallGen {
 public:
  explicit SmallGen(unsigned long seed) : rng_(seed) {}

  mpq_class rational();  // numerator in [-3,3], denominator in {1,2,3}
  GaussRat gauss();
  /// Dense-ish random polynomial in the table's base variables.
  Poly base_poly(const VarTable& vt, int degree);
  DolbeaultForm form(int n, int k, int degree);

 private:
  std::mt19937 rng_;
};

/// Basis of the kernel of (dbar, codiff) on polynomial forms of total
/// degree <= degree, computed by exact row reduction over the monomial
/// basis.  Every harmonic polynomial form of that degree is a
/// combination of the returned forms.
std::vector<DolbeaultForm> harmonic_spanning_set(int n, int k, int degree);

/// Monomial forms of degree <= degree that fail harmonicity, up to count.
std::vector<DolbeaultForm> nonharmonic_samples(int n, int k, int degree, int count);

}  // namespace twistor

#endif
