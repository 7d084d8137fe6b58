#ifndef TWISTOR_FORMS_HPP
#define TWISTOR_FORMS_HPP

#include <cstdint>
#include <map>

#include "twistor/chart.hpp"

namespace twistor {

/// Set of cotangent generators as a bitmask; bit v is the differential
/// of variable slot v.  The fixed slot order defines canonical signs.
using GenMask = std::uint32_t;

int mask_degree(GenMask m);
/// Sign of merging two disjoint ascending generator lists.
int merge_sign(GenMask a, GenMask b);

/// Differential form over one chart: canonical generator sets with
/// RatFunc coefficients, plus an integer twist (power of the
/// antiholomorphic hyperplane frame of the chart; 0 = untwisted).
class ChartForm {
 public:
  ChartForm() : chart_(nullptr), twist_(0) {}
  explicit ChartForm(const Chart& c, int twist = 0) : chart_(&c), twist_(twist) {}

  static ChartForm scalar(const Chart& c, RatFunc f, int twist = 0);
  /// The 1-form d(variable slot v).
  static ChartForm generator(const Chart& c, int var, int twist = 0);

  const Chart& chart() const;
  int twist() const { return twist_; }
  void set_twist(int t) { twist_ = t; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GenMask, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(GenMask m) const;

  void add_term(GenMask m, const RatFunc& f);

  ChartForm operator-() const;
  ChartForm& operator+=(const ChartForm& o);
  ChartForm& operator-=(const ChartForm& o);
  friend ChartForm operator+(ChartForm a, const ChartForm& b) { return a += b; }
  friend ChartForm operator-(ChartForm a, const ChartForm& b) { return a -= b; }
  ChartForm operator*(const RatFunc& f) const;
  ChartForm operator*(const GaussRat& c) const;
  friend bool operator==(const ChartForm& a, const ChartForm& b) {
    return a.twist_ == b.twist_ && a.terms_ == b.terms_;
  }

  /// Coefficientwise partial derivative (no new differentials).
  ChartForm coeff_partial(int var) const;
  ChartForm conj() const;  // twist must be 0

 private:
  const Chart* chart_;
  int twist_;
  std::map<GenMask, RatFunc> terms_;
};

/// First-order vertical/horizontal vector field: tangent generator ->
/// RatFunc coefficient.
class VectorFieldExpr {
 public:
  VectorFieldExpr() : chart_(nullptr) {}
  explicit VectorFieldExpr(const Chart& c) : chart_(&c) {}

  const Chart& chart() const;
  bool is_zero() const { return comps_.empty(); }
  const std::map<int, RatFunc>& comps() const { return comps_; }
  RatFunc comp(int var) const;
  void add(int var, const RatFunc& f);

  VectorFieldExpr operator-() const;
  VectorFieldExpr& operator+=(const VectorFieldExpr& o);
  VectorFieldExpr& operator-=(const VectorFieldExpr& o);
  friend bool operator==(const VectorFieldExpr& a, const VectorFieldExpr& b) {
    return a.comps_ == b.comps_;
  }

  /// Applies the field to a function: sum of comps * partials.
  RatFunc apply(const RatFunc& f) const;
  VectorFieldExpr conj() const;

 private:
  const Chart* chart_;
  std::map<int, RatFunc> comps_;
};

/// Graded-commutative product; twists add.
ChartForm wedge(const ChartForm& a, const ChartForm& b);
/// Interior product: antiderivation of degree -1.
ChartForm contract(const VectorFieldExpr& v, const ChartForm& w);
/// d = sum_x dx ^ d/dx; untwisted forms only.
ChartForm exterior_d(const ChartForm& w);
/// Cartan formula i(v)d + d i(v); untwisted forms only.
ChartForm lie_derivative(const VectorFieldExpr& v, const ChartForm& w);
/// Commutator of first-order operators.
VectorFieldExpr vf_bracket(const VectorFieldExpr& v, const VectorFieldExpr& u);

}  // namespace twistor

#endif
