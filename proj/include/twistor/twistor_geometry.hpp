#ifndef TWISTOR_TWISTOR_GEOMETRY_HPP
#define TWISTOR_TWISTOR_GEOMETRY_HPP

#include "twistor/forms.hpp"
#include "twistor/spin_module.hpp"

namespace twistor {

/// Per-chart caches for the twistor complex structure.
///
/// proj_rows[s] is the canonical (0,1)-projection of the coordinate
/// 1-form of slot s: reduction modulo the (1,0)-ideal is substitution
/// of these rows.  connection is the one-form of the antiholomorphic
/// hyperplane frame; frames of twist m transport with m * connection.
struct CoframeData {
  std::vector<ChartForm> ideal;      // (1,0)-ideal generators
  std::vector<ChartForm> proj_rows;  // one per variable slot
  int rank10 = 0;
  ChartForm connection;
  std::vector<std::vector<VectorFieldExpr>> fbar;  // conj(F^a_b), 1-based [a][b]
};

const CoframeData& geometry(const Chart& c);

/// Vertical holomorphic field F^a_b = -sum z^{aiI} z^{bjI} d/dw_{ij}.
VectorFieldExpr f_field(const Chart& c, int a, int b);
/// Cached conjugate field.
const VectorFieldExpr& fbar_field(const Chart& c, int a, int b);

/// Flow oracle: derivative at t=0 of the chart coordinates along the
/// one-parameter group action on the canonical section (computed with
/// first-order dual numbers, independently of the minor-label formula).
/// Sign convention chosen so the result equals f_field.
VectorFieldExpr gl_action_oracle(const Chart& c, int a, int b);

/// Generators of the (1,0) cotangent ideal: every dw plus the
/// differentials of the coordinate-transform functions eta^J.
std::vector<ChartForm> one_zero_ideal(const Chart& c);

/// Canonical representative modulo the (1,0)-ideal; idempotent, linear.
ChartForm reduce_mod_10(const ChartForm& w);

/// d on twist-m forms: d of the coefficients plus m * connection wedge.
ChartForm twisted_d(const ChartForm& w);
/// Cartan formula with the twisted d.
ChartForm twisted_lie(const VectorFieldExpr& v, const ChartForm& w);

/// Top antiholomorphic vertical generator set of the chart.
GenMask vertical_top_mask(const Chart& c);
/// Frame section for a (possibly unreduced) length-k label: the sign
/// times conj(z^{label}) times the top vertical wedge, at twist n+1.
/// Zero if the reduced label length differs from k.
ChartForm frame_section(const Chart& c, const std::vector<int>& label);

enum class FrameEq { Eq1, Eq2 };

/// Closed form for the Lie derivative of a frame section along
/// conj(F^a_b); the two variants are algebraically different closed
/// forms for the same derivative.
ChartForm lie_on_section(const Chart& c, int a, int b, const std::vector<int>& I,
                         FrameEq variant);
/// Cartan-formula path (twisted_lie of the section).
ChartForm lie_on_section_direct(const Chart& c, int a, int b, const std::vector<int>& I);
/// Connection-plus-flow path: frame transport scalar plus the
/// divergence action on the top vertical wedge.
ChartForm lie_on_section_flow(const Chart& c, int a, int b, const std::vector<int>& I);

/// Translation element alpha(t) of the extended module, for a real
/// translation t = (x^1..x^{2n}).
CliffordWord translation_word(int n, const std::vector<mpq_class>& t);
/// word_act of alpha(t); psi must not involve index 0.
Spinor translation_oracle(const std::vector<mpq_class>& t, const Spinor& psi);
/// The coordinate-transform prediction for the index-0 components of
/// translation_oracle(t, psi).
Spinor translation_transform_prediction(const std::vector<mpq_class>& t, const Spinor& psi);

}  // namespace twistor

#endif
