#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twistor/twistor_geometry.hpp"

using namespace twistor;

namespace {

ChartForm rand_form(const Chart& c, int degree, std::mt19937& rng) {
  ChartForm w(c);
  std::uniform_int_distribution<int> pick(0, c.nvars() - 1), coef(-2, 2);
  for (int t = 0; t < 3; ++t) {
    GenMask m = 0;
    while (mask_degree(m) < degree) m |= 1u << pick(rng);
    Poly p = Poly::constant(c.nvars(), GaussRat(coef(rng)));
    p += Poly::variable(c.nvars(), pick(rng)) * GaussRat(coef(rng));
    if (p.is_zero()) p = Poly::constant(c.nvars(), GaussRat(1));
    w.add_term(m, RatFunc(std::move(p)));
  }
  return w;
}

}  // namespace

TEST_CASE("reduction modulo the (1,0)-ideal") {
  std::mt19937 rng(5);
  for (auto [n, k] : {std::pair{2, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    // Every ideal generator reduces to zero, and reduction is idempotent
    // and linear.
    for (const auto& g : one_zero_ideal(c)) CHECK(reduce_mod_10(g).is_zero());
    for (int d = 1; d <= 2; ++d) {
      ChartForm w = rand_form(c, d, rng), u = rand_form(c, d, rng);
      CHECK(reduce_mod_10(reduce_mod_10(w)) == reduce_mod_10(w));
      CHECK(reduce_mod_10(w + u) == reduce_mod_10(w) + reduce_mod_10(u));
    }
    // Reducing a bare coordinate differential substitutes its cached
    // (0,1)-projection row.
    for (int v = 0; v < c.nvars(); ++v)
      CHECK(reduce_mod_10(ChartForm::generator(c, v)) == geometry(c).proj_rows[v]);
  }
}

TEST_CASE("twisted differential") {
  std::mt19937 rng(6);
  Chart c(2, 1, {1});
  // Twist 0 is the plain exterior derivative.
  ChartForm w = rand_form(c, 1, rng);
  CHECK(twisted_d(w) == exterior_d(w));
  // Curvature: d applied twice on a twisted form lands in the ideal.
  ChartForm tw = w;
  tw.set_twist(3);
  CHECK(reduce_mod_10(twisted_d(twisted_d(tw))).is_zero());
  // The connection itself has an exact part only.
  CHECK(reduce_mod_10(twisted_d(twisted_d(ChartForm::scalar(
            c, RatFunc::constant(c.nvars(), GaussRat(1)), 1))))
            .is_zero());
}

TEST_CASE("vertical fields match the flow oracle") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        CHECK(f_field(c, a, b) == gl_action_oracle(c, a, b));
        CHECK(fbar_field(c, a, b) == f_field(c, a, b).conj());
      }
  }
}

TEST_CASE("field bracket anti-homomorphism") {
  Chart c(3, 1, {2});
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
          VectorFieldExpr lhs = vf_bracket(f_field(c, a, b), f_field(c, p, q));
          VectorFieldExpr rhs(c);
          // [F^a_b, F^p_q] = delta^a_q F^p_b - delta^p_b F^a_q.
          if (a == q) rhs += f_field(c, p, b);
          if (p == b) rhs -= f_field(c, a, q);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("frame sections") {
  Chart c(3, 2, {1, 2});
  // Label sign rule: reduce first, then scale.
  CHECK(frame_section(c, {2, 1}) == -frame_section(c, {1, 2}));
  CHECK(frame_section(c, {1, 1}).is_zero());
  ChartForm s = frame_section(c, {1, 3});
  CHECK(s.twist() == c.n() + 1);
  CHECK(mask_degree(s.terms().begin()->first) ==
        mask_degree(vertical_top_mask(c)));
  // The base chart's own section has unit coefficient.
  ChartForm sI = frame_section(c, {1, 2});
  CHECK(sI.coeff(vertical_top_mask(c)) ==
        RatFunc::constant(c.nvars(), GaussRat(1)));
}

TEST_CASE("lie derivative of frame sections, three routes") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (const auto& I : subsequences(n, k)) {
          ChartForm direct = lie_on_section_direct(c, a, b, I.index);
          CHECK(lie_on_section(c, a, b, I.index, FrameEq::Eq1) == direct);
          CHECK(lie_on_section(c, a, b, I.index, FrameEq::Eq2) == direct);
          CHECK(lie_on_section_flow(c, a, b, I.index) == direct);
        }
  }
}

TEST_CASE("lie derivative on a known section") {
  Chart c(2, 1, {1});
  // Along conj(F^1_1) the section over I = (1) rescales by -2 + 3/N.
  Poly N = c.norm_poly();
  RatFunc scale = RatFunc(Poly::constant(c.nvars(), GaussRat(-2)) * N +
                              Poly::constant(c.nvars(), GaussRat(3)),
                          N);
  CHECK(lie_on_section_direct(c, 1, 1, {1}) == frame_section(c, {1}) * scale);
}

TEST_CASE("translation words") {
  // n = 1: the unit step along the first real direction.
  Spinor th = Spinor::basis(1, {}, true);
  Spinor expect = th + Spinor::basis(1, {0, 1}, true) * (-GaussRat::i());
  CHECK(translation_oracle({mpq_class(1), mpq_class(0)}, th) == expect);
  Spinor expect2 = th + Spinor::basis(1, {0, 1}, true);
  CHECK(translation_oracle({mpq_class(0), mpq_class(1)}, th) == expect2);
  // Zero translation is the identity.
  Spinor psi = Spinor::basis(2, {1}, true) + Spinor::basis(2, {2}, true) * GaussRat(3);
  CHECK(translation_oracle({mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(0)},
                           psi) == psi);
  // Index 0 in the input is rejected.
  CHECK_THROWS_AS(
      translation_oracle({mpq_class(1), mpq_class(0)}, Spinor::basis(1, {0}, true)),
      Error);
}

TEST_CASE("translation transform prediction matches the oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2), den(1, 2);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<mpq_class> t;
      for (int s = 0; s < 2 * n; ++s) {
        mpq_class q(coef(rng), den(rng));
        q.canonicalize();
        t.push_back(q);
      }
      Spinor psi(n, true);
      for (const auto& I : subsequences(n, std::min(n, 1 + trial % 2)))
        psi += Spinor::basis(n, I.index, true) * GaussRat(coef(rng));
      if (psi.is_zero()) psi = Spinor::basis(n, {}, true);
      CHECK(translation_oracle(t, psi) == translation_transform_prediction(t, psi));
    }
  }
}
