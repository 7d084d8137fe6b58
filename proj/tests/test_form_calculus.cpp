#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>
#include <vector>

#include "twistor/forms.hpp"

using namespace twistor;

namespace {

// Sign oracle: count the transpositions needed to interleave the ascending
// generator list of b into that of a.
int merge_sign_oracle(GenMask a, GenMask b) {
  std::vector<int> va, vb;
  for (int v = 0; v < 32; ++v) {
    if (a & (1u << v)) va.push_back(v);
    if (b & (1u << v)) vb.push_back(v);
  }
  std::vector<int> cat = va;
  cat.insert(cat.end(), vb.begin(), vb.end());
  int sign = 1;
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i] > cat[j]) sign = -sign;
  return sign;
}

struct Fixture {
  Chart c{2, 1, {1}};
  std::mt19937 rng{71};

  RatFunc rand_func(int maxdeg = 1) {
    std::uniform_int_distribution<int> coef(-2, 2);
    Poly p(c.nvars());
    Monomial m(c.nvars(), 0);
    p.add_term(m, GaussRat(coef(rng)));
    for (int v = 0; v < c.nvars(); ++v) {
      Monomial mv(c.nvars(), 0);
      mv[v] = maxdeg;
      p.add_term(mv, GaussRat(coef(rng)));
    }
    if (p.is_zero()) p = Poly::constant(c.nvars(), GaussRat(1));
    return RatFunc(std::move(p));
  }

  ChartForm rand_form(int degree) {
    ChartForm w(c);
    std::uniform_int_distribution<int> pick(0, c.nvars() - 1);
    for (int t = 0; t < 3; ++t) {
      GenMask m = 0;
      while (mask_degree(m) < degree) m |= 1u << pick(rng);
      w.add_term(m, rand_func());
    }
    return w;
  }

  VectorFieldExpr rand_field() {
    VectorFieldExpr v(c);
    std::uniform_int_distribution<int> pick(0, c.nvars() - 1);
    for (int t = 0; t < 2; ++t) v.add(pick(rng), rand_func());
    return v;
  }
};

}  // namespace

TEST_CASE("merge sign matches the transposition-count oracle") {
  for (GenMask a = 0; a < 64; ++a)
    for (GenMask b = 0; b < 64; ++b) {
      if (a & b) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(merge_sign(a, b) == merge_sign_oracle(a, b));
    }
  CHECK(mask_degree(0) == 0);
  CHECK(mask_degree(0b1011) == 3);
}

TEST_CASE("wedge is graded commutative and associative") {
  Fixture fx;
  for (int da = 0; da <= 2; ++da) {
    for (int db = 0; db <= 2; ++db) {
      ChartForm a = fx.rand_form(da), b = fx.rand_form(db);
      ChartForm ab = wedge(a, b), ba = wedge(b, a);
      CHECK(ab == (da * db % 2 == 0 ? ba : -ba));
      ChartForm cform = fx.rand_form(1);
      CHECK(wedge(wedge(a, b), cform) == wedge(a, wedge(b, cform)));
    }
  }
  // Repeated generator annihilates.
  ChartForm dx = ChartForm::generator(fx.c, 0);
  CHECK(wedge(dx, dx).is_zero());
  // Twists add under wedge.
  ChartForm tw = ChartForm::scalar(fx.c, fx.rand_func(), 2);
  CHECK(wedge(tw, tw).twist() == 4);
}

TEST_CASE("exterior derivative squares to zero") {
  Fixture fx;
  for (int d = 0; d <= 2; ++d) {
    ChartForm w = fx.rand_form(d);
    CHECK(exterior_d(exterior_d(w)).is_zero());
  }
  // Leibniz rule.
  for (int trial = 0; trial < 4; ++trial) {
    ChartForm a = fx.rand_form(1), b = fx.rand_form(1);
    ChartForm lhs = exterior_d(wedge(a, b));
    ChartForm rhs = wedge(exterior_d(a), b) - wedge(a, exterior_d(b));
    CHECK(lhs == rhs);
  }
  // d of a function picks up every partial.
  RatFunc f = fx.rand_func();
  ChartForm df = exterior_d(ChartForm::scalar(fx.c, f));
  for (int v = 0; v < fx.c.nvars(); ++v)
    CHECK(df.coeff(1u << v) == f.partial(v));
}

TEST_CASE("contraction is an antiderivation of degree -1") {
  Fixture fx;
  for (int trial = 0; trial < 4; ++trial) {
    VectorFieldExpr v = fx.rand_field();
    ChartForm a = fx.rand_form(1), b = fx.rand_form(2);
    CHECK(contract(v, wedge(a, b)) ==
          wedge(contract(v, a), b) - wedge(a, contract(v, b)));
    // Pairing of a 1-form with a field is the coefficient sum.
    RatFunc pair(fx.c.nvars());
    for (const auto& [m, fcoef] : a.terms())
      pair += fcoef * v.comp(std::countr_zero(m));
    ChartForm got = contract(v, a);
    CHECK(got.coeff(0) == pair);
    // Contracting twice with the same field gives zero.
    CHECK(contract(v, contract(v, b)).is_zero());
  }
}

TEST_CASE("cartan formula consequences") {
  Fixture fx;
  for (int trial = 0; trial < 3; ++trial) {
    VectorFieldExpr v = fx.rand_field(), u = fx.rand_field();
    ChartForm w = fx.rand_form(1);
    // L_v commutes with d.
    CHECK(lie_derivative(v, exterior_d(w)) == exterior_d(lie_derivative(v, w)));
    // On functions it is plain application.
    RatFunc f = fx.rand_func();
    CHECK(lie_derivative(v, ChartForm::scalar(fx.c, f)).coeff(0) == v.apply(f));
    // [L_v, L_u] = L_[v,u].
    ChartForm lhs = lie_derivative(v, lie_derivative(u, w)) -
                    lie_derivative(u, lie_derivative(v, w));
    CHECK(lhs == lie_derivative(vf_bracket(v, u), w));
  }
}

TEST_CASE("field bracket against second-order cancellation") {
  Fixture fx;
  for (int trial = 0; trial < 4; ++trial) {
    VectorFieldExpr v = fx.rand_field(), u = fx.rand_field();
    RatFunc f = fx.rand_func(2);
    CHECK(vf_bracket(v, u).apply(f) == v.apply(u.apply(f)) - u.apply(v.apply(f)));
    CHECK(vf_bracket(v, v).is_zero());
  }
}

TEST_CASE("conjugation is an involution compatible with the operations") {
  Fixture fx;
  for (int trial = 0; trial < 3; ++trial) {
    ChartForm a = fx.rand_form(1), b = fx.rand_form(1);
    VectorFieldExpr v = fx.rand_field();
    CHECK(a.conj().conj() == a);
    CHECK(wedge(a, b).conj() == wedge(a.conj(), b.conj()));
    CHECK(exterior_d(a.conj()) == exterior_d(a).conj());
    CHECK(contract(v.conj(), a.conj()) == contract(v, a).conj());
  }
}

TEST_CASE("coefficient partial and linear structure") {
  Fixture fx;
  ChartForm a = fx.rand_form(1), b = fx.rand_form(1);
  for (int v = 0; v < fx.c.nvars(); ++v)
    CHECK((a + b).coeff_partial(v) == a.coeff_partial(v) + b.coeff_partial(v));
  CHECK(a - a == ChartForm(fx.c));
  CHECK((a * GaussRat(3)) * GaussRat::rational(1, 3) == a);
  // add_term cancels and normalizes.
  ChartForm w(fx.c);
  w.add_term(0b11, RatFunc::constant(fx.c.nvars(), GaussRat(2)));
  w.add_term(0b11, RatFunc::constant(fx.c.nvars(), GaussRat(-2)));
  CHECK(w.is_zero());
}
