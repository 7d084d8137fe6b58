#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twistor/chart.hpp"

using namespace twistor;

namespace {

GaussRat small(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return GaussRat(re, im);
}

}  // namespace

TEST_CASE("chart construction and variable table") {
  Chart c(3, 2, {1, 3});
  CHECK(c.nvars() == 2 * 3 + 2 * 2);
  CHECK(c.vars().wpairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 2}});
  CHECK(c.vars().w_slot(1, 2) == 0);
  CHECK(c.vars().w_slot(3, 2) == 1);
  CHECK_THROWS_AS(c.vars().w_slot(2, 1), Error);
  auto perm = c.conj_perm();
  for (int v = 0; v < c.nvars(); ++v) {
    CHECK(perm[perm[v]] == v);
    CHECK(perm[v] != v);
  }
  CHECK(c.var_names()[0] == "xi1");
  CHECK(c.var_names()[3] == "xibar1");
  CHECK(c.var_names()[6] == "w12");
  CHECK(c.var_names()[8] == "wbar12");
  CHECK_THROWS_AS(Chart(3, 2, {3, 1}), Error);
  CHECK_THROWS_AS(Chart(3, 2, {1, 4}), Error);
  CHECK_THROWS_AS(Chart(3, 2, {1}), Error);
}

TEST_CASE("base minor is one and coordinates are minors") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    for (const auto& I : subsequences(n, k)) {
      Chart c(n, k, I.index);
      CHECK(c.z(I.index) == Poly::constant(c.nvars(), GaussRat(1)));
      for (auto [i, j] : c.vars().wpairs)
        CHECK(c.z_signed({i, j}, I.index) ==
              Poly::variable(c.nvars(), c.vars().w(c.vars().w_slot(i, j))));
    }
  }
}

TEST_CASE("z_signed reduction rules") {
  Chart c(3, 1, {2});
  CHECK(c.z_signed({1, 1}).is_zero());       // repeated entry, wrong length
  CHECK(c.z_signed(std::vector<int>{3}) == c.z({3}));
  CHECK(c.z_signed({2, 1, 2}) == -(-c.z({1})));  // (2,1,2) reduces to +(1)
}

TEST_CASE("symbolic minors match the numeric minor oracle") {
  std::mt19937 rng(20240817);
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    for (int trial = 0; trial < 6; ++trial) {
      // Random section matrix with unit I-block realized through the
      // chart point, compared minor by minor.
      std::vector<std::vector<GaussRat>> M(k, std::vector<GaussRat>(n, GaussRat(0)));
      std::vector<GaussRat> pt(c.nvars(), GaussRat(0));
      for (int r = 0; r < k; ++r) M[r][c.base_index()[r] - 1] = GaussRat(1);
      for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
        auto [i, j] = c.vars().wpairs[s];
        GaussRat v = small(rng);
        int row = 0;
        while (c.base_index()[row] != i) ++row;
        M[row][j - 1] = v;
        pt[c.vars().w(static_cast<int>(s))] = v;
        pt[c.vars().wbar(static_cast<int>(s))] = v.conj();
      }
      auto Z = plucker_minors(M);
      for (const auto& J : subsequences(n, k))
        CHECK(c.z(J.index).eval(pt) == Z.at(J.index));
      // Norm polynomial equals the sum of squared minor norms.
      GaussRat nsum(0);
      for (const auto& [J, zj] : Z) nsum += zj * zj.conj();
      CHECK(c.norm_poly().eval(pt) == nsum);
    }
  }
}

TEST_CASE("derivative closed form for minors") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    for (const auto& J : subsequences(n, k)) {
      for (auto [i, j] : c.vars().wpairs) {
        RatFunc direct(c.z(J.index).partial(c.vars().w(c.vars().w_slot(i, j))));
        CHECK(c.dz_dw(J.index, i, j) == direct);
      }
    }
  }
}

TEST_CASE("quadratic identities vanish symbolically") {
  for (auto [n, k] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    for (const auto& J : subsequences(n, k + 1))
      for (const auto& K : subsequences(n, k - 1))
        CHECK(c.plucker_identity_2(J.index, K.index).is_zero());
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (const auto& J : subsequences(n, k))
          for (const auto& K : subsequences(n, k))
            CHECK(c.plucker_identity_3(a, b, J.index, K.index).is_zero());
  }
}

TEST_CASE("norm polynomial is real") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 2}}) {
    Chart c(n, k, subsequences(n, k)[0].index);
    CHECK(c.conj(c.norm_poly()) == c.norm_poly());
    // Value 1 at the origin of the chart.
    std::vector<GaussRat> zero(c.nvars(), GaussRat(0));
    CHECK(c.norm_poly().eval(zero) == GaussRat(1));
  }
}

TEST_CASE("determinant and degenerate matrices") {
  std::vector<std::vector<GaussRat>> M{{GaussRat(1), GaussRat(2)},
                                       {GaussRat(3), GaussRat(4)}};
  CHECK(det(M) == GaussRat(-2));
  std::vector<std::vector<GaussRat>> D{{GaussRat(1), GaussRat(2)},
                                       {GaussRat(2), GaussRat(4)}};
  CHECK(det(D) == GaussRat(0));
  std::vector<std::vector<GaussRat>> R(1, std::vector<GaussRat>(2, GaussRat(0)));
  CHECK_THROWS_AS(plucker_minors(R), Error);
  // Signed lookup reduces the label.
  auto Z = plucker_minors(M);  // 2 x 2, k = n = 2 here: single minor (1,2)
  CHECK(minor_signed(Z, {2, 1}) == -Z.at({1, 2}));
  CHECK(minor_signed(Z, {1, 1}) == GaussRat(0));
}
