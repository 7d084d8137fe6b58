#include "twistor/suites.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace twistor {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "clifford", "plucker", "vectorfields", "operators",
      "series",   "frames",  "theorem",      "all"};
  return names;
}

mpq_class SmallGen::rational() {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

GaussRat SmallGen::gauss() { return GaussRat(rational(), rational()); }

namespace {

// All exponent vectors of the given length with total degree <= bound.
void enumerate_monomials(int len, int bound, Monomial& cur,
                         std::vector<Monomial>& out, int pos = 0) {
  if (pos == len) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    cur[pos] = e;
    enumerate_monomials(len, bound - e, cur, out, pos + 1);
  }
  cur[pos] = 0;
}

std::vector<Monomial> base_monomials(int n, int degree) {
  std::vector<Monomial> out;
  Monomial cur(2 * n, 0);
  enumerate_monomials(2 * n, degree, cur, out);
  return out;
}

std::string ivec(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void rec(Report& r, std::string suite, std::string ref, std::string instance,
         bool pass, std::string detail = "") {
  r.checks.push_back({std::move(suite), std::move(ref), std::move(instance),
                      pass, std::move(detail)});
}

// Subsets of {lo..hi} in deterministic (bitmask) order.
std::vector<std::vector<int>> subsets_range(int lo, int hi) {
  int m = hi - lo + 1;
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < m; ++b)
      if (mask & (1 << b)) s.push_back(lo + b);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------- clifford

void suite_clifford(Report& r, const SuiteParams& p) {
  const std::string S = "clifford";
  for (int pass_ext = 0; pass_ext <= (p.n <= 3 ? 1 : 0); ++pass_ext) {
    bool ext = pass_ext == 1;
    int n = p.n;
    int lo = ext ? 0 : 1;
    int hi = ext ? n : n;
    int lab_lo = ext ? 0 : 1;
    int lab_hi = ext ? 2 * n + 1 : 2 * n;
    auto bases = subsets_range(lo, hi);
    std::string ref = ext ? "clifford.anticommutation.extended"
                          : "clifford.anticommutation";
    for (int u = lab_lo; u <= lab_hi; ++u) {
      for (int v = lab_lo; v <= lab_hi; ++v) {
        bool ok = true;
        std::string detail;
        for (const auto& I : bases) {
          Spinor th = Spinor::basis(n, I, ext);
          Spinor lhs = clifford_act(u, clifford_act(v, th)) +
                       clifford_act(v, clifford_act(u, th));
          Spinor rhs = u == v ? th * GaussRat(-2) : Spinor(n, ext);
          if (!(lhs == rhs)) {
            ok = false;
            detail = "fails on basis " + ivec(I);
            break;
          }
        }
        std::ostringstream inst;
        inst << "n=" << n << " u=" << u << " v=" << v;
        rec(r, S, ref, inst.str(), ok, detail);
      }
    }
  }

  // Grade preservation and gl relations of the bivector words.
  int n = p.n;
  auto bases = subsets_range(1, n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      CliffordWord uab = unitary_bivector(a, b, n);
      bool grade_ok = true;
      std::string gd;
      for (const auto& I : bases) {
        Spinor res = word_act(uab, Spinor::basis(n, I));
        for (const auto& [idx, c] : res.coeffs()) {
          if (idx.size() != I.size()) {
            grade_ok = false;
            gd = "basis " + ivec(I) + " maps across grades";
          }
        }
      }
      std::ostringstream inst;
      inst << "n=" << n << " a=" << a << " b=" << b;
      rec(r, S, "spin.grade-preservation", inst.str(), grade_ok, gd);

      bool gl_ok = true;
      std::string gld;
      for (int c = 1; c <= n && gl_ok; ++c) {
        for (int d = 1; d <= n && gl_ok; ++d) {
          CliffordWord ucd = unitary_bivector(c, d, n);
          for (const auto& I : bases) {
            Spinor th = Spinor::basis(n, I);
            Spinor lhs = word_act(uab, word_act(ucd, th)) -
                         word_act(ucd, word_act(uab, th));
            Spinor rhs(n);
            if (c == b) rhs += word_act(unitary_bivector(a, d, n), th);
            if (a == d) rhs -= word_act(unitary_bivector(c, b, n), th);
            if (!(lhs == rhs)) {
              gl_ok = false;
              std::ostringstream os;
              os << "fails at c=" << c << " d=" << d << " basis " << ivec(I);
              gld = os.str();
              break;
            }
          }
        }
      }
      rec(r, S, "spin.gl-commutation", inst.str(), gl_ok, gld);
    }
  }

  // Diagonal words sum to the grade (number) operator.
  {
    bool ok = true;
    std::string d;
    for (const auto& I : bases) {
      Spinor th = Spinor::basis(n, I);
      Spinor acc(n);
      for (int a = 1; a <= n; ++a) acc += word_act(unitary_bivector(a, a, n), th);
      if (!(acc == th * GaussRat(static_cast<long>(I.size())))) {
        ok = false;
        d = "basis " + ivec(I);
        break;
      }
    }
    rec(r, S, "spin.number-operator", "n=" + std::to_string(n), ok, d);
  }
}

// ----------------------------------------------------------------- plucker

std::vector<std::vector<GaussRat>> random_section_matrix(SmallGen& gen,
                                                         const Chart& c) {
  // Random k x n matrix whose I-minor is nonzero (resampled as needed).
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<GaussRat>> M(c.k(), std::vector<GaussRat>(c.n()));
    for (auto& row : M)
      for (auto& e : row) e = gen.gauss();
    std::vector<std::vector<GaussRat>> block(c.k(), std::vector<GaussRat>(c.k()));
    for (int r = 0; r < c.k(); ++r)
      for (int s = 0; s < c.k(); ++s) block[r][s] = M[r][c.base_index()[s] - 1];
    if (!det(block).is_zero()) return M;
  }
  throw Error("random_section_matrix: could not find a generic matrix");
}

void suite_plucker(Report& r, const SuiteParams& p) {
  const std::string S = "plucker";
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  std::ostringstream base;
  base << "n=" << n << " k=" << k;

  // Part 1: the fiber coordinate is the ratio minor w_ij = z^{ijI} / z^I
  // (z^I = 1 on the canonical section).
  for (auto [i, j] : c.vars().wpairs) {
    Poly lhs = c.z_signed({i, j}, c.base_index());
    Poly rhs = c.poly_var(c.vars().w(c.vars().w_slot(i, j)));
    std::ostringstream inst;
    inst << base.str() << " i=" << i << " j=" << j;
    rec(r, S, "plucker.coordinate-ratio", inst.str(), lhs == rhs);
  }

  // Part 2: contraction identity as a chart polynomial, all index pairs.
  if (k >= 1 && k + 1 <= n) {
    for (const auto& J : subsequences(n, k + 1)) {
      for (const auto& K : subsequences(n, k - 1)) {
        std::ostringstream inst;
        inst << base.str() << " J=" << ivec(J.index) << " K=" << ivec(K.index);
        rec(r, S, "plucker.contraction", inst.str(),
            c.plucker_identity_2(J.index, K.index).is_zero());
      }
    }
  }

  // Part 3: exchange identity, aggregated over (J,K) per (a,b).
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      bool ok = true;
      std::string d;
      for (const auto& J : subsequences(n, k)) {
        for (const auto& K : subsequences(n, k)) {
          if (!c.plucker_identity_3(a, b, J.index, K.index).is_zero()) {
            ok = false;
            d = "J=" + ivec(J.index) + " K=" + ivec(K.index);
          }
        }
      }
      std::ostringstream inst;
      inst << base.str() << " a=" << a << " b=" << b;
      rec(r, S, "plucker.exchange", inst.str(), ok, d);
    }
  }

  // Pointwise route through the independent minor oracle.
  SmallGen gen(p.seed * 1000003 + 17);
  for (int trial = 0; trial < 20; ++trial) {
    auto M = random_section_matrix(gen, c);
    auto Z = plucker_minors(M);
    GaussRat zI = Z.at(c.base_index());
    // Chart point matching the matrix: w_ij = Z^{ijI} / Z^I.
    std::vector<GaussRat> pt(c.nvars(), GaussRat(0));
    for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
      auto [i, j] = c.vars().wpairs[s];
      std::vector<int> lab{i, j};
      lab.insert(lab.end(), c.base_index().begin(), c.base_index().end());
      GaussRat w = minor_signed(Z, lab) / zI;
      pt[c.vars().w(static_cast<int>(s))] = w;
      pt[c.vars().wbar(static_cast<int>(s))] = w.conj();
    }
    bool ok = true;
    std::string d;
    for (const auto& J : subsequences(n, k)) {
      if (!(c.z(J.index).eval(pt) == Z.at(J.index) / zI)) {
        ok = false;
        d = "minor " + ivec(J.index) + " disagrees";
        break;
      }
    }
    // Contraction identity evaluated directly on the raw minors.
    if (ok && k >= 1 && k + 1 <= n) {
      for (const auto& J : subsequences(n, k + 1)) {
        for (const auto& K : subsequences(n, k - 1)) {
          GaussRat acc(0);
          for (int a : J.index) {
            if (contains(K.index, a)) continue;
            std::vector<int> aJ{a}, aK{a};
            aJ.insert(aJ.end(), J.index.begin(), J.index.end());
            aK.insert(aK.end(), K.index.begin(), K.index.end());
            acc += minor_signed(Z, aJ) * minor_signed(Z, aK);
          }
          if (!acc.is_zero()) {
            ok = false;
            d = "raw contraction J=" + ivec(J.index) + " K=" + ivec(K.index);
          }
        }
      }
    }
    std::ostringstream inst;
    inst << base.str() << " trial=" << trial;
    rec(r, S, "plucker.minor-oracle", inst.str(), ok, d);
  }
}

// ------------------------------------------------------------ vectorfields

void suite_vectorfields(Report& r, const SuiteParams& p) {
  const std::string S = "vectorfields";
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  std::ostringstream base;
  base << "n=" << n << " k=" << k;

  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      std::ostringstream inst;
      inst << base.str() << " a=" << a << " b=" << b;
      rec(r, S, "vectorfields.flow-oracle", inst.str(),
          f_field(c, a, b) == gl_action_oracle(c, a, b));

      bool ok = true, cok = true;
      std::string d, cd_;
      for (int cc = 1; cc <= n; ++cc) {
        for (int dd = 1; dd <= n; ++dd) {
          VectorFieldExpr lhs =
              vf_bracket(f_field(c, a, b), f_field(c, cc, dd));
          VectorFieldExpr rhs(c);
          if (a == dd) rhs += f_field(c, cc, b);
          if (cc == b) rhs -= f_field(c, a, dd);
          if (!(lhs == rhs)) {
            ok = false;
            d = "c=" + std::to_string(cc) + " d=" + std::to_string(dd);
          }
          VectorFieldExpr clhs =
              vf_bracket(fbar_field(c, a, b), fbar_field(c, cc, dd));
          VectorFieldExpr crhs(c);
          if (a == dd) crhs += fbar_field(c, cc, b);
          if (cc == b) crhs -= fbar_field(c, a, dd);
          if (!(clhs == crhs)) {
            cok = false;
            cd_ = "c=" + std::to_string(cc) + " d=" + std::to_string(dd);
          }
        }
      }
      rec(r, S, "vectorfields.commutation", inst.str(), ok, d);
      rec(r, S, "vectorfields.conjugate-commutation", inst.str(), cok, cd_);
    }
  }

  // [V(A), V(B)] = V([B, A]) for the linear extension V of the field map
  // (order reversal: the action is an anti-homomorphism).
  SmallGen gen(p.seed * 1000033 + 5);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<GaussRat>> A(n, std::vector<GaussRat>(n)),
        B(n, std::vector<GaussRat>(n));
    for (auto& row : A)
      for (auto& e : row) e = gen.gauss();
    for (auto& row : B)
      for (auto& e : row) e = gen.gauss();
    auto lift = [&](const std::vector<std::vector<GaussRat>>& M) {
      VectorFieldExpr v(c);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          VectorFieldExpr f = f_field(c, a, b);
          for (const auto& [var, co] : f.comps())
            v.add(var, co * M[a - 1][b - 1]);
        }
      return v;
    };
    std::vector<std::vector<GaussRat>> BA(n, std::vector<GaussRat>(n, GaussRat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          BA[i][j] += B[i][l] * A[l][j] - A[i][l] * B[l][j];
    VectorFieldExpr lhs = vf_bracket(lift(A), lift(B));
    std::ostringstream inst;
    inst << base.str() << " trial=" << trial;
    rec(r, S, "vectorfields.anti-homomorphism", inst.str(), lhs == lift(BA));
  }
}

// ------------------------------------------------------------------ series

void suite_series(Report& r, const SuiteParams& p) {
  const std::string S = "series";
  for (int l = 0; l <= 6; ++l) {
    bool rec_ok = true, orc_ok = true;
    std::string d1, d2;
    // Termwise differentiation oracle: differentiate the coefficient list
    // of the base series l times.
    std::vector<mpq_class> coeffs;
    for (int q = 0; q <= 20; ++q) {
      mpz_class qf;
      mpz_fac_ui(qf.get_mpz_t(), static_cast<unsigned long>(q));
      coeffs.push_back(mpq_class(1) / mpq_class(qf * qf));
    }
    for (int step = 0; step < l; ++step)
      for (size_t q = 0; q + 1 < coeffs.size(); ++q)
        coeffs[q] = coeffs[q + 1] * mpq_class(static_cast<long>(q + 1));
    for (int q = 0; q <= 12; ++q) {
      if (!(f_series_coeff(l, q) == coeffs[q])) {
        orc_ok = false;
        d2 = "order " + std::to_string(q);
      }
      mpq_class lhs = (q >= 1 ? f_series_coeff(l + 2, q - 1) : mpq_class(0)) +
                      mpq_class(l + 1) * f_series_coeff(l + 1, q) -
                      f_series_coeff(l, q);
      if (lhs != 0) {
        rec_ok = false;
        d1 = "order " + std::to_string(q);
      }
    }
    rec(r, S, "series.recurrence", "l=" + std::to_string(l), rec_ok, d1);
    rec(r, S, "series.termwise-oracle", "l=" + std::to_string(l), orc_ok, d2);
  }

  // Termination and the constant / two-term closed values.
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  std::ostringstream base;
  base << "n=" << n << " k=" << k;
  SmallGen gen(p.seed * 1000037 + 29);
  DolbeaultForm f = gen.form(n, k, p.degree);
  ChartForm jf = j_map(f, c);
  int d = f.base_degree();
  for (Dir g : {Dir::Alpha, Dir::Beta}) {
    ChartForm cur = jf;
    for (int step = 0; step <= d; ++step) cur = d_operator(g, cur);
    std::ostringstream inst;
    inst << base.str() << " deg=" << d
         << " dir=" << (g == Dir::Alpha ? "alpha" : "beta");
    rec(r, S, "series.termination", inst.str(), cur.is_zero());
  }
  {
    DolbeaultForm one(n, k);
    std::vector<int> I0(k);
    for (int i = 0; i < k; ++i) I0[i] = i + 1;
    one.add(I0, Poly::constant(2 * n, GaussRat(1)));
    ChartForm jone = j_map(one, c);
    ChartForm expect = jone * GaussRat(mpq_class(1, 2));
    rec(r, S, "series.constant-term", base.str(),
        f_series_apply(2, Dir::Alpha, jone) == expect);
  }
  if (n == 2 && k == 1) {
    DolbeaultForm g(2, 1);
    g.add({1}, Poly::variable(4, base_table(2).xi(2)));
    ChartForm jg = j_map(g, c);
    ChartForm expect = jg + d_operator(Dir::Alpha, jg) * GaussRat(mpq_class(1, 2));
    rec(r, S, "series.two-term-example", base.str(),
        f_series_apply(1, Dir::Alpha, jg) == expect);
  }
}

// ------------------------------------------------------------------ frames

void suite_frames(Report& r, const SuiteParams& p) {
  const std::string S = "frames";
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (const auto& I : subsequences(n, k)) {
        ChartForm direct = lie_on_section_direct(c, a, b, I.index);
        std::ostringstream inst;
        inst << "n=" << n << " k=" << k << " a=" << a << " b=" << b
             << " I=" << ivec(I.index);
        rec(r, S, "frames.lie-eq1", inst.str(),
            lie_on_section(c, a, b, I.index, FrameEq::Eq1) == direct);
        rec(r, S, "frames.lie-eq2", inst.str(),
            lie_on_section(c, a, b, I.index, FrameEq::Eq2) == direct);
        rec(r, S, "frames.lie-flow", inst.str(),
            lie_on_section_flow(c, a, b, I.index) == direct);
      }
    }
  }

  // Translation action on the extended module versus the incidence
  // coordinate transform.
  int tn = std::min(n, 3);
  SmallGen gen(p.seed * 1000039 + 41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpq_class> t(2 * tn);
    for (auto& x : t) x = gen.rational();
    Spinor psi(tn, true);
    for (const auto& I : subsets_range(1, tn))
      psi.add(SignedIndex{I, 1}, gen.gauss());
    if (psi.is_zero()) psi.add(SignedIndex{{}, 1}, GaussRat(1));
    std::ostringstream inst;
    inst << "n=" << tn << " trial=" << trial;
    rec(r, S, "frames.translation-transform", inst.str(),
        translation_oracle(t, psi) == translation_transform_prediction(t, psi));
  }
}

// --------------------------------------------------------------- operators

void suite_operators(Report& r, const SuiteParams& p) {
  const std::string S = "operators";
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  SmallGen gen(p.seed * 1000081 + 3);
  int samples = n <= 2 ? 10 : 3;
  std::ostringstream base;
  base << "n=" << n << " k=" << k;

  for (int s = 0; s < samples; ++s) {
    DolbeaultForm f = gen.form(n, k, p.degree);
    ChartForm w = j_map(f, c);
    std::ostringstream inst;
    inst << base.str() << " sample=" << s;
    std::string is = inst.str();

    for (Dir g : {Dir::Alpha, Dir::Beta}) {
      std::string gs = g == Dir::Alpha ? " dir=alpha" : " dir=beta";
      rec(r, S, "operators.e-closed-vs-commutator", is + gs,
          e_operator(g, w) == e_operator_commutator(g, w));
      // [E_g, D_g] w = -2 D_g d_g w
      ChartForm lhs = e_operator(g, d_operator(g, w)) -
                      d_operator(g, e_operator(g, w));
      ChartForm rhs = d_operator(g, d_gamma(g, w)) * GaussRat(-2);
      rec(r, S, "operators.e-d-bracket", is + gs, lhs == rhs);
      // [d, D_g^m] w = m D^{m-1} E w - (m-1) m D^{m-1} d_g w
      for (int m = 2; m <= 3; ++m) {
        ChartForm dmw = w;
        for (int q = 0; q < m; ++q) dmw = d_operator(g, dmw);
        ChartForm br = twisted_d(dmw);
        ChartForm wd = twisted_d(w);
        for (int q = 0; q < m; ++q) wd = d_operator(g, wd);
        br -= wd;
        ChartForm t1 = e_operator(g, w);
        ChartForm t2 = d_gamma(g, w);
        for (int q = 0; q < m - 1; ++q) {
          t1 = d_operator(g, t1);
          t2 = d_operator(g, t2);
        }
        ChartForm expect = t1 * GaussRat(static_cast<long>(m)) -
                           t2 * GaussRat(static_cast<long>((m - 1) * m));
        rec(r, S, "operators.d-power-bracket",
            is + gs + " m=" + std::to_string(m), br == expect);
      }
    }

    rec(r, S, "operators.gamma-closed-vs-commutator", is,
        gamma_operator(w) == gamma_operator_commutator(w));
    rec(r, S, "operators.gamma-dalpha-commute", is,
        gamma_operator(d_operator(Dir::Alpha, w)) ==
            d_operator(Dir::Alpha, gamma_operator(w)));

    // [E_beta, F^(l)(D_alpha)] = F^(l+1)(D_alpha) Gamma, l = n-k.
    {
      int l = n - k;
      ChartForm lhs = e_operator(Dir::Beta, f_series_apply(l, Dir::Alpha, w)) -
                      f_series_apply(l, Dir::Alpha, e_operator(Dir::Beta, w));
      ChartForm rhs = f_series_apply(l + 1, Dir::Alpha, gamma_operator(w));
      rec(r, S, "operators.e-f-series-bracket", is + " l=" + std::to_string(l),
          lhs == rhs);
    }

    rec(r, S, "operators.four-term-expansion", is,
        expansion_identity_check(f, c));
  }

  // Gamma kills harmonic sections modulo the (1,0)-ideal.
  auto harm = harmonic_spanning_set(n, k, std::min(p.degree, n <= 2 ? 2 : 1));
  int count = 0;
  for (const auto& h : harm) {
    if (++count > 4) break;
    std::ostringstream inst;
    inst << base.str() << " harmonic=" << count;
    rec(r, S, "operators.gamma-harmonic-vanishing", inst.str(),
        reduce_mod_10(gamma_operator(j_map(h, c))).is_zero());
  }

  if (n == 2 && k == 1) {
    VarTable bt = base_table(2);
    DolbeaultForm g(2, 1);
    g.add({1}, Poly::variable(4, bt.xi(2)));
    ChartForm jg = j_map(g, c);
    ChartForm expect(c, 3);
    expect.add_term(GenMask{1} << c.vars().xi(1),
                    RatFunc::constant(c.nvars(), GaussRat(-1)));
    expect.add_term(GenMask{1} << c.vars().xi(2),
                    RatFunc(-c.poly_var(c.vars().wbar(c.vars().w_slot(1, 2)))));
    rec(r, S, "operators.d-alpha-example", base.str(),
        d_operator(Dir::Alpha, jg) == expect);
    rec(r, S, "operators.d-beta-trivial", base.str(),
        d_operator(Dir::Beta, jg).is_zero());
    DolbeaultForm one(2, 1);
    one.add({1}, Poly::constant(4, GaussRat(1)));
    rec(r, S, "operators.d-alpha-constant", base.str(),
        d_operator(Dir::Alpha, j_map(one, c)).is_zero());
    rec(r, S, "operators.e-alpha-constant", base.str(),
        e_operator(Dir::Alpha, j_map(one, c)).is_zero());
  }
}

// ----------------------------------------------------------------- theorem

void suite_theorem(Report& r, const SuiteParams& p) {
  const std::string S = "theorem";
  int n = p.n, k = p.k;
  Chart c = canonical_chart(n, k);
  std::ostringstream base;
  base << "n=" << n << " k=" << k;

  auto harm = harmonic_spanning_set(n, k, p.degree);
  for (size_t i = 0; i < harm.size(); ++i) {
    Verdict v = theorem_verdict(harm[i], c);
    std::ostringstream inst;
    inst << base.str() << " harmonic-basis=" << i;
    rec(r, S, "theorem.harmonic-implies-closed", inst.str(),
        v.harmonic && v.dbar_closed);
  }
  auto bad = nonharmonic_samples(n, k, p.degree, 5);
  for (size_t i = 0; i < bad.size(); ++i) {
    Verdict v = theorem_verdict(bad[i], c);
    std::ostringstream inst;
    inst << base.str() << " nonharmonic=" << i;
    rec(r, S, "theorem.nonharmonic-implies-nonclosed", inst.str(),
        !v.harmonic && !v.dbar_closed);
  }

  // On constant forms the correspondence reduces to the fiber injection.
  for (const auto& I : subsequences(n, k)) {
    DolbeaultForm f(n, k);
    f.add(I.index, Poly::constant(2 * n, GaussRat(1)));
    std::ostringstream inst;
    inst << base.str() << " I=" << ivec(I.index);
    rec(r, S, "theorem.a-equals-j-on-constants", inst.str(),
        a_operator(f, c) == j_map(f, c));
  }

  // dbar o dbar reduces to zero on correspondence images.
  {
    SmallGen gen(p.seed * 1000099 + 7);
    DolbeaultForm f = gen.form(n, k, std::min(p.degree, 1));
    ChartForm af = a_operator(f, c);
    rec(r, S, "theorem.dbar-squared", base.str(),
        twistor_dbar(twistor_dbar(af)).is_zero());
  }

  // Frame congruences and the coefficient matching, per index.
  SmallGen gen(p.seed * 1000117 + 11);
  for (const auto& I : subsequences(n, k)) {
    VarTable bt = base_table(n);
    std::vector<Poly> coeffs;
    coeffs.push_back(Poly::variable(2 * n, bt.xibar(1 + (I.index[0] % n))));
    coeffs.push_back(Poly::variable(2 * n, bt.xi(I.index[0])));
    Poly rand_poly = gen.base_poly(bt, std::min(p.degree, 2));
    if (rand_poly.is_zero()) rand_poly = Poly::constant(2 * n, GaussRat(1));
    coeffs.push_back(rand_poly);
    for (size_t ci = 0; ci < coeffs.size(); ++ci) {
      std::ostringstream inst;
      inst << base.str() << " I=" << ivec(I.index) << " coeff=" << ci;
      rec(r, S, "theorem.frame-congruence", inst.str(),
          final_lemma_check(I.index, coeffs[ci], c));
    }
  }

  if (n == 2 && k == 1) {
    VarTable bt = base_table(2);
    DolbeaultForm g(2, 1);
    g.add({1}, Poly::variable(4, bt.xi(2)));
    ChartForm expect(c, 3);
    int ws = c.vars().w_slot(1, 2);
    expect.add_term(GenMask{1} << c.vars().wbar(ws),
                    RatFunc(Poly::variable(c.nvars(), c.vars().xi(2))));
    expect.add_term(GenMask{1} << c.vars().xi(1),
                    RatFunc::constant(c.nvars(), GaussRat(mpq_class(-1, 2))));
    expect.add_term(GenMask{1} << c.vars().xi(2),
                    RatFunc(-c.poly_var(c.vars().wbar(ws)) *
                            GaussRat(mpq_class(1, 2))));
    rec(r, S, "theorem.a-example", base.str(), a_operator(g, c) == expect);
  }

  // k = 0: the fiber is a point and the correspondence multiplies by the
  // frame; holomorphic coefficients are exactly the harmonic ones.
  {
    Chart c0(n, 0, {});
    VarTable bt = base_table(n);
    std::vector<std::pair<Poly, bool>> cases;
    cases.emplace_back(Poly::constant(2 * n, GaussRat(1)), true);
    cases.emplace_back(Poly::variable(2 * n, bt.xi(1)), true);
    if (n >= 2)
      cases.emplace_back(Poly::variable(2 * n, bt.xi(1)) *
                             Poly::variable(2 * n, bt.xi(2)),
                         true);
    cases.emplace_back(Poly::variable(2 * n, bt.xibar(1)), false);
    for (size_t ci = 0; ci < cases.size(); ++ci) {
      DolbeaultForm f(n, 0);
      f.add({}, cases[ci].first);
      Verdict v = theorem_verdict(f, c0);
      bool want = cases[ci].second;
      bool ok = v.harmonic == want && v.dbar_closed == want &&
                a_operator(f, c0) == j_map(f, c0);
      std::ostringstream inst;
      inst << "n=" << n << " k=0 case=" << ci;
      rec(r, S, "theorem.k0-holomorphic", inst.str(), ok);
    }
  }
}

}  // namespace

Poly SmallGen::base_poly(const VarTable& vt, int degree) {
  std::uniform_int_distribution<int> pick(0, 1);
  Poly out(vt.nvars());
  for (const auto& m : base_monomials(vt.n, degree)) {
    if (pick(rng_) == 0) continue;
    GaussRat co = gauss();
    if (!co.is_zero()) out.add_term(m, co);
  }
  return out;
}

DolbeaultForm SmallGen::form(int n, int k, int degree) {
  DolbeaultForm f(n, k);
  VarTable bt = base_table(n);
  for (const auto& I : subsequences(n, k)) f.add(I.index, base_poly(bt, degree));
  if (f.is_zero()) {
    std::vector<int> I0(k);
    for (int i = 0; i < k; ++i) I0[i] = i + 1;
    f.add(I0, Poly::constant(2 * n, GaussRat(1)));
  }
  return f;
}

std::vector<DolbeaultForm> harmonic_spanning_set(int n, int k, int degree) {
  auto monos = base_monomials(n, degree);
  auto idxs = subsequences(n, k);
  struct Col {
    Monomial m;
    std::vector<int> I;
  };
  std::vector<Col> cols;
  for (const auto& I : idxs)
    for (const auto& m : monos) cols.push_back({m, I.index});

  // Row space: (which operator, target index, target monomial).
  std::map<std::tuple<int, std::vector<int>, Monomial>, int> row_of;
  std::vector<std::vector<GaussRat>> rows;
  auto row_index = [&](int tag, const std::vector<int>& I, const Monomial& m) {
    auto key = std::make_tuple(tag, I, m);
    auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    int idx = static_cast<int>(rows.size());
    row_of.emplace(key, idx);
    rows.emplace_back(cols.size(), GaussRat(0));
    return idx;
  };
  for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
    DolbeaultForm f(n, k);
    Poly mono(2 * n);
    mono.add_term(cols[cidx].m, GaussRat(1));
    f.add(cols[cidx].I, mono);
    DolbeaultForm db = dolbeault_dbar(f);
    for (const auto& [I, p] : db.comps())
      for (const auto& [m, co] : p.terms())
        rows[row_index(0, I, m)][cidx] = co;
    DolbeaultForm cd = dolbeault_codiff(f);
    for (const auto& [I, p] : cd.comps())
      for (const auto& [m, co] : p.terms())
        rows[row_index(1, I, m)][cidx] = co;
  }

  // Exact nullspace by row reduction.
  size_t ncols = cols.size();
  size_t nrows = rows.size();
  std::vector<int> pivot_col;
  size_t rr = 0;
  for (size_t cc = 0; cc < ncols && rr < nrows; ++cc) {
    size_t sel = nrows;
    for (size_t i = rr; i < nrows; ++i)
      if (!rows[i][cc].is_zero()) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(rows[rr], rows[sel]);
    GaussRat inv = rows[rr][cc].inverse();
    for (size_t j = cc; j < ncols; ++j) rows[rr][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == rr || rows[i][cc].is_zero()) continue;
      GaussRat factor = rows[i][cc];
      for (size_t j = cc; j < ncols; ++j) rows[i][j] -= factor * rows[rr][j];
    }
    pivot_col.push_back(static_cast<int>(cc));
    ++rr;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int pc : pivot_col) is_pivot[pc] = true;

  std::vector<DolbeaultForm> out;
  for (size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    DolbeaultForm f(n, k);
    Poly mono(2 * n);
    mono.add_term(cols[fc].m, GaussRat(1));
    f.add(cols[fc].I, mono);
    for (size_t i = 0; i < pivot_col.size(); ++i) {
      GaussRat v = rows[i][fc];
      if (v.is_zero()) continue;
      Poly pm(2 * n);
      pm.add_term(cols[pivot_col[i]].m, -v);
      f.add(cols[pivot_col[i]].I, pm);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<DolbeaultForm> nonharmonic_samples(int n, int k, int degree, int count) {
  std::vector<DolbeaultForm> out;
  for (const auto& I : subsequences(n, k)) {
    for (const auto& m : base_monomials(n, degree)) {
      DolbeaultForm f(n, k);
      Poly mono(2 * n);
      mono.add_term(m, GaussRat(1));
      f.add(I.index, mono);
      if (!is_harmonic(f)) {
        out.push_back(std::move(f));
        if (static_cast<int>(out.size()) == count) return out;
      }
    }
  }
  return out;
}

Report run_suite(const std::string& name, const SuiteParams& p) {
  if (p.n < 1 || p.n > 4) throw Error("run_suite: n out of supported range 1..4");
  if (p.k < 0 || p.k > p.n) throw Error("run_suite: k out of range 0..n");
  if (p.degree < 0) throw Error("run_suite: negative degree bound");
  Report r;
  bool known = false;
  auto want = [&](const char* id) {
    if (name == id || name == "all") {
      known = true;
      return true;
    }
    if (std::find(suite_names().begin(), suite_names().end(), name) !=
        suite_names().end())
      known = true;
    return false;
  };
  if (want("clifford")) suite_clifford(r, p);
  if (want("plucker")) suite_plucker(r, p);
  if (want("vectorfields")) suite_vectorfields(r, p);
  if (want("series")) suite_series(r, p);
  if (want("frames")) suite_frames(r, p);
  if (want("operators")) suite_operators(r, p);
  if (want("theorem")) suite_theorem(r, p);
  if (!known) throw Error("run_suite: unknown suite id '" + name + "'");
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.suite, a.ref, a.instance) <
                            std::tie(b.suite, b.ref, b.instance);
                   });
  return r;
}

std::string report_json(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["ref"] = c.ref;
    j["instance"] = c.instance;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace twistor
