#include "twistor/correspondence.hpp"

#include <algorithm>

namespace twistor {

DolbeaultForm::DolbeaultForm(int n, int k) : n_(n), k_(k), vars_(base_table(n)) {
  if (k < 0 || k > n) throw Error("DolbeaultForm: degree out of range");
}

Poly DolbeaultForm::comp(const std::vector<int>& I) const {
  auto it = comps_.find(I);
  return it == comps_.end() ? Poly(vars_.nvars()) : it->second;
}

void DolbeaultForm::add(const std::vector<int>& I, const Poly& coeff) {
  if (coeff.is_zero()) return;
  SignedIndex r = reduce(I);
  if (static_cast<int>(r.index.size()) != k_) return;  // repeated index: wedge is zero
  for (int v : r.index)
    if (v < 1 || v > n_) throw Error("DolbeaultForm: index entry out of range");
  Poly c = r.sign > 0 ? coeff : -coeff;
  auto [it, inserted] = comps_.emplace(r.index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

DolbeaultForm DolbeaultForm::operator-() const {
  DolbeaultForm r(n_, k_);
  for (const auto& [I, p] : comps_) r.comps_.emplace(I, -p);
  return r;
}

DolbeaultForm& DolbeaultForm::operator+=(const DolbeaultForm& o) {
  if (n_ != o.n_ || k_ != o.k_) throw Error("DolbeaultForm: mismatched shapes");
  for (const auto& [I, p] : o.comps_) add(I, p);
  return *this;
}

int DolbeaultForm::base_degree() const {
  int d = -1;
  for (const auto& [I, p] : comps_) d = std::max(d, p.degree());
  return d;
}

DolbeaultForm dolbeault_dbar(const DolbeaultForm& f) {
  DolbeaultForm out(f.n(), f.k() + 1 > f.n() ? f.n() : f.k() + 1);
  if (f.k() + 1 > f.n()) return DolbeaultForm(f.n(), f.n());  // top degree: dbar = 0 shape
  for (const auto& [I, p] : f.comps()) {
    for (int a = 1; a <= f.n(); ++a) {
      Poly dp = p.partial(f.vars().xibar(a));
      if (dp.is_zero()) continue;
      std::vector<int> aI{a};
      aI.insert(aI.end(), I.begin(), I.end());
      out.add(aI, dp);
    }
  }
  return out;
}

DolbeaultForm dolbeault_codiff(const DolbeaultForm& f) {
  if (f.k() == 0) return DolbeaultForm(f.n(), 0);
  DolbeaultForm out(f.n(), f.k() - 1);
  for (const auto& [I, p] : f.comps()) {
    for (int a : I) {
      std::vector<int> J;
      for (int v : I)
        if (v != a) J.push_back(v);
      std::vector<int> aJ{a};
      aJ.insert(aJ.end(), J.begin(), J.end());
      int sign = reduce(aJ).sign;  // f_I = sign * f_{aJ}
      Poly dp = p.partial(f.vars().xi(a));
      if (dp.is_zero()) continue;
      out.add(J, sign > 0 ? -dp : dp);
    }
  }
  return out;
}

bool is_harmonic(const DolbeaultForm& f) {
  return dolbeault_dbar(f).is_zero() && dolbeault_codiff(f).is_zero();
}

ChartForm d_operator(Dir g, const ChartForm& w) {
  const Chart& c = w.chart();
  ChartForm out(c, w.twist());
  for (int a = 1; a <= c.n(); ++a) {
    for (int b = 1; b <= c.n(); ++b) {
      const VectorFieldExpr& fb = fbar_field(c, a, b);
      if (g == Dir::Alpha) {
        ChartForm t = w.coeff_partial(c.vars().xi(b));
        if (t.is_zero()) continue;
        t = contract(fb, t);
        out += wedge(ChartForm::generator(c, c.vars().xi(a)), t);
      } else {
        ChartForm t = wedge(ChartForm::generator(c, c.vars().xibar(b)), w);
        t = contract(fb, t);
        out += t.coeff_partial(c.vars().xibar(a));
      }
    }
  }
  return out;
}

ChartForm d_gamma(Dir g, const ChartForm& w) {
  const Chart& c = w.chart();
  ChartForm out(c, w.twist());
  for (int a = 1; a <= c.n(); ++a) {
    int var = g == Dir::Alpha ? c.vars().xi(a) : c.vars().xibar(a);
    ChartForm t = w.coeff_partial(var);
    if (t.is_zero()) continue;
    out += wedge(ChartForm::generator(c, var), t);
  }
  return out;
}

ChartForm e_operator(Dir g, const ChartForm& w) {
  const Chart& c = w.chart();
  ChartForm out(c, w.twist());
  for (int a = 1; a <= c.n(); ++a) {
    for (int b = 1; b <= c.n(); ++b) {
      const VectorFieldExpr& fb = fbar_field(c, a, b);
      if (g == Dir::Alpha) {
        ChartForm t = w.coeff_partial(c.vars().xi(b));
        if (t.is_zero()) continue;
        t = twisted_lie(fb, t);
        out -= wedge(ChartForm::generator(c, c.vars().xi(a)), t);
      } else {
        ChartForm t = wedge(ChartForm::generator(c, c.vars().xibar(b)), w);
        t = twisted_lie(fb, t);
        out += t.coeff_partial(c.vars().xibar(a));
      }
    }
  }
  return out;
}

ChartForm e_operator_commutator(Dir g, const ChartForm& w) {
  return twisted_d(d_operator(g, w)) - d_operator(g, twisted_d(w));
}

ChartForm gamma_operator(const ChartForm& w) {
  const Chart& c = w.chart();
  ChartForm out(c, w.twist());
  for (int a = 1; a <= c.n(); ++a) {
    for (int b = 1; b <= c.n(); ++b) {
      const VectorFieldExpr& fb = fbar_field(c, a, b);
      for (int cc = 1; cc <= c.n(); ++cc) {
        // ext(dxi^a) i(Fbar^a_b) ext(dxibar^b) L_xi^c L_xibar^c
        ChartForm t1 = w.coeff_partial(c.vars().xibar(cc)).coeff_partial(c.vars().xi(cc));
        if (!t1.is_zero()) {
          t1 = wedge(ChartForm::generator(c, c.vars().xibar(b)), t1);
          t1 = contract(fb, t1);
          out += wedge(ChartForm::generator(c, c.vars().xi(a)), t1);
        }
        // L_xibar^a i(Fbar^a_b) L_xi^b ext(dxi^c ^ dxibar^c)
        ChartForm t2 = wedge(ChartForm::generator(c, c.vars().xi(cc)),
                             ChartForm::generator(c, c.vars().xibar(cc)));
        t2 = wedge(t2, w).coeff_partial(c.vars().xi(b));
        if (t2.is_zero()) continue;
        t2 = contract(fb, t2);
        out += t2.coeff_partial(c.vars().xibar(a));
      }
    }
  }
  return out;
}

ChartForm gamma_operator_commutator(const ChartForm& w) {
  return e_operator(Dir::Beta, d_operator(Dir::Alpha, w)) -
         d_operator(Dir::Alpha, e_operator(Dir::Beta, w));
}

mpq_class f_series_coeff(int l, int p) {
  if (l < 0 || p < 0) throw Error("f_series_coeff: negative order");
  mpz_class pf, plf;
  mpz_fac_ui(pf.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_fac_ui(plf.get_mpz_t(), static_cast<unsigned long>(p + l));
  return mpq_class(1) / mpq_class(pf * plf);
}

namespace {

int base_coeff_degree(const ChartForm& w) {
  const Chart& c = w.chart();
  int d = -1;
  for (const auto& [m, f] : w.terms()) {
    for (const auto& [mono, co] : f.num().terms()) {
      int bd = 0;
      for (int v = 0; v < 2 * c.n(); ++v) bd += mono[v];
      d = std::max(d, bd);
    }
  }
  return d;
}

}  // namespace

ChartForm f_series_apply(int l, Dir g, const ChartForm& w) {
  const Chart& c = w.chart();
  if (w.is_zero()) return w;
  int fiber_dim = c.k() * (c.n() - c.k());
  int bound = std::min(base_coeff_degree(w) + 1, fiber_dim + 1);
  ChartForm acc = w * GaussRat(f_series_coeff(l, 0));
  ChartForm cur = w;
  for (int p = 1;; ++p) {
    cur = d_operator(g, cur);
    if (cur.is_zero()) break;
    if (p > bound)
      throw Error("f_series_apply: series did not terminate at the bound");
    acc += cur * GaussRat(f_series_coeff(l, p));
  }
  return acc;
}

ChartForm j_map(const DolbeaultForm& f, const Chart& c) {
  if (f.n() != c.n() || f.k() != c.k()) throw Error("j_map: shape mismatch");
  ChartForm out(c, c.n() + 1);
  for (const auto& [I, p] : f.comps())
    out += frame_section(c, I) * RatFunc(p.extended(c.nvars()));
  return out;
}

ChartForm a_operator(const DolbeaultForm& f, const Chart& c) {
  int n = c.n(), k = c.k();
  ChartForm t = f_series_apply(n - k, Dir::Alpha, j_map(f, c));
  t = f_series_apply(k, Dir::Beta, t);
  mpz_class kf, nkf;
  mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(nkf.get_mpz_t(), static_cast<unsigned long>(n - k));
  return t * GaussRat(mpq_class(kf * nkf));
}

ChartForm twistor_dbar(const ChartForm& w) { return reduce_mod_10(twisted_d(w)); }

Chart canonical_chart(int n, int k) {
  std::vector<int> I(k);
  for (int i = 0; i < k; ++i) I[i] = i + 1;
  return Chart(n, k, std::move(I));
}

Verdict theorem_verdict(const DolbeaultForm& f, const Chart& c) {
  Verdict v;
  v.harmonic = is_harmonic(f);
  v.dbar_closed = twistor_dbar(a_operator(f, c)).is_zero();
  return v;
}

Verdict theorem_verdict(const DolbeaultForm& f) {
  Chart c = canonical_chart(f.n(), f.k());
  return theorem_verdict(f, c);
}

bool expansion_identity_check(const DolbeaultForm& f, const Chart& c) {
  int n = c.n(), k = c.k();
  ChartForm jf = j_map(f, c);
  ChartForm lhs = twisted_d(f_series_apply(k, Dir::Beta, f_series_apply(n - k, Dir::Alpha, jf)));

  // Vertical part of d annihilates j(f).
  ChartForm vert = twisted_d(jf) - d_gamma(Dir::Alpha, jf) - d_gamma(Dir::Beta, jf);
  if (!vert.is_zero()) return false;

  ChartForm inner_a = e_operator(Dir::Alpha, jf) + d_gamma(Dir::Alpha, jf) * GaussRat(n - k + 1);
  ChartForm t2 = f_series_apply(k, Dir::Beta, f_series_apply(n - k + 1, Dir::Alpha, inner_a));

  ChartForm inner_b = e_operator(Dir::Beta, jf) + d_gamma(Dir::Beta, jf) * GaussRat(k + 1);
  ChartForm t3 = f_series_apply(k + 1, Dir::Beta, f_series_apply(n - k, Dir::Alpha, inner_b));

  // The Gamma term enters with a plus sign: expanding the two derivative
  // brackets and moving E_beta across the alpha series with
  // [E_beta, F^(l)(D_alpha)] = F^(l+1)(D_alpha) Gamma leaves
  // + F^(k+1)(D_beta) F^(n-k+1)(D_alpha) Gamma, and the identity only
  // closes with that sign (checked against independent expansions of
  // every constituent bracket).
  ChartForm gm = gamma_operator(jf);
  ChartForm t4 = f_series_apply(k + 1, Dir::Beta, f_series_apply(n - k + 1, Dir::Alpha, gm));

  return lhs == t2 + t3 + t4;
}

bool final_lemma_check(const std::vector<int>& I, const Poly& coeff, const Chart& c) {
  int n = c.n(), k = c.k();
  if (static_cast<int>(I.size()) != k) throw Error("final_lemma_check: |I| != k");
  RatFunc p(coeff.extended(c.nvars()));
  ChartForm phi = frame_section(c, I) * p;

  // beta congruence: {E_beta + (k+1) d_beta} phi = -sum_{a not in I, b}
  // (df/dxibar^a) dxibar^b ^ sbar^{baI}  modulo (1,0)-forms.
  ChartForm lhs_b = e_operator(Dir::Beta, phi) + d_gamma(Dir::Beta, phi) * GaussRat(k + 1);
  ChartForm rhs_b(c, n + 1);
  for (int a = 1; a <= n; ++a) {
    if (contains(I, a)) continue;
    RatFunc da = p.partial(c.vars().xibar(a));
    if (da.is_zero()) continue;
    for (int b = 1; b <= n; ++b) {
      std::vector<int> lab{b, a};
      lab.insert(lab.end(), I.begin(), I.end());
      ChartForm sec = frame_section(c, lab);
      if (sec.is_zero()) continue;
      rhs_b -= wedge(ChartForm::generator(c, c.vars().xibar(b)), sec) * da;
    }
  }
  if (!reduce_mod_10(lhs_b - rhs_b).is_zero()) return false;

  // alpha congruence: {E_alpha + (n-k+1) d_alpha} phi = -sum_{b in I, a}
  // (df/dxi^b) dxi^a ^ sbar^{abI}  modulo (1,0)-forms.
  ChartForm lhs_a = e_operator(Dir::Alpha, phi) + d_gamma(Dir::Alpha, phi) * GaussRat(n - k + 1);
  ChartForm rhs_a(c, n + 1);
  for (int b : I) {
    RatFunc db = p.partial(c.vars().xi(b));
    if (db.is_zero()) continue;
    for (int a = 1; a <= n; ++a) {
      std::vector<int> lab{a, b};
      lab.insert(lab.end(), I.begin(), I.end());
      ChartForm sec = frame_section(c, lab);
      if (sec.is_zero()) continue;
      rhs_a -= wedge(ChartForm::generator(c, c.vars().xi(a)), sec) * db;
    }
  }
  if (!reduce_mod_10(lhs_a - rhs_a).is_zero()) return false;

  // Coefficient matching against the flat Dirac operator components.
  DolbeaultForm f(n, k);
  f.add(I, coeff);
  DolbeaultForm db = dolbeault_dbar(f);
  for (int a = 1; a <= n; ++a) {
    if (contains(I, a)) continue;
    std::vector<int> aI{a};
    aI.insert(aI.end(), I.begin(), I.end());
    SignedIndex r = reduce(aI);
    Poly expect = coeff.partial(f.vars().xibar(a));
    Poly got = db.comp(r.index);
    if (r.sign < 0) got = -got;
    if (!(expect == got)) return false;
  }
  DolbeaultForm cd = dolbeault_codiff(f);
  for (int b : I) {
    std::vector<int> J;
    for (int v : I)
      if (v != b) J.push_back(v);
    std::vector<int> bJ{b};
    bJ.insert(bJ.end(), J.begin(), J.end());
    int sign = reduce(bJ).sign;
    Poly diag = coeff.partial(f.vars().xi(b));
    Poly rest(f.vars().nvars());
    // Other contributions to (codiff f)_J come from indices a not in I.
    Poly got = cd.comp(J);
    Poly expect = sign > 0 ? -diag : diag;
    // With a single-term input there are no other contributions.
    if (!(got == expect + rest)) return false;
  }
  return true;
}

}  // namespace twistor
