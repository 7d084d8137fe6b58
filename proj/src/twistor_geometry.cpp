#include "twistor/twistor_geometry.hpp"

#include <algorithm>

namespace twistor {

VectorFieldExpr f_field(const Chart& c, int a, int b) {
  if (a < 1 || a > c.n() || b < 1 || b > c.n()) throw Error("f_field: index out of range");
  VectorFieldExpr v(c);
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
    auto [i, j] = c.vars().wpairs[s];
    Poly coeff = -(c.z_signed({a, i}, c.base_index()) * c.z_signed({b, j}, c.base_index()));
    v.add(c.vars().w(static_cast<int>(s)), RatFunc(std::move(coeff)));
  }
  return v;
}

namespace {

struct Dual {
  RatFunc val, dot;
};

Dual dual_mul(const Dual& x, const Dual& y) {
  return Dual{x.val * y.val, x.val * y.dot + x.dot * y.val};
}

Dual dual_det(const std::vector<std::vector<Dual>>& M) {
  size_t m = M.size();
  int nv = m ? M[0][0].val.nvars() : 0;
  if (m == 0) return Dual{RatFunc::constant(nv, GaussRat(1)), RatFunc(nv)};
  if (m == 1) return M[0][0];
  Dual acc{RatFunc(M[0][0].val.nvars()), RatFunc(M[0][0].val.nvars())};
  int sign = 1;
  for (size_t r = 0; r < m; ++r) {
    std::vector<std::vector<Dual>> sub;
    for (size_t rr = 0; rr < m; ++rr) {
      if (rr == r) continue;
      sub.emplace_back(M[rr].begin() + 1, M[rr].end());
    }
    Dual term = dual_mul(M[r][0], dual_det(sub));
    if (sign < 0) {
      term.val = -term.val;
      term.dot = -term.dot;
    }
    acc.val += term.val;
    acc.dot += term.dot;
    sign = -sign;
  }
  return acc;
}

// Dual-number Plücker coordinate along the flow M(t) = M (1 + tB),
// B = -E_{ab}, for a signed column sequence.
Dual flow_minor(const Chart& c, int a, int b, const std::vector<int>& seq) {
  SignedIndex red = reduce(seq);
  int nv = c.nvars();
  if (static_cast<int>(red.index.size()) != c.k()) return Dual{RatFunc(nv), RatFunc(nv)};
  // Section entries and their t-derivatives: Mdot[:,col] = -delta(col==b) M[:,a].
  auto entry = [&](int r, int col) -> Dual {
    Poly val(nv);
    if (contains(c.base_index(), col))
      val = col == c.base_index()[r] ? c.poly_const(GaussRat(1)) : Poly(nv);
    else
      val = c.poly_var(c.vars().w(c.vars().w_slot(c.base_index()[r], col)));
    Poly dot(nv);
    if (col == b) {
      if (contains(c.base_index(), a))
        dot = a == c.base_index()[r] ? c.poly_const(GaussRat(-1L)) : Poly(nv);
      else
        dot = -c.poly_var(c.vars().w(c.vars().w_slot(c.base_index()[r], a)));
    }
    return Dual{RatFunc(std::move(val)), RatFunc(std::move(dot))};
  };
  std::vector<std::vector<Dual>> cols(c.k(), std::vector<Dual>(c.k()));
  for (int r = 0; r < c.k(); ++r)
    for (int cc = 0; cc < c.k(); ++cc) cols[r][cc] = entry(r, red.index[cc]);
  Dual d = dual_det(cols);
  if (red.sign < 0) {
    d.val = -d.val;
    d.dot = -d.dot;
  }
  return d;
}

}  // namespace

VectorFieldExpr gl_action_oracle(const Chart& c, int a, int b) {
  if (a < 1 || a > c.n() || b < 1 || b > c.n())
    throw Error("gl_action_oracle: index out of range");
  VectorFieldExpr v(c);
  Dual zi = flow_minor(c, a, b, c.base_index());
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
    auto [i, j] = c.vars().wpairs[s];
    std::vector<int> seq{i, j};
    seq.insert(seq.end(), c.base_index().begin(), c.base_index().end());
    Dual zij = flow_minor(c, a, b, seq);
    // d/dt [Z^{ijI}/Z^I] at t=0.
    RatFunc wdot = (zij.dot * zi.val - zij.val * zi.dot) / (zi.val * zi.val);
    v.add(c.vars().w(static_cast<int>(s)), wdot);
  }
  return v;
}

std::vector<ChartForm> one_zero_ideal(const Chart& c) {
  std::vector<ChartForm> out;
  int nv = c.nvars();
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s)
    out.push_back(ChartForm::generator(c, c.vars().w(static_cast<int>(s))));
  GaussRat i = GaussRat::i();
  if (c.k() + 1 <= c.n()) {
    for (const auto& J : subsequences(c.n(), c.k() + 1)) {
      Poly eta(nv);
      for (int j : J.index) eta += c.z_signed({j}, J.index) * c.poly_var(c.vars().xi(j));
      ChartForm f = exterior_d(ChartForm::scalar(c, RatFunc(eta * i)));
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  }
  if (c.k() - 1 >= 0) {
    for (const auto& J : subsequences(c.n(), c.k() - 1)) {
      Poly eta(nv);
      for (int j = 1; j <= c.n(); ++j) {
        if (contains(J.index, j)) continue;
        eta += c.z_signed({j}, J.index) * c.poly_var(c.vars().xibar(j));
      }
      ChartForm f = exterior_d(ChartForm::scalar(c, RatFunc(eta * i)));
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  }
  return out;
}

namespace {

using Row = std::vector<RatFunc>;

Row form_to_row(const ChartForm& f, int nv) {
  Row r(nv, RatFunc(nv));
  for (const auto& [m, coeff] : f.terms()) {
    if (mask_degree(m) != 1) throw Error("coframe: generator is not a 1-form");
    r[std::countr_zero(m)] = coeff;
  }
  return r;
}

// In-place elimination of row against pivots; returns first nonzero slot.
int reduce_row(Row& r, const std::vector<std::pair<int, Row>>& pivots) {
  for (const auto& [pc, prow] : pivots) {
    if (r[pc].is_zero()) continue;
    RatFunc factor = r[pc] / prow[pc];
    for (size_t t = 0; t < r.size(); ++t) r[t] -= factor * prow[t];
  }
  for (size_t t = 0; t < r.size(); ++t)
    if (!r[t].is_zero()) return static_cast<int>(t);
  return -1;
}

std::vector<Row> invert(std::vector<Row> G) {
  size_t d = G.size();
  std::vector<Row> inv(d, Row(d, RatFunc(static_cast<int>(G[0].size()))));
  int nv = G[0][0].nvars();
  for (size_t r = 0; r < d; ++r) inv[r][r] = RatFunc::constant(nv, GaussRat(1));
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    while (piv < d && G[piv][col].is_zero()) ++piv;
    if (piv == d) throw Error("reduce_mod_10: frame degenerates");
    std::swap(G[piv], G[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc p = G[col][col];
    for (size_t t = 0; t < d; ++t) {
      G[col][t] /= p;
      inv[col][t] /= p;
    }
    for (size_t r = 0; r < d; ++r) {
      if (r == col || G[r][col].is_zero()) continue;
      RatFunc f = G[r][col];
      for (size_t t = 0; t < d; ++t) {
        G[r][t] -= f * G[col][t];
        inv[r][t] -= f * inv[col][t];
      }
    }
  }
  return inv;
}

}  // namespace

const CoframeData& geometry(const Chart& c) {
  if (c.coframe) return *c.coframe;
  auto data = std::make_unique<CoframeData>();
  int nv = c.nvars();
  data->ideal = one_zero_ideal(c);

  // Independent subset of the (1,0) generators.
  std::vector<std::pair<int, Row>> pivots;
  std::vector<Row> basis10;
  for (const ChartForm& g : data->ideal) {
    Row r = form_to_row(g, nv);
    Row reduced = r;
    int pc = reduce_row(reduced, pivots);
    if (pc < 0) continue;
    pivots.emplace_back(pc, reduced);
    basis10.push_back(std::move(reduced));
  }
  data->rank10 = static_cast<int>(basis10.size());

  // Full coframe: the (1,0) basis followed by its conjugates.
  std::vector<Row> G = basis10;
  const auto& perm = c.conj_perm();
  for (const Row& r : basis10) {
    Row cr(nv, RatFunc(nv));
    for (int t = 0; t < nv; ++t) cr[perm[t]] = c.conj(r[t]);
    G.push_back(std::move(cr));
  }
  if (static_cast<int>(G.size()) != nv) throw Error("reduce_mod_10: frame rank mismatch");
  std::vector<Row> inv = invert(G);

  // proj_rows[s] = (0,1)-part of the coordinate 1-form e_s:
  // sum over antiholomorphic coframe members r of inv[s][r] * G[r].
  data->proj_rows.reserve(nv);
  for (int s = 0; s < nv; ++s) {
    ChartForm row(c);
    for (int r = data->rank10; r < nv; ++r) {
      if (inv[s][r].is_zero()) continue;
      for (int t = 0; t < nv; ++t) {
        RatFunc coeff = inv[s][r] * G[r][t];
        if (!coeff.is_zero()) row.add_term(GenMask{1} << t, coeff);
      }
    }
    data->proj_rows.push_back(std::move(row));
  }

  // Connection of the antiholomorphic hyperplane frame:
  // -(1/N) sum dN/dwbar dwbar.
  const Poly& N = c.norm_poly();
  ChartForm conn(c);
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
    int var = c.vars().wbar(static_cast<int>(s));
    Poly dN = N.partial(var);
    if (dN.is_zero()) continue;
    conn.add_term(GenMask{1} << var, RatFunc(-dN, N));
  }
  data->connection = std::move(conn);

  data->fbar.assign(c.n() + 1, std::vector<VectorFieldExpr>(c.n() + 1));
  for (int a = 1; a <= c.n(); ++a)
    for (int b = 1; b <= c.n(); ++b) data->fbar[a][b] = f_field(c, a, b).conj();

  c.coframe = std::move(data);
  return *c.coframe;
}

const VectorFieldExpr& fbar_field(const Chart& c, int a, int b) {
  return geometry(c).fbar[a][b];
}

ChartForm reduce_mod_10(const ChartForm& w) {
  const Chart& c = w.chart();
  const CoframeData& geo = geometry(c);
  ChartForm out(c, w.twist());
  for (const auto& [m, f] : w.terms()) {
    ChartForm acc = ChartForm::scalar(c, f, w.twist());
    for (GenMask mm = m; mm; mm &= mm - 1) {
      acc = wedge(acc, geo.proj_rows[std::countr_zero(mm)]);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

ChartForm twisted_d(const ChartForm& w) {
  const Chart& c = w.chart();
  ChartForm r(c, w.twist());
  for (const auto& [m, f] : w.terms()) {
    for (int x = 0; x < c.nvars(); ++x) {
      GenMask bit = GenMask{1} << x;
      if (m & bit) continue;
      RatFunc df = f.partial(x);
      if (df.is_zero()) continue;
      int s = merge_sign(bit, m);
      r.add_term(m | bit, s > 0 ? df : -df);
    }
  }
  if (w.twist() != 0) r += wedge(geometry(c).connection, w) * GaussRat(w.twist());
  return r;
}

ChartForm twisted_lie(const VectorFieldExpr& v, const ChartForm& w) {
  return contract(v, twisted_d(w)) + twisted_d(contract(v, w));
}

GenMask vertical_top_mask(const Chart& c) {
  GenMask m = 0;
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s)
    m |= GenMask{1} << c.vars().wbar(static_cast<int>(s));
  return m;
}

ChartForm frame_section(const Chart& c, const std::vector<int>& label) {
  ChartForm out(c, c.n() + 1);
  Poly pref = c.conj(c.z_signed(label));
  if (pref.is_zero()) return out;
  out.add_term(vertical_top_mask(c), RatFunc(std::move(pref)));
  return out;
}

ChartForm lie_on_section(const Chart& c, int a, int b, const std::vector<int>& I,
                         FrameEq variant) {
  int n = c.n(), k = c.k();
  ChartForm sI = frame_section(c, I);
  const Poly& N = c.norm_poly();
  ChartForm out(c, n + 1);
  if (variant == FrameEq::Eq1) {
    if (a == b) out -= sI * GaussRat(k + 1);
    if (!contains(reduce(I).index, a)) {
      std::vector<int> lab{b, a};
      lab.insert(lab.end(), I.begin(), I.end());
      out -= frame_section(c, lab);
    }
    Poly num(c.nvars());
    for (const auto& J : subsequences(n, k)) {
      if (!contains(J.index, a)) continue;
      num += c.z_signed({b, a}, J.index) * c.conj(c.z(J.index));
    }
    out -= sI * RatFunc(num * GaussRat(n + 1), N);
  } else {
    if (a == b) out += sI * GaussRat(n - k + 1);
    if (contains(reduce(I).index, b)) {
      std::vector<int> lab{a, b};
      lab.insert(lab.end(), I.begin(), I.end());
      out += frame_section(c, lab);
    }
    Poly num(c.nvars());
    for (const auto& J : subsequences(n, k)) {
      if (contains(J.index, b)) continue;
      num += c.z_signed({a, b}, J.index) * c.conj(c.z(J.index));
    }
    out += sI * RatFunc(num * GaussRat(n + 1), N);
  }
  return out;
}

ChartForm lie_on_section_direct(const Chart& c, int a, int b, const std::vector<int>& I) {
  return twisted_lie(fbar_field(c, a, b), frame_section(c, I));
}

ChartForm lie_on_section_flow(const Chart& c, int a, int b, const std::vector<int>& I) {
  const VectorFieldExpr& fb = fbar_field(c, a, b);
  const Poly& N = c.norm_poly();
  RatFunc pref(c.conj(c.z_signed(I)));
  // Frame transport of the twist-(n+1) factor plus the divergence of the
  // flow on the top vertical wedge.
  RatFunc scalar = fb.apply(pref);
  RatFunc transport = fb.apply(RatFunc(N)) / RatFunc(N) * GaussRat(-(c.n() + 1));
  RatFunc divergence(c.nvars());
  for (size_t s = 0; s < c.vars().wpairs.size(); ++s) {
    int var = c.vars().wbar(static_cast<int>(s));
    divergence += fb.comp(var).partial(var);
  }
  RatFunc total = scalar + pref * (transport + divergence);
  ChartForm out(c, c.n() + 1);
  out.add_term(vertical_top_mask(c), total);
  return out;
}

CliffordWord translation_word(int n, const std::vector<mpq_class>& t) {
  if (static_cast<int>(t.size()) != 2 * n) throw Error("translation_word: need 2n components");
  CliffordWord w = CliffordWord::one();
  GaussRat i = GaussRat::i();
  for (int a = 1; a <= n; ++a) {
    GaussRat half_x(t[a - 1] / 2);
    GaussRat half_y(t[n + a - 1] / 2);
    // (x^a e_a + x^{n+a} e_{n+1+a}) (sqrt(-1) e_0 + e_{n+1}) / 2
    w.terms.emplace_back(half_x * i, std::vector<int>{a, 0});
    w.terms.emplace_back(half_x, std::vector<int>{a, n + 1});
    w.terms.emplace_back(half_y * i, std::vector<int>{n + 1 + a, 0});
    w.terms.emplace_back(half_y, std::vector<int>{n + 1 + a, n + 1});
  }
  return w;
}

Spinor translation_oracle(const std::vector<mpq_class>& t, const Spinor& psi) {
  if (!psi.extended()) throw Error("translation_oracle: extended module required");
  for (const auto& [idx, c] : psi.coeffs())
    if (contains(idx, 0)) throw Error("translation_oracle: index 0 already present");
  return word_act(translation_word(psi.rank(), t), psi);
}

Spinor translation_transform_prediction(const std::vector<mpq_class>& t, const Spinor& psi) {
  int n = psi.rank();
  GaussRat i = GaussRat::i();
  Spinor out = psi;
  auto coeff_signed = [&](const std::vector<int>& seq) {
    SignedIndex r = reduce(seq);
    GaussRat c = psi.coeff(r.index);
    return r.sign > 0 ? c : -c;
  };
  // Z^{0J} = sqrt(-1)( sum_{j in J} Z^{jJ} xi^j + sum_{j not in J} Z^{jJ} xibar^j ).
  for (int len = 0; len <= n; ++len) {
    for (const auto& J : subsequences(n, len)) {
      GaussRat acc(0);
      for (int j = 1; j <= n; ++j) {
        std::vector<int> seq{j};
        seq.insert(seq.end(), J.index.begin(), J.index.end());
        GaussRat zjj = coeff_signed(seq);
        if (zjj.is_zero()) continue;
        GaussRat xi(t[j - 1], t[n + j - 1]);
        acc += zjj * (contains(J.index, j) ? xi : xi.conj());
      }
      std::vector<int> zero_j{0};
      zero_j.insert(zero_j.end(), J.index.begin(), J.index.end());
      out.add(SignedIndex{zero_j, 1}, i * acc);
    }
  }
  return out;
}

}  // namespace twistor
