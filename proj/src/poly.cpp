#include "twistor/poly.hpp"

#include <algorithm>

namespace twistor {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: lexicographic with earlier variables weighing more.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Poly Poly::constant(int nvars, GaussRat c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw Error("Poly::variable: index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[var] = 1;
  p.add_term(m, GaussRat(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussRat Poly::constant_value() const {
  Monomial zero(nvars_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

GaussRat Poly::leading_coeff() const {
  if (terms_.empty()) return GaussRat(0);
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  Monomial prod(a.nvars_, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) prod[v] = ma[v] + mb[v];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const GaussRat& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw Error("Poly::partial: unknown variable");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * GaussRat(m[var]));
  }
  return r;
}

Poly Poly::conj(const std::vector<int>& conj_perm) const {
  Poly r(nvars_);
  Monomial p(nvars_, 0);
  for (const auto& [m, c] : terms_) {
    for (int v = 0; v < nvars_; ++v) p[conj_perm[v]] = m[v];
    r.add_term(p, c.conj());
  }
  return r;
}

GaussRat Poly::eval(const std::vector<GaussRat>& point) const {
  GaussRat acc(0);
  for (const auto& [m, c] : terms_) {
    GaussRat t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v]; ++e) t *= point[v];
    acc += t;
  }
  return acc;
}

Poly Poly::extended(int new_nvars) const {
  if (new_nvars < nvars_) throw Error("Poly::extended: shrinking not supported");
  Poly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.resize(new_nvars, 0);
    r.add_term(mm, c);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending graded-lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    std::string cs = c.str();
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-', 1) != std::string::npos || (cs[0] == '-' && !out.empty());
    if (!out.empty()) out += needs_parens || cs[0] != '-' ? "+" : "";
    if (mono.empty()) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      out += mono;
    } else if (c == GaussRat(-1L)) {
      out += "-" + mono;
    } else {
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact division and gcd.

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (size_t v = 0; v < d.size(); ++v)
    if (d[v] > m[v]) return false;
  return true;
}

// Univariate view of p in variable v: coefficient polys keyed by v-degree.
std::map<int, Poly> univariate_view(const Poly& p, int v) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    int e = mm[v];
    mm[v] = 0;
    auto [it, inserted] = out.emplace(e, Poly(p.nvars()));
    it->second.add_term(mm, c);
  }
  return out;
}

Poly assemble(const std::map<int, Poly>& view, int v, int nvars) {
  Poly out(nvars);
  for (const auto& [e, coeff] : view) {
    for (const auto& [m, c] : coeff.terms()) {
      Monomial mm = m;
      mm[v] += e;
      out.add_term(mm, c);
    }
  }
  return out;
}

int top_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coeff().inverse();
}

// content (monic gcd of univariate coefficients) and primitive part.
std::pair<Poly, Poly> content_split(const Poly& p, int v) {
  Poly content(p.nvars());
  for (const auto& [e, coeff] : univariate_view(p, v)) content = poly_gcd(content, coeff);
  return {content, exact_div(p, content)};
}

// Pseudo-remainder of a by b in variable v (primitive PRS step).
Poly pseudo_rem(Poly a, const Poly& b, int v) {
  auto bv = univariate_view(b, v);
  int db = bv.rbegin()->first;
  const Poly& lb = bv.rbegin()->second;
  while (!a.is_zero()) {
    auto av = univariate_view(a, v);
    int da = av.rbegin()->first;
    if (da < db) break;
    const Poly& la = av.rbegin()->second;
    // a <- lb*a - la * x^(da-db) * b ; kills the leading v-term.
    Poly shift = Poly::variable(a.nvars(), v);
    Poly xpow = Poly::constant(a.nvars(), GaussRat(1));
    for (int i = 0; i < da - db; ++i) xpow *= shift;
    a = lb * a - la * xpow * b;
  }
  return a;
}

}  // namespace

namespace {

bool try_exact_div(const Poly& a, const Poly& b, Poly& quot) {
  Poly rem = a;
  quot = Poly(a.nvars());
  const Monomial& lm = b.terms().rbegin()->first;
  const GaussRat lc = b.leading_coeff();
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().rbegin();
    if (!divides(lm, m)) return false;
    Monomial q = m;
    for (size_t v = 0; v < q.size(); ++v) q[v] -= lm[v];
    GaussRat qc = c / lc;
    Poly qt(a.nvars());
    qt.add_term(q, qc);
    quot += qt;
    rem -= qt * b;
  }
  return true;
}

// Componentwise minimum of all exponent vectors.
Monomial monomial_content(const Poly& p) {
  Monomial mc = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    for (size_t v = 0; v < mc.size(); ++v) mc[v] = std::min(mc[v], m[v]);
  return mc;
}

Poly shift_down(const Poly& p, const Monomial& mc) {
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    for (size_t v = 0; v < mm.size(); ++v) mm[v] -= mc[v];
    out.add_term(mm, c);
  }
  return out;
}

}  // namespace

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("exact_div: division by zero polynomial");
  Poly quot(a.nvars());
  if (!try_exact_div(a, b, quot)) throw Error("exact_div: not divisible");
  return quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant())
    return Poly::constant(a.nvars(), GaussRat(1));
  if (a == b || a == -b) return monic(a);

  // Split off the common monomial factor first.
  Monomial ca_m = monomial_content(a);
  Monomial cb_m = monomial_content(b);
  Monomial cg_m(a.nvars(), 0);
  bool nontrivial = false;
  for (int v = 0; v < a.nvars(); ++v) {
    cg_m[v] = std::min(ca_m[v], cb_m[v]);
    if (ca_m[v] > 0 || cb_m[v] > 0) nontrivial = true;
  }
  if (nontrivial) {
    Poly g = poly_gcd(shift_down(a, ca_m), shift_down(b, cb_m));
    Poly mono(a.nvars());
    mono.add_term(cg_m, GaussRat(1));
    return monic(g * mono);
  }

  // Primitive parts in disjoint variables are coprime.
  bool overlap = false;
  for (int v = 0; v < a.nvars() && !overlap; ++v)
    if (a.degree_in(v) > 0 && b.degree_in(v) > 0) overlap = true;
  if (!overlap) return Poly::constant(a.nvars(), GaussRat(1));

  // Cheap divisibility probes before the remainder sequence.
  Poly quot(a.nvars());
  if (a.degree() >= b.degree() && try_exact_div(a, b, quot)) return monic(b);
  if (b.degree() >= a.degree() && try_exact_div(b, a, quot)) return monic(a);

  int v = top_variable(a, b);
  if (v < 0) return Poly::constant(a.nvars(), GaussRat(1));
  auto [ca, pa] = content_split(a, v);
  auto [cb, pb] = content_split(b, v);
  Poly cg = poly_gcd(ca, cb);
  // Primitive PRS in v.
  Poly p = pa, q = pb;
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = pseudo_rem(p, q, v);
    p = q;
    if (!r.is_zero()) r = content_split(r, v).second;
    q = r;
  }
  return monic(cg * content_split(p, v).second);
}

}  // namespace twistor
