#include "twistor/forms.hpp"

#include <bit>

namespace twistor {

int mask_degree(GenMask m) { return std::popcount(m); }

int merge_sign(GenMask a, GenMask b) {
  // Inversions when the ascending b-list is appended to the ascending
  // a-list and the concatenation is sorted.
  int inv = 0;
  for (GenMask bb = b; bb; bb &= bb - 1) {
    int g = std::countr_zero(bb);
    inv += std::popcount(a >> (g + 1));
  }
  return inv % 2 == 0 ? 1 : -1;
}

ChartForm ChartForm::scalar(const Chart& c, RatFunc f, int twist) {
  ChartForm out(c, twist);
  out.add_term(0, f);
  return out;
}

ChartForm ChartForm::generator(const Chart& c, int var, int twist) {
  if (var < 0 || var >= c.nvars()) throw Error("ChartForm::generator: out of range");
  ChartForm out(c, twist);
  out.add_term(GenMask{1} << var, RatFunc::constant(c.nvars(), GaussRat(1)));
  return out;
}

const Chart& ChartForm::chart() const {
  if (!chart_) throw Error("ChartForm: no chart context");
  return *chart_;
}

RatFunc ChartForm::coeff(GenMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc(chart().nvars()) : it->second;
}

void ChartForm::add_term(GenMask m, const RatFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ChartForm ChartForm::operator-() const {
  ChartForm r(*chart_, twist_);
  for (const auto& [m, f] : terms_) r.terms_.emplace(m, -f);
  return r;
}

namespace {
void require_compatible(const ChartForm& a, const ChartForm& b) {
  if (&a.chart() != &b.chart()) throw Error("ChartForm: chart context mismatch");
  if (a.twist() != b.twist()) throw Error("ChartForm: twist mismatch");
}
}  // namespace

ChartForm& ChartForm::operator+=(const ChartForm& o) {
  if (!chart_) return *this = o;
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) twist_ = o.twist_;
  require_compatible(*this, o);
  for (const auto& [m, f] : o.terms_) add_term(m, f);
  return *this;
}

ChartForm& ChartForm::operator-=(const ChartForm& o) { return *this += -o; }

ChartForm ChartForm::operator*(const RatFunc& f) const {
  ChartForm r(*chart_, twist_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * f);
  return r;
}

ChartForm ChartForm::operator*(const GaussRat& c) const {
  ChartForm r(*chart_, twist_);
  for (const auto& [m, f] : terms_) r.add_term(m, f * c);
  return r;
}

ChartForm ChartForm::coeff_partial(int var) const {
  ChartForm r(*chart_, twist_);
  for (const auto& [m, f] : terms_) r.add_term(m, f.partial(var));
  return r;
}

ChartForm ChartForm::conj() const {
  if (twist_ != 0) throw Error("ChartForm::conj: twisted form");
  const auto& perm = chart().conj_perm();
  ChartForm r(*chart_, 0);
  for (const auto& [m, f] : terms_) {
    GenMask cm = 0;
    for (GenMask mm = m; mm; mm &= mm - 1) cm |= GenMask{1} << perm[std::countr_zero(mm)];
    // Sign: conjugation permutes the ascending generator list.
    std::vector<int> perm_list;
    for (GenMask mm = m; mm; mm &= mm - 1) perm_list.push_back(perm[std::countr_zero(mm)]);
    int inv = 0;
    for (size_t x = 0; x < perm_list.size(); ++x)
      for (size_t y = x + 1; y < perm_list.size(); ++y)
        if (perm_list[x] > perm_list[y]) ++inv;
    RatFunc cf = chart().conj(f);
    r.add_term(cm, inv % 2 == 0 ? cf : -cf);
  }
  return r;
}

const Chart& VectorFieldExpr::chart() const {
  if (!chart_) throw Error("VectorFieldExpr: no chart context");
  return *chart_;
}

RatFunc VectorFieldExpr::comp(int var) const {
  auto it = comps_.find(var);
  return it == comps_.end() ? RatFunc(chart().nvars()) : it->second;
}

void VectorFieldExpr::add(int var, const RatFunc& f) {
  if (f.is_zero()) return;
  if (var < 0 || var >= chart().nvars()) throw Error("VectorFieldExpr: generator out of range");
  auto [it, inserted] = comps_.emplace(var, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

VectorFieldExpr VectorFieldExpr::operator-() const {
  VectorFieldExpr r(*chart_);
  for (const auto& [v, f] : comps_) r.comps_.emplace(v, -f);
  return r;
}

VectorFieldExpr& VectorFieldExpr::operator+=(const VectorFieldExpr& o) {
  if (!chart_) return *this = o;
  for (const auto& [v, f] : o.comps_) add(v, f);
  return *this;
}

VectorFieldExpr& VectorFieldExpr::operator-=(const VectorFieldExpr& o) { return *this += -o; }

RatFunc VectorFieldExpr::apply(const RatFunc& f) const {
  RatFunc acc(chart().nvars());
  for (const auto& [v, c] : comps_) acc += c * f.partial(v);
  return acc;
}

VectorFieldExpr VectorFieldExpr::conj() const {
  const auto& perm = chart().conj_perm();
  VectorFieldExpr r(*chart_);
  for (const auto& [v, f] : comps_) r.add(perm[v], chart().conj(f));
  return r;
}

ChartForm wedge(const ChartForm& a, const ChartForm& b) {
  if (&a.chart() != &b.chart()) throw Error("wedge: chart context mismatch");
  ChartForm r(a.chart(), a.twist() + b.twist());
  for (const auto& [ma, fa] : a.terms()) {
    for (const auto& [mb, fb] : b.terms()) {
      if (ma & mb) continue;
      int s = merge_sign(ma, mb);
      RatFunc c = fa * fb;
      r.add_term(ma | mb, s > 0 ? c : -c);
    }
  }
  return r;
}

ChartForm contract(const VectorFieldExpr& v, const ChartForm& w) {
  if (&v.chart() != &w.chart()) throw Error("contract: chart context mismatch");
  ChartForm r(w.chart(), w.twist());
  for (const auto& [m, f] : w.terms()) {
    for (const auto& [g, vc] : v.comps()) {
      GenMask bit = GenMask{1} << g;
      if (!(m & bit)) continue;
      int below = std::popcount(m & (bit - 1));
      RatFunc c = vc * f;
      r.add_term(m & ~bit, below % 2 == 0 ? c : -c);
    }
  }
  return r;
}

ChartForm exterior_d(const ChartForm& w) {
  if (w.twist() != 0)
    throw Error("exterior_d: twisted form (use the twisted operator)");
  const Chart& c = w.chart();
  ChartForm r(c, 0);
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
  return r;
}

ChartForm lie_derivative(const VectorFieldExpr& v, const ChartForm& w) {
  return contract(v, exterior_d(w)) + exterior_d(contract(v, w));
}

VectorFieldExpr vf_bracket(const VectorFieldExpr& v, const VectorFieldExpr& u) {
  if (&v.chart() != &u.chart()) throw Error("vf_bracket: chart context mismatch");
  VectorFieldExpr r(v.chart());
  for (const auto& [g, uc] : u.comps()) r.add(g, v.apply(uc));
  for (const auto& [g, vc] : v.comps()) r.add(g, -u.apply(vc));
  return r;
}

}  // namespace twistor
