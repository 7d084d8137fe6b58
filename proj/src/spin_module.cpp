#include "twistor/spin_module.hpp"

namespace twistor {

Spinor Spinor::basis(int rank, const std::vector<int>& index, bool extended) {
  Spinor s(rank, extended);
  s.add(reduce(index), GaussRat(1));
  return s;
}

GaussRat Spinor::coeff(const std::vector<int>& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? GaussRat(0) : it->second;
}

void Spinor::add(const SignedIndex& idx, const GaussRat& c) {
  GaussRat v = idx.sign > 0 ? c : -c;
  if (v.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(idx.index, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Spinor Spinor::operator-() const {
  Spinor r(rank_, extended_);
  for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
  return r;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  for (const auto& [idx, c] : o.coeffs_) add(SignedIndex{idx, 1}, c);
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  for (const auto& [idx, c] : o.coeffs_) add(SignedIndex{idx, 1}, -c);
  return *this;
}

Spinor Spinor::operator*(const GaussRat& c) const {
  Spinor r(rank_, extended_);
  if (c.is_zero()) return r;
  for (const auto& [idx, co] : coeffs_) r.coeffs_.emplace(idx, co * c);
  return r;
}

Spinor clifford_act(int label, const Spinor& psi) {
  int n = psi.rank();
  int first_count = psi.extended() ? n + 1 : n;  // indices 0..n or 1..n
  int lo = psi.extended() ? 0 : 1;
  int hi = psi.extended() ? 2 * n + 1 : 2 * n;
  if (label < lo || label > hi) throw Error("clifford_act: label out of range");
  bool first_kind = label < lo + first_count;
  int index = first_kind ? label : (psi.extended() ? label - n - 1 : label - n);
  Spinor out(psi.rank(), psi.extended());
  for (const auto& [idx, c] : psi.coeffs()) {
    SignedIndex r = reduce_prepend({index}, idx);
    if (first_kind) {
      out.add(r, c);
    } else {
      // +sqrt(-1) when the index is absent, -sqrt(-1) when present.
      GaussRat factor = contains(idx, index) ? -GaussRat::i() : GaussRat::i();
      out.add(r, c * factor);
    }
  }
  return out;
}

CliffordWord CliffordWord::one() { return CliffordWord{{{GaussRat(1), {}}}}; }

CliffordWord CliffordWord::generator(int label) {
  return CliffordWord{{{GaussRat(1), {label}}}};
}

CliffordWord CliffordWord::operator*(const CliffordWord& o) const {
  CliffordWord out;
  for (const auto& [ca, wa] : terms) {
    for (const auto& [cb, wb] : o.terms) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.terms.emplace_back(ca * cb, w);
    }
  }
  return out;
}

CliffordWord CliffordWord::operator*(const GaussRat& c) const {
  CliffordWord out;
  for (const auto& [co, w] : terms) out.terms.emplace_back(co * c, w);
  return out;
}

CliffordWord CliffordWord::operator+(const CliffordWord& o) const {
  CliffordWord out = *this;
  out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
  return out;
}

CliffordWord CliffordWord::operator-(const CliffordWord& o) const {
  return *this + o * GaussRat(-1L);
}

Spinor word_act(const CliffordWord& wd, const Spinor& psi) {
  Spinor out(psi.rank(), psi.extended());
  for (const auto& [c, labels] : wd.terms) {
    Spinor cur = psi;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) cur = clifford_act(*it, cur);
    out += cur * c;
  }
  return out;
}

std::map<int, Spinor> grade_decompose(const Spinor& psi) {
  if (psi.extended()) throw Error("grade_decompose: extended module has no U(n)-grading");
  std::map<int, Spinor> out;
  for (const auto& [idx, c] : psi.coeffs()) {
    int k = static_cast<int>(idx.size());
    auto [it, inserted] = out.emplace(k, Spinor(psi.rank()));
    it->second.add(SignedIndex{idx, 1}, c);
  }
  return out;
}

CliffordWord unitary_bivector(int a, int b, int n) {
  if (a < 1 || a > n || b < 1 || b > n) throw Error("unitary_bivector: index out of range");
  GaussRat quarter = GaussRat::rational(-1, 4);
  GaussRat i = GaussRat::i();
  // -R_a L_b = -1/4 (e_a - i e_{n+a})(e_b + i e_{n+b})
  CliffordWord out;
  out.terms.emplace_back(quarter, std::vector<int>{a, b});
  out.terms.emplace_back(quarter * i, std::vector<int>{a, n + b});
  out.terms.emplace_back(quarter * -i, std::vector<int>{n + a, b});
  out.terms.emplace_back(quarter, std::vector<int>{n + a, n + b});
  return out;
}

}  // namespace twistor
