#include "twistor/chart.hpp"

#include <algorithm>

#include "twistor/twistor_geometry.hpp"

namespace twistor {

int VarTable::w_slot(int i, int j) const {
  for (size_t s = 0; s < wpairs.size(); ++s)
    if (wpairs[s] == std::make_pair(i, j)) return static_cast<int>(s);
  throw Error("VarTable: unknown fiber coordinate pair");
}

VarTable::Kind VarTable::kind(int var) const {
  int m = static_cast<int>(wpairs.size());
  if (var < n) return Kind::Xi;
  if (var < 2 * n) return Kind::XiBar;
  if (var < 2 * n + m) return Kind::W;
  if (var < 2 * n + 2 * m) return Kind::WBar;
  throw Error("VarTable: variable out of range");
}

std::vector<int> VarTable::conj_perm() const {
  int m = static_cast<int>(wpairs.size());
  std::vector<int> perm(nvars());
  for (int a = 0; a < n; ++a) {
    perm[a] = n + a;
    perm[n + a] = a;
  }
  for (int s = 0; s < m; ++s) {
    perm[2 * n + s] = 2 * n + m + s;
    perm[2 * n + m + s] = 2 * n + s;
  }
  return perm;
}

std::vector<std::string> VarTable::names() const {
  std::vector<std::string> out;
  for (int a = 1; a <= n; ++a) out.push_back("xi" + std::to_string(a));
  for (int a = 1; a <= n; ++a) out.push_back("xibar" + std::to_string(a));
  for (auto [i, j] : wpairs) out.push_back("w" + std::to_string(i) + std::to_string(j));
  for (auto [i, j] : wpairs) out.push_back("wbar" + std::to_string(i) + std::to_string(j));
  return out;
}

VarTable base_table(int n) { return VarTable{n, {}}; }

Chart::Chart(int n, int k, std::vector<int> base_index)
    : n_(n), k_(k), I_(std::move(base_index)) {
  if (k < 0 || k > n) throw Error("Chart: k out of range");
  if (static_cast<int>(I_.size()) != k || !std::is_sorted(I_.begin(), I_.end()) ||
      std::adjacent_find(I_.begin(), I_.end()) != I_.end())
    throw Error("Chart: base index must be strictly increasing with |I| = k");
  for (int i : I_)
    if (i < 1 || i > n) throw Error("Chart: base index entry out of range");
  vars_.n = n;
  for (int i : I_)
    for (int j = 1; j <= n; ++j)
      if (!contains(I_, j)) vars_.wpairs.emplace_back(i, j);
  std::sort(vars_.wpairs.begin(), vars_.wpairs.end());
  conj_perm_ = vars_.conj_perm();
  names_ = vars_.names();
  // Canonical section: identity block on the I columns, w elsewhere.
  int nv = vars_.nvars();
  section_.assign(k, std::vector<Poly>(n, Poly(nv)));
  for (int r = 0; r < k; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (contains(I_, c)) {
        if (c == I_[r]) section_[r][c - 1] = Poly::constant(nv, GaussRat(1));
      } else {
        section_[r][c - 1] = Poly::variable(nv, vars_.w(vars_.w_slot(I_[r], c)));
      }
    }
  }
}

Chart::~Chart() = default;
Chart::Chart(Chart&&) noexcept = default;

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& M, int nvars) {
  size_t m = M.size();
  if (m == 0) return Poly::constant(nvars, GaussRat(1));
  if (m == 1) return M[0][0];
  Poly acc(nvars);
  int sign = 1;
  for (size_t r = 0; r < m; ++r) {
    if (!M[r][0].is_zero()) {
      std::vector<std::vector<Poly>> sub;
      for (size_t rr = 0; rr < m; ++rr) {
        if (rr == r) continue;
        sub.emplace_back(M[rr].begin() + 1, M[rr].end());
      }
      Poly term = M[r][0] * poly_det(sub, nvars);
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

const Poly& Chart::z(const std::vector<int>& J) const {
  if (static_cast<int>(J.size()) != k_) throw Error("Chart::z: |J| != k");
  auto it = zcache_.find(J);
  if (it != zcache_.end()) return it->second;
  std::vector<std::vector<Poly>> cols(k_, std::vector<Poly>(k_, Poly(nvars())));
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < k_; ++c) cols[r][c] = section_[r][J[c] - 1];
  return zcache_.emplace(J, poly_det(cols, nvars())).first->second;
}

Poly Chart::z_signed(const std::vector<int>& seq) const {
  SignedIndex r = reduce(seq);
  if (static_cast<int>(r.index.size()) != k_) return Poly(nvars());
  Poly p = z(r.index);
  return r.sign > 0 ? p : -p;
}

Poly Chart::z_signed(std::initializer_list<int> prefix, const std::vector<int>& tail) const {
  std::vector<int> seq(prefix);
  seq.insert(seq.end(), tail.begin(), tail.end());
  return z_signed(seq);
}

const Poly& Chart::norm_poly() const {
  if (!norm_) {
    Poly acc(nvars());
    for (const auto& J : subsequences(n_, k_)) {
      const Poly& zj = z(J.index);
      acc += zj * conj(zj);
    }
    norm_ = acc;
  }
  return *norm_;
}

RatFunc Chart::dz_dw(const std::vector<int>& J, int i, int j) const {
  if (!contains(I_, i) || contains(I_, j)) throw Error("Chart::dz_dw: invalid labels");
  if (static_cast<int>(J.size()) != k_) throw Error("Chart::dz_dw: |J| != k");
  if (!contains(J, i) && contains(J, j)) return rf(-z_signed({i, j}, J));
  return RatFunc(nvars());
}

Poly Chart::plucker_identity_2(const std::vector<int>& J, const std::vector<int>& K) const {
  Poly acc(nvars());
  for (int a : J) {
    if (contains(K, a)) continue;
    acc += z_signed({a}, J) * z_signed({a}, K);
  }
  return acc;
}

Poly Chart::plucker_identity_3(int a, int b, const std::vector<int>& J,
                               const std::vector<int>& K) const {
  Poly lhs(nvars());
  for (int j : J) {
    if (contains(K, j)) continue;
    lhs += z_signed({a, j}, J) * z_signed({b, j}, K);
  }
  Poly rhs(nvars());
  if (!contains(K, a)) rhs -= z(J) * z_signed({b, a}, K);
  if (!contains(J, a)) rhs += z_signed({b, a}, J) * z(K);
  return lhs - rhs;
}

GaussRat det(const std::vector<std::vector<GaussRat>>& M) {
  size_t m = M.size();
  if (m == 0) return GaussRat(1);
  if (m == 1) return M[0][0];
  GaussRat acc(0);
  int sign = 1;
  for (size_t r = 0; r < m; ++r) {
    if (!M[r][0].is_zero()) {
      std::vector<std::vector<GaussRat>> sub;
      for (size_t rr = 0; rr < m; ++rr) {
        if (rr == r) continue;
        sub.emplace_back(M[rr].begin() + 1, M[rr].end());
      }
      GaussRat term = M[r][0] * det(sub);
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

std::map<std::vector<int>, GaussRat> plucker_minors(
    const std::vector<std::vector<GaussRat>>& M) {
  int k = static_cast<int>(M.size());
  int n = k == 0 ? 0 : static_cast<int>(M[0].size());
  std::map<std::vector<int>, GaussRat> out;
  bool any_nonzero = k == 0;
  for (const auto& J : subsequences(std::max(n, k), k)) {
    if (!J.index.empty() && J.index.back() > n) continue;
    std::vector<std::vector<GaussRat>> cols(k, std::vector<GaussRat>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) cols[r][c] = M[r][J.index[c] - 1];
    GaussRat d = det(cols);
    if (!d.is_zero()) any_nonzero = true;
    out[J.index] = d;
  }
  if (k == 0) out[{}] = GaussRat(1);
  if (!any_nonzero) throw Error("plucker_minors: degenerate matrix (rank < k)");
  return out;
}

GaussRat minor_signed(const std::map<std::vector<int>, GaussRat>& Z,
                      const std::vector<int>& seq) {
  SignedIndex r = reduce(seq);
  auto it = Z.find(r.index);
  if (it == Z.end()) return GaussRat(0);
  return r.sign > 0 ? it->second : -it->second;
}

}  // namespace twistor
