#ifndef TWISTOR_CHART_HPP
#define TWISTOR_CHART_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistor/index_algebra.hpp"
#include "twistor/ratfunc.hpp"

namespace twistor {

/// Names and conjugation pairing for the variables of one chart context.
///
/// Global slot order: xi_1..xi_n, xibar_1..xibar_n, w_(i,j) ascending,
/// wbar_(i,j) ascending.  A base-only table has no w pairs.
struct VarTable {
  int n = 0;
  std::vector<std::pair<int, int>> wpairs;  // (i in I, j not in I), sorted

  int nvars() const { return 2 * n + 2 * static_cast<int>(wpairs.size()); }
  int xi(int a) const { return a - 1; }            // a in 1..n
  int xibar(int a) const { return n + a - 1; }
  int w(int slot) const { return 2 * n + slot; }
  int wbar(int slot) const { return 2 * n + static_cast<int>(wpairs.size()) + slot; }
  int w_slot(int i, int j) const;  // throws on unknown pair

  enum class Kind { Xi, XiBar, W, WBar };
  Kind kind(int var) const;

  /// Conjugation involution on variable slots.
  std::vector<int> conj_perm() const;
  std::vector<std::string> names() const;
};

/// Base-only table (no fiber coordinates) used for Dolbeault data.
VarTable base_table(int n);

struct CoframeData;  // internal: cached (1,0)-reduction frame

/// Chart U_I of the Grassmannian fiber: base index I with |I| = k,
/// coordinates w_{ij} for i in I, j not in I.  The canonical section is
/// the k x n matrix with identity block on the I columns.
class Chart {
 public:
  Chart(int n, int k, std::vector<int> base_index);
  ~Chart();
  Chart(Chart&&) noexcept;

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& base_index() const { return I_; }
  const VarTable& vars() const { return vars_; }
  int nvars() const { return vars_.nvars(); }

  /// Chart polynomial z^J = minor of the canonical section on columns J.
  /// J must be strictly increasing with |J| = k.
  const Poly& z(const std::vector<int>& J) const;
  /// Sign-extended z: reduces the sequence; 0 if the reduced length is
  /// not k, otherwise sign * z(reduced).
  Poly z_signed(const std::vector<int>& seq) const;
  Poly z_signed(std::initializer_list<int> prefix, const std::vector<int>& tail) const;

  /// N = sum_J z^J conj(z^J) over all |J| = k (z^I = 1 term included).
  const Poly& norm_poly() const;

  /// Closed form for the derivative of z^J along w_{ij}:
  /// -z^{ijJ} when i not in J and j in J, else 0.
  RatFunc dz_dw(const std::vector<int>& J, int i, int j) const;

  /// Chart polynomial for Plücker quadratic identity with |J| = k+1,
  /// |K| = k-1: sum_{a in J\K} z^{aJ} z^{aK}; identically 0.
  Poly plucker_identity_2(const std::vector<int>& J, const std::vector<int>& K) const;
  /// LHS - RHS of the exchange identity for |J| = |K| = k; identically 0.
  Poly plucker_identity_3(int a, int b, const std::vector<int>& J,
                          const std::vector<int>& K) const;

  RatFunc rf(Poly p) const { return RatFunc(std::move(p)); }
  RatFunc rf_const(GaussRat c) const { return RatFunc::constant(nvars(), c); }
  Poly poly_const(GaussRat c) const { return Poly::constant(nvars(), c); }
  Poly poly_var(int var) const { return Poly::variable(nvars(), var); }
  RatFunc conj(const RatFunc& f) const { return f.conj(conj_perm_); }
  Poly conj(const Poly& p) const { return p.conj(conj_perm_); }
  const std::vector<int>& conj_perm() const { return conj_perm_; }
  const std::vector<std::string>& var_names() const { return names_; }

  // Lazy caches owned by the chart (built by twistor_geometry).
  mutable std::unique_ptr<CoframeData> coframe;

 private:
  int n_, k_;
  std::vector<int> I_;
  VarTable vars_;
  std::vector<int> conj_perm_;
  std::vector<std::string> names_;
  std::vector<std::vector<Poly>> section_;  // k x n canonical section
  mutable std::map<std::vector<int>, Poly> zcache_;
  mutable std::optional<Poly> norm_;
};

/// Independent minor oracle: Z^J as the k x k minor of M on columns J,
/// for an arbitrary k x n matrix.  Keys are increasing |J| = k indices.
std::map<std::vector<int>, GaussRat> plucker_minors(
    const std::vector<std::vector<GaussRat>>& M);

/// Sign-extended lookup in a minor table; 0 when the reduced length
/// differs from the table's index length.
GaussRat minor_signed(const std::map<std::vector<int>, GaussRat>& Z,
                      const std::vector<int>& seq);

/// Determinant of a square GaussRat matrix (cofactor expansion).
GaussRat det(const std::vector<std::vector<GaussRat>>& M);

}  // namespace twistor

#endif
