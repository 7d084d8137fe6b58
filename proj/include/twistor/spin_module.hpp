#ifndef TWISTOR_SPIN_MODULE_HPP
#define TWISTOR_SPIN_MODULE_HPP

#include <map>
#include <vector>

#include "twistor/index_algebra.hpp"

namespace twistor {

/// Element of the spin module: finite linear combination of basis
/// spinors indexed by reduced increasing multi-indices.
///
/// Plain module: indices over {1..n}, generators e_1..e_{2n}.
/// Extended module: indices over {0..n}, generators e_0..e_{2n+1};
/// e_0..e_n act by prepending the index, e_{n+1}..e_{2n+1} are the
/// +/- sqrt(-1) partners of indices 0..n.
class Spinor {
 public:
  Spinor(int rank, bool extended = false) : rank_(rank), extended_(extended) {}

  static Spinor basis(int rank, const std::vector<int>& index, bool extended = false);

  int rank() const { return rank_; }
  bool extended() const { return extended_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, GaussRat>& coeffs() const { return coeffs_; }
  GaussRat coeff(const std::vector<int>& index) const;

  void add(const SignedIndex& idx, const GaussRat& c);

  Spinor operator-() const;
  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  Spinor operator*(const GaussRat& c) const;
  friend bool operator==(const Spinor& a, const Spinor& b) {
    return a.rank_ == b.rank_ && a.extended_ == b.extended_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int rank_;
  bool extended_;
  std::map<std::vector<int>, GaussRat> coeffs_;
};

/// One Clifford generator applied to a spinor.  Labels 1..2n for the
/// plain module, 0..2n+1 for the extended one.
Spinor clifford_act(int label, const Spinor& psi);

/// Formal complex combination of generator words.
struct CliffordWord {
  std::vector<std::pair<GaussRat, std::vector<int>>> terms;

  static CliffordWord one();
  static CliffordWord generator(int label);
  CliffordWord operator*(const CliffordWord& o) const;  // concatenation
  CliffordWord operator*(const GaussRat& c) const;
  CliffordWord operator+(const CliffordWord& o) const;
  CliffordWord operator-(const CliffordWord& o) const;
};

/// Right-to-left application of every word, linear in both arguments.
Spinor word_act(const CliffordWord& wd, const Spinor& psi);

/// Split by reduced index length |I|; parts sum back to psi.
std::map<int, Spinor> grade_decompose(const Spinor& psi);

/// Clifford word realizing the standard gl(n) basis element E^a_b inside
/// the (complexified) spin representation.  Convention: with raising and
/// lowering words R_a = (e_a - i e_{n+a})/2 and L_a = (e_a + i e_{n+a})/2,
/// the returned word is -R_a L_b.  It preserves every grade, the diagonal
/// words sum to the grade operator, and the gl commutation relations hold.
CliffordWord unitary_bivector(int a, int b, int n);

}  // namespace twistor

#endif
