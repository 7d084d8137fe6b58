#ifndef TWISTOR_POLY_HPP
#define TWISTOR_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "twistor/gauss_rat.hpp"

namespace twistor {

/// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<int>;

/// Graded lexicographic order (ascending); the map's last entry is the
/// leading term.  Fixed once so serialized output is deterministic.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

/// Sparse multivariate polynomial over Gaussian rationals.
///
/// Variables are positional: the ambient VarTable fixes the meaning of
/// each slot.  Zero coefficients are never stored.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, GaussRat c);
  static Poly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value if is_constant()).
  GaussRat constant_value() const;
  int degree() const;  // total degree, -1 for zero
  int degree_in(int var) const;

  const std::map<Monomial, GaussRat, GradedLex>& terms() const { return terms_; }
  /// Leading coefficient under graded lex.
  GaussRat leading_coeff() const;

  void add_term(const Monomial& m, const GaussRat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly operator*(const GaussRat& c) const;

  /// Formal partial derivative with respect to one variable slot.
  Poly partial(int var) const;
  /// Applies a variable permutation and conjugates all coefficients.
  Poly conj(const std::vector<int>& conj_perm) const;
  /// Evaluation at a rational point (one value per variable).
  GaussRat eval(const std::vector<GaussRat>& point) const;
  /// Pads with extra trailing variable slots (exponent 0).
  Poly extended(int new_nvars) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Monomial, GaussRat, GradedLex> terms_;
};

/// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic (leading coefficient 1) gcd; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace twistor

#endif
