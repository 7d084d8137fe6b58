#ifndef TWISTOR_RATFUNC_HPP
#define TWISTOR_RATFUNC_HPP

#include <utility>

#include "twistor/poly.hpp"

namespace twistor {

/// Rational function: numerator / denominator, always normalized so the
/// gcd is a unit and the denominator is monic under graded lex.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(int nvars)
      : num_(nvars), den_(Poly::constant(nvars, GaussRat(1))) {}
  RatFunc(Poly num, Poly den);
  RatFunc(Poly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Poly::constant(num_.nvars(), GaussRat(1))) {}

  static RatFunc constant(int nvars, GaussRat c) { return RatFunc(Poly::constant(nvars, c)); }
  static RatFunc variable(int nvars, int var) { return RatFunc(Poly::variable(nvars, var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc operator*(const GaussRat& c) const;
  RatFunc inverse() const;

  /// Quotient-rule partial derivative.
  RatFunc partial(int var) const;
  RatFunc conj(const std::vector<int>& conj_perm) const;
  GaussRat eval(const std::vector<GaussRat>& point) const;  // throws on pole
  RatFunc extended(int new_nvars) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  /// Assembles num/den that are already known coprime (monic-scales the
  /// denominator, canonicalizes zero).
  static RatFunc reduced(Poly num, Poly den);

  Poly num_, den_;
};

}  // namespace twistor

#endif
