#ifndef TWISTOR_GAUSS_RAT_HPP
#define TWISTOR_GAUSS_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace twistor {

/// Error type for all arithmetic / contract violations in the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gaussian rational: re + im*sqrt(-1), both components exact rationals
/// kept in lowest terms by mpq_class.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
  static GaussRat rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// re^2 + im^2, the multiplicative norm to Q.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const;

  /// Canonical text form: "a/b", "c/d*i", "a/b+c/d*i", "a/b-c/d*i", "0".
  std::string str() const;
  /// Parses the canonical text form (also accepts bare "i", "-i").
  static GaussRat parse(const std::string& text);

 private:
  mpq_class re_, im_;
};

}  // namespace twistor

#endif
