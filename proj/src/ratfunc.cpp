#include "twistor/ratfunc.hpp"

namespace twistor {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), GaussRat(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  GaussRat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussRat inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::reduced(Poly num, Poly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = Poly::constant(r.num_.nvars(), GaussRat(1));
    return r;
  }
  GaussRat lc = r.den_.leading_coeff();
  if (!lc.is_one()) {
    GaussRat inv = lc.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

// Sums and products keep operands reduced, so the gcds below act on the
// stored polynomials instead of their products.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    Poly t = a.num_ + b.num_;
    if (t.is_zero()) return RatFunc(a.nvars());
    Poly g = poly_gcd(t, a.den_);
    if (g.is_constant()) return RatFunc::reduced(std::move(t), a.den_);
    return RatFunc::reduced(exact_div(t, g), exact_div(a.den_, g));
  }
  Poly d1 = poly_gcd(a.den_, b.den_);
  if (d1.is_constant())
    return RatFunc::reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly t = a.num_ * exact_div(b.den_, d1) + b.num_ * exact_div(a.den_, d1);
  if (t.is_zero()) return RatFunc(a.nvars());
  Poly d2 = poly_gcd(t, d1);
  Poly num = d2.is_constant() ? std::move(t) : exact_div(t, d2);
  Poly den = exact_div(a.den_, d1) *
             (d2.is_constant() ? b.den_ : exact_div(b.den_, d2));
  return RatFunc::reduced(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  Poly na = g1.is_constant() ? a.num_ : exact_div(a.num_, g1);
  Poly nb = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
  Poly da = g2.is_constant() ? a.den_ : exact_div(a.den_, g2);
  Poly db = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
  return RatFunc::reduced(na * nb, da * db);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("RatFunc: division by zero");
  return a * b.inverse();
}

RatFunc RatFunc::operator*(const GaussRat& c) const {
  RatFunc r;
  r.num_ = num_ * c;
  r.den_ = den_;
  if (r.num_.is_zero()) r.den_ = Poly::constant(num_.nvars(), GaussRat(1));
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("RatFunc: inverse of zero");
  return reduced(den_, num_);  // already coprime
}

RatFunc RatFunc::partial(int var) const {
  if (is_polynomial()) {
    RatFunc r;
    r.num_ = num_.partial(var) * den_.leading_coeff().inverse();
    r.den_ = Poly::constant(num_.nvars(), GaussRat(1));
    return r;
  }
  // Two reduced steps instead of one gcd against den^2.
  RatFunc t(num_.partial(var) * den_ - num_ * den_.partial(var), den_);
  return t * RatFunc(Poly::constant(nvars(), GaussRat(1)), den_);
}

RatFunc RatFunc::conj(const std::vector<int>& conj_perm) const {
  // Conjugation is a ring automorphism, so the pair stays coprime.
  return reduced(num_.conj(conj_perm), den_.conj(conj_perm));
}

GaussRat RatFunc::eval(const std::vector<GaussRat>& point) const {
  GaussRat d = den_.eval(point);
  if (d.is_zero()) throw Error("RatFunc: evaluation at a pole");
  return num_.eval(point) / d;
}

RatFunc RatFunc::extended(int new_nvars) const {
  RatFunc r;
  r.num_ = num_.extended(new_nvars);
  r.den_ = den_.extended(new_nvars);
  return r;
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (is_polynomial()) {
    GaussRat lc = den_.leading_coeff();
    return lc.is_one() ? num_.str(names) : (num_ * lc.inverse()).str(names);
  }
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace twistor
