#include "twistor/gauss_rat.hpp"

#include <cctype>

namespace twistor {

GaussRat GaussRat::rational(long num, long den) {
  if (den == 0) throw Error("GaussRat: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error("GaussRat: division by zero");
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Parses "num" or "num/den" starting at pos; advances pos.
mpq_class parse_rat(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw Error("GaussRat: malformed rational in '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw Error("GaussRat: malformed denominator in '" + s + "'");
  }
  mpq_class q(s.substr(start, pos - start));
  if (q.get_den() == 0) throw Error("GaussRat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += rat_str(re_);
  if (im_ != 0) {
    if (!out.empty() && im_ > 0) out += "+";
    out += rat_str(im_) + "*i";
  }
  return out;
}

GaussRat GaussRat::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("GaussRat: empty input");
  GaussRat result;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
      if (pos >= s.size()) throw Error("GaussRat: dangling sign in '" + text + "'");
    }
    if (s[pos] == 'i' || (s.compare(pos, 3, "1*i") == 0 && false)) {
      result += GaussRat(mpq_class(0), mpq_class(sign));
      ++pos;
      continue;
    }
    mpq_class q = parse_rat(s, pos);
    if (sign < 0) q = -q;
    if (pos < s.size() && s[pos] == '*') {
      if (pos + 1 >= s.size() || s[pos + 1] != 'i')
        throw Error("GaussRat: expected 'i' after '*' in '" + text + "'");
      pos += 2;
      result += GaussRat(mpq_class(0), q);
    } else {
      result += GaussRat(q);
    }
  }
  return result;
}

}  // namespace twistor
