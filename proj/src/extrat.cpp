#include "ppg/extrat.hpp"

namespace ppg {

ExtRat::ExtRat(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
  if (num_ == 0 && den_ == 0) throw error("0/0 is not a projective point");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (is_infinity() || o.is_infinity()) return infinity();
  return ExtRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ExtRat ExtRat::operator*(const ExtRat& o) const {
  return ExtRat(num_ * o.num_, den_ * o.den_);
}

std::string ExtRat::str() const {
  if (is_infinity()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

ExtRat ExtRat::parse(const std::string& s) {
  if (s == "inf" || s == "-inf") return infinity();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return ExtRat(mpz_class(s), 1);
    return ExtRat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw parse_error("expected rational number", 0);
  }
}

int cyc_compare(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinity() && b.is_infinity()) return 0;
  if (a.is_infinity()) return -1;
  if (b.is_infinity()) return 1;
  mpz_class lhs = a.num() * b.den(), rhs = b.num() * a.den();
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

ProjMat::ProjMat(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ == 0) throw error("singular matrix");
  mpz_class g = 0;
  for (const mpz_class* e : {&a_, &b_, &c_, &d_}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e->get_mpz_t());
  a_ /= g;
  b_ /= g;
  c_ /= g;
  d_ /= g;
  for (const mpz_class* e : {&a_, &b_, &c_, &d_}) {
    if (*e == 0) continue;
    if (*e < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    break;
  }
}

ExtRat ProjMat::apply(const ExtRat& t) const {
  return ExtRat(a_ * t.num() + b_ * t.den(), c_ * t.num() + d_ * t.den());
}

ProjMat ProjMat::then(const ProjMat& g) const {
  // right action: t.(fg) = (t.f).g, so the composite matrix is g*f
  return ProjMat(g.a() * a_ + g.b() * c_, g.a() * b_ + g.b() * d_,
                 g.c() * a_ + g.d() * c_, g.c() * b_ + g.d() * d_);
}

namespace {

std::string linear_term(const mpz_class& c, const mpz_class& d) {
  if (c == 0) return d.get_str();
  std::string s;
  if (c == -1)
    s = "-t";
  else if (c == 1)
    s = "t";
  else
    s = c.get_str() + "t";
  if (d > 0) s += "+" + d.get_str();
  if (d < 0) s += d.get_str();
  return s;
}

}  // namespace

std::string ProjMat::str() const {
  std::string den = linear_term(c_, d_);
  std::string out = "(" + linear_term(a_, b_) + ")/";
  if (c_ != 0 && d_ != 0)
    out += "(" + den + ")";
  else
    out += den;
  return out;
}

}  // namespace ppg
