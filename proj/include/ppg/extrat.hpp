#pragma once

#include <gmpxx.h>

#include <string>

#include "ppg/bits.hpp"

namespace ppg {

/// A point of the rational projective line: num/den with gcd 1 and den >= 0.
/// Infinity is 1/0. Arithmetic is exact.
class ExtRat {
 public:
  ExtRat() : num_(0), den_(1) {}
  ExtRat(long n) : num_(n), den_(1) {}
  ExtRat(mpz_class n, mpz_class d);

  static ExtRat infinity() { return ExtRat(1, 0); }

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_infinity() const { return den_ == 0; }

  bool operator==(const ExtRat&) const = default;

  ExtRat operator+(const ExtRat& o) const;
  ExtRat operator-() const { return ExtRat(-num_, den_); }
  ExtRat operator*(const ExtRat& o) const;
  ExtRat reciprocal() const { return ExtRat(den_, num_); }

  std::string str() const;  // "p/q", "p", or "inf"
  static ExtRat parse(const std::string& s);

 private:
  mpz_class num_, den_;
};

/// Total order with infinity first, then the rationals in their usual order.
/// This linearizes the cyclic order of the projective line.
int cyc_compare(const ExtRat& a, const ExtRat& b);
inline bool cyc_less(const ExtRat& a, const ExtRat& b) { return cyc_compare(a, b) < 0; }

/// An integer 2x2 matrix up to nonzero scalar, acting as t -> (at+b)/(ct+d).
/// Stored normalized: entries coprime, first nonzero entry positive.
class ProjMat {
 public:
  ProjMat() : a_(1), b_(0), c_(0), d_(1) {}
  ProjMat(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  static ProjMat identity() { return ProjMat(); }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }

  bool operator==(const ProjMat&) const = default;
  bool is_identity() const { return *this == ProjMat(); }

  ExtRat apply(const ExtRat& t) const;
  /// The matrix of "this, then g" under right action.
  ProjMat then(const ProjMat& g) const;
  ProjMat inverse() const { return ProjMat(d_, -b_, -c_, a_); }
  mpz_class det() const { return a_ * d_ - b_ * c_; }

  /// Rendering as a linear fractional expression, e.g. "(2t)/1".
  std::string str() const;

 private:
  mpz_class a_, b_, c_, d_;
};

}  // namespace ppg
