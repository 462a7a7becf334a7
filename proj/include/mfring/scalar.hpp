#pragma once

#include <array>
#include <string>

#include "mfring/rational.hpp"

namespace mfring::exactnum {

/// Element of Q(i) or Q(i, sqrt(d)) for a fixed square-free d in {2, 5},
/// stored as rational coordinates over the basis {1, i, r, i*r}, r = sqrt(d).
///
/// All arithmetic is exact. A value whose radical coordinates vanish is
/// normalized to d = 0, so the stored d is always the smallest extension
/// containing the value; values over sqrt(2) and sqrt(5) never mix.
class Scalar {
 public:
  Scalar() : c_{}, d_(0) {}
  Scalar(long n) : c_{Rational(n), 0, 0, 0}, d_(0) {}  // NOLINT(runtime/explicit)
  Scalar(const Rational& r) : c_{r, 0, 0, 0}, d_(0) {}  // NOLINT(runtime/explicit)
  Scalar(Rational re, Rational im);

  static Scalar i();
  /// sqrt(d) for d in {2, 5}.
  static Scalar radical(int d);
  static Scalar from_coords(std::array<Rational, 4> coords, int d);

  const Rational& coord(int k) const { return c_[static_cast<size_t>(k)]; }
  /// Active radical: 0 (none), 2 or 5.
  int radical_d() const { return d_; }

  bool is_zero() const;
  bool is_rational() const;
  /// True when both i-coordinates vanish.
  bool is_real() const;
  /// The value as a Rational; throws std::invalid_argument unless is_rational().
  Rational rational_value() const;

  /// Complex conjugation: fixes sqrt(d), negates i.
  Scalar conj() const;
  /// Galois conjugation sqrt(d) -> -sqrt(d); fixes i.
  Scalar radical_conj() const;
  /// Multiplicative inverse; throws std::invalid_argument on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used for canonical sorting (d, then coordinates).
  static int compare(const Scalar& a, const Scalar& b);

  /// Canonical additive string over the basis: e.g. "1/2-3*i+2/3*r-1*i*r".
  std::string str() const;

 private:
  std::array<Rational, 4> c_;  // coordinates over {1, i, r, i*r}
  int d_;

  void normalize();
  static int merged_d(const Scalar& a, const Scalar& b);
};

Scalar pow(Scalar base, unsigned long e);

}  // namespace mfring::exactnum
