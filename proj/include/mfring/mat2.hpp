#pragma once

#include <array>
#include <string>

#include "mfring/scalar.hpp"

namespace mfring::exactnum {

/// Exact 2x2 matrix over Scalar; houses elements of SU(2) and its finite
/// subgroups, but is usable for any exact 2x2 linear algebra.
class Mat2 {
 public:
  Mat2() : e_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)} {}
  Mat2(Scalar a, Scalar b, Scalar c, Scalar d);

  static Mat2 identity() { return Mat2(); }
  static Mat2 diagonal(const Scalar& p, const Scalar& q);

  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(2 * r + c)]; }

  Scalar det() const;
  Scalar trace() const;
  /// Throws std::invalid_argument when the determinant vanishes.
  Mat2 inverse() const;
  Mat2 conj_transpose() const;

  bool is_identity() const;
  /// conj_transpose() * (*this) == identity, checked exactly.
  bool is_unitary() const;
  bool has_unit_det() const;
  bool is_diagonal() const;
  bool is_antidiagonal() const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b);
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

  static int compare(const Mat2& a, const Mat2& b);

  std::string str() const;

 private:
  std::array<Scalar, 4> e_;  // row-major
};

}  // namespace mfring::exactnum
