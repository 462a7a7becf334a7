#pragma once

#include <optional>
#include <vector>

#include "mfring/scalar.hpp"

namespace mfring::exactnum {

/// Dense rectangular matrix over Scalar with exact rank and exact linear
/// solves via fraction-free (Bareiss) elimination.
class DenseMat {
 public:
  DenseMat(int rows, int cols);
  static DenseMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return data_[index(r, c)]; }
  Scalar& at(int r, int c) { return data_[index(r, c)]; }

  DenseMat transpose() const;
  DenseMat conj_transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  friend DenseMat operator*(const DenseMat& a, const DenseMat& b);
  friend DenseMat operator+(const DenseMat& a, const DenseMat& b);
  friend DenseMat operator-(const DenseMat& a, const DenseMat& b);
  friend bool operator==(const DenseMat& a, const DenseMat& b);
  friend bool operator!=(const DenseMat& a, const DenseMat& b) { return !(a == b); }

  long rank() const;
  /// Column indices of a maximal independent set, in ascending order.
  std::vector<int> pivot_columns() const;

  /// One exact solution of (*this) x = b, or nullopt when the system is
  /// inconsistent. Free variables are set to zero.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;

  size_t index(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }
};

}  // namespace mfring::exactnum
