#include "mfring/mat2.hpp"

#include <stdexcept>
#include <utility>

namespace mfring::exactnum {

Mat2::Mat2(Scalar a, Scalar b, Scalar c, Scalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Mat2 Mat2::diagonal(const Scalar& p, const Scalar& q) {
  return Mat2(p, Scalar(0), Scalar(0), q);
}

Scalar Mat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Scalar Mat2::trace() const { return e_[0] + e_[3]; }

Mat2 Mat2::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw std::invalid_argument("singular 2x2 matrix");
  const Scalar inv = d.inverse();
  return Mat2(inv * e_[3], inv * (-e_[1]), inv * (-e_[2]), inv * e_[0]);
}

Mat2 Mat2::conj_transpose() const {
  return Mat2(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
}

bool Mat2::is_identity() const {
  return e_[0] == Scalar(1) && e_[1].is_zero() && e_[2].is_zero() && e_[3] == Scalar(1);
}

bool Mat2::is_unitary() const { return (conj_transpose() * *this).is_identity(); }

bool Mat2::has_unit_det() const { return det() == Scalar(1); }

bool Mat2::is_diagonal() const { return e_[1].is_zero() && e_[2].is_zero(); }

bool Mat2::is_antidiagonal() const { return e_[0].is_zero() && e_[3].is_zero(); }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2(a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
              a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]);
}

bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

int Mat2::compare(const Mat2& a, const Mat2& b) {
  for (size_t k = 0; k < 4; ++k) {
    const int c = Scalar::compare(a.e_[k], b.e_[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Mat2::str() const {
  return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() +
         "]]";
}

}  // namespace mfring::exactnum
