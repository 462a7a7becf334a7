#include "mfring/scalar.hpp"

#include <stdexcept>
#include <utility>

namespace mfring::exactnum {

namespace {
const Rational kZero = 0;
}

Scalar::Scalar(Rational re, Rational im) : c_{std::move(re), std::move(im), 0, 0}, d_(0) {}

Scalar Scalar::i() {
  Scalar s;
  s.c_[1] = 1;
  return s;
}

Scalar Scalar::radical(int d) {
  if (d != 2 && d != 5) throw std::invalid_argument("radical: d must be 2 or 5");
  Scalar s;
  s.c_[2] = 1;
  s.d_ = d;
  return s;
}

Scalar Scalar::from_coords(std::array<Rational, 4> coords, int d) {
  if (d != 0 && d != 2 && d != 5) throw std::invalid_argument("from_coords: d must be 0, 2 or 5");
  Scalar s;
  s.c_ = std::move(coords);
  s.d_ = d;
  s.normalize();
  if (s.d_ == 0 && (s.c_[2] != 0 || s.c_[3] != 0))
    throw std::invalid_argument("from_coords: radical coordinates require d in {2, 5}");
  return s;
}

void Scalar::normalize() {
  if (c_[2] == 0 && c_[3] == 0) d_ = 0;
}

int Scalar::merged_d(const Scalar& a, const Scalar& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw std::invalid_argument("mixing sqrt(2) and sqrt(5) values in one expression");
}

bool Scalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool Scalar::is_real() const { return c_[1] == 0 && c_[3] == 0; }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::invalid_argument("scalar is not rational: " + str());
  return c_[0];
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  s.c_[1] = -s.c_[1];
  s.c_[3] = -s.c_[3];
  return s;
}

Scalar Scalar::radical_conj() const {
  Scalar s = *this;
  s.c_[2] = -s.c_[2];
  s.c_[3] = -s.c_[3];
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merged_d(*this, o);
  for (int k = 0; k < 4; ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merged_d(*this, o);
  for (int k = 0; k < 4; ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
  normalize();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  s.d_ = Scalar::merged_d(a, b);
  if (a.is_zero() || b.is_zero()) return Scalar();
  const auto& x = a.c_;
  const auto& y = b.c_;
  // Basis relations: i^2 = -1, r^2 = d, (i*r)^2 = -d.
  if (a.d_ == 0 && b.d_ == 0) {
    s.c_[0] = x[0] * y[0] - x[1] * y[1];
    s.c_[1] = x[0] * y[1] + x[1] * y[0];
  } else {
    const Rational d(s.d_);
    s.c_[0] = x[0] * y[0] - x[1] * y[1] + d * (x[2] * y[2] - x[3] * y[3]);
    s.c_[1] = x[0] * y[1] + x[1] * y[0] + d * (x[2] * y[3] + x[3] * y[2]);
    s.c_[2] = x[0] * y[2] + x[2] * y[0] - x[1] * y[3] - x[3] * y[1];
    s.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  }
  s.normalize();
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  // z * conj(z) lies in the real subfield Q(r); multiplying by its Galois
  // conjugate lands in Q.
  const Scalar zc = conj();
  const Scalar w = *this * zc;
  if (d_ == 0) {
    const Rational n = w.c_[0];
    Scalar inv = zc;
    for (auto& x : inv.c_) x /= n;
    return inv;
  }
  const Scalar wg = w.radical_conj();
  const Scalar full = zc * wg;  // z * full = w * wg, a rational
  const Scalar norm = w * wg;
  const Rational n = norm.rational_value();
  if (n == 0) throw std::logic_error("field norm vanished on nonzero scalar");
  Scalar inv = full;
  for (auto& x : inv.c_) x /= n;
  inv.normalize();
  return inv;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.d_ == b.d_ && a.c_ == b.c_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.d_ != b.d_) return a.d_ < b.d_ ? -1 : 1;
  for (int k = 0; k < 4; ++k) {
    const int c = cmp(a.c_[static_cast<size_t>(k)], b.c_[static_cast<size_t>(k)]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Scalar::str() const {
  static const char* suffix[4] = {"", "*i", "*r", "*i*r"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& x = c_[static_cast<size_t>(k)];
    if (x == 0) continue;
    std::string term = x.get_str() + suffix[k];
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out.empty() ? "0" : out;
}

Scalar pow(Scalar base, unsigned long e) {
  Scalar result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

}  // namespace mfring::exactnum
