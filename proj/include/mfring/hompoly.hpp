#pragma once

#include <string>
#include <vector>

#include "mfring/mat2.hpp"
#include "mfring/scalar.hpp"

namespace mfring::exactnum {

/// Homogeneous polynomial of fixed degree n in the two variables (a, c).
/// Coefficient j multiplies the monomial a^(n-j) c^j, j = 0..n.
///
/// The zero polynomial of each degree is representable and distinct from the
/// zero polynomial of any other degree.
class HomPoly {
 public:
  /// Zero polynomial of the given degree.
  explicit HomPoly(int degree);
  HomPoly(int degree, std::vector<Scalar> coeffs);

  static HomPoly monomial(int degree, int j, Scalar coeff = Scalar(1));

  int degree() const { return degree_; }
  const Scalar& coeff(int j) const { return c_[static_cast<size_t>(j)]; }
  void set_coeff(int j, Scalar v) { c_[static_cast<size_t>(j)] = std::move(v); }

  bool is_zero() const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const Scalar& s, const HomPoly& p);
  friend bool operator==(const HomPoly& a, const HomPoly& b);
  friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "a^2 + 2*a*c".
  std::string str() const;

 private:
  int degree_;
  std::vector<Scalar> c_;
};

/// Coefficient convolution; degree adds.
HomPoly poly_mul(const HomPoly& p, const HomPoly& q);

/// Left-translation action: (substitute(g, p))(x) = p(g^{-1} x), realized as
/// the linear change of variables sending the column (a, c) through g^{-1}.
/// Requires det(g) = 1; throws std::invalid_argument otherwise.
HomPoly substitute(const Mat2& g, const HomPoly& p);

namespace detail {
/// powers[k] = L^k for the degree-1 form L, k = 0..max_power.
std::vector<HomPoly> linear_form_powers(const HomPoly& linear, int max_power);
}  // namespace detail

}  // namespace mfring::exactnum
