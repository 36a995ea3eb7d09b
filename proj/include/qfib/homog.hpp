#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfib/poly.hpp"

namespace qfib {

// Homogeneous polynomial. The zero polynomial carries a nominal degree.
class HomogPoly {
public:
  HomogPoly() = default;

  // validates homogeneity; nominal_degree is used only when p == 0
  static HomogPoly from_poly(const Poly& p, int nominal_degree = 0);
  static HomogPoly zero(int nvars, int nominal_degree) { return from_poly(Poly(nvars), nominal_degree); }
  static HomogPoly parse(const std::string& text, std::span<const std::string> var_names);

  const Poly& poly() const { return p_; }
  int nvars() const { return p_.nvars(); }
  int degree() const { return degree_; }
  bool is_zero() const { return p_.is_zero(); }

  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator*(const Rational& c) const { return from_poly(p_ * c, degree_); }
  HomogPoly operator-() const { return from_poly(-p_, degree_); }
  bool operator==(const HomogPoly& o) const { return p_ == o.p_; }

  HomogPoly derivative(int var) const;

  Rational eval(std::span<const Rational> pt) const { return p_.eval(pt); }
  Complex eval(std::span<const Complex> pt) const { return p_.eval(pt); }

  std::string str(std::span<const std::string> names) const { return p_.str(names); }

private:
  Poly p_;
  int degree_ = 0;
};

// Square matrix of homogeneous polynomials over a shared variable set.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(int size, int nvars);

  int size() const { return size_; }
  int nvars() const { return nvars_; }

  HomogPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * size_ + j]; }
  const HomogPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * size_ + j]; }

  bool is_symmetric() const;
  // throws Error("NotSymmetric") if the flag is requested on a non-symmetric matrix
  void require_symmetric() const;

  PolyMatrix minor_matrix(std::span<const int> rows, std::span<const int> cols) const;

private:
  int size_ = 0;
  int nvars_ = 0;
  std::vector<HomogPoly> entries_;
};

// Exact determinant. Cofactor expansion for size <= 5, fraction-free Bareiss
// above. Throws Error("NonHomogeneous") if the result fails to be homogeneous
// (cannot happen for compatible degree patterns).
HomogPoly det_poly(const PolyMatrix& m);

// determinant at the raw Poly level (no homogeneity requirement)
Poly det_poly_raw(const std::vector<std::vector<Poly>>& m);

// all partial derivatives; entries homogeneous of degree-1 (nominal degree 0
// stays 0 for constants)
std::vector<HomogPoly> jacobian(const HomogPoly& p);

Complex eval_complex(const HomogPoly& p, std::span<const Complex> pt);

// Sylvester resultant eliminating `var`, p's coefficients in the top rows,
// computed by fraction-free elimination. Throws Error("ZeroInput") when p or
// q is zero in `var`.
Poly resultant(const Poly& p, const Poly& q, int var);

}  // namespace qfib
