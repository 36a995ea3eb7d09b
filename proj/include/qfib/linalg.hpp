#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qfib/rational.hpp"

namespace qfib {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

// Dense matrix over the rationals; row-major.
class MatQ {
public:
  MatQ() = default;
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static MatQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  MatQ operator*(const MatQ& o) const;
  MatQ transpose() const;

  int rank() const;
  Rational det() const;
  // basis of the right nullspace, as columns
  std::vector<std::vector<Rational>> nullspace() const;

  MatC to_complex() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// numeric rank from singular values, relative tolerance tol
int rank_numeric(const MatC& m, double tol);

// right nullspace basis of a complex matrix, relative tolerance tol
std::vector<VecC> nullspace_numeric(const MatC& m, double tol);

}  // namespace qfib
