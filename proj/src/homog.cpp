#include "qfib/homog.hpp"

#include <algorithm>

#include "qfib/error.hpp"
#include "qfib/poly_parse.hpp"

namespace qfib {

HomogPoly HomogPoly::from_poly(const Poly& p, int nominal_degree) {
  if (!p.is_homogeneous()) throw Error("NonHomogeneous", "mixed total degrees");
  HomogPoly h;
  h.p_ = p;
  h.degree_ = p.is_zero() ? nominal_degree : p.total_degree();
  if (h.degree_ < 0) throw Error("NonHomogeneous", "negative nominal degree");
  return h;
}

HomogPoly HomogPoly::parse(const std::string& text, std::span<const std::string> var_names) {
  return from_poly(parse_poly(text, var_names));
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  return from_poly(p_ * o.p_, degree_ + o.degree_);
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  int nominal = is_zero() ? o.degree_ : degree_;
  return from_poly(p_ + o.p_, nominal);
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  int nominal = is_zero() ? o.degree_ : degree_;
  return from_poly(p_ - o.p_, nominal);
}

HomogPoly HomogPoly::derivative(int var) const {
  return from_poly(p_.derivative(var), std::max(0, degree_ - 1));
}

PolyMatrix::PolyMatrix(int size, int nvars) : size_(size), nvars_(nvars) {
  entries_.assign(static_cast<size_t>(size) * size, HomogPoly::zero(nvars, 0));
}

bool PolyMatrix::is_symmetric() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

void PolyMatrix::require_symmetric() const {
  if (!is_symmetric()) throw Error("NotSymmetric", "matrix is not symmetric");
}

PolyMatrix PolyMatrix::minor_matrix(std::span<const int> rows, std::span<const int> cols) const {
  PolyMatrix m(static_cast<int>(rows.size()), nvars_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return m;
}

namespace {

Poly det_cofactor(const std::vector<std::vector<Poly>>& m, std::vector<int>& cols, int row, int nvars) {
  const size_t n = m.size();
  if (row == static_cast<int>(n)) return Poly::constant(nvars, Rational(1));
  Poly acc(nvars);
  int sign = 1;
  for (size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (c < 0) continue;
    if (!m[row][c].is_zero()) {
      cols[k] = -1;
      Poly sub = det_cofactor(m, cols, row + 1, nvars);
      cols[k] = c;
      Poly term = m[row][c] * sub;
      if (sign < 0) term = -term;
      acc += term;
    }
    sign = -sign;
  }
  return acc;
}

Poly det_bareiss(std::vector<std::vector<Poly>> a, int nvars) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Poly::constant(nvars, Rational(1));
  int sign = 1;
  Poly prev = Poly::constant(nvars, Rational(1));
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Poly(nvars);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = num.is_zero() ? num : num.divexact(prev);
      }
      a[i][k] = Poly(nvars);
    }
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

Poly det_poly_raw(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  if (n == 0) throw Error("DimensionMismatch", "empty matrix");
  int nvars = m[0][0].nvars();
  if (n <= 5) {
    std::vector<int> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
    return det_cofactor(m, cols, 0, nvars);
  }
  return det_bareiss(m, nvars);
}

HomogPoly det_poly(const PolyMatrix& m) {
  std::vector<std::vector<Poly>> raw(m.size(), std::vector<Poly>());
  for (int i = 0; i < m.size(); ++i) {
    raw[i].reserve(m.size());
    for (int j = 0; j < m.size(); ++j) raw[i].push_back(m.at(i, j).poly());
  }
  return HomogPoly::from_poly(det_poly_raw(raw));
}

std::vector<HomogPoly> jacobian(const HomogPoly& p) {
  std::vector<HomogPoly> out;
  out.reserve(p.nvars());
  for (int v = 0; v < p.nvars(); ++v) out.push_back(p.derivative(v));
  return out;
}

Complex eval_complex(const HomogPoly& p, std::span<const Complex> pt) { return p.eval(pt); }

Poly resultant(const Poly& p, const Poly& q, int var) {
  if (p.is_zero() || q.is_zero()) throw Error("ZeroInput", "resultant of a zero polynomial");
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  if (m == 0 && n == 0) return Poly::constant(p.nvars(), Rational(1));
  const int nvars = p.nvars();
  std::vector<Poly> pc = p.coeffs_in(var);  // ascending
  std::vector<Poly> qc = q.coeffs_in(var);
  const int N = m + n;
  std::vector<std::vector<Poly>> s(N, std::vector<Poly>(N, Poly(nvars)));
  // p's coefficients occupy the top n rows, descending from column offset
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = pc[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = qc[static_cast<size_t>(n - k)];
  return det_poly_raw(s);
}

}  // namespace qfib
