#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qfib/error.hpp"
#include "qfib/rational.hpp"

namespace qfib {

// Exponent vector of a monomial; length = number of variables.
using Mono = std::vector<int>;

inline int mono_total(const Mono& m) {
  int t = 0;
  for (int e : m) t += e;
  return t;
}

// Graded lexicographic order over the declared variable order (x0 > x1 > ...).
struct MonoGradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int ta = mono_total(a), tb = mono_total(b);
    if (ta != tb) return ta < tb;
    // same total degree: earlier variable with higher exponent is "bigger"
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Stored terms never carry a zero coefficient.
class Poly {
public:
  using TermMap = std::map<Mono, Rational, MonoGradedLexLess>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int idx);
  static Poly monomial(int nvars, const Mono& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_total(terms_.begin()->first) == 0); }
  Rational constant_value() const;  // value if is_constant()

  void add_term(const Mono& m, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Rational& c) const;
  Poly pow(int k) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly derivative(int var) const;

  Rational eval(std::span<const Rational> pt) const;
  Complex eval(std::span<const Complex> pt) const;

  // substitute var -> var + a (exact translation)
  Poly shift(int var, const Rational& a) const;
  // substitute var -> constant
  Poly set_var(int var, const Rational& c) const;
  // substitute var -> arbitrary polynomial over the same variable set
  Poly set_var(int var, const Poly& value) const;
  // x_i -> sum_j A[i][j] * z_j ; A is nvars x new_nvars
  Poly substitute_linear(const std::vector<std::vector<Rational>>& A, int new_nvars) const;

  // remove a variable that no longer occurs (asserts degree_in(var) == 0)
  Poly drop_var(int var) const;
  // add a fresh variable at position pos (exponent 0 everywhere)
  Poly insert_var(int pos) const;

  // exact division; throws Error("ZeroInput") on zero divisor and
  // Error("InexactDivision") if the division leaves a remainder
  Poly divexact(const Poly& d) const;

  // coefficient of var^k, as a polynomial with var removed from the exponent
  // (still over the same nvars)
  Poly coeff_of(int var, int k) const;

  // dense list of coefficients of powers of var (univariate view)
  std::vector<Poly> coeffs_in(int var) const;

  // canonical printing, graded-lex descending; names.size() == nvars
  std::string str(std::span<const std::string> names) const;

private:
  int nvars_ = 0;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

std::vector<std::string> default_var_names(int nvars);

}  // namespace qfib
