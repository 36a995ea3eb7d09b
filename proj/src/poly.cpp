#include "qfib/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qfib {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int idx) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[idx] = 1;
  p.add_term(m, Rational(1));
  return p;
}

Poly Poly::monomial(int nvars, const Mono& m, const Rational& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_total(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_total(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_total(m) != d) return false;
  return true;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  Mono prod(nvars_, 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = Poly::constant(nvars_, Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

namespace {

template <class K>
K eval_impl(const Poly::TermMap& terms, int nvars, std::span<const K> pt) {
  if (static_cast<int>(pt.size()) != nvars)
    throw Error("DimensionMismatch", "evaluation point has wrong length");
  // cache powers per variable
  std::vector<std::vector<K>> pw(nvars);
  for (int v = 0; v < nvars; ++v) pw[v].push_back(K(1));
  K sum = K(0);
  for (const auto& [m, c] : terms) {
    K t(1);
    for (int v = 0; v < nvars; ++v) {
      while (static_cast<int>(pw[v].size()) <= m[v]) pw[v].push_back(pw[v].back() * pt[v]);
      if (m[v] > 0) t = t * pw[v][m[v]];
    }
    if constexpr (std::is_same_v<K, Rational>) {
      sum += t * c;
    } else {
      sum += t * K(c.get_d(), 0.0);
    }
  }
  return sum;
}

}  // namespace

Rational Poly::eval(std::span<const Rational> pt) const { return eval_impl<Rational>(terms_, nvars_, pt); }

Complex Poly::eval(std::span<const Complex> pt) const { return eval_impl<Complex>(terms_, nvars_, pt); }

Poly Poly::shift(int var, const Rational& a) const {
  if (a == 0) return *this;
  // Horner over the univariate view in var: sum c_k (X+a)^k
  std::vector<Poly> cs = coeffs_in(var);
  Poly x_plus_a = Poly::variable(nvars_, var) + Poly::constant(nvars_, a);
  Poly acc(nvars_);
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) {
    acc = acc * x_plus_a + cs[k];
  }
  return acc;
}

Poly Poly::set_var(int var, const Rational& c) const {
  Poly r(nvars_);
  std::vector<Rational> pw{Rational(1)};
  for (const auto& [m, k] : terms_) {
    while (static_cast<int>(pw.size()) <= m[var]) pw.push_back(pw.back() * c);
    Mono d = m;
    d[var] = 0;
    r.add_term(d, k * pw[m[var]]);
  }
  return r;
}

Poly Poly::set_var(int var, const Poly& value) const {
  std::vector<Poly> cs = coeffs_in(var);
  Poly acc(nvars_);
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) {
    acc = acc * value + cs[k];
  }
  return acc;
}

Poly Poly::substitute_linear(const std::vector<std::vector<Rational>>& A, int new_nvars) const {
  if (static_cast<int>(A.size()) != nvars_)
    throw Error("DimensionMismatch", "substitution matrix has wrong row count");
  std::vector<Poly> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Poly im(new_nvars);
    for (int j = 0; j < new_nvars; ++j) {
      if (A[i][j] != 0) {
        Mono m(new_nvars, 0);
        m[j] = 1;
        im.add_term(m, A[i][j]);
      }
    }
    images.push_back(im);
  }
  Poly r(new_nvars);
  // cache powers of each image
  std::vector<std::vector<Poly>> pw(nvars_);
  for (int v = 0; v < nvars_; ++v) pw[v].push_back(Poly::constant(new_nvars, Rational(1)));
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(new_nvars, c);
    for (int v = 0; v < nvars_; ++v) {
      while (static_cast<int>(pw[v].size()) <= m[v]) pw[v].push_back(pw[v].back() * images[v]);
      if (m[v] > 0) t = t * pw[v][m[v]];
    }
    r += t;
  }
  return r;
}

Poly Poly::drop_var(int var) const {
  Poly r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[var] != 0) throw Error("DimensionMismatch", "dropping a variable still in use");
    Mono d;
    d.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) d.push_back(m[i]);
    r.add_term(d, c);
  }
  return r;
}

Poly Poly::insert_var(int pos) const {
  Poly r(nvars_ + 1);
  for (const auto& [m, c] : terms_) {
    Mono d;
    d.reserve(nvars_ + 1);
    for (int i = 0; i < pos; ++i) d.push_back(m[i]);
    d.push_back(0);
    for (int i = pos; i < nvars_; ++i) d.push_back(m[i]);
    r.add_term(d, c);
  }
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw Error("ZeroInput", "division by the zero polynomial");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& [dm, dc] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    Mono qm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      qm[i] = rm[i] - dm[i];
      if (qm[i] < 0) throw Error("InexactDivision", "polynomial division leaves a remainder");
    }
    Rational qc = rc / dc;
    Poly qt = Poly::monomial(nvars_, qm, qc);
    quot += qt;
    rem -= qt * d;
  }
  return quot;
}

Poly Poly::coeff_of(int var, int k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Mono d = m;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

std::vector<Poly> Poly::coeffs_in(int var) const {
  int d = degree_in(var);
  std::vector<Poly> cs(static_cast<size_t>(d) + 1, Poly(nvars_));
  for (const auto& [m, c] : terms_) {
    Mono e = m;
    int k = e[var];
    e[var] = 0;
    cs[k].add_term(e, c);
  }
  return cs;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = mono_total(m) > 0;
    bool printed = false;
    if (a != 1 || !has_vars) {
      out << a.get_str();
      printed = true;
    }
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (printed) out << "*";
      out << names[v];
      if (m[v] > 1) out << "^" << m[v];
      printed = true;
    }
  }
  return out.str();
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace qfib
