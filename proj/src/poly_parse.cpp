#include "qfib/poly_parse.hpp"

#include <cctype>
#include <map>

#include "qfib/error.hpp"

namespace qfib {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }

  // unsigned integer literal
  Rational integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error("SyntaxError", "expected a number at position " + std::to_string(start));
    return Rational(mpz_class(s.substr(start, i - start)));
  }

  // identifier: letter followed by letters/digits
  std::string ident() {
    skip_ws();
    size_t start = i;
    if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
      throw Error("SyntaxError", "expected a variable at position " + std::to_string(start));
    ++i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

Poly parse_poly(const std::string& text, std::span<const std::string> var_names) {
  const int nvars = static_cast<int>(var_names.size());
  std::map<std::string, int> index;
  for (int v = 0; v < nvars; ++v) index[var_names[v]] = v;

  Lexer lx{text};
  Poly result(nvars);
  bool first_term = true;

  while (!lx.eof()) {
    // term sign
    Rational sign(1);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      if (c == '-') sign = -1;
    } else if (!first_term) {
      throw Error("SyntaxError", "expected '+' or '-' at position " + std::to_string(lx.i));
    }
    first_term = false;

    Rational coeff = sign;
    Mono mono(nvars, 0);
    bool saw_factor = false;

    // optional leading coefficient
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Rational num = lx.integer();
      if (lx.peek() == '/') {
        lx.take();
        Rational den = lx.integer();
        if (den == 0) throw Error("SyntaxError", "zero denominator");
        num /= den;
      }
      coeff *= num;
      saw_factor = true;
      if (lx.peek() == '*') {
        lx.take();
      } else {
        // a bare constant term; next must be +/- or end
        char n = lx.peek();
        if (n != '+' && n != '-' && n != '\0')
          throw Error("SyntaxError", "expected '*', '+' or '-' at position " + std::to_string(lx.i));
        result.add_term(mono, coeff);
        continue;
      }
    }

    // var^k ('*' var^k)*
    for (;;) {
      std::string name = lx.ident();
      auto it = index.find(name);
      if (it == index.end()) throw Error("UnknownVariable", "unknown variable '" + name + "'");
      int expo = 1;
      if (lx.peek() == '^') {
        lx.take();
        Rational e = lx.integer();
        if (!is_integer(e) || e < 0) throw Error("SyntaxError", "bad exponent");
        expo = static_cast<int>(e.get_num().get_si());
      }
      mono[it->second] += expo;
      saw_factor = true;
      if (lx.peek() == '*') {
        lx.take();
        continue;
      }
      break;
    }

    if (!saw_factor) throw Error("SyntaxError", "empty term");
    char n = lx.peek();
    if (n != '+' && n != '-' && n != '\0')
      throw Error("SyntaxError", "unexpected character at position " + std::to_string(lx.i));
    result.add_term(mono, coeff);
  }

  return result;
}

}  // namespace qfib
