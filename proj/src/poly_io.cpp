#include "fermisurf/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace fermisurf {

namespace {

bool term_before(const std::pair<Monomial, Rational>& a, const std::pair<Monomial, Rational>& b) {
  if (a.first.total_degree() != b.first.total_degree())
    return a.first.total_degree() > b.first.total_degree();
  return b.first < a.first;
}

}  // namespace

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), term_before);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (a != 1 || m.is_one()) {
      os << a.get_str();
      wrote = true;
    }
    for (const auto& [s, e] : m.entries()) {
      if (wrote) os << "*";
      os << p.table()->name(s);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

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
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    return s.substr(start, i - start);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

Poly parse_poly(const SymbolTablePtr& table, const std::string& text) {
  Lexer lx{text};
  Poly result = Poly::zero(table);
  if (lx.eof()) throw std::invalid_argument("parse_poly: empty input");
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('-')) sign = -1;
    else if (lx.accept('+')) sign = 1;
    else if (!first) throw std::invalid_argument("parse_poly: expected '+' or '-' in: " + text);
    first = false;

    Rational coeff(sign);
    Monomial mono;
    bool expect_factor = true;
    bool saw_factor = false;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_rational(lx.number());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.ident();
        std::uint32_t e = 1;
        if (lx.accept('^')) {
          std::string es = lx.number();
          if (es.empty()) throw std::invalid_argument("parse_poly: bad exponent in: " + text);
          e = static_cast<std::uint32_t>(std::stoul(es));
        }
        mono = mono * Monomial::of(table->require(name), e);
      } else {
        throw std::invalid_argument("parse_poly: unexpected character in: " + text);
      }
      saw_factor = true;
      expect_factor = lx.accept('*');
    }
    if (!saw_factor) throw std::invalid_argument("parse_poly: empty term in: " + text);
    result = result + Poly::term(table, mono, coeff);
  }
  return result;
}

}  // namespace fermisurf
