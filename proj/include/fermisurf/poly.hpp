#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fermisurf/monomial.hpp"
#include "fermisurf/order.hpp"
#include "fermisurf/rational.hpp"
#include "fermisurf/symbols.hpp"

namespace fermisurf {

/// Sparse exact multivariate polynomial over the rationals.
///
/// Canonical form is maintained by construction: no zero coefficients, terms
/// keyed by Monomial in the container order. Two equal polynomials always
/// have identical term maps. Values are immutable in spirit: every operation
/// returns a fresh Poly.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(SymbolTablePtr table) : table_(std::move(table)) {}

  static Poly zero(SymbolTablePtr table) { return Poly(std::move(table)); }

  static Poly constant(SymbolTablePtr table, Rational c) {
    Poly p(std::move(table));
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
  }

  static Poly symbol(SymbolTablePtr table, SymbolId s) {
    Poly p(std::move(table));
    p.terms_.emplace(Monomial::of(s), Rational(1));
    return p;
  }

  static Poly term(SymbolTablePtr table, Monomial m, Rational c) {
    Poly p(std::move(table));
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const SymbolTablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  std::uint32_t degree_in(SymbolId s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(s));
    return d;
  }

  bool contains_symbol(SymbolId s) const {
    for (const auto& [m, c] : terms_)
      if (m.degree_of(s) > 0) return true;
    return false;
  }

  Poly operator-() const {
    Poly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly operator+(const Poly& o) const {
    check_table(o);
    Poly r = *this;
    r.table_ = table_ ? table_ : o.table_;
    for (const auto& [m, c] : o.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    check_table(o);
    Poly r(table_ ? table_ : o.table_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m = ma * mb;
        Rational c = ca * cb;
        auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  Poly operator*(const Rational& c) const {
    Poly r(table_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  Poly operator*(const Monomial& m) const {
    Poly r(table_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  Poly pow(std::uint32_t e) const {
    Poly r = constant(table_, Rational(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  /// Leading term under the given order.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  /// Largest monomial in the canonical container order (degree first, then
  /// container compare); used where no term order is in play.
  std::pair<Monomial, Rational> canonical_leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
      const bool better = it->first.total_degree() > best->first.total_degree() ||
                          (it->first.total_degree() == best->first.total_degree() &&
                           best->first < it->first);
      if (better) best = it;
    }
    return {best->first, best->second};
  }

 private:
  void check_table(const Poly& o) const {
    if (table_ && o.table_ && table_ != o.table_)
      throw std::invalid_argument("polynomials over different symbol tables");
  }

  SymbolTablePtr table_;
  Terms terms_;

  friend Poly poly_from_terms(SymbolTablePtr, Poly::Terms);
};

inline Poly poly_from_terms(SymbolTablePtr table, Poly::Terms terms) {
  Poly p(std::move(table));
  for (auto& [m, c] : terms)
    if (c != 0) p.terms_.emplace(m, c);
  return p;
}

/// Exact simultaneous substitution; a ring homomorphism. Unmapped symbols
/// persist. Rejects maps where a symbol occurs in its own replacement (the
/// module does not do iterative solving).
Poly substitute(const Poly& p, const std::map<SymbolId, Poly>& assignments);

/// Swap every symbol with its conjugate partner; coefficients unchanged.
Poly conjugate(const Poly& p);

/// Coefficients of s^0, s^1, ..., s^deg as polynomials without s.
std::vector<Poly> coeffs_in(const Poly& p, SymbolId s);

/// Divide by the rational content so the coefficients become coprime
/// integers, with positive leading coefficient (canonical container order by
/// default, or the supplied term order). Throws on the zero polynomial.
Poly content_normalize(const Poly& p, const MonomialOrder* order = nullptr);

/// Rebuild p over another table, matching symbols by name.
Poly remap(const Poly& p, const SymbolTablePtr& to);

}  // namespace fermisurf
