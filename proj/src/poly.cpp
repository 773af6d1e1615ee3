#include "fermisurf/poly.hpp"

#include <map>

namespace fermisurf {

Poly substitute(const Poly& p, const std::map<SymbolId, Poly>& assignments) {
  for (const auto& [s, rep] : assignments)
    if (rep.contains_symbol(s))
      throw std::invalid_argument("substitute: symbol occurs in its own replacement: " +
                                  (p.table() ? p.table()->name(s) : std::to_string(s)));
  Poly result = Poly::zero(p.table());
  // cache powers of replacement polynomials
  std::map<std::pair<SymbolId, std::uint32_t>, Poly> powers;
  for (const auto& [mono, coeff] : p.terms()) {
    Poly term = Poly::constant(p.table(), coeff);
    Monomial untouched;
    for (const auto& [s, e] : mono.entries()) {
      auto it = assignments.find(s);
      if (it == assignments.end()) {
        untouched = untouched * Monomial::of(s, e);
        continue;
      }
      auto key = std::make_pair(s, e);
      auto cached = powers.find(key);
      if (cached == powers.end())
        cached = powers.emplace(key, it->second.pow(e)).first;
      term = term * cached->second;
    }
    result = result + term * untouched;
  }
  return result;
}

Poly conjugate(const Poly& p) {
  const auto& table = p.table();
  Poly::Terms out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(mono.entries().size());
    for (const auto& [s, e] : mono.entries()) entries.push_back({table->conjugate_of(s), e});
    std::sort(entries.begin(), entries.end());
    auto [it, inserted] = out.try_emplace(Monomial::from_sorted(std::move(entries)), coeff);
    if (!inserted) it->second += coeff;  // cannot collide for an involution, but be safe
  }
  return poly_from_terms(table, std::move(out));
}

std::vector<Poly> coeffs_in(const Poly& p, SymbolId s) {
  std::uint32_t deg = p.degree_in(s);
  std::vector<Poly> out(deg + 1, Poly::zero(p.table()));
  for (const auto& [mono, coeff] : p.terms()) {
    std::uint32_t e = mono.degree_of(s);
    auto stripped = mono.divided_by(Monomial::of(s, e));
    out[e] = out[e] + Poly::term(p.table(), *stripped, coeff);
  }
  return out;
}

Poly content_normalize(const Poly& p, const MonomialOrder* order) {
  if (p.is_zero()) throw std::invalid_argument("content_normalize: zero polynomial");
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Rational lead = order ? p.leading_term(*order).second : p.canonical_leading_term().second;
  if (sgn(lead * scale) < 0) scale = -scale;
  return p * scale;
}

Poly remap(const Poly& p, const SymbolTablePtr& to) {
  const auto& from = p.table();
  Poly::Terms out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(mono.entries().size());
    for (const auto& [s, e] : mono.entries()) entries.push_back({to->require(from->name(s)), e});
    std::sort(entries.begin(), entries.end());
    out.emplace(Monomial::from_sorted(std::move(entries)), coeff);
  }
  return poly_from_terms(to, std::move(out));
}

}  // namespace fermisurf
