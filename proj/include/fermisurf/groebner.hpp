#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "fermisurf/order.hpp"
#include "fermisurf/poly.hpp"

namespace fermisurf {

struct Ideal {
  std::vector<Poly> generators;  // nonzero, content-normalized
  MonomialOrder order;
};

struct GroebnerBasis {
  std::vector<Poly> elements;
  MonomialOrder order;
  bool reduced = false;
};

/// Thrown when the S-pair budget is exhausted; never truncates silently.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

struct BuchbergerLimits {
  std::uint64_t max_spairs = 100000;  // overridable via FERMISURF_SPAIR_CAP
};

BuchbergerLimits limits_from_env();

/// Full normal form of f modulo basis: no term of the result is divisible by
/// any basis leading term. Exact arithmetic throughout.
Poly reduce(const Poly& f, std::span<const Poly> basis, const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// leading term criterion and the chain criterion. Returns the reduced basis;
/// deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerLimits& limits = limits_from_env());

/// Basis elements involving only `keep` symbols. Requires an elimination
/// order whose final block is contained in `keep`; the result generates the
/// elimination ideal.
std::vector<Poly> elimination_basis(const GroebnerBasis& gb, const std::set<SymbolId>& keep);

/// Preprocessing for elimination runs: repeatedly removes a generator of the
/// form c*x - h (x in `eliminable`, c a nonzero rational, x absent from h)
/// by substituting x = h/c into the remaining generators. The elimination
/// ideal over the untouched symbols is preserved.
std::vector<Poly> eliminate_linear(std::vector<Poly> generators, const std::set<SymbolId>& eliminable);

}  // namespace fermisurf
