#pragma once

#include <string>

#include "fermisurf/poly.hpp"

namespace fermisurf {

/// Deterministic textual form: terms sorted by descending (total degree,
/// canonical monomial order), rendered as "coeff*sym^e*sym...", joined with
/// " + " / " - ". print/parse round-trips bit-exactly.
std::string to_text(const Poly& p);

Poly parse_poly(const SymbolTablePtr& table, const std::string& text);

}  // namespace fermisurf
