#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fermisurf/monomial.hpp"
#include "fermisurf/symbols.hpp"

namespace fermisurf {

/// Monomial term order. Two kinds:
///  - Lex over an explicit symbol priority list;
///  - block order: blocks compared left to right by (total degree in block,
///    then graded reverse lex within the block). Any symbol from an earlier
///    block dominates all later blocks, which gives the elimination property.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedRevLexWithinBlocks };

  static MonomialOrder lex(std::vector<SymbolId> priority) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.blocks_.push_back(std::move(priority));
    o.build_ranks();
    return o;
  }

  static MonomialOrder block_grevlex(std::vector<std::vector<SymbolId>> blocks) {
    MonomialOrder o;
    o.kind_ = Kind::GradedRevLexWithinBlocks;
    o.blocks_ = std::move(blocks);
    o.build_ranks();
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<std::vector<SymbolId>>& blocks() const { return blocks_; }

  /// true if a > b in this order.
  bool greater(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::Lex) return lex_greater(a, b);
    return block_greater(a, b);
  }

  bool less(const Monomial& a, const Monomial& b) const { return greater(b, a); }

  /// Symbols of the final block (the "kept" block of an elimination order).
  const std::vector<SymbolId>& last_block() const { return blocks_.back(); }

 private:
  struct Rank {
    std::uint32_t block = UINT32_MAX;
    std::uint32_t pos = UINT32_MAX;  // position within block
  };

  void build_ranks() {
    for (std::uint32_t b = 0; b < blocks_.size(); ++b)
      for (std::uint32_t p = 0; p < blocks_[b].size(); ++p) {
        SymbolId s = blocks_[b][p];
        if (s >= ranks_.size()) ranks_.resize(s + 1);
        ranks_[s] = Rank{b, p};
      }
  }

  Rank rank(SymbolId s) const {
    if (s >= ranks_.size() || ranks_[s].block == UINT32_MAX)
      throw std::invalid_argument("symbol not covered by monomial order");
    return ranks_[s];
  }

  bool lex_greater(const Monomial& a, const Monomial& b) const {
    // compare exponents symbol by symbol in priority order
    const auto& pr = blocks_[0];
    for (SymbolId s : pr) {
      std::uint32_t ea = a.degree_of(s), eb = b.degree_of(s);
      if (ea != eb) return ea > eb;
    }
    return false;
  }

  bool block_greater(const Monomial& a, const Monomial& b) const {
    for (std::uint32_t blk = 0; blk < blocks_.size(); ++blk) {
      std::uint64_t da = 0, db = 0;
      for (const auto& [s, e] : a.entries())
        if (rank(s).block == blk) da += e;
      for (const auto& [s, e] : b.entries())
        if (rank(s).block == blk) db += e;
      if (da != db) return da > db;
      // graded reverse lex within the block: the last symbol (in block order)
      // with differing exponent decides; smaller exponent there wins.
      const auto& syms = blocks_[blk];
      for (std::size_t i = syms.size(); i-- > 0;) {
        std::uint32_t ea = a.degree_of(syms[i]), eb = b.degree_of(syms[i]);
        if (ea != eb) return ea < eb;
      }
    }
    return false;
  }

  Kind kind_ = Kind::Lex;
  std::vector<std::vector<SymbolId>> blocks_;
  std::vector<Rank> ranks_;
};

}  // namespace fermisurf
