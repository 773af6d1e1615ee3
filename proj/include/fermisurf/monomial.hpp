#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fermisurf/symbols.hpp"

namespace fermisurf {

/// Sparse power product: (symbol, exponent) pairs sorted by symbol id,
/// no zero exponents stored. The empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;

  static Monomial of(SymbolId s, std::uint32_t e = 1) {
    Monomial m;
    if (e > 0) m.entries_.push_back({s, e});
    return m;
  }

  static Monomial from_sorted(std::vector<Entry> entries) {
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
  }

  bool is_one() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::uint32_t degree_of(SymbolId s) const {
    for (const auto& [id, e] : entries_)
      if (id == s) return e;
    return 0;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [id, e] : entries_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
      if (entries_[i].first < o.entries_[j].first) {
        r.entries_.push_back(entries_[i++]);
      } else if (entries_[i].first > o.entries_[j].first) {
        r.entries_.push_back(o.entries_[j++]);
      } else {
        r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
        ++i;
        ++j;
      }
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    for (; j < o.entries_.size(); ++j) r.entries_.push_back(o.entries_[j]);
    return r;
  }

  /// this / o when o divides this.
  std::optional<Monomial> divided_by(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (j < o.entries_.size()) {
      if (i == entries_.size() || entries_[i].first > o.entries_[j].first) return std::nullopt;
      if (entries_[i].first < o.entries_[j].first) {
        r.entries_.push_back(entries_[i++]);
        continue;
      }
      if (entries_[i].second < o.entries_[j].second) return std::nullopt;
      if (entries_[i].second > o.entries_[j].second)
        r.entries_.push_back({entries_[i].first, entries_[i].second - o.entries_[j].second});
      ++i;
      ++j;
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    return r;
  }

  bool divides(const Monomial& m) const { return m.divided_by(*this).has_value(); }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].first < b.entries_[j].first) {
        r.entries_.push_back(a.entries_[i++]);
      } else if (a.entries_[i].first > b.entries_[j].first) {
        r.entries_.push_back(b.entries_[j++]);
      } else {
        r.entries_.push_back({a.entries_[i].first,
                              std::max(a.entries_[i].second, b.entries_[j].second)});
        ++i;
        ++j;
      }
    }
    for (; i < a.entries_.size(); ++i) r.entries_.push_back(a.entries_[i]);
    for (; j < b.entries_.size(); ++j) r.entries_.push_back(b.entries_[j]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
      if (a.entries_[i].first < b.entries_[j].first) ++i;
      else if (a.entries_[i].first > b.entries_[j].first) ++j;
      else return false;
    }
    return true;
  }

  // canonical container ordering (not a term order; used for map keys)
  bool operator<(const Monomial& o) const { return entries_ < o.entries_; }
  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return entries_ != o.entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace fermisurf
