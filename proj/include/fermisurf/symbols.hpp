#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermisurf {

using SymbolId = std::uint32_t;

enum class SymbolKind {
  EdgeVar,     // a1..d3 and their conjugates
  LoopVar,     // a0 (real, self-conjugate)
  Energy,      // E (real, self-conjugate)
  FloquetVar,  // z1, z2 (self-conjugate by convention)
  AnsatzA,     // a_{i,j} factor unknowns
  AnsatzB,     // b_{k,l} factor unknowns
  CoeffC,      // c_{m,n} dispersion coefficients
};

struct SymbolInfo {
  std::string name;
  SymbolKind kind = SymbolKind::EdgeVar;
  std::optional<SymbolId> conjugate;  // absent means self-conjugate
};

/// Dense, append-only symbol registry. Built single-threaded, then frozen;
/// Poly values reference it through a shared_ptr and never mutate it.
class SymbolTable {
 public:
  SymbolId add(std::string name, SymbolKind kind) {
    if (frozen_) throw std::logic_error("SymbolTable is frozen");
    if (by_name_.count(name)) throw std::invalid_argument("duplicate symbol: " + name);
    SymbolId id = static_cast<SymbolId>(symbols_.size());
    by_name_.emplace(name, id);
    symbols_.push_back(SymbolInfo{std::move(name), kind, std::nullopt});
    return id;
  }

  /// Register a <-> b as conjugate partners.
  void pair_conjugates(SymbolId a, SymbolId b) {
    if (frozen_) throw std::logic_error("SymbolTable is frozen");
    symbols_.at(a).conjugate = b;
    symbols_.at(b).conjugate = a;
  }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::size_t size() const { return symbols_.size(); }
  const SymbolInfo& info(SymbolId id) const { return symbols_.at(id); }
  const std::string& name(SymbolId id) const { return symbols_.at(id).name; }
  SymbolKind kind(SymbolId id) const { return symbols_.at(id).kind; }

  /// Conjugate partner; self-conjugate symbols map to themselves.
  SymbolId conjugate_of(SymbolId id) const {
    const auto& c = symbols_.at(id).conjugate;
    return c ? *c : id;
  }

  std::optional<SymbolId> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  SymbolId require(const std::string& name) const {
    auto id = find(name);
    if (!id) throw std::invalid_argument("unknown symbol: " + name);
    return *id;
  }

 private:
  std::vector<SymbolInfo> symbols_;
  std::map<std::string, SymbolId> by_name_;
  bool frozen_ = false;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace fermisurf
