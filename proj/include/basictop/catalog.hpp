#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "basictop/btop.hpp"

namespace basictop {

/// A_p(U) = U \/ {x | p}: the saturation adding every point to degree p.
Saturation union_with_degree(const ContextPtr& ctx, Degree p);
/// J_p(U)(x) = U(x) /\ (not U(b) -> p), checked to be a reduction.
Reduction guarded(const ContextPtr& ctx, Degree p, std::size_t b);

struct CatalogCheck {
  std::string label;
  /// Degrees by element name; yes/no facts as "true"/"false".
  std::string expected;
  std::string actual;
  std::vector<std::string> witness;
  bool pass() const { return expected == actual; }
};

struct CatalogEntry {
  std::string name;
  std::string scenario;
  ContextPtr context;
  std::vector<std::pair<std::string, Operator>> operators;
  std::function<std::vector<CatalogCheck>()> checks;
};

struct Replay {
  std::string entry;
  std::vector<CatalogCheck> checks;
  bool passed() const;
  std::string to_text() const;
};

/// Registered entry names in a fixed order.
const std::vector<std::string>& catalog_names();
/// Throws UnknownEntry.
CatalogEntry load(std::string_view name);
Replay replay(const CatalogEntry& entry);

}  // namespace basictop
