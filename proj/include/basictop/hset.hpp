#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "basictop/heyting.hpp"

namespace basictop {

/// Default bound on |H|^|S|, the number of H-valued subsets of a carrier.
inline constexpr std::size_t kDefaultSubsetCap = 4096;

/// Position of a subset in the fixed enumeration of a context's subsets.
using SubsetIndex = std::uint32_t;

/// A finite set of named points. May be empty.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> points);

  std::size_t size() const noexcept { return points_.size(); }
  const std::string& name(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws ValidationError for unknown names.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> points_;
};

class SubsetSpace;

/// A truth-value algebra paired with a carrier. Every subset, operator and
/// topology lives in exactly one context; mixing contexts is an error.
class Context : public std::enable_shared_from_this<Context> {
 public:
  static std::shared_ptr<const Context> make(std::shared_ptr<const HeytingAlgebra> algebra, Carrier carrier,
                                             std::size_t subset_cap = kDefaultSubsetCap);
  static std::shared_ptr<const Context> make(HeytingAlgebra algebra, Carrier carrier,
                                             std::size_t subset_cap = kDefaultSubsetCap);

  const HeytingAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const HeytingAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t subset_cap() const noexcept { return cap_; }

  /// |H|^|S| if it does not exceed the cap.
  std::optional<std::size_t> subset_count() const noexcept { return count_; }
  bool enumerable() const noexcept { return count_.has_value(); }
  /// The full enumeration of subsets; throws CapExceeded when not enumerable.
  const SubsetSpace& space() const;

  Context(std::shared_ptr<const HeytingAlgebra> algebra, Carrier carrier, std::size_t subset_cap);
  ~Context();

 private:
  std::shared_ptr<const HeytingAlgebra> algebra_;
  Carrier carrier_;
  std::size_t cap_;
  std::optional<std::size_t> count_;
  mutable std::once_flag space_once_;
  mutable std::unique_ptr<SubsetSpace> space_;
};

using ContextPtr = std::shared_ptr<const Context>;

/// Throws ContextMismatch unless both contexts are the same object.
void require_same(const Context& a, const Context& b, std::string_view what);

/// A subset valued in the context's algebra: one truth degree per point.
/// In the two-element algebra these are ordinary subsets.
class HSubset {
 public:
  HSubset(ContextPtr ctx, std::vector<Degree> degrees);

  static HSubset empty(const ContextPtr& ctx);
  static HSubset full(const ContextPtr& ctx);
  /// Degree `d` at `point`, bot elsewhere.
  static HSubset singleton(const ContextPtr& ctx, std::size_t point, Degree d);

  const Context& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  Degree operator[](std::size_t point) const noexcept { return degrees_[point]; }
  std::span<const Degree> degrees() const noexcept { return degrees_; }

  /// Literal form `{a, b:u}`: points at top are written bare, points at bot
  /// are omitted.
  std::string to_string() const;

  friend bool operator==(const HSubset& a, const HSubset& b) {
    return a.ctx_ == b.ctx_ && a.degrees_ == b.degrees_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Degree> degrees_;
};

/// Parses `{a, b:u}`; omitted points are bot, bare points are top.
HSubset parse_subset(const ContextPtr& ctx, std::string_view literal);

/// Inhabited intersection: the join over points of U(a) /\ V(a).
Degree overlap(const HSubset& u, const HSubset& v);
/// Inclusion as a truth degree: the meet over points of U(a) -> V(a).
Degree incl(const HSubset& u, const HSubset& v);
Degree equal_degree(const HSubset& u, const HSubset& v);

/// Pointwise neg.
HSubset pseudo_complement(const HSubset& u);
HSubset unite(const HSubset& u, const HSubset& v);
HSubset intersect(const HSubset& u, const HSubset& v);
inline HSubset operator|(const HSubset& u, const HSubset& v) { return unite(u, v); }
inline HSubset operator&(const HSubset& u, const HSubset& v) { return intersect(u, v); }

/// Every subset of the context, duplicate-free, in lexicographic order over
/// (point index, element index); point 0 varies slowest. Throws CapExceeded
/// when |H|^|S| exceeds the context's cap.
std::vector<HSubset> enumerate_all(const ContextPtr& ctx);

/// The enumerated subset space of a context, with index-level primitives
/// used by the exhaustive algorithms.
class SubsetSpace {
 public:
  explicit SubsetSpace(const Context& ctx);

  std::size_t size() const noexcept { return size_; }
  std::size_t points() const noexcept { return points_; }
  HSubset operator[](SubsetIndex i) const;
  std::vector<HSubset> subsets() const;

  SubsetIndex index_of(std::span<const Degree> degrees) const;
  SubsetIndex index_of(const HSubset& u) const { return index_of(u.degrees()); }

  Degree degree(SubsetIndex s, std::size_t point) const noexcept { return flat_[std::size_t{s} * points_ + point]; }
  std::span<const Degree> row(SubsetIndex s) const noexcept {
    return {flat_.data() + std::size_t{s} * points_, points_};
  }

  Degree overlap(SubsetIndex u, SubsetIndex v) const noexcept;
  Degree incl(SubsetIndex u, SubsetIndex v) const noexcept;
  Degree equal(SubsetIndex u, SubsetIndex v) const noexcept;

  SubsetIndex empty() const noexcept { return empty_; }
  SubsetIndex full() const noexcept { return full_; }

 private:
  const Context* ctx_;
  const HeytingAlgebra* algebra_;
  std::size_t points_;
  std::size_t size_;
  std::vector<Degree> flat_;
  SubsetIndex empty_ = 0;
  SubsetIndex full_ = 0;
};

}  // namespace basictop
