#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "basictop/hset.hpp"
#include "basictop/law_report.hpp"

namespace basictop {

/// A total map from subsets to subsets of one context.
///
/// When the context is enumerable the operator is tabulated eagerly over the
/// whole subset space; otherwise its rule is evaluated on demand and
/// memoized (the memo is safe for concurrent use).
class Operator {
 public:
  using Rule = std::function<HSubset(const HSubset&)>;

  static Operator from_rule(ContextPtr ctx, std::string description, Rule rule);
  /// `table[i]` is the index of the image of subset i; must cover the space.
  static Operator from_table(ContextPtr ctx, std::string description, std::vector<SubsetIndex> table);

  HSubset operator()(const HSubset& u) const;
  /// Index-level application; only for tabulated operators.
  SubsetIndex at(SubsetIndex u) const noexcept { return (*table_)[u]; }

  bool tabulated() const noexcept { return table_ != nullptr; }
  /// Throws CapExceeded for untabulated operators.
  const std::vector<SubsetIndex>& table() const;

  const std::string& description() const noexcept { return description_; }
  Operator with_description(std::string description) const;

  const Context& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }

 private:
  struct Lazy;
  Operator() = default;

  ContextPtr ctx_;
  std::string description_;
  std::shared_ptr<const std::vector<SubsetIndex>> table_;
  std::shared_ptr<Lazy> lazy_;
};

Operator identity_operator(const ContextPtr& ctx);
Operator constant_operator(const HSubset& value);
/// const of the empty subset.
Operator bottom_operator(const ContextPtr& ctx);
/// const of the full subset.
Operator top_operator(const ContextPtr& ctx);
/// U |-> pointwise neg of U.
Operator pseudo_complement_operator(const ContextPtr& ctx);
Operator double_negation_operator(const ContextPtr& ctx);
/// U |-> {a in S | U inhabited}.
Operator inhabited_operator(const ContextPtr& ctx);

/// outer after inner.
Operator compose(const Operator& outer, const Operator& inner);
/// Pointwise union of the results; the empty join is the bottom operator.
Operator pointwise_join(const ContextPtr& ctx, std::span<const Operator> ops);
/// Pointwise intersection of the results; the empty meet is the top operator.
Operator pointwise_meet(const ContextPtr& ctx, std::span<const Operator> ops);

/// Extensional equality over the whole subset space.
bool operator==(const Operator& a, const Operator& b);
/// Degree of a(U) included in b(U), for all U.
Graded inclusion(const Operator& a, const Operator& b);
Graded equality(const Operator& a, const Operator& b);

/// Each flag is the truth degree of the corresponding property, refuted
/// (holds == false) with a witness when the degree is not top. Monotonicity
/// is the internal one: incl(U, V) <= incl(O U, O V).
struct OperatorProfile {
  Graded monotone;
  Graded idempotent;
  Graded expansive;
  Graded contractive;
  /// equal(U, V) <= equal(O U, O V); implied by monotone.
  Graded extensional;

  bool is_saturation() const noexcept { return monotone.holds && idempotent.holds && expansive.holds; }
  bool is_reduction() const noexcept { return monotone.holds && idempotent.holds && contractive.holds; }
};

OperatorProfile classify(const Operator& o);

/// left is compatible with right: meet over U, V of
/// overlap(left U, right V) -> overlap(U, right V).
Graded compat(const Operator& left, const Operator& right);
/// meet over U, V of  not overlap(U, right V) -> not overlap(left U, right V).
Graded weak_compat(const Operator& left, const Operator& right);
/// z splits o: meet over U of overlap(o U, z) -> overlap(U, z).
Graded splits(const HSubset& z, const Operator& o);

/// Greatest operator left-compatible with `o`:
/// a in L(U)  iff  for all V, a in o V implies U overlaps o V.
Operator greatest_left_compatible(const Operator& o);
/// Union of all subsets splitting `o`, each weighted by its splitting degree.
HSubset largest_splitting_subset(const Operator& o);
/// Greatest operator right-compatible with `o`: the constant operator with
/// value largest_splitting_subset(o).
Operator greatest_right_compatible(const Operator& o);

/// If O is compatible with every O_i it is compatible with their join, and
/// if every O_i is compatible with O so is their join (graded: meet of the
/// hypotheses implies the conclusion).
LawReport compat_join_laws(const Operator& o, std::span<const Operator> family);
/// For O'' <= O and O compat O': O'' compat O'. For O compat O' and
/// O'' compat O': O O'' compat O'. For O compat O': O compat O' O''.
LawReport compat_transfer_laws(const Operator& o, const Operator& o1, const Operator& o2);

std::vector<HSubset> fixed_points(const Operator& o);

/// Randomized counterexample search for compat(left, right), for contexts
/// too large to enumerate. Never reports `holds`.
LawReport sampled_compat(const Operator& left, const Operator& right, std::size_t samples, std::uint64_t seed);

HSubset random_subset(const ContextPtr& ctx, std::mt19937_64& rng);

}  // namespace basictop
