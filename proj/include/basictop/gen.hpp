#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basictop/galois.hpp"

namespace basictop {

/// For each point a, a finite list of covers C(a, i). A cover may carry a
/// weight below top (covers derived from an H-valued saturation); covers
/// written by hand have weight top.
class AxiomSet {
 public:
  struct Cover {
    HSubset subset;
    Degree weight;
  };

  explicit AxiomSet(ContextPtr ctx, std::string name = {});

  /// Throws ContextMismatch for a cover from another context and
  /// ValidationError for an out-of-range point.
  void add(std::size_t point, HSubset cover, std::optional<Degree> weight = std::nullopt);

  const std::vector<Cover>& covers(std::size_t point) const { return covers_.at(point); }
  std::size_t cover_count() const noexcept;
  /// True when every weight is bot or top.
  bool crisp() const noexcept;

  const Context& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ContextPtr ctx_;
  std::string name_;
  std::vector<std::vector<Cover>> covers_;
};

/// Meet over (a, i) of  (w /\ incl(C(a, i), P)) -> P(a).
Degree fulfills(const HSubset& p, const AxiomSet& ax);
/// Meet over (a, i) of  (w /\ Z(a)) -> overlap(C(a, i), Z).
Degree splits(const HSubset& z, const AxiomSet& ax);

/// Least subset containing U and fulfilling the axiom-set, as a saturation.
/// In the Boolean algebra this is a worklist fixpoint and needs no subset
/// cap; otherwise it is the meet over fulfilling P containing U.
Saturation generate_saturation(const AxiomSet& ax);
/// Greatest subset of V splitting the axiom-set, as a reduction. Boolean:
/// counter-based deletion; otherwise the join over splitting Z inside V.
Reduction generate_reduction(const AxiomSet& ax);

/// Kleene rounds from U upwards: R0 = U, R(k+1)(a) = R(k)(a) \/ join of
/// w /\ incl(C(a, i), R(k)). The last stage is the fixpoint.
std::vector<HSubset> saturation_rounds(const AxiomSet& ax, const HSubset& u);
/// Rounds from V downwards: R(k+1)(a) = R(k)(a) /\ meet of
/// w -> overlap(C(a, i), R(k)).
std::vector<HSubset> reduction_rounds(const AxiomSet& ax, const HSubset& v);

/// Covers (a, U) for every U with A(U)(a) above bot, weighted by A(U)(a).
AxiomSet axioms_from_saturation(const Saturation& a, std::string name = {});

}  // namespace basictop
