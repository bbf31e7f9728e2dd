#pragma once

#include <span>
#include <string>
#include <vector>

#include "basictop/law_report.hpp"
#include "basictop/optable.hpp"

namespace basictop {

enum class CertificateBasis {
  /// Re-verified by classify() over the whole subset space.
  verified,
  /// Issued by a construction that yields a saturation/reduction by
  /// theorem; only for contexts too large to enumerate.
  by_construction,
};

class AxiomSet;
class Saturation;
class Reduction;

/// Grants the fixpoint generators the right to issue by-construction
/// certificates for contexts that cannot be enumerated.
class ConstructionKey {
  ConstructionKey() = default;
  friend Saturation generate_saturation(const AxiomSet&);
  friend Reduction generate_reduction(const AxiomSet&);
};

/// A monotone, idempotent, expansive operator. Values only exist with a
/// certificate.
class Saturation {
 public:
  /// Throws CertificateFailure naming the refuted property and its witness.
  static Saturation certify(Operator op);
  Saturation(Operator op, ConstructionKey) : op_(std::move(op)), basis_(CertificateBasis::by_construction) {}

  const Operator& op() const noexcept { return op_; }
  HSubset operator()(const HSubset& u) const { return op_(u); }
  CertificateBasis basis() const noexcept { return basis_; }
  const Context& context() const noexcept { return op_.context(); }
  const ContextPtr& context_ptr() const noexcept { return op_.context_ptr(); }
  const std::string& description() const noexcept { return op_.description(); }

  friend bool operator==(const Saturation& a, const Saturation& b) { return a.op_ == b.op_; }

 private:
  Saturation(Operator op, CertificateBasis basis) : op_(std::move(op)), basis_(basis) {}
  Operator op_;
  CertificateBasis basis_;
};

/// A monotone, idempotent, contractive operator.
class Reduction {
 public:
  static Reduction certify(Operator op);
  Reduction(Operator op, ConstructionKey) : op_(std::move(op)), basis_(CertificateBasis::by_construction) {}

  const Operator& op() const noexcept { return op_; }
  HSubset operator()(const HSubset& u) const { return op_(u); }
  CertificateBasis basis() const noexcept { return basis_; }
  const Context& context() const noexcept { return op_.context(); }
  const ContextPtr& context_ptr() const noexcept { return op_.context_ptr(); }
  const std::string& description() const noexcept { return op_.description(); }

  friend bool operator==(const Reduction& a, const Reduction& b) { return a.op_ == b.op_; }

 private:
  Reduction(Operator op, CertificateBasis basis) : op_(std::move(op)), basis_(basis) {}
  Operator op_;
  CertificateBasis basis_;
};

/// Least saturation fixing every member of `family`:
/// A(U)(a) = meet over V in family of incl(U, V) -> V(a).
Saturation family_saturation(const ContextPtr& ctx, std::span<const HSubset> family);
/// As family_saturation, with member V present to degree weights[i].
Saturation weighted_family_saturation(const ContextPtr& ctx, std::span<const HSubset> family,
                                      std::span<const Degree> weights, std::string description = {});
/// Greatest reduction fixing every member of `family`:
/// J(U)(a) = join over V in family of incl(V, U) /\ V(a).
Reduction family_reduction(const ContextPtr& ctx, std::span<const HSubset> family);
Reduction weighted_family_reduction(const ContextPtr& ctx, std::span<const HSubset> family,
                                    std::span<const Degree> weights, std::string description = {});

/// Greatest saturation compatible with `j` (the closure determined by an
/// interior): a in A(U) iff every j V containing a overlaps U.
Saturation compatible_saturation(const Reduction& j);
/// Greatest reduction compatible with `a`: J(V) is the union of the subsets
/// of V that split `a`.
Reduction compatible_reduction(const Saturation& a);

/// Pointwise meet; the empty meet is top.
Saturation meet_saturations(const ContextPtr& ctx, std::span<const Saturation> as);
/// Pointwise join; the empty join is bot.
Reduction join_reductions(const ContextPtr& ctx, std::span<const Reduction> js);
/// Least saturation above every member (not pointwise).
Saturation join_saturations(const ContextPtr& ctx, std::span<const Saturation> as);
/// Greatest reduction below every member (not pointwise).
Reduction meet_reductions(const ContextPtr& ctx, std::span<const Reduction> js);

/// Degrees of  A <= AA(J),  A compatible with J,  J <= JJ(A)  and whether
/// they coincide. The law's degree is the meet of their equivalences.
LawReport galois_check(const Saturation& a, const Reduction& j);

/// Degree of  (a in J S -> a in AA(J) U) -> a in AA(J) U  over all a, U.
LawReport positivity_law(const Reduction& j);

/// A1 <= A2,  A2 A1 = A2,  A1 A2 = A2,  Fix(A2) <= Fix(A1)  are equivalent.
LawReport order_characterization(const Saturation& a1, const Saturation& a2);
/// J1 <= J2,  J1 J2 = J1,  J2 J1 = J1,  Fix(J1) <= Fix(J2)  are equivalent.
LawReport order_characterization(const Reduction& j1, const Reduction& j2);
/// A1 A2 and A2 A1 are both saturations iff A1 A2 = A2 A1.
LawReport composition_law(const Saturation& a1, const Saturation& a2);

/// A1 <= A2 implies JJ(A2) <= JJ(A1).
LawReport antitone_check(const Saturation& a1, const Saturation& a2);
/// J1 <= J2 implies AA(J2) <= AA(J1).
LawReport antitone_check(const Reduction& j1, const Reduction& j2);
/// A <= AA JJ (A).
LawReport unit_check(const Saturation& a);
/// J <= JJ AA (J).
LawReport unit_check(const Reduction& j);
/// JJ AA JJ (A) = JJ(A).
LawReport triangle_check(const Saturation& a);
/// AA JJ AA (J) = AA(J).
LawReport triangle_check(const Reduction& j);
/// AA(join of Js) = meet of AA(J_i).
LawReport union_to_meet(const ContextPtr& ctx, std::span<const Reduction> js);
/// JJ(join of As) = meet of JJ(A_i).
LawReport union_to_meet(const ContextPtr& ctx, std::span<const Saturation> as);
/// A2 <= A1 and A1 compatible with J imply A2 compatible with J; likewise
/// J2 <= J and A compatible with J imply A compatible with J2.
LawReport compat_down_closed(const Saturation& a, const Reduction& j, const Saturation& a2, const Reduction& j2);

}  // namespace basictop
