#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "basictop/btop.hpp"

namespace basictop {

/// An H-valued relation between a domain X and a codomain S over one
/// algebra, stored as a dense |X| x |S| matrix.
class HRelation {
 public:
  HRelation(ContextPtr domain, ContextPtr codomain, std::vector<Degree> matrix, std::string name = {});
  /// Crisp relation from (x, a) index pairs.
  static HRelation from_pairs(ContextPtr domain, ContextPtr codomain,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs, std::string name = {});

  Degree operator()(std::size_t x, std::size_t a) const { return matrix_[x * codomain_->carrier().size() + a]; }

  const Context& domain() const noexcept { return *domain_; }
  const Context& codomain() const noexcept { return *codomain_; }
  const ContextPtr& domain_ptr() const noexcept { return domain_; }
  const ContextPtr& codomain_ptr() const noexcept { return codomain_; }
  const HeytingAlgebra& algebra() const noexcept { return codomain_->algebra(); }
  const std::string& name() const noexcept { return name_; }

 private:
  ContextPtr domain_;
  ContextPtr codomain_;
  std::vector<Degree> matrix_;
  std::string name_;
};

/// rD(a) = join over x of D(x) /\ r(x, a).
HSubset direct_image(const HRelation& r, const HSubset& d);
/// r-U(x) = join over a of r(x, a) /\ U(a).
HSubset inverse_image(const HRelation& r, const HSubset& u);
/// r*U(x) = meet over a of r(x, a) -> U(a).
HSubset right_adjoint(const HRelation& r, const HSubset& u);
/// r-*D(a) = meet over x of r(x, a) -> D(x).
HSubset inverse_right_adjoint(const HRelation& r, const HSubset& d);

/// incl(rD, U) = incl(D, r*U) and incl(r-U, D) = incl(U, r-*D) for all D, U.
LawReport adjunction_laws(const HRelation& r);
/// overlap(rD, U) = overlap(D, r-U) for all D, U.
LawReport symmetry_check(const HRelation& r);
/// r r* r D = r D for all D.
LawReport triangular_check(const HRelation& r);

/// [r-* r-, r r*], checked compatible and reduced.
BasicTopology representable(const HRelation& r);

/// Relation from the fixed subsets of `j` (one domain point each, named by
/// its literal) to the carrier, by membership. representable() of the
/// result is [AA(J), J].
HRelation represent_reduction(const Reduction& j);

}  // namespace basictop
