#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "basictop/galois.hpp"

namespace basictop {

/// A saturation and a reduction on one carrier with compat(A, J) = top.
class BasicTopology {
 public:
  /// Throws NotCompatible carrying the degree and the (U, V) witness.
  static BasicTopology make(Saturation a, Reduction j, std::string name = {});

  const Saturation& saturation() const noexcept { return a_; }
  const Reduction& reduction() const noexcept { return j_; }
  const std::string& name() const noexcept { return name_; }
  BasicTopology with_name(std::string name) const;

  const Context& context() const noexcept { return a_.context(); }
  const ContextPtr& context_ptr() const noexcept { return a_.context_ptr(); }

  /// "[A, J]" from the operator descriptions.
  std::string to_string() const;

  friend bool operator==(const BasicTopology& s, const BasicTopology& t) { return s.a_ == t.a_ && s.j_ == t.j_; }

 private:
  BasicTopology(Saturation a, Reduction j, std::string name)
      : a_(std::move(a)), j_(std::move(j)), name_(std::move(name)) {}
  Saturation a_;
  Reduction j_;
  std::string name_;
};

/// Degree of  t1 <= t2  (t1 coarser than t2): A2 <= A1 and J1 <= J2.
Graded coarser(const BasicTopology& t1, const BasicTopology& t2);

/// [meet of A_i, join of J_i]; the empty join is [top, bot].
BasicTopology join_family(const ContextPtr& ctx, std::span<const BasicTopology> ts);

/// [AA(J), J].
BasicTopology reduce(const BasicTopology& t);
/// [A, JJ(A)].
BasicTopology saturate(const BasicTopology& t);

struct Verdict {
  bool value = false;
  /// First subset (enumeration order) on which the compared operators differ.
  std::vector<HSubset> witness;
};

Verdict is_reduced(const BasicTopology& t);
Verdict is_saturated(const BasicTopology& t);

struct DiagramNode {
  /// Among T, T^R, T^S, T^RS, T^SR; equal topologies share a node.
  std::vector<std::string> names;
  BasicTopology topology;
};

struct Diagram {
  std::vector<DiagramNode> nodes;
  /// Covering pairs (i, j): nodes[i] <= nodes[j] at degree top, nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// T^R <= T <= T^S and T^RS <= T^SR all hold.
  bool ordering_holds = false;
  std::vector<NamedDegree> ordering;

  std::string to_dot(const std::string& graph_name = "topology") const;
};

Diagram five_node_diagram(const BasicTopology& t);

/// [AA(J), J] <= T'  iff  J <= J'.
LawReport adjunction_check(const Reduction& j, const BasicTopology& t);
/// T' <= [A, JJ(A)]  iff  A <= A'.
LawReport adjunction_check(const Saturation& a, const BasicTopology& t);

/// Short name of an operator: "id", "top" or "bot" when it equals one of
/// them, its description otherwise.
std::string summarize(const Operator& o);

}  // namespace basictop
