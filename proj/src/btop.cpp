#include "basictop/btop.hpp"

#include <sstream>

#include "basictop/errors.hpp"

namespace basictop {

BasicTopology BasicTopology::make(Saturation a, Reduction j, std::string name) {
  require_same(a.context(), j.context(), "basic topology");
  Graded c = compat(a.op(), j.op());
  if (!c.holds) {
    const auto& h = a.context().algebra();
    auto witness = describe(c.witness);
    std::string msg = "'" + a.description() + "' is not compatible with '" + j.description() + "' (degree " +
                      h.name(c.degree) + ", witness";
    for (const auto& w : witness) msg += " " + w;
    throw NotCompatible(msg + ")", h.name(c.degree), std::move(witness));
  }
  return BasicTopology(std::move(a), std::move(j), std::move(name));
}

BasicTopology BasicTopology::with_name(std::string name) const {
  BasicTopology t = *this;
  t.name_ = std::move(name);
  return t;
}

std::string BasicTopology::to_string() const { return "[" + a_.description() + ", " + j_.description() + "]"; }

Graded coarser(const BasicTopology& t1, const BasicTopology& t2) {
  require_same(t1.context(), t2.context(), "coarser");
  const auto& h = t1.context().algebra();
  Graded a = inclusion(t2.saturation().op(), t1.saturation().op());
  Graded j = inclusion(t1.reduction().op(), t2.reduction().op());
  Degree d = h.meet(a.degree, j.degree);
  if (d == a.degree) return Graded{d, h.is_top(d), a.holds ? j.witness : a.witness};
  return Graded{d, h.is_top(d), j.witness};
}

BasicTopology join_family(const ContextPtr& ctx, std::span<const BasicTopology> ts) {
  std::vector<Saturation> as;
  std::vector<Reduction> js;
  for (const auto& t : ts) {
    require_same(*ctx, t.context(), "join_family");
    as.push_back(t.saturation());
    js.push_back(t.reduction());
  }
  try {
    return BasicTopology::make(meet_saturations(ctx, as), join_reductions(ctx, js));
  } catch (const NotCompatible& e) {
    throw CertificateFailure(std::string("internal error: join of basic topologies: ") + e.what());
  }
}

BasicTopology reduce(const BasicTopology& t) {
  return BasicTopology::make(compatible_saturation(t.reduction()), t.reduction(),
                             t.name().empty() ? std::string{} : t.name() + "^R");
}

BasicTopology saturate(const BasicTopology& t) {
  return BasicTopology::make(t.saturation(), compatible_reduction(t.saturation()),
                             t.name().empty() ? std::string{} : t.name() + "^S");
}

namespace {

Verdict same_operators(const Operator& x, const Operator& y) {
  const auto& space = x.context().space();
  for (SubsetIndex u = 0; u < space.size(); ++u)
    if (x.at(u) != y.at(u)) return Verdict{false, {space[u]}};
  return Verdict{true, {}};
}

}  // namespace

Verdict is_reduced(const BasicTopology& t) {
  return same_operators(t.saturation().op(), compatible_saturation(t.reduction()).op());
}

Verdict is_saturated(const BasicTopology& t) {
  return same_operators(t.reduction().op(), compatible_reduction(t.saturation()).op());
}

std::string summarize(const Operator& o) {
  const auto& ctx = o.context_ptr();
  if (o == identity_operator(ctx)) return "id";
  if (o == top_operator(ctx)) return "top";
  if (o == bottom_operator(ctx)) return "bot";
  return o.description();
}

Diagram five_node_diagram(const BasicTopology& t) {
  const auto& h = t.context().algebra();
  BasicTopology r = reduce(t);
  BasicTopology s = saturate(t);
  BasicTopology rs = saturate(r);
  BasicTopology sr = reduce(s);
  const std::pair<const char*, const BasicTopology*> five[] = {
      {"T^R", &r}, {"T^RS", &rs}, {"T", &t}, {"T^SR", &sr}, {"T^S", &s}};

  Diagram d;
  for (const auto& [name, topo] : five) {
    bool merged = false;
    for (auto& node : d.nodes) {
      if (node.topology == *topo) {
        node.names.emplace_back(name);
        merged = true;
        break;
      }
    }
    if (!merged) d.nodes.push_back(DiagramNode{{name}, *topo});
  }

  d.ordering = {named("T^R <= T", h, coarser(r, t).degree), named("T <= T^S", h, coarser(t, s).degree),
                named("T^RS <= T^SR", h, coarser(rs, sr).degree)};
  d.ordering_holds = true;
  for (const auto& o : d.ordering) d.ordering_holds = d.ordering_holds && h.is_top(o.degree);

  const std::size_t n = d.nodes.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      le[i][j] = i != j && coarser(d.nodes[i].topology, d.nodes[j].topology).holds;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k) covering = !(le[i][k] && le[k][j]);
      if (covering) d.edges.emplace_back(i, j);
    }
  }
  return d;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string Diagram::to_dot(const std::string& graph_name) const {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string names;
    for (std::size_t k = 0; k < nodes[i].names.size(); ++k) names += (k ? " = " : "") + nodes[i].names[k];
    const auto& t = nodes[i].topology;
    out << "  n" << i << " [label=\"" << dot_escape(names) << "\\nA: " << dot_escape(summarize(t.saturation().op()))
        << ", J: " << dot_escape(summarize(t.reduction().op())) << "\"];\n";
  }
  for (const auto& [from, to] : edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

LawReport adjunction_check(const Reduction& j, const BasicTopology& t) {
  require_same(j.context(), t.context(), "adjunction");
  const auto& h = j.context().algebra();
  BasicTopology reduced = BasicTopology::make(compatible_saturation(j), j);
  Degree lhs = coarser(reduced, t).degree;
  Degree rhs = inclusion(j.op(), t.reduction().op()).degree;
  LawReport r = graded_report("adjunction " + j.description() + " " + t.to_string(), h, h.equiv(lhs, rhs),
                              {"[AA(J), J] <= T': " + h.name(lhs), "J <= J': " + h.name(rhs)});
  r.degrees = {named("[AA(J), J] <= T'", h, lhs), named("J <= J'", h, rhs)};
  return r;
}

LawReport adjunction_check(const Saturation& a, const BasicTopology& t) {
  require_same(a.context(), t.context(), "adjunction");
  const auto& h = a.context().algebra();
  BasicTopology saturated = BasicTopology::make(a, compatible_reduction(a));
  Degree lhs = coarser(t, saturated).degree;
  Degree rhs = inclusion(a.op(), t.saturation().op()).degree;
  LawReport r = graded_report("adjunction " + a.description() + " " + t.to_string(), h, h.equiv(lhs, rhs),
                              {"T' <= [A, JJ(A)]: " + h.name(lhs), "A <= A': " + h.name(rhs)});
  r.degrees = {named("T' <= [A, JJ(A)]", h, lhs), named("A <= A'", h, rhs)};
  return r;
}

}  // namespace basictop
