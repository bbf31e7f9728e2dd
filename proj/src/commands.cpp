#include <algorithm>
#include <sstream>

#include "basictop/errors.hpp"
#include "basictop/workspace.hpp"

namespace basictop {

namespace {

void print_table(std::ostream& out, const Operator& o) {
  const auto& space = o.context().space();
  for (SubsetIndex u = 0; u < space.size(); ++u)
    out << "  " << space[u].to_string() << " -> " << space[o.at(u)].to_string() << "\n";
}

void print_graded(std::ostream& out, const std::string& label, const Graded& g, const HeytingAlgebra& h) {
  out << label << ": " << h.name(g.degree);
  if (!g.holds && !g.witness.empty()) {
    out << "  witness";
    for (const auto& w : g.witness) out << " " << w.to_string();
  }
  out << "\n";
}

void expect_args(const std::vector<std::string>& command, std::size_t n) {
  if (command.size() != n + 1)
    throw UnknownCommand("'" + command.front() + "' takes " + std::to_string(n) + " argument(s)");
}

struct LawTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  void add(std::ostream& out, const LawReport& r) {
    ++checked;
    if (!r.ok()) ++failed;
    out << to_text(r);
  }
};

// Built-ins first, then named operators, keeping those that certify.
template <class T>
std::vector<T> certified(const Workspace& ws) {
  std::vector<T> out;
  std::vector<std::string> names{"id", "top", "bot"};
  for (const auto& o : ws.operators()) names.push_back(o.name);
  for (const auto& n : names) {
    try {
      out.push_back(T::certify(ws.op(n)));
    } catch (const CertificateFailure&) {
    }
  }
  return out;
}

int run_laws(std::ostream& out, const Workspace& ws, const std::string& suite) {
  static const std::vector<std::string> suites{"galois", "positivity", "antitone", "unit",
                                               "triangle", "union-to-meet", "order", "composition"};
  if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw UnknownCommand("unknown law suite '" + suite + "'");
  const auto& ctx = ws.context();
  auto sats = certified<Saturation>(ws);
  auto reds = certified<Reduction>(ws);
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  LawTally tally;
  if (want("galois"))
    for (const auto& a : sats)
      for (const auto& j : reds) tally.add(out, galois_check(a, j));
  if (want("positivity"))
    for (const auto& j : reds) tally.add(out, positivity_law(j));
  if (want("antitone")) {
    for (const auto& a1 : sats)
      for (const auto& a2 : sats) tally.add(out, antitone_check(a1, a2));
    for (const auto& j1 : reds)
      for (const auto& j2 : reds) tally.add(out, antitone_check(j1, j2));
  }
  if (want("unit")) {
    for (const auto& a : sats) tally.add(out, unit_check(a));
    for (const auto& j : reds) tally.add(out, unit_check(j));
  }
  if (want("triangle")) {
    for (const auto& a : sats) tally.add(out, triangle_check(a));
    for (const auto& j : reds) tally.add(out, triangle_check(j));
  }
  if (want("union-to-meet")) {
    tally.add(out, union_to_meet(ctx, std::span<const Reduction>(reds)));
    tally.add(out, union_to_meet(ctx, std::span<const Saturation>(sats)));
  }
  if (want("order")) {
    for (const auto& a1 : sats)
      for (const auto& a2 : sats) tally.add(out, order_characterization(a1, a2));
    for (const auto& j1 : reds)
      for (const auto& j2 : reds) tally.add(out, order_characterization(j1, j2));
  }
  if (want("composition"))
    for (const auto& a1 : sats)
      for (const auto& a2 : sats) tally.add(out, composition_law(a1, a2));
  out << tally.checked << " laws checked, " << tally.failed << " failed\n";
  return tally.failed == 0 ? 0 : 1;
}

int dispatch(std::ostream& out, const Workspace& ws, const std::vector<std::string>& command,
             const RunOptions& options) {
  const auto& ctx = ws.context();
  const auto& h = ctx->algebra();
  const std::string& name = command.front();

  if (name == "validate") {
    expect_args(command, 0);
    out << "algebra: " << h.size() << " elements\n"
        << "carrier: " << ctx->carrier().size() << " points\n"
        << "subsets: " << (ctx->subset_count() ? std::to_string(*ctx->subset_count()) : "over the cap") << "\n"
        << "operators: " << ws.operators().size() << "\n"
        << "axiom_sets: " << ws.axiom_sets().size() << "\n"
        << "relations: " << ws.relations().size() << "\n"
        << "topologies: " << ws.topologies().size() << "\n"
        << "valid\n";
    return 0;
  }
  if (name == "classify") {
    expect_args(command, 1);
    auto p = classify(ws.op(command[1]));
    print_graded(out, "monotone", p.monotone, h);
    print_graded(out, "extensional", p.extensional, h);
    print_graded(out, "idempotent", p.idempotent, h);
    print_graded(out, "expansive", p.expansive, h);
    print_graded(out, "contractive", p.contractive, h);
    out << "saturation: " << (p.is_saturation() ? "yes" : "no") << "\n"
        << "reduction: " << (p.is_reduction() ? "yes" : "no") << "\n";
    return 0;
  }
  if (name == "compat") {
    expect_args(command, 2);
    Operator left = ws.op(command[1]);
    Operator right = ws.op(command[2]);
    if (!ctx->enumerable()) {
      LawReport r = sampled_compat(left, right, options.sample_count, options.seed);
      out << to_text(r);
      return r.ok() ? 0 : 1;
    }
    Graded g = compat(left, right);
    print_graded(out, "compat(" + command[1] + ", " + command[2] + ")", g, h);
    return g.holds ? 0 : 1;
  }
  if (name == "ll" || name == "rr") {
    expect_args(command, 1);
    Operator o = ws.op(command[1]);
    if (name == "ll") {
      Operator l = greatest_left_compatible(o);
      out << "ll(" << command[1] << "):\n";
      print_table(out, l);
      Graded g = compat(l, o);
      print_graded(out, "compat(ll, " + command[1] + ")", g, h);
      return g.holds ? 0 : 1;
    }
    Operator r = greatest_right_compatible(o);
    out << "rr(" << command[1] << ") = const " << largest_splitting_subset(o).to_string() << "\n";
    Graded g = compat(o, r);
    print_graded(out, "compat(" + command[1] + ", rr)", g, h);
    return g.holds ? 0 : 1;
  }
  if (name == "aa") {
    expect_args(command, 1);
    Saturation a = compatible_saturation(ws.reduction(command[1]));
    out << "aa(" << command[1] << "):\n";
    print_table(out, a.op());
    return 0;
  }
  if (name == "jj") {
    expect_args(command, 1);
    Reduction j = compatible_reduction(ws.saturation(command[1]));
    out << "jj(" << command[1] << "):\n";
    print_table(out, j.op());
    return 0;
  }
  if (name == "galois") {
    expect_args(command, 2);
    LawReport r = galois_check(ws.saturation(command[1]), ws.reduction(command[2]));
    out << to_text(r);
    return r.ok() ? 0 : 1;
  }
  if (name == "laws") {
    if (command.size() > 2) throw UnknownCommand("'laws' takes at most one argument");
    return run_laws(out, ws, command.size() == 2 ? command[1] : "all");
  }
  if (name == "generate") {
    expect_args(command, 1);
    const AxiomSet& ax = ws.axiom_set(command[1]);
    Saturation a = generate_saturation(ax);
    Reduction j = generate_reduction(ax);
    if (!ctx->enumerable()) {
      out << "A(empty) = " << a(HSubset::empty(ctx)).to_string() << "\n"
          << "J(full) = " << j(HSubset::full(ctx)).to_string() << "\n";
      return 0;
    }
    out << "A:\n";
    print_table(out, a.op());
    out << "J:\n";
    print_table(out, j.op());
    Graded c = compat(a.op(), j.op());
    Graded e = equality(compatible_reduction(a).op(), j.op());
    print_graded(out, "compat(A, J)", c, h);
    print_graded(out, "jj(A) = J", e, h);
    return c.holds && e.holds ? 0 : 1;
  }
  if (name == "represent") {
    expect_args(command, 1);
    const HRelation& r = ws.relation(command[1]);
    LawTally tally;
    tally.add(out, adjunction_laws(r));
    tally.add(out, symmetry_check(r));
    tally.add(out, triangular_check(r));
    BasicTopology t = representable(r);
    out << "A:\n";
    print_table(out, t.saturation().op());
    out << "J:\n";
    print_table(out, t.reduction().op());
    out << "reduced: " << (is_reduced(t).value ? "yes" : "no") << "\n";
    return tally.failed == 0 ? 0 : 1;
  }
  if (name == "diagram") {
    expect_args(command, 1);
    Diagram d = five_node_diagram(ws.topology(command[1]));
    out << d.to_dot(command[1]);
    return d.ordering_holds ? 0 : 1;
  }
  if (name == "counterexample") {
    expect_args(command, 1);
    CatalogEntry e = load(command[1]);
    Replay r = replay(e);
    out << "entry: " << e.name << "\n" << "scenario: " << e.scenario << "\n" << r.to_text();
    return r.passed() ? 0 : 1;
  }
  throw UnknownCommand("unknown command '" + name + "'");
}

}  // namespace

RunResult run(const Workspace& ws, const std::vector<std::string>& command, const RunOptions& options) {
  std::ostringstream out;
  if (command.empty()) return RunResult{"error: no command\n", 2};
  try {
    int code = dispatch(out, ws, command, options);
    return RunResult{out.str(), code};
  } catch (const CapExceeded& e) {
    return RunResult{out.str() + "error: " + e.what() + "\n", 3};
  } catch (const Error& e) {
    return RunResult{out.str() + "error: " + e.what() + "\n", 2};
  }
}

}  // namespace basictop
