#include "basictop/catalog.hpp"

#include <sstream>

#include "basictop/errors.hpp"

namespace basictop {

Saturation union_with_degree(const ContextPtr& ctx, Degree p) {
  const auto& h = ctx->algebra();
  return Saturation::certify(Operator::from_rule(ctx, "union_degree " + h.name(p), [p](const HSubset& u) {
    const auto& alg = u.context().algebra();
    std::vector<Degree> out(u.degrees().begin(), u.degrees().end());
    for (auto& d : out) d = alg.join(d, p);
    return HSubset(u.context_ptr(), std::move(out));
  }));
}

Reduction guarded(const ContextPtr& ctx, Degree p, std::size_t b) {
  const auto& h = ctx->algebra();
  return Reduction::certify(
      Operator::from_rule(ctx, "guarded " + h.name(p) + " " + ctx->carrier().name(b), [p, b](const HSubset& u) {
        const auto& alg = u.context().algebra();
        Degree guard = alg.imp(alg.neg(u[b]), p);
        std::vector<Degree> out(u.degrees().begin(), u.degrees().end());
        for (auto& d : out) d = alg.meet(d, guard);
        return HSubset(u.context_ptr(), std::move(out));
      }));
}

bool Replay::passed() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

std::string Replay::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass() ? "PASS " : "FAIL ") << c.label << ": " << c.actual << " (expected " << c.expected << ")";
    if (!c.witness.empty()) {
      out << " witness";
      for (const auto& w : c.witness) out << " " << w;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

CatalogCheck degree_check(std::string label, const HeytingAlgebra& h, const std::string& expected, const Graded& g) {
  return CatalogCheck{std::move(label), expected, h.name(g.degree), describe(g.witness)};
}

CatalogCheck degree_check(std::string label, const HeytingAlgebra& h, const std::string& expected, Degree d) {
  return CatalogCheck{std::move(label), expected, h.name(d), {}};
}

CatalogCheck fact_check(std::string label, bool expected, bool actual, std::vector<std::string> witness = {}) {
  return CatalogCheck{std::move(label), yes_no(expected), yes_no(actual), std::move(witness)};
}

CatalogCheck subset_check(std::string label, const HSubset& expected, const HSubset& actual) {
  return CatalogCheck{std::move(label), expected.to_string(), actual.to_string(), {}};
}

ContextPtr boolean_ab() { return Context::make(HeytingAlgebra::boolean(), Carrier({"a", "b"})); }

CatalogEntry nonidempotent_meet() {
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier({"0", "1"}));
  std::vector<HSubset> opens{parse_subset(ctx, "{}"), parse_subset(ctx, "{1}"), parse_subset(ctx, "{0, 1}")};
  Reduction interior = family_reduction(ctx, opens);
  Operator value = constant_operator(parse_subset(ctx, "{0}"));
  std::vector<Operator> parts{interior.op(), value};
  Operator m = pointwise_meet(ctx, parts).with_description("meet(int, const {0})");
  auto checks = [ctx, m] {
    const auto& h = ctx->algebra();
    auto p = classify(m);
    HSubset s = HSubset::full(ctx);
    return std::vector<CatalogCheck>{
        degree_check("idempotent", h, "0", p.idempotent),
        fact_check("witness is S", true, p.idempotent.witness.size() == 1 && p.idempotent.witness[0] == s),
        subset_check("O(S)", parse_subset(ctx, "{0}"), m(s)),
        subset_check("O(O(S))", HSubset::empty(ctx), m(m(s))),
    };
  };
  return {"nonidempotent-meet",
          "Sierpinski space on {0, 1} with open {1}; O = interior meet const {0} is monotone but not idempotent",
          ctx,
          {{"int", interior.op()}, {"O", m}},
          checks};
}

CatalogEntry weak_vs_strong() {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"*"}));
  Operator dneg = double_negation_operator(ctx);
  Operator top = top_operator(ctx);
  auto checks = [ctx, dneg, top] {
    const auto& h = ctx->algebra();
    return std::vector<CatalogCheck>{degree_check("weak_compat(dneg, top)", h, "1", weak_compat(dneg, top)),
                                     degree_check("compat(dneg, top)", h, "u", compat(dneg, top))};
  };
  return {"weak-vs-strong-compat",
          "3-chain, S = {*}: the weak (negative) form of compatibility holds while the strong form has degree u",
          ctx,
          {{"dneg", dneg}, {"top", top}},
          checks};
}

CatalogEntry rr_converse() {
  auto ctx = boolean_ab();
  Operator inh = inhabited_operator(ctx);
  Operator cb = constant_operator(parse_subset(ctx, "{b}"));
  Operator rr = greatest_right_compatible(inh);
  auto checks = [ctx, inh, cb, rr] {
    const auto& h = ctx->algebra();
    return std::vector<CatalogCheck>{
        subset_check("largest splitting subset", HSubset::full(ctx), largest_splitting_subset(inh)),
        degree_check("const {b} <= rr(inhabited)", h, "1", inclusion(cb, rr)),
        degree_check("compat(inhabited, const {b})", h, "0", compat(inh, cb)),
        degree_check("compat(inhabited, rr(inhabited))", h, "1", compat(inh, rr))};
  };
  return {"rr-converse-fails",
          "Boolean S = {a, b}, O = inhabited: const {b} lies below rr(O) yet O is not compatible with it",
          ctx,
          {{"inhabited", inh}, {"const_b", cb}, {"rr", rr}},
          checks};
}

CatalogEntry ap_jp() {
  auto ctx = boolean_ab();
  std::vector<HSubset> family{parse_subset(ctx, "{a}")};
  Saturation a = family_saturation(ctx, family);
  Reduction j = family_reduction(ctx, family);
  auto checks = [ctx, a, j] {
    const auto& h = ctx->algebra();
    return std::vector<CatalogCheck>{subset_check("A_P(empty)", parse_subset(ctx, "{a}"), a(HSubset::empty(ctx))),
                                     subset_check("J_P(S)", parse_subset(ctx, "{a}"), j(HSubset::full(ctx))),
                                     degree_check("compat(A_P, J_P)", h, "0", compat(a.op(), j.op()))};
  };
  return {"ap-jp-incompatible",
          "Boolean S = {a, b}, P = {{a}}: the least saturation and greatest reduction fixing P are not compatible",
          ctx,
          {{"A_P", a.op()}, {"J_P", j.op()}},
          checks};
}

CatalogEntry id_bot() {
  auto ctx = boolean_ab();
  Saturation id = Saturation::certify(identity_operator(ctx));
  Reduction bot = Reduction::certify(bottom_operator(ctx));
  BasicTopology t = BasicTopology::make(id, bot, "id-bot");
  auto checks = [ctx, t] {
    BasicTopology top_bot = BasicTopology::make(Saturation::certify(top_operator(ctx)),
                                                Reduction::certify(bottom_operator(ctx)));
    BasicTopology id_id = BasicTopology::make(Saturation::certify(identity_operator(ctx)),
                                              Reduction::certify(identity_operator(ctx)));
    Verdict red = is_reduced(t);
    Verdict sat = is_saturated(t);
    Diagram d = five_node_diagram(t);
    return std::vector<CatalogCheck>{fact_check("reduced", false, red.value, describe(red.witness)),
                                     fact_check("saturated", false, sat.value, describe(sat.witness)),
                                     fact_check("T^R = [top, bot]", true, reduce(t) == top_bot),
                                     fact_check("T^RS = [top, bot]", true, saturate(reduce(t)) == top_bot),
                                     fact_check("T^S = [id, id]", true, saturate(t) == id_id),
                                     fact_check("T^SR = [id, id]", true, reduce(saturate(t)) == id_id),
                                     CatalogCheck{"diagram nodes", "3", std::to_string(d.nodes.size()), {}},
                                     fact_check("diagram ordering", true, d.ordering_holds)};
  };
  return {"id-bot-topology", "Boolean S = {a, b}, T = [id, bot]: neither reduced nor saturated", ctx,
          {{"id", id.op()}, {"bot", bot.op()}}, checks};
}

CatalogEntry sat_not_reduced() {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"*"}));
  const auto& h = ctx->algebra();
  Degree p = h.parse("u");
  Saturation ap = union_with_degree(ctx, p);
  auto checks = [ctx, ap, p] {
    const auto& alg = ctx->algebra();
    Reduction jj = compatible_reduction(ap);
    Saturation aajj = compatible_saturation(jj);
    HSubset e = HSubset::empty(ctx);
    Degree lem = alg.imp(alg.imp(alg.neg(p), p), p);
    return std::vector<CatalogCheck>{
        fact_check("JJ(A_p) = bot", true, jj.op() == bottom_operator(ctx)),
        fact_check("AA(JJ(A_p)) = top", true, aajj.op() == top_operator(ctx)),
        fact_check("AA(JJ(A_p)) = A_p", false, aajj == ap),
        degree_check("incl(AA(JJ(A_p)) empty, A_p empty)", alg, "u", incl(aajj(e), ap(e))),
        degree_check("(not p -> p) -> p", alg, "u", lem)};
  };
  return {"sat-not-reduced",
          "3-chain, S = {*}, p = u, A_p(U) = U \\/ {x | p}: [A_p, JJ(A_p)] is saturated but not reduced", ctx,
          {{"A_p", ap.op()}}, checks};
}

CatalogEntry red_not_saturated() {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"a", "b"}));
  const auto& h = ctx->algebra();
  Degree p = h.parse("u");
  Reduction jp = guarded(ctx, p, 1);
  auto checks = [ctx, jp] {
    const auto& alg = ctx->algebra();
    HSubset a = parse_subset(ctx, "{a}");
    Saturation aa = compatible_saturation(jp);
    Reduction jjaa = compatible_reduction(aa);
    return std::vector<CatalogCheck>{degree_check("{a} = J_p{a}", alg, "u", equal_degree(a, jp(a))),
                                     degree_check("{a} splits AA(J_p)", alg, "1", splits(a, aa.op())),
                                     fact_check("JJ(AA(J_p)) = J_p", false, jjaa == jp)};
  };
  return {"red-not-saturated",
          "3-chain, S = {a, b}, p = u, J_p(U) = {x in U | b not in U -> p}: [AA(J_p), J_p] is reduced but not saturated",
          ctx,
          {{"J_p", jp.op()}},
          checks};
}

CatalogEntry finite_line() {
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier({"-1", "0", "1", "2"}));
  // Minimal open neighbourhood of each point.
  std::vector<HSubset> basis{parse_subset(ctx, "{-1}"), parse_subset(ctx, "{-1, 0, 1}"), parse_subset(ctx, "{1}"),
                             parse_subset(ctx, "{2}")};
  Operator closure = Operator::from_rule(ctx, "cl", [basis](const HSubset& u) {
    std::vector<Degree> out(u.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = overlap(basis[x], u);
    return HSubset(u.context_ptr(), std::move(out));
  });
  Operator interior = Operator::from_rule(ctx, "int", [basis](const HSubset& u) {
    std::vector<Degree> out(u.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = incl(basis[x], u);
    return HSubset(u.context_ptr(), std::move(out));
  });
  Operator intcl = compose(interior, closure).with_description("int cl");
  Operator left = constant_operator(parse_subset(ctx, "{-1, 0}"));
  Operator right = constant_operator(parse_subset(ctx, "{0, 1, 2}"));
  std::vector<Operator> both{left, right};
  Operator meet = pointwise_meet(ctx, both);
  auto checks = [ctx, intcl, left, right, meet] {
    const auto& h = ctx->algebra();
    return std::vector<CatalogCheck>{degree_check("compat(int cl, const {-1, 0})", h, "1", compat(intcl, left)),
                                     degree_check("compat(int cl, const {0, 1, 2})", h, "1", compat(intcl, right)),
                                     degree_check("compat(int cl, const {0})", h, "0", compat(intcl, meet))};
  };
  return {"finite-line-meet-law",
          "Finite line -1 < 0 < 1 < 2 (0 sees its neighbours): int cl is compatible with two constants but not "
          "with their meet",
          ctx,
          {{"intcl", intcl}, {"left", left}, {"right", right}},
          checks};
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"nonidempotent-meet", "weak-vs-strong-compat", "rr-converse-fails",
                                              "ap-jp-incompatible", "id-bot-topology",       "sat-not-reduced",
                                              "red-not-saturated",  "finite-line-meet-law"};
  return names;
}

CatalogEntry load(std::string_view name) {
  if (name == "nonidempotent-meet") return nonidempotent_meet();
  if (name == "weak-vs-strong-compat") return weak_vs_strong();
  if (name == "rr-converse-fails") return rr_converse();
  if (name == "ap-jp-incompatible") return ap_jp();
  if (name == "id-bot-topology") return id_bot();
  if (name == "sat-not-reduced") return sat_not_reduced();
  if (name == "red-not-saturated") return red_not_saturated();
  if (name == "finite-line-meet-law") return finite_line();
  throw UnknownEntry("unknown catalog entry '" + std::string(name) + "'");
}

Replay replay(const CatalogEntry& entry) { return Replay{entry.name, entry.checks()}; }

}  // namespace basictop
