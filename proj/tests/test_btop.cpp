#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "basictop/btop.hpp"
#include "basictop/errors.hpp"
#include "oracle.hpp"

using namespace basictop;

namespace {

ContextPtr boolean_ab() { return Context::make(HeytingAlgebra::boolean(), Carrier({"a", "b"})); }

Saturation sat(const Operator& o) { return Saturation::certify(o); }
Reduction red(const Operator& o) { return Reduction::certify(o); }

std::vector<BasicTopology> all_topologies(const ContextPtr& ctx, const oracle::Model& m) {
  std::vector<Saturation> sats;
  std::vector<Reduction> reds;
  for (const auto& o : oracle::all_operators(m)) {
    auto op = oracle::to_operator(ctx, m, o);
    auto p = classify(op);
    if (p.is_saturation()) sats.push_back(Saturation::certify(op));
    if (p.is_reduction()) reds.push_back(Reduction::certify(op));
  }
  std::vector<BasicTopology> out;
  for (const auto& a : sats)
    for (const auto& j : reds)
      if (compat(a.op(), j.op()).holds) out.push_back(BasicTopology::make(a, j));
  return out;
}

}  // namespace

TEST_CASE("make") {
  auto ctx = boolean_ab();
  CHECK_NOTHROW(BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx))));
  CHECK_THROWS_AS(BasicTopology::make(sat(top_operator(ctx)), red(identity_operator(ctx))), NotCompatible);
  std::vector<HSubset> p{parse_subset(ctx, "{a}")};
  try {
    BasicTopology::make(family_saturation(ctx, p), family_reduction(ctx, p));
    FAIL("incompatible pair accepted");
  } catch (const NotCompatible& e) {
    CHECK(e.degree() == "0");
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == "{}");
  }
}

TEST_CASE("coarser") {
  auto ctx = boolean_ab();
  auto top_bot = BasicTopology::make(sat(top_operator(ctx)), red(bottom_operator(ctx)));
  auto id_id = BasicTopology::make(sat(identity_operator(ctx)), red(identity_operator(ctx)));
  auto id_bot = BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx)));
  CHECK(coarser(id_bot, id_bot).holds);
  oracle::Model m(2, 2);
  for (const auto& t : all_topologies(ctx, m)) CHECK(coarser(top_bot, t).holds);
  CHECK(coarser(id_id, id_bot).degree == ctx->algebra().bot());
}

TEST_CASE("join of a family") {
  auto ctx = boolean_ab();
  auto top_bot = BasicTopology::make(sat(top_operator(ctx)), red(bottom_operator(ctx)));
  auto id_id = BasicTopology::make(sat(identity_operator(ctx)), red(identity_operator(ctx)));
  CHECK(join_family(ctx, {}) == top_bot);
  std::vector<BasicTopology> one{id_id};
  CHECK(join_family(ctx, one) == id_id);
  std::vector<BasicTopology> two{id_id, top_bot};
  CHECK(join_family(ctx, two) == id_id);
}

TEST_CASE("reduce and saturate [id, bot]") {
  auto ctx = boolean_ab();
  auto t = BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx)));
  auto top_bot = BasicTopology::make(sat(top_operator(ctx)), red(bottom_operator(ctx)));
  auto id_id = BasicTopology::make(sat(identity_operator(ctx)), red(identity_operator(ctx)));
  CHECK(reduce(t) == top_bot);
  CHECK(saturate(t) == id_id);
  CHECK_FALSE(is_reduced(t).value);
  CHECK_FALSE(is_saturated(t).value);
  CHECK(is_reduced(id_id).value);
  CHECK(is_saturated(id_id).value);
  CHECK(is_reduced(top_bot).value);
  CHECK(is_saturated(top_bot).value);
  // compat(A, J) does not carry over to compat(AA(J), JJ(A)).
  CHECK_FALSE(compat(compatible_saturation(t.reduction()).op(), compatible_reduction(t.saturation()).op()).holds);
}

TEST_CASE("five-node diagram of [id, bot]") {
  auto ctx = boolean_ab();
  auto t = BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx)), "T");
  auto d = five_node_diagram(t);
  CHECK(d.ordering_holds);
  REQUIRE(d.nodes.size() == 3);
  CHECK(d.nodes[0].names == std::vector<std::string>{"T^R", "T^RS"});
  CHECK(d.nodes[1].names == std::vector<std::string>{"T"});
  CHECK(d.nodes[2].names == std::vector<std::string>{"T^SR", "T^S"});
  CHECK(d.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  auto dot = d.to_dot("id-bot");
  CHECK(dot.find("A: top, J: bot") != std::string::npos);
  CHECK(dot == five_node_diagram(t).to_dot("id-bot"));
}

TEST_CASE("diagram of a reduced topology collapses to two nodes") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"a", "b"}));
  std::vector<HSubset> fam{parse_subset(ctx, "{a}"), parse_subset(ctx, "{a, b:u}")};
  auto j = family_reduction(ctx, fam);
  auto t = BasicTopology::make(compatible_saturation(j), j);
  REQUIRE(is_reduced(t).value);
  auto d = five_node_diagram(t);
  CHECK(d.ordering_holds);
  if (is_saturated(t).value) {
    CHECK(d.nodes.size() == 1);
  } else {
    CHECK(d.nodes.size() == 2);
    CHECK(d.edges.size() == 1);
  }
}

TEST_CASE("Boolean diagrams: RS = R and SR = S") {
  auto ctx = boolean_ab();
  oracle::Model m(2, 2);
  for (const auto& t : all_topologies(ctx, m)) {
    CHECK(saturate(reduce(t)) == reduce(t));
    CHECK(reduce(saturate(t)) == saturate(t));
    CHECK(five_node_diagram(t).ordering_holds);
  }
}

TEST_CASE("reduction and saturation of topologies are a comonad and a monad") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"*"}));
  oracle::Model m(3, 1);
  auto ts = all_topologies(ctx, m);
  REQUIRE(ts.size() > 3);
  for (const auto& t : ts) {
    CHECK(coarser(reduce(t), t).holds);
    CHECK(coarser(t, saturate(t)).holds);
    CHECK(reduce(reduce(t)) == reduce(t));
    CHECK(saturate(saturate(t)) == saturate(t));
    for (const auto& s : ts) {
      if (!coarser(t, s).holds) continue;
      CHECK(coarser(reduce(t), reduce(s)).holds);
      CHECK(coarser(saturate(t), saturate(s)).holds);
    }
  }
}

TEST_CASE("adjunctions") {
  auto ctx = boolean_ab();
  auto top_bot = BasicTopology::make(sat(top_operator(ctx)), red(bottom_operator(ctx)));
  CHECK(adjunction_check(red(bottom_operator(ctx)), top_bot).status == LawStatus::holds);
  auto id_bot = BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx)));
  auto r = adjunction_check(sat(identity_operator(ctx)), id_bot);
  CHECK(r.status == LawStatus::holds);
  CHECK(r.degrees[1].name == "1");
  oracle::Model m(2, 2);
  auto ts = all_topologies(ctx, m);
  for (const auto& t : ts)
    for (const auto& s : ts) {
      CHECK(adjunction_check(s.reduction(), t).status == LawStatus::holds);
      CHECK(adjunction_check(s.saturation(), t).status == LawStatus::holds);
    }
}

TEST_CASE("names") {
  auto ctx = boolean_ab();
  auto t = BasicTopology::make(sat(identity_operator(ctx)), red(bottom_operator(ctx)), "T");
  CHECK(reduce(t).name() == "T^R");
  CHECK(saturate(t).name() == "T^S");
  CHECK(t.to_string() == "[id, bot]");
  CHECK(t.with_name("U").name() == "U");
}
