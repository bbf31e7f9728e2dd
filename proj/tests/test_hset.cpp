#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "basictop/errors.hpp"
#include "basictop/hset.hpp"
#include "oracle.hpp"

using namespace basictop;

TEST_CASE("enumeration order: point 0 varies slowest") {
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier({"a", "b"}));
  auto all = enumerate_all(ctx);
  REQUIRE(all.size() == 4);
  CHECK(all[0].to_string() == "{}");
  CHECK(all[1].to_string() == "{b}");
  CHECK(all[2].to_string() == "{a}");
  CHECK(all[3].to_string() == "{a, b}");
}

TEST_CASE("enumeration is complete and duplicate-free") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"a", "b", "c"}));
  auto all = enumerate_all(ctx);
  REQUIRE(all.size() == 27);
  auto model = oracle::all_vectors(3, 3);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(oracle::from_subset(all[i]) == model[i]);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(ctx->space().index_of(all[i]) == i);
}

TEST_CASE("literals round-trip") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"a", "b"}));
  for (const auto& u : enumerate_all(ctx)) CHECK(parse_subset(ctx, u.to_string()) == u);
  auto u = parse_subset(ctx, "{b:u}");
  CHECK(u.to_string() == "{b:u}");
  CHECK(parse_subset(ctx, "{ a , b:1 }").to_string() == "{a, b}");
  CHECK_THROWS_AS(parse_subset(ctx, "{c}"), ValidationError);
  CHECK_THROWS_AS(parse_subset(ctx, "{a, a}"), ValidationError);
  CHECK_THROWS_AS(parse_subset(ctx, "a"), ValidationError);
  CHECK_THROWS_AS(parse_subset(ctx, "{a:v}"), ValidationError);
}

TEST_CASE("overlap, inclusion and equality against the model") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"a", "b"}));
  oracle::Model m(3, 2);
  for (const auto& u : m.subsets)
    for (const auto& v : m.subsets) {
      auto hu = oracle::to_subset(ctx, u);
      auto hv = oracle::to_subset(ctx, v);
      CHECK(overlap(hu, hv).id == oracle::overlap(m.c, u, v));
      CHECK(incl(hu, hv).id == oracle::incl(m.c, u, v));
      CHECK(equal_degree(hu, hv).id == oracle::eq(m.c, u, v));
      const auto& space = ctx->space();
      CHECK(space.incl(space.index_of(hu), space.index_of(hv)).id == oracle::incl(m.c, u, v));
      CHECK(space.overlap(space.index_of(hu), space.index_of(hv)).id == oracle::overlap(m.c, u, v));
    }
}

TEST_CASE("overlap is stronger than non-emptiness in the 3-chain") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier({"*"}));
  auto u = parse_subset(ctx, "{*:u}");
  const auto& h = ctx->algebra();
  // Inhabited to degree u, but not-empty to degree 1.
  CHECK(h.name(overlap(u, HSubset::full(ctx))) == "u");
  CHECK(h.name(h.neg(incl(u, HSubset::empty(ctx)))) == "1");
}

TEST_CASE("pointwise operations") {
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier({"a", "b", "c"}));
  auto u = parse_subset(ctx, "{a, b}");
  auto v = parse_subset(ctx, "{b, c}");
  CHECK((u | v).to_string() == "{a, b, c}");
  CHECK((u & v).to_string() == "{b}");
  CHECK(pseudo_complement(u).to_string() == "{c}");
  CHECK(HSubset::singleton(ctx, 2, ctx->algebra().top()).to_string() == "{c}");
}

TEST_CASE("subset cap") {
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10",
                                                              "11", "12"}));
  CHECK_FALSE(ctx->enumerable());
  CHECK_THROWS_AS(ctx->space(), CapExceeded);
  CHECK_THROWS_AS(enumerate_all(ctx), CapExceeded);
  auto small = Context::make(HeytingAlgebra::boolean(), Carrier({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9",
                                                                "10", "11"}));
  CHECK(small->enumerable());
  CHECK(*small->subset_count() == 4096);
  auto raised = Context::make(HeytingAlgebra::boolean(), ctx->carrier(), 1 << 13);
  CHECK(raised->enumerable());
}

TEST_CASE("empty carrier has exactly one subset") {
  auto ctx = Context::make(HeytingAlgebra::chain(3), Carrier{});
  auto all = enumerate_all(ctx);
  REQUIRE(all.size() == 1);
  CHECK(all[0].to_string() == "{}");
  CHECK(overlap(all[0], all[0]) == ctx->algebra().bot());
  CHECK(incl(all[0], all[0]) == ctx->algebra().top());
}

TEST_CASE("contexts do not mix") {
  auto c1 = Context::make(HeytingAlgebra::boolean(), Carrier({"a"}));
  auto c2 = Context::make(HeytingAlgebra::boolean(), Carrier({"a"}));
  CHECK_THROWS_AS(overlap(HSubset::full(c1), HSubset::full(c2)), ContextMismatch);
  CHECK_THROWS_AS(Carrier({"a", "a"}), ValidationError);
}

TEST_CASE("large carriers are fine without enumeration") {
  std::vector<std::string> names;
  for (int i = 0; i < 5000; ++i) names.push_back("p" + std::to_string(i));
  auto ctx = Context::make(HeytingAlgebra::boolean(), Carrier(names));
  CHECK_FALSE(ctx->enumerable());
  auto u = HSubset::singleton(ctx, 4999, ctx->algebra().top());
  CHECK(overlap(u, HSubset::full(ctx)) == ctx->algebra().top());
}
