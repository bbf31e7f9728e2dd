#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "basictop/btop.hpp"
#include "basictop/errors.hpp"
#include "basictop/gen.hpp"
#include "oracle.hpp"

using namespace basictop;

namespace {

ContextPtr points(int n, const HeytingAlgebra& h = HeytingAlgebra::boolean()) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Context::make(h, Carrier(names));
}

using Mask = std::uint32_t;

HSubset from_mask(const ContextPtr& ctx, Mask m) {
  std::vector<Degree> ds;
  for (std::size_t i = 0; i < ctx->carrier().size(); ++i)
    ds.push_back(m >> i & 1U ? ctx->algebra().top() : ctx->algebra().bot());
  return HSubset(ctx, ds);
}

// Covers as (owner, mask) pairs.
struct MaskAxioms {
  int n;
  std::vector<std::pair<int, Mask>> covers;
  bool fulfills(Mask p) const {
    for (auto [a, c] : covers)
      if ((c & ~p) == 0 && !(p >> a & 1U)) return false;
    return true;
  }
  bool splits(Mask z) const {
    for (auto [a, c] : covers)
      if ((z >> a & 1U) && (c & z) == 0) return false;
    return true;
  }
  // Intersection of fulfilling supersets.
  Mask sat(Mask u) const {
    Mask r = (1U << n) - 1;
    for (Mask p = 0; p < (1U << n); ++p)
      if ((u & ~p) == 0 && fulfills(p)) r &= p;
    return r;
  }
  // Union of splitting subsets.
  Mask red(Mask v) const {
    Mask r = 0;
    for (Mask z = 0; z < (1U << n); ++z)
      if ((z & ~v) == 0 && splits(z)) r |= z;
    return r;
  }
};

}  // namespace

TEST_CASE("fulfilling and splitting") {
  auto ctx = points(3);
  AxiomSet ax(ctx, "ax");
  const auto& h = ctx->algebra();
  CHECK(fulfills(HSubset::full(ctx), ax) == h.top());
  CHECK(fulfills(HSubset::empty(ctx), ax) == h.top());
  ax.add(0, parse_subset(ctx, "{1, 2}"));
  CHECK(fulfills(parse_subset(ctx, "{1, 2}"), ax) == h.bot());
  CHECK(fulfills(HSubset::full(ctx), ax) == h.top());
  CHECK(splits(HSubset::empty(ctx), ax) == h.top());
  CHECK(splits(parse_subset(ctx, "{0}"), ax) == h.bot());
  CHECK(splits(parse_subset(ctx, "{0, 1}"), ax) == h.top());
}

TEST_CASE("generated saturation and reduction") {
  auto ctx = points(3);
  AxiomSet empty(ctx);
  CHECK(generate_saturation(empty).op() == identity_operator(ctx));
  CHECK(generate_reduction(empty).op() == identity_operator(ctx));
  AxiomSet ax(ctx, "ax");
  ax.add(0, parse_subset(ctx, "{1, 2}"));
  auto a = generate_saturation(ax);
  auto j = generate_reduction(ax);
  CHECK(a(parse_subset(ctx, "{1, 2}")).to_string() == "{0, 1, 2}");
  CHECK(a(parse_subset(ctx, "{1}")).to_string() == "{1}");
  CHECK(j(parse_subset(ctx, "{0}")).to_string() == "{}");
  CHECK(j(parse_subset(ctx, "{0, 1}")).to_string() == "{0, 1}");
  for (const auto& p : enumerate_all(ctx)) CHECK((a(p) == p) == (fulfills(p, ax) == ctx->algebra().top()));
  for (const auto& z : enumerate_all(ctx)) CHECK((j(z) == z) == (splits(z, ax) == ctx->algebra().top()));
  CHECK(compatible_reduction(a) == j);
  CHECK(compat(a.op(), j.op()).holds);
}

TEST_CASE("worklist fixpoints match the formulas on random axiom-sets") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 120; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto ctx = points(n);
    MaskAxioms model{n, {}};
    AxiomSet ax(ctx);
    int count = static_cast<int>(rng() % (2 * n + 2));
    for (int k = 0; k < count; ++k) {
      int a = static_cast<int>(rng() % n);
      Mask c = static_cast<Mask>(rng() % (1U << n));
      model.covers.emplace_back(a, c);
      ax.add(a, from_mask(ctx, c));
    }
    auto sat = generate_saturation(ax);
    auto red = generate_reduction(ax);
    for (Mask u = 0; u < (1U << n); ++u) {
      CHECK(sat(from_mask(ctx, u)) == from_mask(ctx, model.sat(u)));
      CHECK(red(from_mask(ctx, u)) == from_mask(ctx, model.red(u)));
    }
  }
}

TEST_CASE("rounds converge monotonically within the step bound") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    auto ctx = points(4, HeytingAlgebra::chain(3));
    AxiomSet ax(ctx);
    auto all = enumerate_all(ctx);
    for (int k = 0; k < 5; ++k) ax.add(rng() % 4, all[rng() % all.size()]);
    auto sat = generate_saturation(ax);
    auto red = generate_reduction(ax);
    const std::size_t bound = 3 * 4;
    for (std::size_t i = 0; i < all.size(); i += 7) {
      auto up = saturation_rounds(ax, all[i]);
      CHECK(up.size() - 1 <= bound);
      for (std::size_t s = 1; s < up.size(); ++s) CHECK(incl(up[s - 1], up[s]) == ctx->algebra().top());
      CHECK(up.back() == sat(all[i]));
      auto down = reduction_rounds(ax, all[i]);
      CHECK(down.size() - 1 <= bound);
      for (std::size_t s = 1; s < down.size(); ++s) CHECK(incl(down[s], down[s - 1]) == ctx->algebra().top());
      CHECK(down.back() == red(all[i]));
    }
    CHECK(compat(sat.op(), red.op()).holds);
    CHECK(compatible_reduction(sat) == red);
  }
}

TEST_CASE("Boolean rounds take at most |S| steps") {
  auto ctx = points(6);
  AxiomSet chain(ctx);
  for (int i = 1; i < 6; ++i) chain.add(i, HSubset::singleton(ctx, i - 1, ctx->algebra().top()));
  auto up = saturation_rounds(chain, parse_subset(ctx, "{0}"));
  CHECK(up.back() == HSubset::full(ctx));
  CHECK(up.size() - 1 <= 6);
}

TEST_CASE("worklist result does not depend on cover order") {
  std::mt19937_64 rng(5);
  auto ctx = points(6);
  std::vector<std::pair<int, Mask>> covers;
  for (int k = 0; k < 12; ++k) covers.emplace_back(rng() % 6, rng() % 64);
  AxiomSet first(ctx);
  for (auto [a, c] : covers) first.add(a, from_mask(ctx, c));
  auto s1 = generate_saturation(first);
  auto r1 = generate_reduction(first);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(covers.begin(), covers.end(), rng);
    AxiomSet other(ctx);
    for (auto [a, c] : covers) other.add(a, from_mask(ctx, c));
    CHECK(generate_saturation(other) == s1);
    CHECK(generate_reduction(other) == r1);
  }
}

TEST_CASE("Boolean generation scales past the subset cap") {
  const int n = 3000;
  auto ctx = points(n);
  REQUIRE_FALSE(ctx->enumerable());
  AxiomSet ax(ctx, "line");
  // i+1 is covered by i, and the last point needs the unreachable pair.
  for (int i = 0; i + 1 < n; ++i) ax.add(i + 1, HSubset::singleton(ctx, i, ctx->algebra().top()));
  auto a = generate_saturation(ax);
  auto j = generate_reduction(ax);
  CHECK(a.basis() == CertificateBasis::by_construction);
  CHECK(j.basis() == CertificateBasis::by_construction);
  CHECK(a(HSubset::singleton(ctx, 0, ctx->algebra().top())) == HSubset::full(ctx));
  auto tail = HSubset::singleton(ctx, n - 1, ctx->algebra().top());
  CHECK(a(tail) == tail);
  // Nothing but point 0 splits: each later point needs its predecessor.
  CHECK(j(HSubset::full(ctx)) == HSubset::full(ctx));
  CHECK(j(tail) == HSubset::empty(ctx));
}

TEST_CASE("H-mode generation above the cap throws") {
  auto ctx = points(9, HeytingAlgebra::chain(3));
  AxiomSet ax(ctx);
  CHECK_THROWS_AS(generate_saturation(ax), CapExceeded);
}

TEST_CASE("axioms from a saturation round-trip") {
  auto ctx = points(2);
  oracle::Model m(2, 2);
  for (const auto& o : oracle::all_operators(m)) {
    auto op = oracle::to_operator(ctx, m, o);
    if (!classify(op).is_saturation()) continue;
    auto a = Saturation::certify(op);
    auto ax = axioms_from_saturation(a);
    CHECK(generate_saturation(ax) == a);
    for (const auto& z : enumerate_all(ctx)) CHECK(splits(z, ax) == splits(z, a.op()).degree);
  }
  auto id = Saturation::certify(identity_operator(ctx));
  CHECK(generate_saturation(axioms_from_saturation(id)).op() == identity_operator(ctx));
}

TEST_CASE("weighted axioms from an H-valued saturation") {
  auto ctx = points(2, HeytingAlgebra::chain(3));
  std::vector<HSubset> fam{parse_subset(ctx, "{0:u}"), parse_subset(ctx, "{0, 1}")};
  auto a = family_saturation(ctx, fam);
  auto ax = axioms_from_saturation(a);
  CHECK_FALSE(ax.crisp());
  CHECK(generate_saturation(ax) == a);
  for (const auto& z : enumerate_all(ctx)) CHECK(splits(z, ax) == splits(z, a.op()).degree);
}

TEST_CASE("generated topologies are saturated") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    auto ctx = points(3, HeytingAlgebra::chain(3));
    AxiomSet ax(ctx);
    auto all = enumerate_all(ctx);
    for (int k = 0; k < 4; ++k) ax.add(rng() % 3, all[rng() % all.size()]);
    auto topo = BasicTopology::make(generate_saturation(ax), generate_reduction(ax));
    CHECK(saturate(topo) == topo);
  }
}

TEST_CASE("axiom-set validation") {
  auto ctx = points(2);
  AxiomSet ax(ctx);
  CHECK_THROWS_AS(ax.add(5, HSubset::full(ctx)), ValidationError);
  CHECK_THROWS_AS(ax.add(0, HSubset::full(points(2))), ContextMismatch);
}
