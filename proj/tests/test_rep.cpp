#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "basictop/errors.hpp"
#include "basictop/rep.hpp"
#include "oracle.hpp"

using namespace basictop;

namespace {

ContextPtr carrier(std::vector<std::string> names, const HeytingAlgebra& h = HeytingAlgebra::boolean()) {
  return Context::make(h, Carrier(std::move(names)));
}

struct Fixture {
  ContextPtr xs = carrier({"x"});
  ContextPtr s = carrier({"a", "b"});
  HRelation r = [this] {
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
    return HRelation::from_pairs(xs, s, pairs, "r");
  }();
};

// Images computed straight from a rank matrix.
struct MatrixModel {
  oracle::Chain c;
  int nx, ns;
  std::vector<int> m;
  int at(int x, int a) const { return m[x * ns + a]; }
  oracle::Vec dir(const oracle::Vec& d) const {
    oracle::Vec out(ns, 0);
    for (int a = 0; a < ns; ++a)
      for (int x = 0; x < nx; ++x) out[a] = c.join(out[a], c.meet(d[x], at(x, a)));
    return out;
  }
  oracle::Vec inv(const oracle::Vec& u) const {
    oracle::Vec out(nx, 0);
    for (int x = 0; x < nx; ++x)
      for (int a = 0; a < ns; ++a) out[x] = c.join(out[x], c.meet(u[a], at(x, a)));
    return out;
  }
  oracle::Vec star(const oracle::Vec& u) const {
    oracle::Vec out(nx, c.top());
    for (int x = 0; x < nx; ++x)
      for (int a = 0; a < ns; ++a) out[x] = c.meet(out[x], c.imp(at(x, a), u[a]));
    return out;
  }
  oracle::Vec inv_star(const oracle::Vec& d) const {
    oracle::Vec out(ns, c.top());
    for (int a = 0; a < ns; ++a)
      for (int x = 0; x < nx; ++x) out[a] = c.meet(out[a], c.imp(at(x, a), d[x]));
    return out;
  }
};

std::vector<std::string> names(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("images on the single-pair relation") {
  Fixture f;
  auto d = parse_subset(f.xs, "{x}");
  CHECK(direct_image(f.r, HSubset::empty(f.xs)) == HSubset::empty(f.s));
  CHECK(direct_image(f.r, d).to_string() == "{a}");
  CHECK(inverse_image(f.r, parse_subset(f.s, "{b}")) == HSubset::empty(f.xs));
  CHECK(right_adjoint(f.r, HSubset::full(f.s)) == HSubset::full(f.xs));
  CHECK(right_adjoint(f.r, parse_subset(f.s, "{a}")) == d);
  CHECK(right_adjoint(f.r, parse_subset(f.s, "{b}")) == HSubset::empty(f.xs));
  CHECK(inverse_right_adjoint(f.r, HSubset::empty(f.xs)).to_string() == "{b}");
}

TEST_CASE("representable topology of the single-pair relation") {
  Fixture f;
  auto t = representable(f.r);
  for (const auto& u : enumerate_all(f.s)) {
    bool has_a = u[0] == f.s->algebra().top();
    CHECK(t.reduction()(u).to_string() == (has_a ? "{a}" : "{}"));
    CHECK(t.saturation()(u).to_string() == (has_a ? "{a, b}" : "{b}"));
  }
  CHECK(is_reduced(t).value);
  CHECK(adjunction_laws(f.r).status == LawStatus::holds);
  CHECK(symmetry_check(f.r).status == LawStatus::holds);
  CHECK(triangular_check(f.r).status == LawStatus::holds);
}

TEST_CASE("identity relation gives the discrete topology") {
  auto s = carrier({"a", "b", "c"});
  auto xs = carrier({"a", "b", "c"});
  std::vector<std::pair<std::size_t, std::size_t>> diag{{0, 0}, {1, 1}, {2, 2}};
  auto t = representable(HRelation::from_pairs(xs, s, diag));
  CHECK(t.saturation().op() == identity_operator(s));
  CHECK(t.reduction().op() == identity_operator(s));
}

TEST_CASE("empty relation") {
  auto xs = carrier({"x", "y"});
  auto s = carrier({"a", "b"});
  HRelation r = HRelation::from_pairs(xs, s, {});
  CHECK(symmetry_check(r).status == LawStatus::holds);
  for (const auto& d : enumerate_all(xs)) CHECK(direct_image(r, d) == HSubset::empty(s));
  auto t = representable(r);
  CHECK(t.reduction().op() == bottom_operator(s));
  CHECK(t.saturation().op() == top_operator(s));
}

TEST_CASE("images and laws match the matrix oracle") {
  std::mt19937_64 rng(17);
  for (int levels : {2, 3}) {
    const auto& h = levels == 2 ? HeytingAlgebra::boolean() : HeytingAlgebra::chain(3);
    oracle::Chain c{levels};
    for (int t = 0; t < 40; ++t) {
      int nx = 1 + static_cast<int>(rng() % (levels == 2 ? 4 : 3));
      int ns = 1 + static_cast<int>(rng() % (levels == 2 ? 4 : 3));
      auto xs = carrier(names(nx, "x"), h);
      auto s = carrier(names(ns, "a"), h);
      MatrixModel mm{c, nx, ns, {}};
      std::vector<Degree> matrix;
      for (int i = 0; i < nx * ns; ++i) {
        mm.m.push_back(static_cast<int>(rng() % levels));
        matrix.push_back(Degree{static_cast<std::uint8_t>(mm.m.back())});
      }
      HRelation r(xs, s, matrix);
      for (const auto& d : oracle::all_vectors(levels, nx)) {
        auto dd = oracle::to_subset(xs, d);
        CHECK(oracle::from_subset(direct_image(r, dd)) == mm.dir(d));
        CHECK(oracle::from_subset(inverse_right_adjoint(r, dd)) == mm.inv_star(d));
      }
      for (const auto& u : oracle::all_vectors(levels, ns)) {
        auto uu = oracle::to_subset(s, u);
        CHECK(oracle::from_subset(inverse_image(r, uu)) == mm.inv(u));
        CHECK(oracle::from_subset(right_adjoint(r, uu)) == mm.star(u));
      }
      CHECK(adjunction_laws(r).status == LawStatus::holds);
      CHECK(symmetry_check(r).status == LawStatus::holds);
      CHECK(triangular_check(r).status == LawStatus::holds);
      auto topo = representable(r);
      CHECK(is_reduced(topo).value);
      for (const auto& u : oracle::all_vectors(levels, ns)) {
        CHECK(oracle::from_subset(topo.reduction()(oracle::to_subset(s, u))) == mm.dir(mm.star(u)));
        CHECK(oracle::from_subset(topo.saturation()(oracle::to_subset(s, u))) == mm.inv_star(mm.inv(u)));
      }
      // Images preserve unions and the empty subset.
      auto ud = enumerate_all(xs);
      auto a = ud[rng() % ud.size()];
      auto b = ud[rng() % ud.size()];
      CHECK(direct_image(r, (a | b)) == (direct_image(r, a) | direct_image(r, b)));
      CHECK(direct_image(r, HSubset::empty(xs)) == HSubset::empty(s));
    }
  }
}

TEST_CASE("every Boolean reduction on two points is representable") {
  auto s = carrier({"a", "b"});
  oracle::Model m(2, 2);
  int reductions = 0;
  for (const auto& o : oracle::all_operators(m)) {
    auto op = oracle::to_operator(s, m, o);
    if (!classify(op).is_reduction()) continue;
    ++reductions;
    auto j = Reduction::certify(op);
    auto r = represent_reduction(j);
    auto t = representable(r);
    CHECK(t.reduction() == j);
    CHECK(t.saturation() == compatible_saturation(j));
    CHECK(oracle::from_operator(m, t.saturation().op()).image == m.ll(o).image);
  }
  CHECK(reductions > 0);
}

TEST_CASE("represent_reduction on the trivial reductions") {
  auto s = carrier({"a", "b"});
  auto id = Reduction::certify(identity_operator(s));
  auto r = represent_reduction(id);
  CHECK(r.domain().carrier().size() == 4);
  CHECK(representable(r).reduction() == id);
  auto bot = Reduction::certify(bottom_operator(s));
  auto rb = represent_reduction(bot);
  REQUIRE(rb.domain().carrier().size() == 1);
  CHECK(rb.domain().carrier().points()[0] == "{}");
  auto tb = representable(rb);
  CHECK(tb.reduction().op() == bottom_operator(s));
  CHECK(tb.saturation().op() == top_operator(s));
}

TEST_CASE("represent_reduction in H-mode") {
  auto s = carrier({"a", "b"}, HeytingAlgebra::chain(3));
  std::vector<HSubset> fam{parse_subset(s, "{a:u}"), parse_subset(s, "{a, b}")};
  auto j = family_reduction(s, fam);
  auto t = representable(represent_reduction(j));
  CHECK(t.reduction() == j);
  CHECK(t.saturation() == compatible_saturation(j));
}

TEST_CASE("mismatched carriers are rejected") {
  Fixture f;
  CHECK_THROWS_AS(direct_image(f.r, HSubset::full(f.s)), ContextMismatch);
  CHECK_THROWS_AS(HRelation(f.xs, f.s, std::vector<Degree>(3, Degree{0})), ValidationError);
}
