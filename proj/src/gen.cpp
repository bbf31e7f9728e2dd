#include "basictop/gen.hpp"

#include <deque>

#include "basictop/errors.hpp"

namespace basictop {

AxiomSet::AxiomSet(ContextPtr ctx, std::string name)
    : ctx_(std::move(ctx)), name_(std::move(name)), covers_(ctx_->carrier().size()) {}

void AxiomSet::add(std::size_t point, HSubset cover, std::optional<Degree> weight) {
  require_same(*ctx_, cover.context(), name_.empty() ? "axiom-set" : name_);
  if (point >= covers_.size()) throw ValidationError(name_, "point index " + std::to_string(point) + " out of range");
  covers_[point].push_back(Cover{std::move(cover), weight.value_or(ctx_->algebra().top())});
}

std::size_t AxiomSet::cover_count() const noexcept {
  std::size_t n = 0;
  for (const auto& cs : covers_) n += cs.size();
  return n;
}

bool AxiomSet::crisp() const noexcept {
  const auto& h = ctx_->algebra();
  for (const auto& cs : covers_)
    for (const auto& c : cs)
      if (c.weight != h.top() && c.weight != h.bot()) return false;
  return true;
}

Degree fulfills(const HSubset& p, const AxiomSet& ax) {
  require_same(p.context(), ax.context(), "fulfills");
  const auto& h = ax.context().algebra();
  Degree acc = h.top();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (const auto& c : ax.covers(a)) acc = h.meet(acc, h.imp(h.meet(c.weight, incl(c.subset, p)), p[a]));
  return acc;
}

Degree splits(const HSubset& z, const AxiomSet& ax) {
  require_same(z.context(), ax.context(), "splits");
  const auto& h = ax.context().algebra();
  Degree acc = h.top();
  for (std::size_t a = 0; a < z.size(); ++a)
    for (const auto& c : ax.covers(a)) acc = h.meet(acc, h.imp(h.meet(c.weight, z[a]), overlap(c.subset, z)));
  return acc;
}

namespace {

struct CrispCover {
  std::size_t owner;
  std::vector<std::size_t> members;
};

// Flattened crisp axiom-set with, for every point, the covers it belongs to.
struct CrispIndex {
  std::vector<CrispCover> covers;
  std::vector<std::vector<std::size_t>> containing;

  explicit CrispIndex(const AxiomSet& ax) : containing(ax.context().carrier().size()) {
    const auto& h = ax.context().algebra();
    for (std::size_t a = 0; a < containing.size(); ++a) {
      for (const auto& c : ax.covers(a)) {
        if (c.weight == h.bot()) continue;
        CrispCover cc{a, {}};
        for (std::size_t x = 0; x < c.subset.size(); ++x)
          if (c.subset[x] == h.top()) cc.members.push_back(x);
        for (std::size_t x : cc.members) containing[x].push_back(covers.size());
        covers.push_back(std::move(cc));
      }
    }
  }
};

HSubset least_fulfilling(const CrispIndex& index, const HSubset& u) {
  const auto& h = u.context().algebra();
  std::vector<Degree> r(u.degrees().begin(), u.degrees().end());
  std::vector<std::size_t> missing(index.covers.size());
  std::deque<std::size_t> added;
  auto add = [&](std::size_t a) {
    if (r[a] == h.top()) return;
    r[a] = h.top();
    added.push_back(a);
  };
  for (std::size_t c = 0; c < index.covers.size(); ++c) {
    std::size_t m = 0;
    for (std::size_t x : index.covers[c].members) m += r[x] == h.top() ? 0 : 1;
    missing[c] = m;
  }
  for (std::size_t c = 0; c < index.covers.size(); ++c)
    if (missing[c] == 0) add(index.covers[c].owner);
  while (!added.empty()) {
    std::size_t x = added.front();
    added.pop_front();
    for (std::size_t c : index.containing[x])
      if (--missing[c] == 0) add(index.covers[c].owner);
  }
  return HSubset(u.context_ptr(), std::move(r));
}

HSubset greatest_splitting(const CrispIndex& index, const HSubset& v) {
  const auto& h = v.context().algebra();
  std::vector<Degree> z(v.degrees().begin(), v.degrees().end());
  std::vector<std::size_t> present(index.covers.size());
  std::deque<std::size_t> removed;
  auto remove = [&](std::size_t a) {
    if (z[a] == h.bot()) return;
    z[a] = h.bot();
    removed.push_back(a);
  };
  for (std::size_t c = 0; c < index.covers.size(); ++c) {
    std::size_t m = 0;
    for (std::size_t x : index.covers[c].members) m += z[x] == h.top() ? 1 : 0;
    present[c] = m;
  }
  for (std::size_t c = 0; c < index.covers.size(); ++c)
    if (present[c] == 0) remove(index.covers[c].owner);
  while (!removed.empty()) {
    std::size_t x = removed.front();
    removed.pop_front();
    for (std::size_t c : index.containing[x])
      if (--present[c] == 0) remove(index.covers[c].owner);
  }
  return HSubset(v.context_ptr(), std::move(z));
}

std::string generated_name(const char* head, const AxiomSet& ax) {
  return std::string(head) + "(" + (ax.name().empty() ? "axioms" : ax.name()) + ")";
}

}  // namespace

Saturation generate_saturation(const AxiomSet& ax) {
  const auto& ctx = ax.context_ptr();
  std::string description = generated_name("generate_sat", ax);
  if (ctx->algebra().is_boolean()) {
    auto index = std::make_shared<const CrispIndex>(ax);
    Operator op = Operator::from_rule(ctx, description, [index](const HSubset& u) { return least_fulfilling(*index, u); });
    if (ctx->enumerable()) return Saturation::certify(std::move(op));
    return Saturation(std::move(op), ConstructionKey{});
  }
  const auto& space = ctx->space();
  std::vector<HSubset> family;
  std::vector<Degree> weights;
  for (SubsetIndex p = 0; p < space.size(); ++p) {
    HSubset pp = space[p];
    Degree f = fulfills(pp, ax);
    if (f == ctx->algebra().bot()) continue;
    family.push_back(std::move(pp));
    weights.push_back(f);
  }
  return weighted_family_saturation(ctx, family, weights, std::move(description));
}

Reduction generate_reduction(const AxiomSet& ax) {
  const auto& ctx = ax.context_ptr();
  std::string description = generated_name("generate_red", ax);
  if (ctx->algebra().is_boolean()) {
    auto index = std::make_shared<const CrispIndex>(ax);
    Operator op =
        Operator::from_rule(ctx, description, [index](const HSubset& v) { return greatest_splitting(*index, v); });
    if (ctx->enumerable()) return Reduction::certify(std::move(op));
    return Reduction(std::move(op), ConstructionKey{});
  }
  const auto& space = ctx->space();
  std::vector<HSubset> family;
  std::vector<Degree> weights;
  for (SubsetIndex z = 0; z < space.size(); ++z) {
    HSubset zz = space[z];
    Degree s = splits(zz, ax);
    if (s == ctx->algebra().bot()) continue;
    family.push_back(std::move(zz));
    weights.push_back(s);
  }
  return weighted_family_reduction(ctx, family, weights, std::move(description));
}

std::vector<HSubset> saturation_rounds(const AxiomSet& ax, const HSubset& u) {
  require_same(u.context(), ax.context(), "saturation_rounds");
  const auto& h = ax.context().algebra();
  std::vector<HSubset> stages{u};
  for (;;) {
    const HSubset& r = stages.back();
    std::vector<Degree> next(r.degrees().begin(), r.degrees().end());
    for (std::size_t a = 0; a < next.size(); ++a)
      for (const auto& c : ax.covers(a)) next[a] = h.join(next[a], h.meet(c.weight, incl(c.subset, r)));
    HSubset n(u.context_ptr(), std::move(next));
    if (n == r) return stages;
    stages.push_back(std::move(n));
  }
}

std::vector<HSubset> reduction_rounds(const AxiomSet& ax, const HSubset& v) {
  require_same(v.context(), ax.context(), "reduction_rounds");
  const auto& h = ax.context().algebra();
  std::vector<HSubset> stages{v};
  for (;;) {
    const HSubset& r = stages.back();
    std::vector<Degree> next(r.degrees().begin(), r.degrees().end());
    for (std::size_t a = 0; a < next.size(); ++a)
      for (const auto& c : ax.covers(a)) next[a] = h.meet(next[a], h.imp(c.weight, overlap(c.subset, r)));
    HSubset n(v.context_ptr(), std::move(next));
    if (n == r) return stages;
    stages.push_back(std::move(n));
  }
}

AxiomSet axioms_from_saturation(const Saturation& a, std::string name) {
  const auto& ctx = a.context_ptr();
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  AxiomSet ax(ctx, name.empty() ? "axioms(" + a.description() + ")" : std::move(name));
  for (std::size_t x = 0; x < space.points(); ++x) {
    for (SubsetIndex u = 0; u < space.size(); ++u) {
      Degree w = space.degree(a.op().at(u), x);
      if (w != h.bot()) ax.add(x, space[u], w);
    }
  }
  return ax;
}

}  // namespace basictop
