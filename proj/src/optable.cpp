#include "basictop/optable.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "basictop/errors.hpp"

namespace basictop {

struct Operator::Lazy {
  Rule rule;
  mutable std::shared_mutex mutex;
  mutable std::map<std::vector<std::uint8_t>, std::vector<Degree>> memo;
};

namespace {

std::vector<std::uint8_t> memo_key(const HSubset& u) {
  std::vector<std::uint8_t> key(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) key[i] = u[i].id;
  return key;
}

void check_result(const Context& ctx, const HSubset& r, const std::string& description) {
  if (&r.context() != &ctx) throw ContextMismatch("operator '" + description + "' returned a subset of another context");
}

}  // namespace

Operator Operator::from_rule(ContextPtr ctx, std::string description, Rule rule) {
  Operator o;
  o.ctx_ = std::move(ctx);
  o.description_ = std::move(description);
  if (o.ctx_->enumerable()) {
    const auto& space = o.ctx_->space();
    auto table = std::make_shared<std::vector<SubsetIndex>>(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      HSubset r = rule(space[static_cast<SubsetIndex>(i)]);
      check_result(*o.ctx_, r, o.description_);
      (*table)[i] = space.index_of(r);
    }
    o.table_ = std::move(table);
  } else {
    o.lazy_ = std::make_shared<Lazy>();
    o.lazy_->rule = std::move(rule);
  }
  return o;
}

Operator Operator::from_table(ContextPtr ctx, std::string description, std::vector<SubsetIndex> table) {
  const auto& space = ctx->space();
  if (table.size() != space.size())
    throw ValidationError(description, "operator table must have one entry per subset");
  for (SubsetIndex t : table)
    if (t >= space.size()) throw ValidationError(description, "operator table entry out of range");
  Operator o;
  o.ctx_ = std::move(ctx);
  o.description_ = std::move(description);
  o.table_ = std::make_shared<const std::vector<SubsetIndex>>(std::move(table));
  return o;
}

HSubset Operator::operator()(const HSubset& u) const {
  require_same(*ctx_, u.context(), description_);
  if (table_) {
    const auto& space = ctx_->space();
    return space[(*table_)[space.index_of(u)]];
  }
  auto key = memo_key(u);
  {
    std::shared_lock lock(lazy_->mutex);
    if (auto it = lazy_->memo.find(key); it != lazy_->memo.end()) return HSubset(ctx_, it->second);
  }
  HSubset r = lazy_->rule(u);
  check_result(*ctx_, r, description_);
  std::unique_lock lock(lazy_->mutex);
  lazy_->memo.insert_or_assign(std::move(key), std::vector<Degree>(r.degrees().begin(), r.degrees().end()));
  return r;
}

const std::vector<SubsetIndex>& Operator::table() const {
  if (!table_) ctx_->space();  // throws CapExceeded
  return *table_;
}

Operator Operator::with_description(std::string description) const {
  Operator o = *this;
  o.description_ = std::move(description);
  return o;
}

Operator identity_operator(const ContextPtr& ctx) {
  return Operator::from_rule(ctx, "id", [](const HSubset& u) { return u; });
}

Operator constant_operator(const HSubset& value) {
  return Operator::from_rule(value.context_ptr(), "const " + value.to_string(), [value](const HSubset&) { return value; });
}

Operator bottom_operator(const ContextPtr& ctx) {
  return constant_operator(HSubset::empty(ctx)).with_description("bot");
}

Operator top_operator(const ContextPtr& ctx) {
  return constant_operator(HSubset::full(ctx)).with_description("top");
}

Operator pseudo_complement_operator(const ContextPtr& ctx) {
  return Operator::from_rule(ctx, "neg", [](const HSubset& u) { return pseudo_complement(u); });
}

Operator double_negation_operator(const ContextPtr& ctx) {
  return Operator::from_rule(ctx, "dneg", [](const HSubset& u) { return pseudo_complement(pseudo_complement(u)); });
}

Operator inhabited_operator(const ContextPtr& ctx) {
  return Operator::from_rule(ctx, "inhabited", [](const HSubset& u) {
    const auto& h = u.context().algebra();
    Degree any = h.big_join(u.degrees());
    return HSubset(u.context_ptr(), std::vector<Degree>(u.size(), any));
  });
}

Operator compose(const Operator& outer, const Operator& inner) {
  require_same(outer.context(), inner.context(), "compose");
  std::string description = "compose(" + outer.description() + ", " + inner.description() + ")";
  if (outer.tabulated() && inner.tabulated()) {
    const auto& a = outer.table();
    const auto& b = inner.table();
    std::vector<SubsetIndex> t(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) t[i] = a[b[i]];
    return Operator::from_table(outer.context_ptr(), std::move(description), std::move(t));
  }
  return Operator::from_rule(outer.context_ptr(), std::move(description),
                             [outer, inner](const HSubset& u) { return outer(inner(u)); });
}

namespace {

std::string list_description(const char* head, std::span<const Operator> ops) {
  std::string d = head;
  d += "(";
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) d += ", ";
    d += ops[i].description();
  }
  return d + ")";
}

template <class Combine>
Operator pointwise(const ContextPtr& ctx, std::span<const Operator> ops, Degree unit, std::string description,
                   Combine combine) {
  for (const auto& o : ops) require_same(*ctx, o.context(), description);
  std::vector<Operator> copy(ops.begin(), ops.end());
  return Operator::from_rule(ctx, std::move(description), [copy, unit, combine](const HSubset& u) {
    std::vector<Degree> acc(u.size(), unit);
    for (const auto& o : copy) {
      HSubset r = o(u);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = combine(acc[i], r[i]);
    }
    return HSubset(u.context_ptr(), std::move(acc));
  });
}

}  // namespace

Operator pointwise_join(const ContextPtr& ctx, std::span<const Operator> ops) {
  if (ops.empty()) return bottom_operator(ctx);
  const HeytingAlgebra* h = &ctx->algebra();
  return pointwise(ctx, ops, h->bot(), list_description("join", ops),
                   [h](Degree a, Degree b) { return h->join(a, b); });
}

Operator pointwise_meet(const ContextPtr& ctx, std::span<const Operator> ops) {
  if (ops.empty()) return top_operator(ctx);
  const HeytingAlgebra* h = &ctx->algebra();
  return pointwise(ctx, ops, h->top(), list_description("meet", ops),
                   [h](Degree a, Degree b) { return h->meet(a, b); });
}

bool operator==(const Operator& a, const Operator& b) {
  require_same(a.context(), b.context(), "operator equality");
  return a.table() == b.table();
}

Graded inclusion(const Operator& a, const Operator& b) {
  require_same(a.context(), b.context(), "operator inclusion");
  const auto& space = a.context().space();
  const auto& ta = a.table();
  const auto& tb = b.table();
  MeetAccumulator acc(a.context().algebra());
  for (SubsetIndex u = 0; u < space.size() && !acc.bottomed_out(); ++u)
    acc.add(space.incl(ta[u], tb[u]), [&] { return std::vector<HSubset>{space[u]}; });
  return std::move(acc).result();
}

Graded equality(const Operator& a, const Operator& b) {
  require_same(a.context(), b.context(), "operator equality");
  const auto& space = a.context().space();
  const auto& ta = a.table();
  const auto& tb = b.table();
  MeetAccumulator acc(a.context().algebra());
  for (SubsetIndex u = 0; u < space.size() && !acc.bottomed_out(); ++u)
    acc.add(space.equal(ta[u], tb[u]), [&] { return std::vector<HSubset>{space[u]}; });
  return std::move(acc).result();
}

OperatorProfile classify(const Operator& o) {
  const auto& space = o.context().space();
  const auto& h = o.context().algebra();
  const auto& t = o.table();
  const auto n = static_cast<SubsetIndex>(space.size());

  MeetAccumulator mono(h), ext(h), idem(h), expa(h), contr(h);
  for (SubsetIndex u = 0; u < n; ++u) {
    for (SubsetIndex v = 0; v < n; ++v) {
      if (!mono.bottomed_out())
        mono.add(h.imp(space.incl(u, v), space.incl(t[u], t[v])), [&] { return std::vector<HSubset>{space[u], space[v]}; });
      if (!ext.bottomed_out())
        ext.add(h.imp(space.equal(u, v), space.equal(t[u], t[v])), [&] { return std::vector<HSubset>{space[u], space[v]}; });
    }
    idem.add(space.equal(t[t[u]], t[u]), [&] { return std::vector<HSubset>{space[u]}; });
    expa.add(space.incl(u, t[u]), [&] { return std::vector<HSubset>{space[u]}; });
    contr.add(space.incl(t[u], u), [&] { return std::vector<HSubset>{space[u]}; });
  }
  return OperatorProfile{std::move(mono).result(), std::move(idem).result(), std::move(expa).result(),
                         std::move(contr).result(), std::move(ext).result()};
}

Graded compat(const Operator& left, const Operator& right) {
  require_same(left.context(), right.context(), "compat");
  const auto& space = left.context().space();
  const auto& h = left.context().algebra();
  const auto& tl = left.table();
  const auto& tr = right.table();
  const auto n = static_cast<SubsetIndex>(space.size());
  MeetAccumulator acc(h);
  for (SubsetIndex u = 0; u < n && !acc.bottomed_out(); ++u) {
    for (SubsetIndex v = 0; v < n && !acc.bottomed_out(); ++v) {
      SubsetIndex rv = tr[v];
      acc.add(h.imp(space.overlap(tl[u], rv), space.overlap(u, rv)),
              [&] { return std::vector<HSubset>{space[u], space[v]}; });
    }
  }
  return std::move(acc).result();
}

Graded weak_compat(const Operator& left, const Operator& right) {
  require_same(left.context(), right.context(), "weak_compat");
  const auto& space = left.context().space();
  const auto& h = left.context().algebra();
  const auto& tl = left.table();
  const auto& tr = right.table();
  const auto n = static_cast<SubsetIndex>(space.size());
  MeetAccumulator acc(h);
  for (SubsetIndex u = 0; u < n && !acc.bottomed_out(); ++u) {
    for (SubsetIndex v = 0; v < n && !acc.bottomed_out(); ++v) {
      SubsetIndex rv = tr[v];
      acc.add(h.imp(h.neg(space.overlap(u, rv)), h.neg(space.overlap(tl[u], rv))),
              [&] { return std::vector<HSubset>{space[u], space[v]}; });
    }
  }
  return std::move(acc).result();
}

namespace {

Graded splits_index(const SubsetSpace& space, const HeytingAlgebra& h, SubsetIndex z, const std::vector<SubsetIndex>& t) {
  MeetAccumulator acc(h);
  for (SubsetIndex u = 0; u < space.size() && !acc.bottomed_out(); ++u)
    acc.add(h.imp(space.overlap(t[u], z), space.overlap(u, z)), [&] { return std::vector<HSubset>{space[u]}; });
  return std::move(acc).result();
}

}  // namespace

Graded splits(const HSubset& z, const Operator& o) {
  require_same(z.context(), o.context(), "splits");
  const auto& space = o.context().space();
  return splits_index(space, o.context().algebra(), space.index_of(z), o.table());
}

Operator greatest_left_compatible(const Operator& o) {
  const auto& ctx = o.context_ptr();
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  const auto& t = o.table();
  const std::size_t k = space.points();

  std::vector<bool> is_image(space.size(), false);
  std::vector<SubsetIndex> images;
  for (SubsetIndex v : t)
    if (!is_image[v]) {
      is_image[v] = true;
      images.push_back(v);
    }

  std::vector<SubsetIndex> table(space.size());
  std::vector<Degree> acc(k);
  for (SubsetIndex u = 0; u < space.size(); ++u) {
    std::fill(acc.begin(), acc.end(), h.top());
    for (SubsetIndex w : images) {
      Degree meets = space.overlap(u, w);
      for (std::size_t a = 0; a < k; ++a) acc[a] = h.meet(acc[a], h.imp(space.degree(w, a), meets));
    }
    table[u] = space.index_of(acc);
  }
  return Operator::from_table(ctx, "ll(" + o.description() + ")", std::move(table));
}

HSubset largest_splitting_subset(const Operator& o) {
  const auto& ctx = o.context_ptr();
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  const auto& t = o.table();
  std::vector<Degree> acc(space.points(), h.bot());
  for (SubsetIndex z = 0; z < space.size(); ++z) {
    Degree s = splits_index(space, h, z, t).degree;
    if (s == h.bot()) continue;
    for (std::size_t a = 0; a < acc.size(); ++a) acc[a] = h.join(acc[a], h.meet(s, space.degree(z, a)));
  }
  return HSubset(ctx, std::move(acc));
}

Operator greatest_right_compatible(const Operator& o) {
  return constant_operator(largest_splitting_subset(o)).with_description("rr(" + o.description() + ")");
}

LawReport compat_join_laws(const Operator& o, std::span<const Operator> family) {
  const auto& ctx = o.context_ptr();
  const auto& h = ctx->algebra();
  Operator joined = pointwise_join(ctx, family);
  Degree left_hyp = h.top();
  Degree right_hyp = h.top();
  for (const auto& f : family) {
    left_hyp = h.meet(left_hyp, compat(o, f).degree);
    right_hyp = h.meet(right_hyp, compat(f, o).degree);
  }
  Degree left = h.imp(left_hyp, compat(o, joined).degree);
  Degree right = h.imp(right_hyp, compat(joined, o).degree);
  LawReport r = graded_report("compat-join " + o.description() + " " + joined.description(), h, h.meet(left, right));
  r.degrees = {named("O compat each -> O compat join", h, left), named("each compat O -> join compat O", h, right)};
  return r;
}

LawReport compat_transfer_laws(const Operator& o, const Operator& o1, const Operator& o2) {
  const auto& h = o.context().algebra();
  Degree c = compat(o, o1).degree;
  Degree first = h.imp(h.meet(inclusion(o2, o).degree, c), compat(o2, o1).degree);
  Degree second = h.imp(h.meet(c, compat(o2, o1).degree), compat(compose(o, o2), o1).degree);
  Degree third = h.imp(c, compat(o, compose(o1, o2)).degree);
  LawReport r = graded_report("compat-transfer " + o.description() + " " + o1.description() + " " + o2.description(),
                              h, h.meet(first, h.meet(second, third)));
  r.degrees = {named("down-closed", h, first), named("composite left", h, second), named("composite right", h, third)};
  return r;
}

std::vector<HSubset> fixed_points(const Operator& o) {
  const auto& space = o.context().space();
  const auto& t = o.table();
  std::vector<HSubset> out;
  for (SubsetIndex u = 0; u < space.size(); ++u)
    if (t[u] == u) out.push_back(space[u]);
  return out;
}

HSubset random_subset(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(ctx->algebra().size()) - 1);
  std::vector<Degree> ds(ctx->carrier().size());
  for (auto& d : ds) d = Degree{static_cast<std::uint8_t>(pick(rng))};
  return HSubset(ctx, std::move(ds));
}

LawReport sampled_compat(const Operator& left, const Operator& right, std::size_t samples, std::uint64_t seed) {
  require_same(left.context(), right.context(), "compat");
  const auto& ctx = left.context_ptr();
  const auto& h = ctx->algebra();
  std::mt19937_64 rng(seed);
  LawReport r;
  r.law = "compat " + left.description() + " " + right.description();
  r.seed = seed;
  r.samples = samples;
  r.status = LawStatus::no_counterexample_found;
  for (std::size_t i = 0; i < samples; ++i) {
    HSubset u = random_subset(ctx, rng);
    HSubset v = random_subset(ctx, rng);
    HSubset rv = right(v);
    Degree d = h.imp(overlap(left(u), rv), overlap(u, rv));
    if (!h.is_top(d)) {
      r.status = LawStatus::fails;
      r.degree = d;
      r.degree_name = h.name(d);
      r.witness = {u.to_string(), v.to_string()};
      r.samples = i + 1;
      break;
    }
  }
  return r;
}

}  // namespace basictop
