#include "basictop/hset.hpp"

#include <cctype>
#include <unordered_set>

#include "basictop/errors.hpp"

namespace basictop {

Carrier::Carrier(std::vector<std::string> points) : points_(std::move(points)) {
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (p.empty()) throw ValidationError("carrier", "empty point name");
    if (!seen.insert(p).second) throw ValidationError("carrier", "duplicate point name '" + p + "'");
  }
}

std::optional<std::size_t> Carrier::find(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

std::size_t Carrier::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("carrier", "unknown point '" + std::string(name) + "'");
}

Context::Context(std::shared_ptr<const HeytingAlgebra> algebra, Carrier carrier, std::size_t subset_cap)
    : algebra_(std::move(algebra)), carrier_(std::move(carrier)), cap_(subset_cap) {
  std::size_t count = 1;
  bool within = true;
  for (std::size_t i = 0; i < carrier_.size() && within; ++i) {
    count *= algebra_->size();
    if (count > cap_) within = false;
  }
  if (within) count_ = count;
}

Context::~Context() = default;

ContextPtr Context::make(std::shared_ptr<const HeytingAlgebra> algebra, Carrier carrier, std::size_t subset_cap) {
  return std::make_shared<const Context>(std::move(algebra), std::move(carrier), subset_cap);
}

ContextPtr Context::make(HeytingAlgebra algebra, Carrier carrier, std::size_t subset_cap) {
  return make(std::make_shared<const HeytingAlgebra>(std::move(algebra)), std::move(carrier), subset_cap);
}

const SubsetSpace& Context::space() const {
  if (!count_) {
    std::size_t required = 1;
    for (std::size_t i = 0; i < carrier_.size() && required <= cap_; ++i) required *= algebra_->size();
    throw CapExceeded("subset enumeration", required, cap_);
  }
  std::call_once(space_once_, [this] { space_ = std::make_unique<SubsetSpace>(*this); });
  return *space_;
}

void require_same(const Context& a, const Context& b, std::string_view what) {
  if (&a != &b) throw ContextMismatch(std::string(what) + ": arguments live in different contexts");
}

HSubset::HSubset(ContextPtr ctx, std::vector<Degree> degrees) : ctx_(std::move(ctx)), degrees_(std::move(degrees)) {
  if (degrees_.size() != ctx_->carrier().size())
    throw ValidationError("subset", "degree vector length does not match the carrier");
  for (Degree d : degrees_)
    if (d.id >= ctx_->algebra().size()) throw ValidationError("subset", "degree outside the algebra");
}

HSubset HSubset::empty(const ContextPtr& ctx) {
  return HSubset(ctx, std::vector<Degree>(ctx->carrier().size(), ctx->algebra().bot()));
}

HSubset HSubset::full(const ContextPtr& ctx) {
  return HSubset(ctx, std::vector<Degree>(ctx->carrier().size(), ctx->algebra().top()));
}

HSubset HSubset::singleton(const ContextPtr& ctx, std::size_t point, Degree d) {
  std::vector<Degree> ds(ctx->carrier().size(), ctx->algebra().bot());
  ds.at(point) = d;
  return HSubset(ctx, std::move(ds));
}

std::string HSubset::to_string() const {
  const auto& h = ctx_->algebra();
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] == h.bot()) continue;
    if (!first) out += ", ";
    out += ctx_->carrier().name(i);
    if (degrees_[i] != h.top()) out += ":" + h.name(degrees_[i]);
    first = false;
  }
  return out + "}";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

HSubset parse_subset(const ContextPtr& ctx, std::string_view literal) {
  auto body = trim(literal);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ValidationError("subset", "subset literal must be enclosed in braces: '" + std::string(literal) + "'");
  body = trim(body.substr(1, body.size() - 2));
  const auto& h = ctx->algebra();
  std::vector<Degree> ds(ctx->carrier().size(), h.bot());
  std::vector<bool> seen(ds.size(), false);
  while (!body.empty()) {
    auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : trim(body.substr(comma + 1));
    if (item.empty()) throw ValidationError("subset", "empty entry in '" + std::string(literal) + "'");
    auto colon = item.find(':');
    auto point = trim(item.substr(0, colon));
    Degree d = h.top();
    if (colon != std::string_view::npos) d = h.parse(trim(item.substr(colon + 1)));
    std::size_t i = ctx->carrier().index(point);
    if (seen[i]) throw ValidationError("subset", "point '" + std::string(point) + "' listed twice");
    seen[i] = true;
    ds[i] = d;
  }
  return HSubset(ctx, std::move(ds));
}

Degree overlap(const HSubset& u, const HSubset& v) {
  require_same(u.context(), v.context(), "overlap");
  const auto& h = u.context().algebra();
  Degree acc = h.bot();
  for (std::size_t i = 0; i < u.size(); ++i) acc = h.join(acc, h.meet(u[i], v[i]));
  return acc;
}

Degree incl(const HSubset& u, const HSubset& v) {
  require_same(u.context(), v.context(), "incl");
  const auto& h = u.context().algebra();
  Degree acc = h.top();
  for (std::size_t i = 0; i < u.size(); ++i) acc = h.meet(acc, h.imp(u[i], v[i]));
  return acc;
}

Degree equal_degree(const HSubset& u, const HSubset& v) {
  return u.context().algebra().meet(incl(u, v), incl(v, u));
}

HSubset pseudo_complement(const HSubset& u) {
  const auto& h = u.context().algebra();
  std::vector<Degree> ds(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) ds[i] = h.neg(u[i]);
  return HSubset(u.context_ptr(), std::move(ds));
}

HSubset unite(const HSubset& u, const HSubset& v) {
  require_same(u.context(), v.context(), "union");
  const auto& h = u.context().algebra();
  std::vector<Degree> ds(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) ds[i] = h.join(u[i], v[i]);
  return HSubset(u.context_ptr(), std::move(ds));
}

HSubset intersect(const HSubset& u, const HSubset& v) {
  require_same(u.context(), v.context(), "intersection");
  const auto& h = u.context().algebra();
  std::vector<Degree> ds(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) ds[i] = h.meet(u[i], v[i]);
  return HSubset(u.context_ptr(), std::move(ds));
}

std::vector<HSubset> enumerate_all(const ContextPtr& ctx) { return ctx->space().subsets(); }

SubsetSpace::SubsetSpace(const Context& ctx)
    : ctx_(&ctx), algebra_(&ctx.algebra()), points_(ctx.carrier().size()), size_(*ctx.subset_count()) {
  const std::size_t n = algebra_->size();
  flat_.resize(size_ * points_);
  std::vector<Degree> digits(points_, Degree{0});
  for (std::size_t s = 0; s < size_; ++s) {
    std::copy(digits.begin(), digits.end(), flat_.begin() + static_cast<std::ptrdiff_t>(s * points_));
    for (std::size_t p = points_; p-- > 0;) {
      if (digits[p].id + 1u < n) {
        digits[p].id = static_cast<std::uint8_t>(digits[p].id + 1);
        break;
      }
      digits[p].id = 0;
    }
  }
  empty_ = index_of(std::vector<Degree>(points_, algebra_->bot()));
  full_ = index_of(std::vector<Degree>(points_, algebra_->top()));
}

HSubset SubsetSpace::operator[](SubsetIndex i) const {
  auto r = row(i);
  return HSubset(ctx_->shared_from_this(), std::vector<Degree>(r.begin(), r.end()));
}

std::vector<HSubset> SubsetSpace::subsets() const {
  std::vector<HSubset> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[static_cast<SubsetIndex>(i)]);
  return out;
}

SubsetIndex SubsetSpace::index_of(std::span<const Degree> degrees) const {
  const std::size_t n = algebra_->size();
  std::size_t idx = 0;
  for (Degree d : degrees) idx = idx * n + d.id;
  return static_cast<SubsetIndex>(idx);
}

Degree SubsetSpace::overlap(SubsetIndex u, SubsetIndex v) const noexcept {
  const auto& h = *algebra_;
  const Degree* a = flat_.data() + std::size_t{u} * points_;
  const Degree* b = flat_.data() + std::size_t{v} * points_;
  Degree acc = h.bot();
  for (std::size_t i = 0; i < points_; ++i) acc = h.join(acc, h.meet(a[i], b[i]));
  return acc;
}

Degree SubsetSpace::incl(SubsetIndex u, SubsetIndex v) const noexcept {
  const auto& h = *algebra_;
  const Degree* a = flat_.data() + std::size_t{u} * points_;
  const Degree* b = flat_.data() + std::size_t{v} * points_;
  Degree acc = h.top();
  for (std::size_t i = 0; i < points_; ++i) acc = h.meet(acc, h.imp(a[i], b[i]));
  return acc;
}

Degree SubsetSpace::equal(SubsetIndex u, SubsetIndex v) const noexcept {
  return algebra_->meet(incl(u, v), incl(v, u));
}

}  // namespace basictop
