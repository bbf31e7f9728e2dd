#include "basictop/heyting.hpp"

#include <algorithm>
#include <unordered_map>

#include "basictop/errors.hpp"

namespace basictop {

HeytingAlgebra HeytingAlgebra::from_order(std::vector<std::string> elements, std::span<const OrderPair> leq,
                                          std::size_t max_elements) {
  const std::size_t n = elements.size();
  if (n == 0) throw ValidationError("algebra", "an algebra needs at least one element");
  if (n > max_elements) throw CapExceeded("algebra element count", n, max_elements);
  if (n > 255) throw CapExceeded("algebra element count", n, 255);

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].empty()) throw ValidationError("algebra", "empty element name");
    if (!index.emplace(elements[i], i).second)
      throw ValidationError("algebra", "duplicate element name '" + elements[i] + "'");
  }

  std::vector<std::uint8_t> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
  for (const auto& [lo, hi] : leq) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw ValidationError("algebra", "unknown element '" + lo + "' in order");
    if (b == index.end()) throw ValidationError("algebra", "unknown element '" + hi + "' in order");
    le[a->second * n + b->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k * n + j]) le[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i * n + j] && le[j * n + i]) throw NotALattice(elements[i], elements[j], "order is not antisymmetric");

  auto below = [&](std::size_t i, std::size_t j) { return le[i * n + j] != 0; };
  // Greatest element among those satisfying `pred`, if any.
  auto greatest = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < n; ++c) {
      if (!pred(c)) continue;
      bool is_greatest = true;
      for (std::size_t d = 0; d < n && is_greatest; ++d)
        if (pred(d) && !below(d, c)) is_greatest = false;
      if (is_greatest) return c;
    }
    return std::nullopt;
  };
  auto least = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < n; ++c) {
      if (!pred(c)) continue;
      bool is_least = true;
      for (std::size_t d = 0; d < n && is_least; ++d)
        if (pred(d) && !below(c, d)) is_least = false;
      if (is_least) return c;
    }
    return std::nullopt;
  };

  HeytingAlgebra h;
  h.names_ = std::move(elements);
  h.leq_ = le;
  h.meet_.resize(n * n);
  h.join_.resize(n * n);
  h.imp_.resize(n * n);

  auto bot = least([](std::size_t) { return true; });
  auto top = greatest([](std::size_t) { return true; });
  if (!bot) throw NotALattice(h.names_.front(), h.names_.back(), "no least element");
  if (!top) throw NotALattice(h.names_.front(), h.names_.back(), "no greatest element");
  h.bot_ = Degree{static_cast<std::uint8_t>(*bot)};
  h.top_ = Degree{static_cast<std::uint8_t>(*top)};

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto m = greatest([&](std::size_t c) { return below(c, a) && below(c, b); });
      if (!m) throw NotALattice(h.names_[a], h.names_[b], "no greatest lower bound");
      auto j = least([&](std::size_t c) { return below(a, c) && below(b, c); });
      if (!j) throw NotALattice(h.names_[a], h.names_[b], "no least upper bound");
      h.meet_[a * n + b] = Degree{static_cast<std::uint8_t>(*m)};
      h.join_[a * n + b] = Degree{static_cast<std::uint8_t>(*j)};
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto fits = [&](std::size_t c) { return below(h.meet_[c * n + a].id, b); };
      auto r = greatest(fits);
      if (!r) {
        // The join of all candidates is the only possible pseudo-complement;
        // it is itself not a candidate, so residuation fails there.
        std::size_t sup = h.bot_.id;
        for (std::size_t c = 0; c < n; ++c)
          if (fits(c)) sup = h.join_[sup * n + c].id;
        throw NotHeyting(h.names_[a], h.names_[b], h.names_[sup]);
      }
      h.imp_[a * n + b] = Degree{static_cast<std::uint8_t>(*r)};
    }
  }
  return h;
}

HeytingAlgebra HeytingAlgebra::boolean() { return chain(2); }

HeytingAlgebra HeytingAlgebra::chain(std::size_t n, std::size_t max_elements) {
  if (n == 0) throw ValidationError("algebra", "a chain needs at least one element");
  std::vector<std::string> names;
  if (n == 1) {
    names = {"1"};
  } else {
    names.push_back("0");
    if (n == 3) {
      names.push_back("u");
    } else {
      for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("u" + std::to_string(i));
    }
    names.push_back("1");
  }
  std::vector<OrderPair> pairs;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) pairs.push_back({names[i], names[i + 1]});
  return from_order(std::move(names), pairs, max_elements);
}

HeytingAlgebra HeytingAlgebra::downsets(std::vector<std::string> points, std::span<const OrderPair> poset,
                                        std::size_t max_elements) {
  const std::size_t p = points.size();
  if (p > 16) throw CapExceeded("poset size for downset algebra", p, 16);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p; ++i)
    if (!index.emplace(points[i], i).second) throw ValidationError("algebra", "duplicate poset point '" + points[i] + "'");

  std::vector<std::uint8_t> le(p * p, 0);
  for (std::size_t i = 0; i < p; ++i) le[i * p + i] = 1;
  for (const auto& [lo, hi] : poset) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw ValidationError("algebra", "unknown poset point in '" + lo + " <= " + hi + "'");
    le[a->second * p + b->second] = 1;
  }
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t i = 0; i < p; ++i)
      if (le[i * p + k])
        for (std::size_t j = 0; j < p; ++j)
          if (le[k * p + j]) le[i * p + j] = 1;

  std::vector<std::uint32_t> downs;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < p && closed; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (std::size_t y = 0; y < p && closed; ++y)
        if (le[y * p + x] && !(mask >> y & 1u)) closed = false;
    }
    if (closed) downs.push_back(mask);
  }
  std::stable_sort(downs.begin(), downs.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });

  const std::uint32_t full = p == 0 ? 0u : (1u << p) - 1u;
  std::vector<std::string> names;
  for (std::uint32_t d : downs) {
    if (d == full) {
      names.push_back("1");
    } else if (d == 0) {
      names.push_back("0");
    } else {
      std::string s = "[";
      bool first = true;
      for (std::size_t x = 0; x < p; ++x) {
        if (!(d >> x & 1u)) continue;
        if (!first) s += '+';
        s += points[x];
        first = false;
      }
      names.push_back(s + "]");
    }
  }
  std::vector<OrderPair> pairs;
  for (std::size_t i = 0; i < downs.size(); ++i)
    for (std::size_t j = 0; j < downs.size(); ++j)
      if (i != j && (downs[i] & ~downs[j]) == 0) pairs.push_back({names[i], names[j]});
  return from_order(std::move(names), pairs, max_elements);
}

Degree HeytingAlgebra::big_meet(std::span<const Degree> xs) const noexcept {
  Degree acc = top_;
  for (Degree x : xs) acc = meet(acc, x);
  return acc;
}

Degree HeytingAlgebra::big_join(std::span<const Degree> xs) const noexcept {
  Degree acc = bot_;
  for (Degree x : xs) acc = join(acc, x);
  return acc;
}

std::optional<Degree> HeytingAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Degree{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

Degree HeytingAlgebra::parse(std::string_view name) const {
  if (auto d = find(name)) return *d;
  throw ValidationError("algebra", "unknown truth degree '" + std::string(name) + "'");
}

std::vector<Degree> HeytingAlgebra::elements() const {
  std::vector<Degree> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(Degree{static_cast<std::uint8_t>(i)});
  return out;
}

std::vector<HeytingAlgebra::OrderPair> HeytingAlgebra::covering_pairs() const {
  std::vector<OrderPair> out;
  for (Degree a : elements()) {
    for (Degree b : elements()) {
      if (a == b || !leq(a, b)) continue;
      bool covers = true;
      for (Degree c : elements())
        if (c != a && c != b && leq(a, c) && leq(c, b)) covers = false;
      if (covers) out.push_back({name(a), name(b)});
    }
  }
  return out;
}

bool HeytingAlgebra::is_boolean() const noexcept {
  for (std::size_t i = 0; i < size(); ++i) {
    Degree a{static_cast<std::uint8_t>(i)};
    if (join(a, neg(a)) != top_) return false;
  }
  return true;
}

}  // namespace basictop
