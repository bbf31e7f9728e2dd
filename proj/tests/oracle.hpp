#pragma once

// Brute-force reference models, independent of the library's algorithms.
// Truth values of an n-element chain are ranks 0..n-1; subsets are rank
// vectors; operators are tables indexed by base-n encoding with point 0 the
// most significant digit.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "basictop/galois.hpp"

namespace oracle {

using Vec = std::vector<int>;

struct Chain {
  int n;
  int top() const { return n - 1; }
  int meet(int a, int b) const { return std::min(a, b); }
  int join(int a, int b) const { return std::max(a, b); }
  int imp(int a, int b) const { return a <= b ? n - 1 : b; }
  int neg(int a) const { return imp(a, 0); }
  int equiv(int a, int b) const { return meet(imp(a, b), imp(b, a)); }
};

inline std::vector<Vec> all_vectors(int n, int k) {
  std::vector<Vec> out;
  Vec v(k, 0);
  for (;;) {
    out.push_back(v);
    int i = k - 1;
    while (i >= 0 && v[i] == n - 1) v[i--] = 0;
    if (i < 0) return out;
    ++v[i];
  }
}

inline std::size_t encode(const Vec& v, int n) {
  std::size_t code = 0;
  for (int d : v) code = code * n + d;
  return code;
}

inline int overlap(const Chain& c, const Vec& u, const Vec& v) {
  int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = c.join(acc, c.meet(u[i], v[i]));
  return acc;
}

inline int incl(const Chain& c, const Vec& u, const Vec& v) {
  int acc = c.top();
  for (std::size_t i = 0; i < u.size(); ++i) acc = c.meet(acc, c.imp(u[i], v[i]));
  return acc;
}

inline int eq(const Chain& c, const Vec& u, const Vec& v) { return c.meet(incl(c, u, v), incl(c, v, u)); }

/// An operator as the list of images of all_vectors(n, k).
struct Op {
  std::vector<Vec> image;
};

struct Model {
  Chain c;
  int k;
  std::vector<Vec> subsets;

  Model(int n, int points) : c{n}, k(points), subsets(all_vectors(n, points)) {}

  const Vec& apply(const Op& o, const Vec& u) const { return o.image[encode(u, c.n)]; }

  int compat(const Op& left, const Op& right) const {
    int acc = c.top();
    for (const auto& u : subsets)
      for (const auto& v : subsets) {
        const Vec& rv = apply(right, v);
        acc = c.meet(acc, c.imp(overlap(c, apply(left, u), rv), overlap(c, u, rv)));
      }
    return acc;
  }

  int splits(const Vec& z, const Op& o) const {
    int acc = c.top();
    for (const auto& u : subsets) acc = c.meet(acc, c.imp(overlap(c, apply(o, u), z), overlap(c, u, z)));
    return acc;
  }

  int inclusion(const Op& a, const Op& b) const {
    int acc = c.top();
    for (const auto& u : subsets) acc = c.meet(acc, incl(c, apply(a, u), apply(b, u)));
    return acc;
  }

  int equality(const Op& a, const Op& b) const { return c.meet(inclusion(a, b), inclusion(b, a)); }

  // Least saturation fixing the crisp family (meet formula).
  Op sat_family(const std::vector<Vec>& family) const {
    Op o;
    for (const auto& u : subsets) {
      Vec r(k, c.top());
      for (const auto& v : family) {
        int g = incl(c, u, v);
        for (int a = 0; a < k; ++a) r[a] = c.meet(r[a], c.imp(g, v[a]));
      }
      o.image.push_back(r);
    }
    return o;
  }

  Op red_family(const std::vector<Vec>& family) const {
    Op o;
    for (const auto& u : subsets) {
      Vec r(k, 0);
      for (const auto& v : family) {
        int g = incl(c, v, u);
        for (int a = 0; a < k; ++a) r[a] = c.join(r[a], c.meet(g, v[a]));
      }
      o.image.push_back(r);
    }
    return o;
  }

  // Greatest operator left-compatible with o.
  Op ll(const Op& o) const {
    Op out;
    for (const auto& u : subsets) {
      Vec r(k, c.top());
      for (const auto& v : subsets) {
        const Vec& ov = apply(o, v);
        int d = overlap(c, u, ov);
        for (int a = 0; a < k; ++a) r[a] = c.meet(r[a], c.imp(ov[a], d));
      }
      out.image.push_back(r);
    }
    return out;
  }

  // Union of splitting subsets weighted by splitting degree.
  Vec splitting_union(const Op& o) const {
    Vec r(k, 0);
    for (const auto& z : subsets) {
      int s = splits(z, o);
      for (int a = 0; a < k; ++a) r[a] = c.join(r[a], c.meet(s, z[a]));
    }
    return r;
  }

  // JJ(A)(V)(a) = join over Z of incl(Z, V) /\ splits(Z, A) /\ Z(a).
  Op jj(const Op& a) const {
    std::vector<int> s;
    for (const auto& z : subsets) s.push_back(splits(z, a));
    Op out;
    for (const auto& v : subsets) {
      Vec r(k, 0);
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        int g = c.meet(incl(c, subsets[i], v), s[i]);
        for (int x = 0; x < k; ++x) r[x] = c.join(r[x], c.meet(g, subsets[i][x]));
      }
      out.image.push_back(r);
    }
    return out;
  }

  Op compose(const Op& outer, const Op& inner) const {
    Op out;
    for (const auto& u : subsets) out.image.push_back(apply(outer, apply(inner, u)));
    return out;
  }

  Op pointwise(const Op& a, const Op& b, bool meet) const {
    Op out;
    for (const auto& u : subsets) {
      Vec r(k);
      for (int x = 0; x < k; ++x)
        r[x] = meet ? c.meet(apply(a, u)[x], apply(b, u)[x]) : c.join(apply(a, u)[x], apply(b, u)[x]);
      out.image.push_back(r);
    }
    return out;
  }

  // Internal monotonicity, idempotence, expansiveness, contractiveness.
  int monotone(const Op& o) const {
    int acc = c.top();
    for (const auto& u : subsets)
      for (const auto& v : subsets) acc = c.meet(acc, c.imp(incl(c, u, v), incl(c, apply(o, u), apply(o, v))));
    return acc;
  }
  int idempotent(const Op& o) const {
    int acc = c.top();
    for (const auto& u : subsets) acc = c.meet(acc, eq(c, apply(o, apply(o, u)), apply(o, u)));
    return acc;
  }
  int expansive(const Op& o) const {
    int acc = c.top();
    for (const auto& u : subsets) acc = c.meet(acc, incl(c, u, apply(o, u)));
    return acc;
  }
  int contractive(const Op& o) const {
    int acc = c.top();
    for (const auto& u : subsets) acc = c.meet(acc, incl(c, apply(o, u), u));
    return acc;
  }

  // Crisp family selected by the bits of `mask` over `subsets`.
  std::vector<Vec> family(std::uint64_t mask) const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (mask >> i & 1U) out.push_back(subsets[i]);
    return out;
  }
};

// Classical complement conjugate: U |-> -(O(-U)). Boolean models only.
inline Op conjugate(const Model& m, const Op& o) {
  Op out;
  for (const auto& u : m.subsets) {
    Vec cu(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) cu[i] = 1 - u[i];
    Vec r = m.apply(o, cu);
    for (auto& d : r) d = 1 - d;
    out.image.push_back(r);
  }
  return out;
}

// Bridges between the model and library values. Chain ranks coincide with
// element ids for HeytingAlgebra::chain.
inline basictop::HSubset to_subset(const basictop::ContextPtr& ctx, const Vec& v) {
  std::vector<basictop::Degree> ds;
  for (int d : v) ds.push_back(basictop::Degree{static_cast<std::uint8_t>(d)});
  return basictop::HSubset(ctx, std::move(ds));
}

inline Vec from_subset(const basictop::HSubset& u) {
  Vec v;
  for (auto d : u.degrees()) v.push_back(d.id);
  return v;
}

inline basictop::Operator to_operator(const basictop::ContextPtr& ctx, const Model& m, const Op& o,
                                      std::string description = "oracle") {
  const auto& space = ctx->space();
  std::vector<basictop::SubsetIndex> table(space.size());
  for (std::size_t i = 0; i < m.subsets.size(); ++i)
    table[space.index_of(to_subset(ctx, m.subsets[i]).degrees())] =
        space.index_of(to_subset(ctx, m.apply(o, m.subsets[i])).degrees());
  return basictop::Operator::from_table(ctx, std::move(description), std::move(table));
}

inline Op from_operator(const Model& m, const basictop::Operator& o) {
  Op out;
  for (const auto& u : m.subsets) out.image.push_back(from_subset(o(to_subset(o.context_ptr(), u))));
  return out;
}

// Every table on the model (only for tiny models).
inline std::vector<Op> all_operators(const Model& m) {
  std::vector<Op> out;
  const std::size_t n = m.subsets.size();
  std::vector<std::size_t> digits(n, 0);
  for (;;) {
    Op o;
    for (auto d : digits) o.image.push_back(m.subsets[d]);
    out.push_back(std::move(o));
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == n - 1) digits[--i] = 0;
    if (i == 0) return out;
    ++digits[i - 1];
  }
}

}  // namespace oracle
