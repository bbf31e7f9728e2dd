#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace basictop {

/// An element of a HeytingAlgebra, identified by its index in the algebra's
/// element list. Equality is identity of elements; there is deliberately no
/// `<`, since the algebra's order is only available through the algebra.
struct Degree {
  std::uint8_t id = 0;
  friend constexpr bool operator==(Degree, Degree) = default;
};

inline constexpr std::size_t kDefaultMaxElements = 16;

/// A finite (hence complete) Heyting algebra of truth values.
///
/// Built from an order only: meet, join and implication tables are derived
/// once and cached. Every constructor either returns an algebra for which
/// residuation `c <= imp(a, b)  <=>  meet(c, a) <= b` holds on all triples,
/// or throws NotALattice / NotHeyting with a witness.
class HeytingAlgebra {
 public:
  struct OrderPair {
    std::string lower;
    std::string upper;
  };

  static HeytingAlgebra from_order(std::vector<std::string> elements, std::span<const OrderPair> leq,
                                   std::size_t max_elements = kDefaultMaxElements);

  /// {0, 1}.
  static HeytingAlgebra boolean();
  /// Chain 0 < ... < 1 with n elements. The 3-chain is {0, u, 1}; longer
  /// chains name their middle elements u1, u2, ...
  static HeytingAlgebra chain(std::size_t n, std::size_t max_elements = kDefaultMaxElements);
  /// Down-closed subsets of a finite poset ordered by inclusion, i.e. the
  /// opens of the corresponding finite (Alexandrov) space. The empty downset
  /// is named "0", the full one "1", the others "[p+q+...]".
  static HeytingAlgebra downsets(std::vector<std::string> points, std::span<const OrderPair> poset,
                                 std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const noexcept { return names_.size(); }
  Degree bot() const noexcept { return bot_; }
  Degree top() const noexcept { return top_; }

  bool leq(Degree a, Degree b) const noexcept { return leq_[at(a, b)] != 0; }
  Degree meet(Degree a, Degree b) const noexcept { return meet_[at(a, b)]; }
  Degree join(Degree a, Degree b) const noexcept { return join_[at(a, b)]; }
  Degree imp(Degree a, Degree b) const noexcept { return imp_[at(a, b)]; }
  Degree neg(Degree a) const noexcept { return imp(a, bot_); }
  Degree equiv(Degree a, Degree b) const noexcept { return meet(imp(a, b), imp(b, a)); }
  bool is_top(Degree a) const noexcept { return a == top_; }

  /// Empty meet is top.
  Degree big_meet(std::span<const Degree> xs) const noexcept;
  /// Empty join is bot.
  Degree big_join(std::span<const Degree> xs) const noexcept;

  const std::string& name(Degree d) const { return names_.at(d.id); }
  std::optional<Degree> find(std::string_view name) const;
  /// Like find(), but throws ValidationError for unknown names.
  Degree parse(std::string_view name) const;

  std::vector<Degree> elements() const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Covering pairs of the order (its Hasse diagram).
  std::vector<OrderPair> covering_pairs() const;
  /// True when every element has a complement, i.e. the algebra is Boolean.
  bool is_boolean() const noexcept;

  friend bool operator==(const HeytingAlgebra& a, const HeytingAlgebra& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  HeytingAlgebra() = default;
  std::size_t at(Degree a, Degree b) const noexcept { return std::size_t{a.id} * names_.size() + b.id; }

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<Degree> meet_;
  std::vector<Degree> join_;
  std::vector<Degree> imp_;
  Degree bot_;
  Degree top_;
};

}  // namespace basictop
