#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basictop/heyting.hpp"
#include "basictop/hset.hpp"

namespace basictop {

/// A quantified statement evaluated to a truth degree. `holds` iff the
/// degree is top. `witness` lists the inputs of the instance at which the
/// running meet last dropped (for chains and the Boolean case this is the
/// first instance, in enumeration order, attaining the minimum).
struct Graded {
  Degree degree;
  bool holds = false;
  std::vector<HSubset> witness;
};

/// Running meet over the instances of a universally quantified statement.
class MeetAccumulator {
 public:
  explicit MeetAccumulator(const HeytingAlgebra& h) : h_(&h), acc_(h.top()) {}

  template <class MakeWitness>
  void add(Degree d, MakeWitness&& make_witness) {
    Degree m = h_->meet(acc_, d);
    if (m != acc_) {
      acc_ = m;
      witness_ = make_witness();
    }
  }
  bool bottomed_out() const noexcept { return acc_ == h_->bot(); }
  Degree degree() const noexcept { return acc_; }
  Graded result() && { return Graded{acc_, acc_ == h_->top(), std::move(witness_)}; }

 private:
  const HeytingAlgebra* h_;
  Degree acc_;
  std::vector<HSubset> witness_;
};

enum class LawStatus { holds, fails, no_counterexample_found };

struct NamedDegree {
  std::string label;
  Degree degree;
  std::string name;
};

/// Outcome of a law check. A failing report always carries a witness.
struct LawReport {
  std::string law;
  LawStatus status = LawStatus::holds;
  std::optional<Degree> degree;
  std::string degree_name;
  std::vector<NamedDegree> degrees;
  std::vector<std::string> witness;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::chrono::microseconds elapsed{0};

  bool ok() const noexcept { return status != LawStatus::fails; }
};

/// Report for a law whose truth degree is `g.degree`.
LawReport graded_report(std::string law, const HeytingAlgebra& h, const Graded& g);
LawReport graded_report(std::string law, const HeytingAlgebra& h, Degree degree, std::vector<std::string> witness = {});

NamedDegree named(std::string label, const HeytingAlgebra& h, Degree d);
std::vector<std::string> describe(const std::vector<HSubset>& subsets);

const char* to_string(LawStatus s) noexcept;
/// Deterministic multi-line text; timing is included only on request.
std::string to_text(const LawReport& r, bool with_timing = false);

}  // namespace basictop
