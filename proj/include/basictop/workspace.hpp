#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "basictop/catalog.hpp"
#include "basictop/gen.hpp"
#include "basictop/rep.hpp"

namespace basictop {

/// How the algebra section was written; kept for serialization.
struct AlgebraSpec {
  enum class Kind { boolean, chain, elements, downsets };
  Kind kind = Kind::boolean;
  std::size_t chain_length = 2;
  /// Element names (elements) or poset points (downsets).
  std::vector<std::string> names;
  std::vector<HeytingAlgebra::OrderPair> order;
};

struct NamedOperator {
  std::string name;
  /// Canonical expression text; table operators span several lines.
  std::string expression;
  Operator op;
};

struct NamedTopology {
  std::string name;
  std::string saturation;
  std::string reduction;
  BasicTopology topology;
};

/// One algebra, one carrier and named objects over them.
///
/// Document grammar (line oriented, `#` starts a comment):
///
///   [algebra]      boolean | chain N | elements E... with `order x <= y`
///                  lines | downsets P... with `poset p <= q` lines
///   [carrier]      points A...
///   [axiom_sets]   NAME            (declares an empty axiom-set)
///                  NAME POINT <- COVER...   (COVER is {..} or {..}@DEGREE)
///   [relations]    NAME domain X...
///                  NAME pair X POINT [DEGREE]
///   [operators]    NAME = EXPR, or NAME = table / {..} -> {..} lines / end
///   [topologies]   NAME = SAT RED
///
/// EXPR is one of: id, bot, top, neg, dneg, inhabited, const {..},
/// compose F G, meet F..., join F..., sat_family {..}..., red_family {..}...,
/// ll F, rr F, aa F, jj F, union_degree D, guarded D POINT,
/// generate_sat AX, generate_red AX, rep_sat R, rep_red R.
/// Operators may refer to built-ins and to operators defined above them.
class Workspace {
 public:
  const ContextPtr& context() const noexcept { return ctx_; }
  const AlgebraSpec& algebra_spec() const noexcept { return algebra_; }

  const std::vector<NamedOperator>& operators() const noexcept { return operators_; }
  const std::vector<AxiomSet>& axiom_sets() const noexcept { return axiom_sets_; }
  const std::vector<HRelation>& relations() const noexcept { return relations_; }
  const std::vector<NamedTopology>& topologies() const noexcept { return topologies_; }

  /// Built-in or named operator; throws UnknownName.
  Operator op(std::string_view name) const;
  /// Throws UnknownName, or CertificateFailure when the operator is not one.
  Saturation saturation(std::string_view name) const;
  Reduction reduction(std::string_view name) const;
  const AxiomSet& axiom_set(std::string_view name) const;
  const HRelation& relation(std::string_view name) const;
  /// A named topology, or "SAT-RED" built from two operator names.
  BasicTopology topology(std::string_view name) const;

 private:
  friend Workspace parse_document(std::string_view text, std::size_t subset_cap);
  friend class DocumentParser;

  ContextPtr ctx_;
  AlgebraSpec algebra_;
  std::vector<NamedOperator> operators_;
  std::vector<AxiomSet> axiom_sets_;
  std::vector<HRelation> relations_;
  std::vector<NamedTopology> topologies_;
};

/// Throws ParseError (syntax, with line and column) or ValidationError
/// (naming the offending object).
Workspace parse_document(std::string_view text, std::size_t subset_cap = kDefaultSubsetCap);
std::string serialize(const Workspace& ws);

/// Boolean algebra on the carrier {a, b} with no named objects.
std::string default_document();

struct RunOptions {
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0x5eed;
};

struct RunResult {
  std::string output;
  /// 0 all checked laws hold, 1 a law failed, 2 usage error, 3 cap exceeded.
  int exit_code = 0;
};

/// Runs one command (first element) with its arguments against `ws`.
RunResult run(const Workspace& ws, const std::vector<std::string>& command, const RunOptions& options = {});

}  // namespace basictop
