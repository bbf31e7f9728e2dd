#include "basictop/law_report.hpp"

#include <sstream>

namespace basictop {

LawReport graded_report(std::string law, const HeytingAlgebra& h, const Graded& g) {
  return graded_report(std::move(law), h, g.degree, describe(g.witness));
}

LawReport graded_report(std::string law, const HeytingAlgebra& h, Degree degree, std::vector<std::string> witness) {
  LawReport r;
  r.law = std::move(law);
  r.degree = degree;
  r.degree_name = h.name(degree);
  r.status = h.is_top(degree) ? LawStatus::holds : LawStatus::fails;
  if (r.status == LawStatus::fails) r.witness = std::move(witness);
  return r;
}

NamedDegree named(std::string label, const HeytingAlgebra& h, Degree d) {
  return NamedDegree{std::move(label), d, h.name(d)};
}

std::vector<std::string> describe(const std::vector<HSubset>& subsets) {
  std::vector<std::string> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(s.to_string());
  return out;
}

const char* to_string(LawStatus s) noexcept {
  switch (s) {
    case LawStatus::holds: return "holds";
    case LawStatus::fails: return "fails";
    case LawStatus::no_counterexample_found: return "no-counterexample-found";
  }
  return "?";
}

std::string to_text(const LawReport& r, bool with_timing) {
  std::ostringstream os;
  os << r.law << ": " << to_string(r.status);
  if (r.degree) os << " (degree " << r.degree_name << ")";
  os << '\n';
  for (const auto& d : r.degrees) os << "  " << d.label << " = " << d.name << '\n';
  if (!r.witness.empty()) {
    os << "  witness:";
    for (const auto& w : r.witness) os << ' ' << w;
    os << '\n';
  }
  if (r.seed) os << "  seed " << *r.seed << ", " << r.samples << " samples\n";
  if (with_timing) os << "  elapsed " << r.elapsed.count() << " us\n";
  return os.str();
}

}  // namespace basictop
