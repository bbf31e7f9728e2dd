#include "basictop/rep.hpp"

#include "basictop/errors.hpp"

namespace basictop {

HRelation::HRelation(ContextPtr domain, ContextPtr codomain, std::vector<Degree> matrix, std::string name)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), name_(std::move(name)) {
  if (domain_->algebra_ptr() != codomain_->algebra_ptr() && !(domain_->algebra() == codomain_->algebra()))
    throw ContextMismatch("relation '" + name_ + "': domain and codomain use different algebras");
  if (matrix_.size() != domain_->carrier().size() * codomain_->carrier().size())
    throw ValidationError(name_, "relation matrix does not match the carriers");
  for (Degree d : matrix_)
    if (d.id >= algebra().size()) throw ValidationError(name_, "degree out of range");
}

HRelation HRelation::from_pairs(ContextPtr domain, ContextPtr codomain,
                                std::span<const std::pair<std::size_t, std::size_t>> pairs, std::string name) {
  const std::size_t xs = domain->carrier().size();
  const std::size_t as = codomain->carrier().size();
  std::vector<Degree> m(xs * as, codomain->algebra().bot());
  for (const auto& [x, a] : pairs) {
    if (x >= xs || a >= as) throw ValidationError(name, "pair out of range");
    m[x * as + a] = codomain->algebra().top();
  }
  return HRelation(std::move(domain), std::move(codomain), std::move(m), std::move(name));
}

HSubset direct_image(const HRelation& r, const HSubset& d) {
  require_same(r.domain(), d.context(), "direct image");
  const auto& h = r.algebra();
  std::vector<Degree> out(r.codomain().carrier().size(), h.bot());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t x = 0; x < d.size(); ++x) out[a] = h.join(out[a], h.meet(d[x], r(x, a)));
  return HSubset(r.codomain_ptr(), std::move(out));
}

HSubset inverse_image(const HRelation& r, const HSubset& u) {
  require_same(r.codomain(), u.context(), "inverse image");
  const auto& h = r.algebra();
  std::vector<Degree> out(r.domain().carrier().size(), h.bot());
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t a = 0; a < u.size(); ++a) out[x] = h.join(out[x], h.meet(r(x, a), u[a]));
  return HSubset(r.domain_ptr(), std::move(out));
}

HSubset right_adjoint(const HRelation& r, const HSubset& u) {
  require_same(r.codomain(), u.context(), "right adjoint");
  const auto& h = r.algebra();
  std::vector<Degree> out(r.domain().carrier().size(), h.top());
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t a = 0; a < u.size(); ++a) out[x] = h.meet(out[x], h.imp(r(x, a), u[a]));
  return HSubset(r.domain_ptr(), std::move(out));
}

HSubset inverse_right_adjoint(const HRelation& r, const HSubset& d) {
  require_same(r.domain(), d.context(), "inverse right adjoint");
  const auto& h = r.algebra();
  std::vector<Degree> out(r.codomain().carrier().size(), h.top());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t x = 0; x < d.size(); ++x) out[a] = h.meet(out[a], h.imp(r(x, a), d[x]));
  return HSubset(r.codomain_ptr(), std::move(out));
}

namespace {

std::string law_name(const char* head, const HRelation& r) {
  return std::string(head) + (r.name().empty() ? "" : " " + r.name());
}

}  // namespace

LawReport adjunction_laws(const HRelation& r) {
  const auto& h = r.algebra();
  const auto xs = enumerate_all(r.domain_ptr());
  const auto us = enumerate_all(r.codomain_ptr());
  std::vector<HSubset> images, adjoints, inverse, inverse_adjoints;
  for (const auto& d : xs) {
    images.push_back(direct_image(r, d));
    inverse_adjoints.push_back(inverse_right_adjoint(r, d));
  }
  for (const auto& u : us) {
    adjoints.push_back(right_adjoint(r, u));
    inverse.push_back(inverse_image(r, u));
  }
  MeetAccumulator acc(h);
  for (std::size_t i = 0; i < xs.size() && !acc.bottomed_out(); ++i) {
    for (std::size_t k = 0; k < us.size(); ++k) {
      Degree forward = h.equiv(incl(images[i], us[k]), incl(xs[i], adjoints[k]));
      Degree backward = h.equiv(incl(inverse[k], xs[i]), incl(us[k], inverse_adjoints[i]));
      acc.add(h.meet(forward, backward), [&] { return std::vector<HSubset>{xs[i], us[k]}; });
    }
  }
  return graded_report(law_name("adjunction", r), h, std::move(acc).result());
}

LawReport symmetry_check(const HRelation& r) {
  const auto& h = r.algebra();
  const auto xs = enumerate_all(r.domain_ptr());
  const auto us = enumerate_all(r.codomain_ptr());
  std::vector<HSubset> images, inverse;
  for (const auto& d : xs) images.push_back(direct_image(r, d));
  for (const auto& u : us) inverse.push_back(inverse_image(r, u));
  MeetAccumulator acc(h);
  for (std::size_t i = 0; i < xs.size() && !acc.bottomed_out(); ++i)
    for (std::size_t k = 0; k < us.size(); ++k)
      acc.add(h.equiv(overlap(images[i], us[k]), overlap(xs[i], inverse[k])),
              [&] { return std::vector<HSubset>{xs[i], us[k]}; });
  return graded_report(law_name("symmetry", r), h, std::move(acc).result());
}

LawReport triangular_check(const HRelation& r) {
  const auto& h = r.algebra();
  MeetAccumulator acc(h);
  for (const auto& d : enumerate_all(r.domain_ptr())) {
    HSubset rd = direct_image(r, d);
    acc.add(equal_degree(direct_image(r, right_adjoint(r, rd)), rd), [&] { return std::vector<HSubset>{d}; });
    if (acc.bottomed_out()) break;
  }
  return graded_report(law_name("triangular", r), h, std::move(acc).result());
}

BasicTopology representable(const HRelation& r) {
  const auto& ctx = r.codomain_ptr();
  std::string tag = r.name().empty() ? "r" : r.name();
  auto rel = std::make_shared<const HRelation>(r);
  Operator a = Operator::from_rule(ctx, "rep_sat(" + tag + ")", [rel](const HSubset& u) {
    return inverse_right_adjoint(*rel, inverse_image(*rel, u));
  });
  Operator j = Operator::from_rule(ctx, "rep_red(" + tag + ")",
                                   [rel](const HSubset& u) { return direct_image(*rel, right_adjoint(*rel, u)); });
  BasicTopology t = BasicTopology::make(Saturation::certify(std::move(a)), Reduction::certify(std::move(j)), tag);
  Verdict reduced = is_reduced(t);
  if (!reduced.value)
    throw CertificateFailure("internal error: representable topology of '" + tag + "' is not reduced at " +
                             reduced.witness.front().to_string());
  return t;
}

HRelation represent_reduction(const Reduction& j) {
  const auto& ctx = j.context_ptr();
  const auto fixed = fixed_points(j.op());
  std::vector<std::string> names;
  std::vector<Degree> matrix;
  for (const auto& w : fixed) {
    names.push_back(w.to_string());
    matrix.insert(matrix.end(), w.degrees().begin(), w.degrees().end());
  }
  auto domain = Context::make(ctx->algebra_ptr(), Carrier(std::move(names)), ctx->subset_cap());
  return HRelation(std::move(domain), ctx, std::move(matrix), "fix(" + j.description() + ")");
}

}  // namespace basictop
