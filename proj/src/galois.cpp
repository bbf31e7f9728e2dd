#include "basictop/galois.hpp"

#include "basictop/errors.hpp"

namespace basictop {

namespace {

std::string refutation(const char* what, const std::string& description, const Graded& g, const HeytingAlgebra& h) {
  std::string msg = "'" + description + "' is not " + what + " (degree " + h.name(g.degree) + ", witness";
  for (const auto& w : g.witness) msg += " " + w.to_string();
  return msg + ")";
}

}  // namespace

Saturation Saturation::certify(Operator op) {
  auto p = classify(op);
  const auto& h = op.context().algebra();
  if (!p.monotone.holds) throw CertificateFailure(refutation("monotone", op.description(), p.monotone, h));
  if (!p.idempotent.holds) throw CertificateFailure(refutation("idempotent", op.description(), p.idempotent, h));
  if (!p.expansive.holds) throw CertificateFailure(refutation("expansive", op.description(), p.expansive, h));
  return Saturation(std::move(op), CertificateBasis::verified);
}

Reduction Reduction::certify(Operator op) {
  auto p = classify(op);
  const auto& h = op.context().algebra();
  if (!p.monotone.holds) throw CertificateFailure(refutation("monotone", op.description(), p.monotone, h));
  if (!p.idempotent.holds) throw CertificateFailure(refutation("idempotent", op.description(), p.idempotent, h));
  if (!p.contractive.holds) throw CertificateFailure(refutation("contractive", op.description(), p.contractive, h));
  return Reduction(std::move(op), CertificateBasis::verified);
}

namespace {

std::string family_description(const char* head, std::span<const HSubset> family) {
  std::string d = head;
  for (const auto& v : family) d += " " + v.to_string();
  return d;
}

void check_family(const ContextPtr& ctx, std::span<const HSubset> family, std::span<const Degree> weights) {
  if (family.size() != weights.size()) throw ValidationError("family", "one weight per member required");
  for (const auto& v : family) require_same(*ctx, v.context(), "family");
}

Operator weighted_sat_operator(const ContextPtr& ctx, std::span<const HSubset> family, std::span<const Degree> weights,
                               std::string description) {
  check_family(ctx, family, weights);
  std::vector<HSubset> members(family.begin(), family.end());
  std::vector<Degree> w(weights.begin(), weights.end());
  return Operator::from_rule(ctx, std::move(description), [members, w](const HSubset& u) {
    const auto& h = u.context().algebra();
    std::vector<Degree> acc(u.size(), h.top());
    for (std::size_t i = 0; i < members.size(); ++i) {
      Degree guard = h.meet(w[i], incl(u, members[i]));
      if (guard == h.bot()) continue;
      for (std::size_t a = 0; a < acc.size(); ++a) acc[a] = h.meet(acc[a], h.imp(guard, members[i][a]));
    }
    return HSubset(u.context_ptr(), std::move(acc));
  });
}

Operator weighted_red_operator(const ContextPtr& ctx, std::span<const HSubset> family, std::span<const Degree> weights,
                               std::string description) {
  check_family(ctx, family, weights);
  std::vector<HSubset> members(family.begin(), family.end());
  std::vector<Degree> w(weights.begin(), weights.end());
  return Operator::from_rule(ctx, std::move(description), [members, w](const HSubset& u) {
    const auto& h = u.context().algebra();
    std::vector<Degree> acc(u.size(), h.bot());
    for (std::size_t i = 0; i < members.size(); ++i) {
      Degree guard = h.meet(w[i], incl(members[i], u));
      if (guard == h.bot()) continue;
      for (std::size_t a = 0; a < acc.size(); ++a) acc[a] = h.join(acc[a], h.meet(guard, members[i][a]));
    }
    return HSubset(u.context_ptr(), std::move(acc));
  });
}

std::vector<Degree> all_top(const ContextPtr& ctx, std::size_t n) { return std::vector<Degree>(n, ctx->algebra().top()); }

}  // namespace

Saturation family_saturation(const ContextPtr& ctx, std::span<const HSubset> family) {
  auto w = all_top(ctx, family.size());
  return Saturation::certify(weighted_sat_operator(ctx, family, w, family_description("sat_family", family)));
}

Saturation weighted_family_saturation(const ContextPtr& ctx, std::span<const HSubset> family,
                                      std::span<const Degree> weights, std::string description) {
  if (description.empty()) description = family_description("sat_family~", family);
  return Saturation::certify(weighted_sat_operator(ctx, family, weights, std::move(description)));
}

Reduction family_reduction(const ContextPtr& ctx, std::span<const HSubset> family) {
  auto w = all_top(ctx, family.size());
  return Reduction::certify(weighted_red_operator(ctx, family, w, family_description("red_family", family)));
}

Reduction weighted_family_reduction(const ContextPtr& ctx, std::span<const HSubset> family,
                                    std::span<const Degree> weights, std::string description) {
  if (description.empty()) description = family_description("red_family~", family);
  return Reduction::certify(weighted_red_operator(ctx, family, weights, std::move(description)));
}

Saturation compatible_saturation(const Reduction& j) {
  return Saturation::certify(greatest_left_compatible(j.op()).with_description("aa(" + j.description() + ")"));
}

Reduction compatible_reduction(const Saturation& a) {
  const auto& ctx = a.context_ptr();
  const auto& space = ctx->space();
  std::vector<HSubset> zs;
  std::vector<Degree> ws;
  for (SubsetIndex z = 0; z < space.size(); ++z) {
    HSubset zz = space[z];
    Degree s = splits(zz, a.op()).degree;
    if (s == ctx->algebra().bot()) continue;
    zs.push_back(std::move(zz));
    ws.push_back(s);
  }
  return Reduction::certify(
      weighted_red_operator(ctx, zs, ws, "jj(" + a.description() + ")"));
}

namespace {

template <class T>
std::vector<Operator> ops_of(std::span<const T> xs) {
  std::vector<Operator> out;
  for (const auto& x : xs) out.push_back(x.op());
  return out;
}

}  // namespace

Saturation meet_saturations(const ContextPtr& ctx, std::span<const Saturation> as) {
  auto ops = ops_of(as);
  auto m = pointwise_meet(ctx, ops);
  try {
    return Saturation::certify(std::move(m));
  } catch (const CertificateFailure& e) {
    throw CertificateFailure(std::string("internal error: meet of saturations: ") + e.what());
  }
}

Reduction join_reductions(const ContextPtr& ctx, std::span<const Reduction> js) {
  auto ops = ops_of(js);
  auto m = pointwise_join(ctx, ops);
  try {
    return Reduction::certify(std::move(m));
  } catch (const CertificateFailure& e) {
    throw CertificateFailure(std::string("internal error: join of reductions: ") + e.what());
  }
}

Saturation join_saturations(const ContextPtr& ctx, std::span<const Saturation> as) {
  for (const auto& a : as) require_same(*ctx, a.context(), "join_saturations");
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  std::vector<HSubset> family;
  std::vector<Degree> weights;
  for (SubsetIndex v = 0; v < space.size(); ++v) {
    Degree w = h.top();
    for (const auto& a : as) w = h.meet(w, space.equal(a.op().at(v), v));
    if (w == h.bot()) continue;
    family.push_back(space[v]);
    weights.push_back(w);
  }
  std::string d = "sat_join(";
  for (std::size_t i = 0; i < as.size(); ++i) d += (i ? ", " : "") + as[i].description();
  return Saturation::certify(weighted_sat_operator(ctx, family, weights, d + ")"));
}

Reduction meet_reductions(const ContextPtr& ctx, std::span<const Reduction> js) {
  for (const auto& j : js) require_same(*ctx, j.context(), "meet_reductions");
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  std::vector<HSubset> family;
  std::vector<Degree> weights;
  for (SubsetIndex v = 0; v < space.size(); ++v) {
    Degree w = h.top();
    for (const auto& j : js) w = h.meet(w, space.equal(j.op().at(v), v));
    if (w == h.bot()) continue;
    family.push_back(space[v]);
    weights.push_back(w);
  }
  std::string d = "red_meet(";
  for (std::size_t i = 0; i < js.size(); ++i) d += (i ? ", " : "") + js[i].description();
  return Reduction::certify(weighted_red_operator(ctx, family, weights, d + ")"));
}

LawReport galois_check(const Saturation& a, const Reduction& j) {
  require_same(a.context(), j.context(), "galois");
  const auto& h = a.context().algebra();
  Graded d1 = inclusion(a.op(), compatible_saturation(j).op());
  Graded d2 = compat(a.op(), j.op());
  Graded d3 = inclusion(j.op(), compatible_reduction(a).op());
  Degree law = h.meet(h.equiv(d1.degree, d2.degree), h.equiv(d2.degree, d3.degree));
  LawReport r = graded_report("galois " + a.description() + " " + j.description(), h, law,
                              {"A <= AA(J): " + h.name(d1.degree), "A compat J: " + h.name(d2.degree),
                               "J <= JJ(A): " + h.name(d3.degree)});
  r.degrees = {named("A <= AA(J)", h, d1.degree), named("A compat J", h, d2.degree), named("J <= JJ(A)", h, d3.degree)};
  return r;
}

LawReport positivity_law(const Reduction& j) {
  const auto& ctx = j.context_ptr();
  const auto& space = ctx->space();
  const auto& h = ctx->algebra();
  Saturation closure = compatible_saturation(j);
  SubsetIndex js = j.op().at(space.full());
  MeetAccumulator acc(h);
  for (std::size_t a = 0; a < space.points(); ++a) {
    for (SubsetIndex u = 0; u < space.size() && !acc.bottomed_out(); ++u) {
      Degree in_closure = space.degree(closure.op().at(u), a);
      Degree d = h.imp(h.imp(space.degree(js, a), in_closure), in_closure);
      acc.add(d, [&] { return std::vector<HSubset>{HSubset::singleton(ctx, a, h.top()), space[u]}; });
    }
  }
  return graded_report("positivity " + j.description(), h, std::move(acc).result());
}

namespace {

// Degree of  Fix(a) included in Fix(b)  (as families of subsets).
Degree fix_inclusion(const Operator& a, const Operator& b) {
  const auto& space = a.context().space();
  const auto& h = a.context().algebra();
  Degree acc = h.top();
  for (SubsetIndex u = 0; u < space.size(); ++u)
    acc = h.meet(acc, h.imp(space.equal(a.at(u), u), space.equal(b.at(u), u)));
  return acc;
}

LawReport chain_of_equivalences(std::string law, const HeytingAlgebra& h, std::vector<NamedDegree> ds) {
  Degree d = h.top();
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) d = h.meet(d, h.equiv(ds[i].degree, ds[i + 1].degree));
  std::vector<std::string> witness;
  for (const auto& x : ds) witness.push_back(x.label + ": " + x.name);
  LawReport r = graded_report(std::move(law), h, d, std::move(witness));
  r.degrees = std::move(ds);
  return r;
}

LawReport implication(std::string law, const HeytingAlgebra& h, const NamedDegree& hyp, const NamedDegree& concl) {
  LawReport r = graded_report(std::move(law), h, h.imp(hyp.degree, concl.degree),
                              {hyp.label + ": " + hyp.name, concl.label + ": " + concl.name});
  r.degrees = {hyp, concl};
  return r;
}

}  // namespace

LawReport order_characterization(const Saturation& a1, const Saturation& a2) {
  require_same(a1.context(), a2.context(), "order characterization");
  const auto& h = a1.context().algebra();
  return chain_of_equivalences(
      "order-characterization " + a1.description() + " " + a2.description(), h,
      {named("A1 <= A2", h, inclusion(a1.op(), a2.op()).degree),
       named("A2 A1 = A2", h, equality(compose(a2.op(), a1.op()), a2.op()).degree),
       named("A1 A2 = A2", h, equality(compose(a1.op(), a2.op()), a2.op()).degree),
       named("Fix(A2) <= Fix(A1)", h, fix_inclusion(a2.op(), a1.op()))});
}

LawReport order_characterization(const Reduction& j1, const Reduction& j2) {
  require_same(j1.context(), j2.context(), "order characterization");
  const auto& h = j1.context().algebra();
  return chain_of_equivalences(
      "order-characterization " + j1.description() + " " + j2.description(), h,
      {named("J1 <= J2", h, inclusion(j1.op(), j2.op()).degree),
       named("J1 J2 = J1", h, equality(compose(j1.op(), j2.op()), j1.op()).degree),
       named("J2 J1 = J1", h, equality(compose(j2.op(), j1.op()), j1.op()).degree),
       named("Fix(J1) <= Fix(J2)", h, fix_inclusion(j1.op(), j2.op()))});
}

LawReport composition_law(const Saturation& a1, const Saturation& a2) {
  require_same(a1.context(), a2.context(), "composition law");
  const auto& h = a1.context().algebra();
  Operator c12 = compose(a1.op(), a2.op());
  Operator c21 = compose(a2.op(), a1.op());
  auto p12 = classify(c12);
  auto p21 = classify(c21);
  Degree both = h.meet(h.meet(h.meet(p12.monotone.degree, p12.idempotent.degree), p12.expansive.degree),
                       h.meet(h.meet(p21.monotone.degree, p21.idempotent.degree), p21.expansive.degree));
  return chain_of_equivalences("composition " + a1.description() + " " + a2.description(), h,
                               {named("A1A2 and A2A1 saturations", h, both),
                                named("A1A2 = A2A1", h, equality(c12, c21).degree)});
}

LawReport antitone_check(const Saturation& a1, const Saturation& a2) {
  const auto& h = a1.context().algebra();
  return implication("antitone " + a1.description() + " " + a2.description(), h,
                     named("A1 <= A2", h, inclusion(a1.op(), a2.op()).degree),
                     named("JJ(A2) <= JJ(A1)", h,
                           inclusion(compatible_reduction(a2).op(), compatible_reduction(a1).op()).degree));
}

LawReport antitone_check(const Reduction& j1, const Reduction& j2) {
  const auto& h = j1.context().algebra();
  return implication("antitone " + j1.description() + " " + j2.description(), h,
                     named("J1 <= J2", h, inclusion(j1.op(), j2.op()).degree),
                     named("AA(J2) <= AA(J1)", h,
                           inclusion(compatible_saturation(j2).op(), compatible_saturation(j1).op()).degree));
}

LawReport unit_check(const Saturation& a) {
  const auto& h = a.context().algebra();
  auto g = inclusion(a.op(), compatible_saturation(compatible_reduction(a)).op());
  return graded_report("unit " + a.description(), h, g);
}

LawReport unit_check(const Reduction& j) {
  const auto& h = j.context().algebra();
  auto g = inclusion(j.op(), compatible_reduction(compatible_saturation(j)).op());
  return graded_report("unit " + j.description(), h, g);
}

LawReport triangle_check(const Saturation& a) {
  const auto& h = a.context().algebra();
  Reduction once = compatible_reduction(a);
  Reduction thrice = compatible_reduction(compatible_saturation(once));
  return graded_report("triangle " + a.description(), h, equality(thrice.op(), once.op()));
}

LawReport triangle_check(const Reduction& j) {
  const auto& h = j.context().algebra();
  Saturation once = compatible_saturation(j);
  Saturation thrice = compatible_saturation(compatible_reduction(once));
  return graded_report("triangle " + j.description(), h, equality(thrice.op(), once.op()));
}

LawReport union_to_meet(const ContextPtr& ctx, std::span<const Reduction> js) {
  const auto& h = ctx->algebra();
  Saturation lhs = compatible_saturation(join_reductions(ctx, js));
  std::vector<Saturation> parts;
  for (const auto& j : js) parts.push_back(compatible_saturation(j));
  Saturation rhs = meet_saturations(ctx, parts);
  std::string law = "union-to-meet";
  for (const auto& j : js) law += " " + j.description();
  return graded_report(std::move(law), h, equality(lhs.op(), rhs.op()));
}

LawReport union_to_meet(const ContextPtr& ctx, std::span<const Saturation> as) {
  const auto& h = ctx->algebra();
  Reduction lhs = compatible_reduction(join_saturations(ctx, as));
  std::vector<Reduction> parts;
  for (const auto& a : as) parts.push_back(compatible_reduction(a));
  Reduction rhs = meet_reductions(ctx, parts);
  std::string law = "union-to-meet";
  for (const auto& a : as) law += " " + a.description();
  return graded_report(std::move(law), h, equality(lhs.op(), rhs.op()));
}

LawReport compat_down_closed(const Saturation& a, const Reduction& j, const Saturation& a2, const Reduction& j2) {
  const auto& h = a.context().algebra();
  Degree c = compat(a.op(), j.op()).degree;
  Degree left = h.imp(h.meet(inclusion(a2.op(), a.op()).degree, c), compat(a2.op(), j.op()).degree);
  Degree right = h.imp(h.meet(inclusion(j2.op(), j.op()).degree, c), compat(a.op(), j2.op()).degree);
  return graded_report("compat-down-closed", h, h.meet(left, right));
}

}  // namespace basictop
