#include "iealg/lemmas.hpp"

#include <algorithm>

namespace iealg {

namespace {

ModuleElement minus_vector(const Forest& s, const PolynomialQ& p) { return ModuleElement(s, p); }

PolynomialQ shifted_down(const PolynomialQ& p, std::size_t k) {
  return p.shifted(Rational(-static_cast<long>(k)));
}

LemmaReport rejected(std::string lemma, std::string why) {
  LemmaReport rep;
  rep.lemma = std::move(lemma);
  rep.precondition_failure = std::move(why);
  return rep;
}

// c with lhs == c * expected, when such a scalar exists. expected must be
// nonzero.
std::optional<Rational> ratio(const ModuleElement& lhs, const ModuleElement& expected) {
  if (lhs.is_zero()) return Rational(0);
  const auto& [s, p] = *expected.terms().begin();
  const PolynomialQ q = lhs.coefficient(s);
  if (q.is_zero()) return std::nullopt;
  const Rational c = q.coefficients().back() / p.coefficients().back();
  if (!(lhs == c * expected)) return std::nullopt;
  return c;
}

bool nonzero_integer(const Rational& c) { return c != 0 && c.get_den() == 1; }

// Infinite-support, root-bounded η with R_η and B_η available.
std::optional<std::string> root_bounded_failure(const EtaProfile& prof) {
  if (prof.has_finite_support) return "eta must have infinite support";
  if (!prof.root_bounded_at || !prof.r_eta || !prof.b_eta) return "eta must be root-bounded";
  return std::nullopt;
}

}  // namespace

LemmaReport verify_lemma_shift(const PolynomialQ& p, const Tree& t, const EtaMap& eta) {
  LemmaReport rep;
  rep.lemma = "shift";
  rep.preconditions_met = true;
  const WhittakerAction action(eta);
  rep.lhs = action.whittaker_defect(t, minus_vector(Forest(), p));
  rep.rhs = minus_vector(Forest(), eta(t) * (shifted_down(p, t.size()) - p));
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

LemmaReport verify_lemma_depth_collapse(const Tree& t0, const VertexAddress& v0, const Forest& s0,
                                        const PolynomialQ& p, const EtaMap& eta) {
  const std::string name = "depth-collapse";
  const auto bound = strict_depth_bound(eta);
  if (!bound) return rejected(name, "eta is not depth-bounded");
  const TreeMeasure m = measure(t0);
  if (m.depth != *bound)
    return rejected(name, "depth(t0) = " + std::to_string(m.depth) +
                              " differs from the strict depth bound " + std::to_string(*bound));
  if (std::find(m.max_distance_vertices.begin(), m.max_distance_vertices.end(), v0) ==
      m.max_distance_vertices.end())
    return rejected(name, "v0 is not at maximal distance from the root of t0");
  if (s0.empty()) return rejected(name, "s0 must be nonempty");

  LemmaReport rep;
  rep.lemma = name;
  rep.preconditions_met = true;
  const WhittakerAction action(eta);
  const Tree u = graft_forest(t0, v0, s0);
  rep.lhs = action.whittaker_defect(u, minus_vector(s0, p));
  const auto stats = forest_stats(s0);
  Rational factor = Rational(stats.pi);
  if (stats.length % 2 == 1) factor = -factor;
  rep.rhs = factor * action.apply(Generator::plus(t0), minus_vector(Forest(), p));
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

LemmaReport verify_lemma_root_vanish(const Tree& u, const Forest& s, const PolynomialQ& p,
                                     const EtaMap& eta) {
  const std::string name = "root-vanish";
  const auto prof = profile(eta);
  if (auto why = root_bounded_failure(prof)) return rejected(name, *why);
  if (u.root_degree() <= *prof.r_eta + s.length())
    return rejected(name, "rdeg(u) must exceed R_eta + l(s)");
  if (u.size() <= *prof.b_eta + s.order()) return rejected(name, "|u| must exceed B_eta + |s|");

  LemmaReport rep;
  rep.lemma = name;
  rep.preconditions_met = true;
  rep.lhs = WhittakerAction(eta).apply(Generator::plus(u), minus_vector(s, p));
  rep.holds = rep.lhs.is_zero();
  return rep;
}

LemmaReport verify_lemma_part_replacement(const Tree& t, const Forest& s, const Forest& s_prime,
                                          const PolynomialQ& p, const EtaMap& eta) {
  const std::string name = "part-replacement";
  const auto prof = profile(eta);
  if (auto why = root_bounded_failure(prof)) return rejected(name, *why);
  if (s.length() != s_prime.length()) return rejected(name, "l(s) must equal l(s')");
  if (t.root_degree() != *prof.r_eta) return rejected(name, "rdeg(t) must equal R_eta");
  if (t.size() <= *prof.b_eta + s_prime.order())
    return rejected(name, "|t| must exceed B_eta + |s'|");

  LemmaReport rep;
  rep.lemma = name;
  rep.preconditions_met = true;
  const WhittakerAction action(eta);
  const Tree u = graft_forest(t, VertexAddress{}, s);
  const ModuleElement v = minus_vector(s_prime, p);
  rep.lhs = action.apply(Generator::plus(u), v);

  const Forest w = forest_intersection(s, s_prime);
  const Forest removed = forest_difference(s_prime, w);
  const Forest ct = components(t);
  if (!forest_includes(ct, removed)) {
    rep.case_label = "ii";
    rep.holds = rep.lhs.is_zero();
    return rep;
  }
  rep.case_label = "i";
  const Tree u0 = join(forest_union(forest_difference(ct, removed), forest_difference(s, w)));
  rep.u0 = u0;
  const ModuleElement expected = minus_vector(Forest(), eta(u0) * shifted_down(p, u0.size()));
  if (expected.is_zero()) {
    rep.holds = rep.lhs.is_zero();
  } else if (auto c = ratio(rep.lhs, expected)) {
    rep.xi = *c;
    rep.rhs = *c * expected;
    rep.holds = nonzero_integer(*c);
  }

  // The bracket [D_u⁺, D_{s'}⁻ p(d)] ⊗ 1 against the difference polynomial.
  const ModuleElement bracket_form = rep.lhs - eta(u) * v;
  const std::size_t k = t.size() + s.order() - s_prime.order();
  const ModuleElement literal =
      minus_vector(Forest(), eta(u0) * (shifted_down(p, k) - p));
  if (literal.is_zero()) {
    rep.literal_difference_form_holds = bracket_form.is_zero();
  } else {
    const auto c = ratio(bracket_form, literal);
    rep.literal_difference_form_holds = c && nonzero_integer(*c);
  }
  return rep;
}

std::vector<LemmaReport> sweep_depth_collapse(const EtaMap& eta, std::size_t max_t0_size,
                                              std::size_t max_length, std::size_t max_order,
                                              const PolynomialQ& p) {
  std::vector<LemmaReport> out;
  const auto bound = strict_depth_bound(eta);
  if (!bound) return out;
  const auto forests = enumerate_forests_up_to(max_order);
  for (const auto& t0 : enumerate_trees_up_to(max_t0_size)) {
    const TreeMeasure m = measure(t0);
    if (m.depth != *bound) continue;
    for (const auto& v0 : m.max_distance_vertices)
      for (const auto& s0 : forests)
        if (!s0.empty() && s0.length() <= max_length)
          out.push_back(verify_lemma_depth_collapse(t0, v0, s0, p, eta));
  }
  return out;
}

std::vector<LemmaReport> sweep_root_vanish(const EtaMap& eta, std::size_t max_s_order,
                                           std::size_t max_u_size, const PolynomialQ& p) {
  std::vector<LemmaReport> out;
  const auto prof = profile(eta);
  if (root_bounded_failure(prof)) return out;
  const auto trees = enumerate_trees_up_to(max_u_size);
  for (const auto& s : enumerate_forests_up_to(max_s_order))
    for (const auto& u : trees)
      if (u.root_degree() > *prof.r_eta + s.length() && u.size() > *prof.b_eta + s.order())
        out.push_back(verify_lemma_root_vanish(u, s, p, eta));
  return out;
}

std::vector<LemmaReport> sweep_part_replacement(const EtaMap& eta, std::size_t max_t_size,
                                                std::size_t max_s_order, const PolynomialQ& p) {
  std::vector<LemmaReport> out;
  const auto prof = profile(eta);
  if (root_bounded_failure(prof)) return out;
  const auto forests = enumerate_forests_up_to(max_s_order);
  for (const auto& t : enumerate_trees_up_to(max_t_size)) {
    if (t.root_degree() != *prof.r_eta) continue;
    for (const auto& s : forests)
      for (const auto& sp : forests)
        if (s.length() == sp.length() && t.size() > *prof.b_eta + sp.order())
          out.push_back(verify_lemma_part_replacement(t, s, sp, p, eta));
  }
  return out;
}

}  // namespace iealg
