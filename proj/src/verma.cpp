#include "iealg/module.hpp"

namespace iealg {

void VermaElement::add(const Forest& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

VermaElement verma_cyclic(const Rational& weight) {
  VermaElement v;
  v.weight = weight;
  v.add(Forest(), 1);
  return v;
}

VermaElement project_to_verma(const ModuleElement& v, const Rational& xi) {
  VermaElement out;
  out.weight = xi;
  for (const auto& [s, p] : v.terms()) out.add(s, p(xi));
  return out;
}

ModuleElement lift_from_verma(const VermaElement& v) {
  ModuleElement out;
  for (const auto& [s, c] : v.terms) out.add(s, PolynomialQ(c));
  return out;
}

VermaElement verma_act(const AlgebraElement& x, const VermaElement& v) {
  // π is a module map and π ∘ lift = id, so x · v = π(x · lift(v)).
  static const WhittakerAction zero_action{EtaMap::zero()};
  return project_to_verma(zero_action.apply(x, lift_from_verma(v)), v.weight);
}

QuotientReport quotient_check(const Rational& xi, const AlgebraElement& x,
                              const ModuleElement& v, std::size_t bound) {
  QuotientReport rep;
  if (v.max_order() > bound) return rep;
  rep.checked = true;
  static const WhittakerAction zero_action{EtaMap::zero()};
  rep.via_m0 = project_to_verma(zero_action.apply(x, v), xi);
  rep.via_verma = verma_act(x, project_to_verma(v, xi));
  rep.holds = rep.via_m0 == rep.via_verma;
  return rep;
}

std::string format_verma_element(const VermaElement& v) {
  std::string out;
  for (const auto& [s, c] : v.terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += format_rational(abs(c)) + "*D-[" + s.encoding() + "]";
  }
  if (out.empty()) out = "0";
  return out + " (weight " + format_rational(v.weight) + ")";
}

}  // namespace iealg
