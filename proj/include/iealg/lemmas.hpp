#pragma once

// Instance checkers for the identities the simplicity arguments rest on.
// Each checker validates the hypotheses first; an instance that violates
// them is reported with preconditions_met = false and holds = false.

#include "iealg/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iealg {

struct LemmaReport {
  std::string lemma;  // "shift", "depth-collapse", "root-vanish", "part-replacement"
  bool preconditions_met = false;
  std::string precondition_failure;
  bool holds = false;
  ModuleElement lhs;
  ModuleElement rhs;
  std::string case_label;          // part-replacement: "i" or "ii"
  std::optional<Rational> xi;      // part-replacement case i
  std::optional<Tree> u0;          // part-replacement case i
  /// Part-replacement case i: whether lhs is also a nonzero integer multiple
  /// of η(u0)·(p(d − k) − p(d)) with k = |t| + |s| − |s′|.
  std::optional<bool> literal_difference_form_holds;
};

/// (D_t⁺ − η(t)) p(d)⊗1 == η(t)·(p(d − |t|) − p(d))⊗1.
LemmaReport verify_lemma_shift(const PolynomialQ& p, const Tree& t, const EtaMap& eta);

/// With M' the strict depth bound of η, 𝖽(t0) = M', v0 at maximal distance
/// in t0 and s0 nonempty, u = t0 grafted with s0 at v0 satisfies
///   (D_u⁺ − η(u)) D_{s0}⁻ p(d)⊗1 == (−1)^{l(s0)} Π(s0) D_{t0}⁺ p(d)⊗1.
LemmaReport verify_lemma_depth_collapse(const Tree& t0, const VertexAddress& v0, const Forest& s0,
                                        const PolynomialQ& p, const EtaMap& eta);

/// η root-bounded with infinite support, rdeg(u) > R_η + l(s) and
/// |u| > B_η + |s| imply D_u⁺ D_s⁻ p(d)⊗1 == 0.
LemmaReport verify_lemma_root_vanish(const Tree& u, const Forest& s, const PolynomialQ& p,
                                     const EtaMap& eta);

/// η root-bounded with infinite support, l(s) = l(s′), rdeg(t) = R_η and
/// |t| > B_η + |s′|. With w = s ∩ s′ and u = t grafted with s at the root:
///   case i  (s′∖w ⊆ c(t)): (D_u⁺ − η(u)) D_{s′}⁻ p(d)⊗1 == ξ·η(u0)·p(d − |u0|)⊗1
///           for a nonzero integer ξ, u0 = ⋃((c(t)∖(s′∖w)) ∪ (s∖w));
///   case ii (otherwise):   the same expression is 0.
LemmaReport verify_lemma_part_replacement(const Tree& t, const Forest& s, const Forest& s_prime,
                                          const PolynomialQ& p, const EtaMap& eta);

// Instance sweeps: every admissible instance within the given bounds.

/// All (t0, v0, s0) with 𝖽(t0) = M', |t0| ≤ max_t0_size, l(s0) ≤ max_length
/// and |s0| ≤ max_order.
std::vector<LemmaReport> sweep_depth_collapse(const EtaMap& eta, std::size_t max_t0_size,
                                              std::size_t max_length, std::size_t max_order,
                                              const PolynomialQ& p);
/// All (u, s) with |s| ≤ max_s_order, |u| ≤ max_u_size meeting the hypotheses.
std::vector<LemmaReport> sweep_root_vanish(const EtaMap& eta, std::size_t max_s_order,
                                           std::size_t max_u_size, const PolynomialQ& p);
/// All (t, s, s′) with |t| ≤ max_t_size, |s|, |s′| ≤ max_s_order meeting the
/// hypotheses.
std::vector<LemmaReport> sweep_part_replacement(const EtaMap& eta, std::size_t max_t_size,
                                                std::size_t max_s_order, const PolynomialQ& p);

}  // namespace iealg
