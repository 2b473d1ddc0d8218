#pragma once

// The standard Whittaker module M_η = U(g) ⊗_{U(n⁺)} ℂ_η in its PBW basis
// {D_s⁻ p(d) ⊗ 1}. Minus monomials sit to the left of the polynomial in d,
// so a basis vector is a (Forest, Polynomial) pair.

#include "iealg/algebra.hpp"
#include "iealg/eta.hpp"
#include "iealg/forest.hpp"
#include "iealg/polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace iealg {

class ModuleElement {
 public:
  using Terms = std::map<Forest, PolynomialQ>;

  ModuleElement() = default;
  ModuleElement(const Forest& s, PolynomialQ p);
  /// 1 ⊗ 1.
  static ModuleElement cyclic() { return ModuleElement(Forest(), PolynomialQ(Rational(1))); }

  void add(const Forest& s, const PolynomialQ& p);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  PolynomialQ coefficient(const Forest& s) const;
  /// Largest forest order among the terms; 0 for the zero element.
  std::size_t max_order() const;
  long max_degree() const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Rational& c);

  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Rational& c, ModuleElement a) { return a *= c; }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Normal-ordered elements of U(n⁻): PBW monomial → coefficient.
using MinusCombination = std::map<Forest, Rational>;

/// Normal form of D_t⁻ · D_s⁻ in U(n⁻). Memoized; thread-safe.
const MinusCombination& straighten_monomial(const Tree& t, const Forest& s);

/// Normal form of D_t⁻ · m.
ModuleElement straighten(const Tree& t, const ModuleElement& m);

/// Action engine for a fixed η. Caches the plus action per (tree, forest);
/// all member functions are safe to call concurrently.
class WhittakerAction {
 public:
  explicit WhittakerAction(EtaMap eta);
  ~WhittakerAction();
  WhittakerAction(const WhittakerAction&) = delete;
  WhittakerAction& operator=(const WhittakerAction&) = delete;

  const EtaMap& eta() const noexcept { return eta_; }

  ModuleElement apply(const Generator& g, const ModuleElement& v) const;
  ModuleElement apply(const AlgebraElement& x, const ModuleElement& v) const;
  /// (D_t⁺ − η(D_t⁺)) v.
  ModuleElement whittaker_defect(const Tree& t, const ModuleElement& v) const;

 private:
  struct Cache;
  ModuleElement apply_plus(const Tree& t, const ModuleElement& v) const;

  EtaMap eta_;
  std::unique_ptr<Cache> cache_;
};

ModuleElement act(const AlgebraElement& x, const ModuleElement& v, const EtaMap& eta);

/// Terms "D-[{|...|}]*(poly)" joined by " + "; "0" for zero. The cyclic
/// vector 1 ⊗ 1 is "D-[{||}]*(1)".
std::string format_module_element(const ModuleElement& v);
ModuleElement parse_module_element(std::string_view text);

// Verma modules M(μ) realized as quotients of M_0.

struct VermaElement {
  std::map<Forest, Rational> terms;
  Rational weight = 0;

  void add(const Forest& s, const Rational& c);
  friend bool operator==(const VermaElement& a, const VermaElement& b) {
    return a.weight == b.weight && a.terms == b.terms;
  }
};

/// Highest-weight vector 1 ⊗ 1 of M(μ).
VermaElement verma_cyclic(const Rational& weight);

/// The quotient map M_0 → M(ξ): D_s⁻ p(d) ⊗ 1 ↦ p(ξ) D_s⁻ ⊗ 1 (d acts on
/// the highest-weight vector by ξ).
VermaElement project_to_verma(const ModuleElement& v, const Rational& xi);
/// Lift D_s⁻ ⊗ 1 ↦ D_s⁻ ⊗ 1 with constant polynomials.
ModuleElement lift_from_verma(const VermaElement& v);

VermaElement verma_act(const AlgebraElement& x, const VermaElement& v);

struct QuotientReport {
  bool checked = false;  // false when v exceeds the order bound
  bool holds = false;
  VermaElement via_m0;   // π(x · v)
  VermaElement via_verma;  // x · π(v)
};

/// Checks π(act(x, v, 0)) == verma_act(x, π(v)) where π is the quotient map
/// at weight xi. Only vectors whose forests have order ≤ bound are checked.
QuotientReport quotient_check(const Rational& xi, const AlgebraElement& x,
                              const ModuleElement& v, std::size_t bound);

std::string format_verma_element(const VermaElement& v);

}  // namespace iealg
