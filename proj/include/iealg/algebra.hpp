#pragma once

// The insertion-elimination Lie algebra: basis {d} ∪ {D_t⁺, D_t⁻}, exact
// rational coefficients, bracket given by grafting and cutting counts.

#include "iealg/rational.hpp"
#include "iealg/tree.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iealg {

enum class GeneratorKind { Plus, Minus, D };

struct Generator {
  GeneratorKind kind = GeneratorKind::D;
  Tree tree;  // ignored for D

  static Generator d() { return {GeneratorKind::D, Tree()}; }
  static Generator plus(Tree t) { return {GeneratorKind::Plus, std::move(t)}; }
  static Generator minus(Tree t) { return {GeneratorKind::Minus, std::move(t)}; }

  /// ad(d)-eigenvalue: +|t|, −|t| or 0.
  long degree() const;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && (a.kind == GeneratorKind::D || a.tree == b.tree);
  }
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind == GeneratorKind::D) return std::strong_ordering::equal;
    return a.tree <=> b.tree;
  }
};

class AlgebraElement {
 public:
  using Terms = std::map<Generator, Rational>;

  AlgebraElement() = default;
  AlgebraElement(const Generator& g, Rational c = 1);  // NOLINT: implicit lift

  void add(const Generator& g, const Rational& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Generator& g) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Bracket of two basis generators. Results are memoized; safe to call
/// concurrently.
const AlgebraElement& bracket(const Generator& x, const Generator& y);
/// Bilinear extension.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Common degree of all terms, or nullopt if x is not homogeneous. The zero
/// element has degree 0.
std::optional<long> grading_degree(const AlgebraElement& x);

/// {d} ∪ {D_t^± : |t| ≤ max_size}, in generator order.
std::vector<Generator> generators_up_to(std::size_t max_size);

struct JacobiReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::string counterexample;  // empty when passed
};

/// Antisymmetry on all pairs and the Jacobi identity on all triples of
/// generators_up_to(max_size).
JacobiReport verify_jacobi(std::size_t max_size);
/// Antisymmetry only, on pairs from generators_up_to(max_size).
JacobiReport verify_antisymmetry(std::size_t max_size);

std::string format_generator(const Generator& g);
/// Signed sum such as "2*D+((()))-1/3*d"; "0" for the zero element.
std::string format_element(const AlgebraElement& x);
AlgebraElement parse_element(std::string_view text);

}  // namespace iealg
