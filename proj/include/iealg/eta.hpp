#pragma once

// Lie algebra homomorphisms η : n⁺ → ℚ, stored as one of two closed
// families, with the classification data the simplicity arguments need.
//
// Depth- and root-boundedness are reported with the non-strict convention:
// the least positive M such that η(D_t⁺) = 0 whenever 𝖽(t) ≥ M (resp.
// rdeg(t) ≥ M). The strict form "η(D_t⁺) = 0 whenever 𝖽(t) > M'" used by
// the depth-bounded lemmas corresponds to M' = M − 1.

#include "iealg/rational.hpp"
#include "iealg/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace iealg {

/// η nonzero on finitely many trees.
struct FiniteSupport {
  std::map<Tree, Rational> table;
};

/// η(D_{ℓ_n}⁺) = table[n] if present, else tail; zero on non-ladders.
struct LadderFamily {
  std::map<std::size_t, Rational> table;
  Rational tail = 0;
};

class EtaMap {
 public:
  using Kind = std::variant<FiniteSupport, LadderFamily>;

  /// The zero homomorphism.
  EtaMap() : kind_(FiniteSupport{}) {}
  EtaMap(FiniteSupport f);  // NOLINT: implicit
  EtaMap(LadderFamily l);   // NOLINT: implicit

  static EtaMap zero() { return EtaMap(); }
  /// η(D_•⁺) = c, zero elsewhere.
  static EtaMap dot(Rational c = 1);
  /// Ladder family with empty table.
  static EtaMap ladder(Rational tail = 1);

  const Kind& kind() const noexcept { return kind_; }
  Rational operator()(const Tree& t) const;

  friend bool operator==(const EtaMap& a, const EtaMap& b);

 private:
  Kind kind_;
};

Rational eval_eta(const EtaMap& eta, const Tree& t);

struct HomomorphismReport {
  bool passed = true;
  std::size_t bound = 0;
  std::size_t pairs_checked = 0;
  // First violation, when !passed.
  std::optional<std::pair<Tree, Tree>> violating_pair;
  Rational violating_value = 0;
};

/// Checks η([D_s⁺, D_t⁺]) = 0 for all s, t with |s| + |t| ≤ bound.
HomomorphismReport check_homomorphism(const EtaMap& eta, std::size_t bound);

struct OmegaValue {
  std::optional<std::size_t> value;  // nullopt means infinite
  bool certified = false;
  bool infinite() const noexcept { return !value.has_value(); }
  friend bool operator==(const OmegaValue&, const OmegaValue&) = default;
};

/// ω_n: the size of the largest tree of root degree n in the support.
/// Exact for both representable families.
OmegaValue omega_n(const EtaMap& eta, std::size_t n, std::size_t scan_bound);
/// Kind-agnostic scan over all trees of size ≤ scan_bound; a lower bound.
OmegaValue scan_omega(const EtaMap& eta, std::size_t n, std::size_t scan_bound);

struct EtaProfile {
  bool is_zero = false;
  bool has_finite_support = false;
  std::optional<std::size_t> depth_bounded_at;
  std::optional<std::size_t> root_bounded_at;
  std::optional<std::size_t> r_eta;
  std::optional<std::size_t> b_eta;
  friend bool operator==(const EtaProfile&, const EtaProfile&) = default;
};

EtaProfile profile(const EtaMap& eta);

/// Strict depth bound M' (η = 0 whenever 𝖽(t) > M'), minimal; nullopt if η
/// is not depth-bounded.
std::optional<std::size_t> strict_depth_bound(const EtaMap& eta);

// Text format:
//   {"kind":"finite","support":[["<tree>","p/q"],...]}
//   {"kind":"ladder","table":[[n,"p/q"],...],"tail":"p/q"}
EtaMap parse_eta(std::string_view json_text);
std::string format_eta(const EtaMap& eta);
EtaMap load_eta(const std::string& path);

}  // namespace iealg
