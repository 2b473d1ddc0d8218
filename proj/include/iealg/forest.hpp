#pragma once

// Forests: finite multisets of rooted trees. A forest indexes the PBW
// monomial D_s⁻ = D_{t1}⁻ ⋯ D_{tn}⁻ with t1 ⪰ ⋯ ⪰ tn.

#include "iealg/rational.hpp"
#include "iealg/tree.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iealg {

class Forest {
 public:
  using Entries = std::map<Tree, std::size_t>;

  Forest() = default;
  Forest(std::initializer_list<Tree> trees);
  explicit Forest(std::span<const Tree> trees);

  void insert(const Tree& t, std::size_t count = 1);
  /// Removes one copy of t; returns false if t is absent.
  bool erase_one(const Tree& t);

  std::size_t multiplicity(const Tree& t) const;
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// |s|: total vertex count.
  std::size_t order() const noexcept { return order_; }
  /// l(s): number of trees counted with multiplicity.
  std::size_t length() const noexcept { return length_; }
  /// ι(s): number of distinct trees.
  std::size_t distinct() const noexcept { return entries_.size(); }

  /// The ⪰-largest tree. Precondition: nonempty.
  const Tree& largest() const { return entries_.rbegin()->first; }
  /// Trees with repetition in PBW order (descending).
  std::vector<Tree> descending() const;

  /// "{|t1,t2,...|}" with trees in descending order.
  const std::string& encoding() const noexcept { return encoding_; }

  friend bool operator==(const Forest& a, const Forest& b) noexcept {
    return a.encoding_ == b.encoding_;
  }
  /// Order first, then encoding.
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.encoding_.compare(b.encoding_) <=> 0;
  }

 private:
  void refresh();

  Entries entries_;
  std::size_t order_ = 0;
  std::size_t length_ = 0;
  std::string encoding_ = "{||}";
};

Forest parse_forest(std::string_view text);
inline std::string encode(const Forest& s) { return s.encoding(); }

// Multiset algebra: multiplicities add, subtract (floored at zero) and meet.
Forest forest_union(const Forest& a, const Forest& b);
Forest forest_difference(const Forest& a, const Forest& b);
Forest forest_intersection(const Forest& a, const Forest& b);
bool forest_includes(const Forest& outer, const Forest& inner);

/// t with every tree of s joined to vertex v.
Tree graft_forest(const Tree& t, const VertexAddress& v, const Forest& s);
/// ⋃s: a fresh root joined to each tree of s.
Tree join(const Forest& s);
/// c(t), so that join(components(t)) == t.
Forest components(const Tree& t);

/// Every forest of exactly the given order, ascending.
std::vector<Forest> enumerate_forests(std::size_t order);
/// Every forest of order ≤ max_order, ascending (order, then encoding).
std::vector<Forest> enumerate_forests_up_to(std::size_t max_order);

struct TreeMeasure {
  std::size_t depth = 0;
  std::size_t root_degree = 0;
  Forest components;
  std::vector<VertexAddress> max_distance_vertices;
};
TreeMeasure measure(const Tree& t);

using Partition = std::vector<std::size_t>;

struct ForestStats {
  std::size_t order = 0;
  std::size_t length = 0;
  std::size_t iota = 0;
  Integer pi = 1;      // product of factorials of multiplicities
  Partition lambda;    // multiplicities, descending
};
ForestStats forest_stats(const Forest& s);

/// Lexicographic comparison, missing entries read as 0.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

}  // namespace iealg
