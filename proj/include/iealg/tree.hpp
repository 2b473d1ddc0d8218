#pragma once

// Unordered rooted trees kept in canonical form.
//
// A Tree is an immutable, cheaply copyable handle. Children are stored
// sorted ascending under the tree order (vertex count, then canonical
// encoding), so two Trees compare equal exactly when they are isomorphic as
// rooted trees. The same order is the fixed total order used for PBW
// monomials.

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iealg {

/// Malformed text input. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class Tree {
 public:
  /// The single-vertex tree.
  Tree();
  /// Root joined to each of `children`; the children are sorted.
  explicit Tree(std::vector<Tree> children);

  std::span<const Tree> children() const noexcept { return node_->children; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t root_degree() const noexcept { return node_->children.size(); }
  const std::string& encoding() const noexcept { return node_->encoding; }

  friend bool operator==(const Tree& a, const Tree& b) noexcept {
    return a.node_ == b.node_ || a.node_->encoding == b.node_->encoding;
  }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.encoding().compare(b.encoding()) <=> 0;
  }

 private:
  struct Node {
    std::vector<Tree> children;
    std::size_t size;
    std::string encoding;
  };
  std::shared_ptr<const Node> node_;
};

/// Child-index path from the root; empty path is the root.
struct VertexAddress {
  std::vector<std::size_t> path;
  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
};

/// Nonempty child-index path; the edge joins the vertex at path[0..n-1) to
/// the vertex at path.
struct EdgeAddress {
  std::vector<std::size_t> path;
  friend bool operator==(const EdgeAddress&, const EdgeAddress&) = default;
};

class Forest;

// Named trees.
Tree ladder(std::size_t n);   // single path on n vertices
Tree corolla(std::size_t k);  // root with k leaf children
inline Tree cherry() { return corolla(2); }

Tree parse_tree(std::string_view text);
std::string encode(const Tree& t);

/// "" or "root" for the root, otherwise dot-separated child indices.
VertexAddress parse_vertex_address(std::string_view text);
std::string format_vertex_address(const VertexAddress& v);

/// All isomorphism classes on exactly n vertices, sorted by encoding.
/// Throws std::domain_error for n == 0.
std::vector<Tree> enumerate_trees(std::size_t n);
/// All trees with 1..max_size vertices in ascending tree order.
std::vector<Tree> enumerate_trees_up_to(std::size_t max_size);

/// Vertices in preorder; the root comes first.
std::vector<VertexAddress> vertices(const Tree& t);
/// Edges in preorder of their lower endpoint.
std::vector<EdgeAddress> edges(const Tree& t);
std::size_t depth(const Tree& t);
bool is_ladder(const Tree& t);

/// The subtree rooted at `v`. Throws std::out_of_range on a bad address.
const Tree& subtree(const Tree& t, const VertexAddress& v);

/// s with the root of t joined to vertex v of s.
Tree graft(const Tree& s, const VertexAddress& v, const Tree& t);
/// (R_e(t), P_e(t)): the root side and the branch hanging below e.
std::pair<Tree, Tree> cut(const Tree& t, const EdgeAddress& e);

/// s ∪_v t for every v ∈ V(s), in preorder of v (one entry per vertex).
std::vector<Tree> all_grafts(const Tree& s, const Tree& t);
/// cut(t, e) for every e ∈ E(t), in preorder (one entry per edge).
std::vector<std::pair<Tree, Tree>> all_cuts(const Tree& t);

/// #{e ∈ E(t2) : R_e(t2) = t3, P_e(t2) = t1}.
std::size_t alpha(const Tree& t1, const Tree& t2, const Tree& t3);
/// #{v ∈ V(t3) : t3 ∪_v t2 = t1}.
std::size_t beta(const Tree& t1, const Tree& t2, const Tree& t3);

}  // namespace iealg

template <>
struct std::hash<iealg::Tree> {
  std::size_t operator()(const iealg::Tree& t) const noexcept {
    return std::hash<std::string>{}(t.encoding());
  }
};
