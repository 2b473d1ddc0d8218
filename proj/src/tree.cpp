#include "iealg/tree.hpp"

#include "iealg/forest.hpp"

#include <algorithm>
#include <charconv>

namespace iealg {

Tree::Tree() {
  static const auto leaf = std::make_shared<const Node>(Node{{}, 1, "()"});
  node_ = leaf;
}

Tree::Tree(std::vector<Tree> children) {
  std::sort(children.begin(), children.end());
  std::size_t size = 1;
  std::string enc = "(";
  for (const auto& c : children) {
    size += c.size();
    enc += c.encoding();
  }
  enc += ')';
  node_ = std::make_shared<const Node>(Node{std::move(children), size, std::move(enc)});
}

Tree ladder(std::size_t n) {
  if (n == 0) throw std::domain_error("ladder needs at least one vertex");
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t = Tree(std::vector<Tree>{t});
  return t;
}

Tree corolla(std::size_t k) { return Tree(std::vector<Tree>(k)); }

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
}

Tree parse_node(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size()) throw ParseError("unexpected end of tree", pos);
  if (text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<Tree> children;
  while (true) {
    skip_space(text, pos);
    if (pos >= text.size()) throw ParseError("unbalanced '('", pos);
    if (text[pos] == ')') break;
    children.push_back(parse_node(text, pos));
  }
  ++pos;
  if (children.empty()) return Tree();
  return Tree(std::move(children));
}

}  // namespace

Tree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty tree", pos);
  Tree t = parse_node(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
  return t;
}

std::string encode(const Tree& t) { return t.encoding(); }

VertexAddress parse_vertex_address(std::string_view text) {
  VertexAddress v;
  if (text.empty() || text == "root") return v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto dot = text.find('.', pos);
    const auto part = text.substr(pos, dot == std::string_view::npos ? text.npos : dot - pos);
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), idx);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("malformed vertex address", pos);
    v.path.push_back(idx);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return v;
}

std::string format_vertex_address(const VertexAddress& v) {
  if (v.path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < v.path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(v.path[i]);
  }
  return out;
}

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n == 0) throw std::domain_error("enumerate_trees: n must be positive");
  std::vector<Tree> out;
  for (const auto& s : enumerate_forests(n - 1)) out.push_back(join(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> enumerate_trees_up_to(std::size_t max_size) {
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto level = enumerate_trees(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

void collect_vertices(const Tree& t, VertexAddress& here, std::vector<VertexAddress>& out) {
  out.push_back(here);
  for (std::size_t i = 0; i < t.root_degree(); ++i) {
    here.path.push_back(i);
    collect_vertices(t.children()[i], here, out);
    here.path.pop_back();
  }
}

}  // namespace

std::vector<VertexAddress> vertices(const Tree& t) {
  std::vector<VertexAddress> out;
  VertexAddress here;
  collect_vertices(t, here, out);
  return out;
}

std::vector<EdgeAddress> edges(const Tree& t) {
  std::vector<EdgeAddress> out;
  for (auto& v : vertices(t))
    if (!v.path.empty()) out.push_back(EdgeAddress{std::move(v.path)});
  return out;
}

std::size_t depth(const Tree& t) {
  std::size_t d = 0;
  for (const auto& c : t.children()) d = std::max(d, 1 + depth(c));
  return d;
}

bool is_ladder(const Tree& t) {
  const Tree* cur = &t;
  while (cur->root_degree() == 1) cur = &cur->children()[0];
  return cur->root_degree() == 0;
}

const Tree& subtree(const Tree& t, const VertexAddress& v) {
  const Tree* cur = &t;
  for (std::size_t idx : v.path) {
    if (idx >= cur->root_degree()) throw std::out_of_range("vertex address out of range");
    cur = &cur->children()[idx];
  }
  return *cur;
}

namespace {

// Rebuilds `t` with the node at path[depth..] replaced by `edit(node)`.
template <typename Edit>
Tree rebuild_at(const Tree& t, std::span<const std::size_t> path, Edit&& edit) {
  if (path.empty()) return edit(t);
  if (path[0] >= t.root_degree()) throw std::out_of_range("address out of range");
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids[path[0]] = rebuild_at(kids[path[0]], path.subspan(1), edit);
  return Tree(std::move(kids));
}

Tree with_child(const Tree& t, const Tree& extra) {
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids.push_back(extra);
  return Tree(std::move(kids));
}

Tree without_child(const Tree& t, std::size_t idx) {
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(idx));
  return kids.empty() ? Tree() : Tree(std::move(kids));
}

Tree replace_child(const Tree& t, std::size_t idx, const Tree& c) {
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids[idx] = c;
  return Tree(std::move(kids));
}

}  // namespace

Tree graft(const Tree& s, const VertexAddress& v, const Tree& t) {
  return rebuild_at(s, v.path, [&](const Tree& node) { return with_child(node, t); });
}

std::pair<Tree, Tree> cut(const Tree& t, const EdgeAddress& e) {
  if (e.path.empty()) throw std::invalid_argument("edge address must be nonempty");
  std::span<const std::size_t> path(e.path);
  const std::size_t last = path.back();
  const VertexAddress parent{std::vector<std::size_t>(path.begin(), path.end() - 1)};
  const Tree& upper = subtree(t, parent);
  if (last >= upper.root_degree()) throw std::out_of_range("edge address out of range");
  Tree branch = upper.children()[last];
  Tree root_side =
      rebuild_at(t, path.first(path.size() - 1),
                 [&](const Tree& node) { return without_child(node, last); });
  return {std::move(root_side), std::move(branch)};
}

std::vector<Tree> all_grafts(const Tree& s, const Tree& t) {
  std::vector<Tree> out;
  out.reserve(s.size());
  out.push_back(with_child(s, t));
  for (std::size_t i = 0; i < s.root_degree(); ++i)
    for (const auto& g : all_grafts(s.children()[i], t)) out.push_back(replace_child(s, i, g));
  return out;
}

std::vector<std::pair<Tree, Tree>> all_cuts(const Tree& t) {
  std::vector<std::pair<Tree, Tree>> out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.root_degree(); ++i) {
    const Tree& child = t.children()[i];
    out.emplace_back(without_child(t, i), child);
    for (const auto& [r, p] : all_cuts(child)) out.emplace_back(replace_child(t, i, r), p);
  }
  return out;
}

std::size_t alpha(const Tree& t1, const Tree& t2, const Tree& t3) {
  if (t1.size() + t3.size() != t2.size()) return 0;
  std::size_t n = 0;
  for (const auto& [r, p] : all_cuts(t2))
    if (p == t1 && r == t3) ++n;
  return n;
}

std::size_t beta(const Tree& t1, const Tree& t2, const Tree& t3) {
  if (t1.size() != t2.size() + t3.size()) return 0;
  std::size_t n = 0;
  for (const auto& g : all_grafts(t3, t2))
    if (g == t1) ++n;
  return n;
}

}  // namespace iealg
