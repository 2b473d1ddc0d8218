#include "iealg/forest.hpp"

#include <algorithm>

namespace iealg {

Forest::Forest(std::initializer_list<Tree> trees) {
  for (const auto& t : trees) ++entries_[t];
  refresh();
}

Forest::Forest(std::span<const Tree> trees) {
  for (const auto& t : trees) ++entries_[t];
  refresh();
}

void Forest::insert(const Tree& t, std::size_t count) {
  if (count == 0) return;
  entries_[t] += count;
  refresh();
}

bool Forest::erase_one(const Tree& t) {
  auto it = entries_.find(t);
  if (it == entries_.end()) return false;
  if (--it->second == 0) entries_.erase(it);
  refresh();
  return true;
}

std::size_t Forest::multiplicity(const Tree& t) const {
  auto it = entries_.find(t);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Tree> Forest::descending() const {
  std::vector<Tree> out;
  out.reserve(length_);
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    out.insert(out.end(), it->second, it->first);
  return out;
}

void Forest::refresh() {
  order_ = 0;
  length_ = 0;
  encoding_ = "{|";
  bool first = true;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    order_ += it->second * it->first.size();
    length_ += it->second;
    for (std::size_t k = 0; k < it->second; ++k) {
      if (!first) encoding_ += ',';
      encoding_ += it->first.encoding();
      first = false;
    }
  }
  encoding_ += "|}";
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Forest parse_forest(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  if (end - begin < 4 || text.substr(begin, 2) != "{|")
    throw ParseError("forest must start with '{|'", begin);
  if (text.substr(end - 2, 2) != "|}") throw ParseError("forest must end with '|}'", end);
  Forest s;
  std::size_t pos = begin + 2;
  end -= 2;
  auto skip = [&] {
    while (pos < end && is_space(text[pos])) ++pos;
  };
  skip();
  while (pos < end) {
    // Scan one balanced tree.
    const std::size_t start = pos;
    int depth = 0;
    do {
      if (pos >= end) throw ParseError("unbalanced tree in forest", pos);
      if (text[pos] == '(') ++depth;
      else if (text[pos] == ')') --depth;
      else if (!is_space(text[pos])) throw ParseError("unexpected character in forest", pos);
      ++pos;
    } while (depth > 0);
    try {
      s.insert(parse_tree(text.substr(start, pos - start)));
    } catch (const ParseError& e) {
      throw ParseError("bad tree in forest", start + e.offset());
    }
    skip();
    if (pos < end) {
      if (text[pos] != ',') throw ParseError("expected ',' between trees", pos);
      ++pos;
      skip();
      if (pos == end) throw ParseError("dangling ',' in forest", pos);
    }
  }
  return s;
}

Forest forest_union(const Forest& a, const Forest& b) {
  Forest out = a;
  for (const auto& [t, m] : b.entries()) out.insert(t, m);
  return out;
}

Forest forest_difference(const Forest& a, const Forest& b) {
  Forest out;
  for (const auto& [t, m] : a.entries()) {
    const std::size_t mb = b.multiplicity(t);
    if (m > mb) out.insert(t, m - mb);
  }
  return out;
}

Forest forest_intersection(const Forest& a, const Forest& b) {
  Forest out;
  for (const auto& [t, m] : a.entries()) out.insert(t, std::min(m, b.multiplicity(t)));
  return out;
}

bool forest_includes(const Forest& outer, const Forest& inner) {
  return std::all_of(inner.entries().begin(), inner.entries().end(),
                     [&](const auto& e) { return outer.multiplicity(e.first) >= e.second; });
}

Tree graft_forest(const Tree& t, const VertexAddress& v, const Forest& s) {
  const Tree& target = subtree(t, v);  // validates the address
  (void)target;
  Tree out = t;
  for (const auto& tree : s.descending()) out = graft(out, v, tree);
  return out;
}

Tree join(const Forest& s) {
  if (s.empty()) return Tree();
  return Tree(s.descending());
}

Forest components(const Tree& t) { return Forest(t.children()); }

namespace {

// Every multiset drawn from pool[0..limit) with total size `order`, with
// choices made in non-increasing pool index.
void multisets(const std::vector<Tree>& pool, std::size_t limit, std::size_t order,
               std::vector<Tree>& current, std::vector<Forest>& out) {
  if (order == 0) {
    out.emplace_back(std::span<const Tree>(current));
    return;
  }
  for (std::size_t i = limit; i-- > 0;) {
    if (pool[i].size() > order) continue;
    current.push_back(pool[i]);
    multisets(pool, i + 1, order - pool[i].size(), current, out);
    current.pop_back();
  }
}

// Trees of size 1..max_size ascending, built level by level.
std::vector<Tree> tree_pool(std::size_t max_size) {
  std::vector<Tree> pool;
  if (max_size == 0) return pool;
  pool.emplace_back();
  for (std::size_t n = 2; n <= max_size; ++n) {
    std::vector<Forest> level;
    std::vector<Tree> current;
    multisets(pool, pool.size(), n - 1, current, level);
    std::vector<Tree> trees;
    for (const auto& s : level) trees.push_back(join(s));
    std::sort(trees.begin(), trees.end());
    pool.insert(pool.end(), trees.begin(), trees.end());
  }
  return pool;
}

}  // namespace

std::vector<Forest> enumerate_forests(std::size_t order) {
  const auto pool = tree_pool(order);
  std::vector<Forest> out;
  std::vector<Tree> current;
  multisets(pool, pool.size(), order, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests_up_to(std::size_t max_order) {
  const auto pool = tree_pool(max_order);
  std::vector<Forest> out;
  for (std::size_t n = 0; n <= max_order; ++n) {
    std::vector<Tree> current;
    multisets(pool, pool.size(), n, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeMeasure measure(const Tree& t) {
  TreeMeasure m;
  m.depth = depth(t);
  m.root_degree = t.root_degree();
  m.components = components(t);
  for (auto& v : vertices(t))
    if (v.path.size() == m.depth) m.max_distance_vertices.push_back(std::move(v));
  return m;
}

ForestStats forest_stats(const Forest& s) {
  ForestStats st;
  st.order = s.order();
  st.length = s.length();
  st.iota = s.distinct();
  for (const auto& [t, m] : s.entries()) {
    st.pi *= factorial(m);
    st.lambda.push_back(m);
  }
  std::sort(st.lambda.rbegin(), st.lambda.rend());
  return st;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = i < a.size() ? a[i] : 0;
    const std::size_t y = i < b.size() ? b[i] : 0;
    if (auto c = x <=> y; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace iealg
