#include "iealg/eta.hpp"

#include "iealg/algebra.hpp"
#include "iealg/forest.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iealg {

EtaMap::EtaMap(FiniteSupport f) {
  std::erase_if(f.table, [](const auto& e) { return e.second == 0; });
  kind_ = std::move(f);
}

EtaMap::EtaMap(LadderFamily l) {
  for (const auto& [n, v] : l.table)
    if (n == 0) throw std::invalid_argument("ladder table index must be positive");
  std::erase_if(l.table, [&](const auto& e) { return e.second == l.tail; });
  kind_ = std::move(l);
}

EtaMap EtaMap::dot(Rational c) {
  FiniteSupport f;
  f.table.emplace(Tree(), c);
  return EtaMap(std::move(f));
}

EtaMap EtaMap::ladder(Rational tail) { return EtaMap(LadderFamily{{}, tail}); }

Rational EtaMap::operator()(const Tree& t) const {
  if (const auto* f = std::get_if<FiniteSupport>(&kind_)) {
    auto it = f->table.find(t);
    return it == f->table.end() ? Rational(0) : it->second;
  }
  const auto& l = std::get<LadderFamily>(kind_);
  if (!is_ladder(t)) return 0;
  auto it = l.table.find(t.size());
  return it == l.table.end() ? l.tail : it->second;
}

bool operator==(const EtaMap& a, const EtaMap& b) {
  if (a.kind_.index() != b.kind_.index()) return false;
  if (const auto* f = std::get_if<FiniteSupport>(&a.kind_))
    return f->table == std::get<FiniteSupport>(b.kind_).table;
  const auto& la = std::get<LadderFamily>(a.kind_);
  const auto& lb = std::get<LadderFamily>(b.kind_);
  return la.tail == lb.tail && la.table == lb.table;
}

Rational eval_eta(const EtaMap& eta, const Tree& t) { return eta(t); }

HomomorphismReport check_homomorphism(const EtaMap& eta, std::size_t bound) {
  HomomorphismReport rep;
  rep.bound = bound;
  if (bound < 2) return rep;
  const auto trees = enumerate_trees_up_to(bound - 1);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (trees[i].size() + trees[j].size() > bound) continue;
      ++rep.pairs_checked;
      Rational value = 0;
      for (const auto& [g, c] :
           bracket(Generator::plus(trees[i]), Generator::plus(trees[j])).terms())
        value += c * eta(g.tree);
      if (value != 0) {
        rep.passed = false;
        rep.violating_pair = {trees[i], trees[j]};
        rep.violating_value = value;
        return rep;
      }
    }
  return rep;
}

namespace {

// Largest n with a nonzero value at ℓ_n for n ≥ from, or 0.
std::size_t largest_ladder_in_table(const LadderFamily& l, std::size_t from) {
  std::size_t best = 0;
  for (const auto& [n, v] : l.table)
    if (n >= from && v != 0) best = std::max(best, n);
  return best;
}

}  // namespace

OmegaValue omega_n(const EtaMap& eta, std::size_t n, std::size_t scan_bound) {
  (void)scan_bound;  // both families have closed forms
  if (const auto* f = std::get_if<FiniteSupport>(&eta.kind())) {
    std::size_t best = 0;
    for (const auto& [t, v] : f->table)
      if (t.root_degree() == n) best = std::max(best, t.size());
    return {best, true};
  }
  const auto& l = std::get<LadderFamily>(eta.kind());
  // Ladders with at least two vertices are exactly the root-degree-1 ladders.
  if (n != 1) return {0, true};
  if (l.tail != 0) return {std::nullopt, true};
  return {largest_ladder_in_table(l, 2), true};
}

OmegaValue scan_omega(const EtaMap& eta, std::size_t n, std::size_t scan_bound) {
  std::size_t best = 0;
  for (const auto& t : enumerate_trees_up_to(scan_bound))
    if (t.root_degree() == n && eta(t) != 0) best = std::max(best, t.size());
  return {best, false};
}

std::optional<std::size_t> strict_depth_bound(const EtaMap& eta) {
  const auto p = profile(eta);
  if (!p.depth_bounded_at) return std::nullopt;
  return *p.depth_bounded_at - 1;
}

EtaProfile profile(const EtaMap& eta) {
  EtaProfile p;
  if (const auto* f = std::get_if<FiniteSupport>(&eta.kind())) {
    p.is_zero = f->table.empty();
    p.has_finite_support = true;
    std::size_t max_depth_plus_one = 1, max_rdeg_plus_one = 1;
    for (const auto& [t, v] : f->table) {
      max_depth_plus_one = std::max(max_depth_plus_one, depth(t) + 1);
      max_rdeg_plus_one = std::max(max_rdeg_plus_one, t.root_degree() + 1);
    }
    p.depth_bounded_at = max_depth_plus_one;
    p.root_bounded_at = max_rdeg_plus_one;
    return p;
  }
  const auto& l = std::get<LadderFamily>(eta.kind());
  if (l.tail == 0) {
    // Finite table: behaves like a finite support map on ladders.
    p.has_finite_support = true;
    p.is_zero = std::none_of(l.table.begin(), l.table.end(),
                             [](const auto& e) { return e.second != 0; });
    const std::size_t longest = largest_ladder_in_table(l, 1);
    p.depth_bounded_at = std::max<std::size_t>(1, longest);  // 𝖽(ℓ_n) = n − 1
    p.root_bounded_at = largest_ladder_in_table(l, 2) > 0 ? 2 : 1;
    return p;
  }
  p.has_finite_support = false;
  p.root_bounded_at = 2;
  // ω_1 = ∞ and ω_n = 0 for n ≥ 2.
  p.r_eta = 1;
  p.b_eta = 0;
  return p;
}

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

}  // namespace

EtaMap parse_eta(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid eta JSON: ") + e.what(), e.byte);
  }
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "finite") {
      FiniteSupport f;
      for (const auto& entry : doc.at("support")) {
        if (!entry.is_array() || entry.size() != 2)
          throw std::invalid_argument("support entries must be [tree, value] pairs");
        Tree t = parse_tree(entry[0].get<std::string>());
        if (f.table.count(t)) throw std::invalid_argument("duplicate tree " + t.encoding());
        f.table.emplace(std::move(t), rational_from_json(entry[1]));
      }
      return EtaMap(std::move(f));
    }
    if (kind == "ladder") {
      LadderFamily l;
      if (doc.contains("table"))
        for (const auto& entry : doc.at("table")) {
          if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned())
            throw std::invalid_argument("table entries must be [n, value] pairs with n ≥ 1");
          const auto n = entry[0].get<std::size_t>();
          if (l.table.count(n)) throw std::invalid_argument("duplicate ladder index");
          l.table.emplace(n, rational_from_json(entry[1]));
        }
      l.tail = doc.contains("tail") ? rational_from_json(doc.at("tail")) : Rational(0);
      return EtaMap(std::move(l));
    }
    throw std::invalid_argument("unknown eta kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed eta document: ") + e.what());
  }
}

std::string format_eta(const EtaMap& eta) {
  json doc;
  if (const auto* f = std::get_if<FiniteSupport>(&eta.kind())) {
    doc["kind"] = "finite";
    doc["support"] = json::array();
    for (const auto& [t, v] : f->table)
      doc["support"].push_back(json::array({t.encoding(), format_rational(v)}));
  } else {
    const auto& l = std::get<LadderFamily>(eta.kind());
    doc["kind"] = "ladder";
    doc["table"] = json::array();
    for (const auto& [n, v] : l.table) doc["table"].push_back(json::array({n, format_rational(v)}));
    doc["tail"] = format_rational(l.tail);
  }
  return doc.dump();
}

EtaMap load_eta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open eta file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_eta(buf.str());
}

}  // namespace iealg
