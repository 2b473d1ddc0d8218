#include "iealg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace iealg {

long Generator::degree() const {
  switch (kind) {
    case GeneratorKind::Plus: return static_cast<long>(tree.size());
    case GeneratorKind::Minus: return -static_cast<long>(tree.size());
    case GeneratorKind::D: return 0;
  }
  return 0;
}

AlgebraElement::AlgebraElement(const Generator& g, Rational c) { add(g, c); }

void AlgebraElement::add(const Generator& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coef] : terms_) coef *= c;
  return *this;
}

namespace {

std::set<Tree> distinct(const std::vector<Tree>& trees) { return {trees.begin(), trees.end()}; }

// [D_s⁻, D_t⁺] = δ_{s,t} d + Σ_r α(s,t,r) D_r⁺ + Σ_r β(s,t,r) D_r⁻.
AlgebraElement mixed_bracket(const Tree& s, const Tree& t) {
  AlgebraElement out;
  if (s == t) out.add(Generator::d(), 1);
  if (s.size() < t.size()) {
    for (const auto& [root_side, branch] : all_cuts(t))
      if (branch == s) out.add(Generator::plus(root_side), 1);
  } else if (s.size() > t.size()) {
    std::set<Tree> candidates;
    for (const auto& [root_side, branch] : all_cuts(s))
      if (branch == t) candidates.insert(root_side);
    for (const auto& r : candidates) out.add(Generator::minus(r), beta(s, t, r));
  }
  return out;
}

AlgebraElement compute_bracket(const Generator& x, const Generator& y) {
  using K = GeneratorKind;
  AlgebraElement out;
  if (x.kind == K::D) {
    if (y.kind != K::D) out.add(y, y.degree());
    return out;
  }
  if (y.kind == K::D) {
    out.add(x, -x.degree());
    return out;
  }
  const Tree& s = x.tree;
  const Tree& t = y.tree;
  if (x.kind == K::Plus && y.kind == K::Plus) {
    for (const auto& g : all_grafts(t, s)) out.add(Generator::plus(g), 1);
    for (const auto& g : all_grafts(s, t)) out.add(Generator::plus(g), -1);
    return out;
  }
  if (x.kind == K::Minus && y.kind == K::Minus) {
    // Σ_r (α(t, r, s) − α(s, r, t)) D_r⁻ over r = s ∪_v t and r = t ∪_v s.
    std::set<Tree> candidates = distinct(all_grafts(s, t));
    for (const auto& r : all_grafts(t, s)) candidates.insert(r);
    for (const auto& r : candidates) {
      const Rational c = Rational(static_cast<long>(alpha(t, r, s))) -
                         Rational(static_cast<long>(alpha(s, r, t)));
      out.add(Generator::minus(r), c);
    }
    return out;
  }
  if (x.kind == K::Minus) return mixed_bracket(s, t);
  return -mixed_bracket(t, s);
}

struct BracketCache {
  std::shared_mutex mutex;
  std::map<std::pair<Generator, Generator>, AlgebraElement> table;
};

BracketCache& bracket_cache() {
  static BracketCache cache;
  return cache;
}

}  // namespace

const AlgebraElement& bracket(const Generator& x, const Generator& y) {
  auto& cache = bracket_cache();
  auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  AlgebraElement value = compute_bracket(x, y);
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(std::move(key), std::move(value)).first->second;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) {
      AlgebraElement b = bracket(gx, gy);
      out += (cx * cy) * std::move(b);
    }
  return out;
}

std::optional<long> grading_degree(const AlgebraElement& x) {
  if (x.is_zero()) return 0;
  const long deg = x.terms().begin()->first.degree();
  for (const auto& [g, c] : x.terms())
    if (g.degree() != deg) return std::nullopt;
  return deg;
}

std::vector<Generator> generators_up_to(std::size_t max_size) {
  std::vector<Generator> gens;
  const auto trees = enumerate_trees_up_to(max_size);
  for (const auto& t : trees) gens.push_back(Generator::plus(t));
  for (const auto& t : trees) gens.push_back(Generator::minus(t));
  gens.push_back(Generator::d());
  return gens;
}

JacobiReport verify_antisymmetry(std::size_t max_size) {
  JacobiReport rep;
  const auto gens = generators_up_to(max_size);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      ++rep.pairs_checked;
      if (!(bracket(gens[i], gens[j]) + bracket(gens[j], gens[i])).is_zero()) {
        rep.passed = false;
        rep.counterexample = "antisymmetry fails for (" + format_generator(gens[i]) + ", " +
                             format_generator(gens[j]) + ")";
        return rep;
      }
    }
  return rep;
}

JacobiReport verify_jacobi(std::size_t max_size) {
  JacobiReport rep = verify_antisymmetry(max_size);
  if (!rep.passed) return rep;
  const auto gens = generators_up_to(max_size);
  // Jacobi is invariant under permuting the triple, so unordered triples
  // with repetition suffice.
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      for (std::size_t k = j; k < gens.size(); ++k) {
        ++rep.triples_checked;
        const AlgebraElement x(gens[i]), y(gens[j]), z(gens[k]);
        AlgebraElement sum = bracket(x, bracket(y, z));
        sum += bracket(y, bracket(z, x));
        sum += bracket(z, bracket(x, y));
        if (!sum.is_zero()) {
          rep.passed = false;
          rep.counterexample = "Jacobi fails for (" + format_generator(gens[i]) + ", " +
                               format_generator(gens[j]) + ", " + format_generator(gens[k]) +
                               "): " + format_element(sum);
          return rep;
        }
      }
  return rep;
}

std::string format_generator(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Plus: return "D+" + g.tree.encoding();
    case GeneratorKind::Minus: return "D-" + g.tree.encoding();
    case GeneratorKind::D: return "d";
  }
  return "?";
}

std::string format_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    if (c < 0) out += '-';
    else if (!first) out += '+';
    const Rational mag = abs(c);
    if (mag != 1) out += format_rational(mag) + "*";
    out += format_generator(g);
    first = false;
  }
  return out;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  AlgebraElement parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty algebra element", pos_);
    AlgebraElement out;
    if (text_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      skip_ws();
      Rational coef = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = parse_coefficient();
        skip_ws();
        expect('*');
        skip_ws();
      }
      out.add(parse_generator(), sign * coef);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Rational parse_coefficient() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed coefficient", start);
    }
  }

  Generator parse_generator() {
    if (pos_ >= text_.size()) throw ParseError("expected generator", pos_);
    if (peek() == 'd') {
      ++pos_;
      return Generator::d();
    }
    expect('D');
    if (pos_ >= text_.size() || (peek() != '+' && peek() != '-'))
      throw ParseError("expected '+' or '-' after 'D'", pos_);
    const bool plus = peek() == '+';
    ++pos_;
    const std::size_t start = pos_;
    int depth = 0;
    do {
      if (pos_ >= text_.size()) throw ParseError("unbalanced tree", pos_);
      if (text_[pos_] == '(') ++depth;
      else if (text_[pos_] == ')') --depth;
      else throw ParseError("unexpected character in tree", pos_);
      ++pos_;
    } while (depth > 0);
    Tree t = parse_tree(text_.substr(start, pos_ - start));
    return plus ? Generator::plus(std::move(t)) : Generator::minus(std::move(t));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(std::string_view text) { return ElementParser(text).parse(); }

}  // namespace iealg
