#include "iealg/module.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>

namespace iealg {

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement::ModuleElement(const Forest& s, PolynomialQ p) { add(s, p); }

void ModuleElement::add(const Forest& s, const PolynomialQ& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolynomialQ ModuleElement::coefficient(const Forest& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? PolynomialQ() : it->second;
}

std::size_t ModuleElement::max_order() const {
  std::size_t n = 0;
  for (const auto& [s, p] : terms_) n = std::max(n, s.order());
  return n;
}

long ModuleElement::max_degree() const {
  long k = -1;
  for (const auto& [s, p] : terms_) k = std::max(k, p.degree());
  return k;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [s, p] : o.terms_) add(s, p);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [s, p] : o.terms_) add(s, -p);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, p] : terms_) p *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Straightening in U(n⁻)

namespace {

struct StraightenCache {
  std::shared_mutex mutex;
  std::map<std::pair<Tree, Forest>, MinusCombination> table;
};

StraightenCache& straighten_cache() {
  static StraightenCache cache;
  return cache;
}

void accumulate(MinusCombination& into, const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

MinusCombination compute_straighten(const Tree& t, const Forest& s) {
  MinusCombination out;
  if (s.empty() || !(t < s.largest())) {
    Forest f = s;
    f.insert(t);
    out.emplace(std::move(f), 1);
    return out;
  }
  // D_t⁻ D_{t1}⁻ W = D_{t1}⁻ (D_t⁻ W) + [D_t⁻, D_{t1}⁻] W with t1 the largest factor.
  const Tree t1 = s.largest();
  Forest rest = s;
  rest.erase_one(t1);
  for (const auto& [f, c] : straighten_monomial(t, rest))
    for (const auto& [g, c2] : straighten_monomial(t1, f)) accumulate(out, g, c * c2);
  for (const auto& [gen, c] : bracket(Generator::minus(t), Generator::minus(t1)).terms())
    for (const auto& [g, c2] : straighten_monomial(gen.tree, rest)) accumulate(out, g, c * c2);
  return out;
}

}  // namespace

const MinusCombination& straighten_monomial(const Tree& t, const Forest& s) {
  auto& cache = straighten_cache();
  auto key = std::make_pair(t, s);
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  MinusCombination value = compute_straighten(t, s);
  std::unique_lock lock(cache.mutex);
  return cache.table.try_emplace(std::move(key), std::move(value)).first->second;
}

ModuleElement straighten(const Tree& t, const ModuleElement& m) {
  ModuleElement out;
  for (const auto& [s, p] : m.terms())
    for (const auto& [f, c] : straighten_monomial(t, s)) out.add(f, p * c);
  return out;
}

// ---------------------------------------------------------------------------
// Action engine

namespace {

// Σ D_f⁻ g(d) p(d − k), keyed by (f, k). Applying it to a concrete p gives
// D_t⁺ · D_s⁻ p(d) ⊗ 1.
using ShiftedImage = std::map<std::pair<Forest, std::size_t>, PolynomialQ>;

void accumulate(ShiftedImage& into, const Forest& f, std::size_t k, const PolynomialQ& g) {
  if (g.is_zero()) return;
  auto [it, inserted] = into.try_emplace({f, k}, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

struct WhittakerAction::Cache {
  std::shared_mutex mutex;
  std::map<std::pair<Tree, Forest>, ShiftedImage> plus;

  const ShiftedImage& plus_image(const EtaMap& eta, const Tree& t, const Forest& s) {
    auto key = std::make_pair(t, s);
    {
      std::shared_lock lock(mutex);
      if (auto it = plus.find(key); it != plus.end()) return it->second;
    }
    ShiftedImage value = compute(eta, t, s);
    std::unique_lock lock(mutex);
    return plus.try_emplace(std::move(key), std::move(value)).first->second;
  }

  ShiftedImage compute(const EtaMap& eta, const Tree& t, const Forest& s) {
    ShiftedImage out;
    if (s.empty()) {
      // D_t⁺ p(d) ⊗ 1 = p(d − |t|) D_t⁺ ⊗ 1 = η(D_t⁺) p(d − |t|) ⊗ 1.
      accumulate(out, Forest(), t.size(), PolynomialQ(eta(t)));
      return out;
    }
    // D_t⁺ D_{t1}⁻ W = D_{t1}⁻ (D_t⁺ W) + [D_t⁺, D_{t1}⁻] W.
    const Tree t1 = s.largest();
    Forest rest = s;
    rest.erase_one(t1);
    for (const auto& [fk, g] : plus_image(eta, t, rest))
      for (const auto& [f, c] : straighten_monomial(t1, fk.first)) accumulate(out, f, fk.second, g * c);
    const auto rest_order = static_cast<long>(rest.order());
    for (const auto& [gen, c] : bracket(Generator::plus(t), Generator::minus(t1)).terms()) {
      switch (gen.kind) {
        case GeneratorKind::D:
          // d D_rest⁻ = D_rest⁻ (d − |rest|)
          accumulate(out, rest, 0, PolynomialQ::linear(Rational(-rest_order)) * c);
          break;
        case GeneratorKind::Plus:
          for (const auto& [fk, g] : plus_image(eta, gen.tree, rest))
            accumulate(out, fk.first, fk.second, g * c);
          break;
        case GeneratorKind::Minus:
          for (const auto& [f, c2] : straighten_monomial(gen.tree, rest))
            accumulate(out, f, 0, PolynomialQ(c * c2));
          break;
      }
    }
    return out;
  }
};

WhittakerAction::WhittakerAction(EtaMap eta)
    : eta_(std::move(eta)), cache_(std::make_unique<Cache>()) {}

WhittakerAction::~WhittakerAction() = default;

ModuleElement WhittakerAction::apply_plus(const Tree& t, const ModuleElement& v) const {
  ModuleElement out;
  for (const auto& [s, p] : v.terms())
    for (const auto& [fk, g] : cache_->plus_image(eta_, t, s)) {
      const PolynomialQ shifted =
          fk.second == 0 ? p : p.shifted(Rational(-static_cast<long>(fk.second)));
      out.add(fk.first, g * shifted);
    }
  return out;
}

ModuleElement WhittakerAction::apply(const Generator& g, const ModuleElement& v) const {
  switch (g.kind) {
    case GeneratorKind::Plus: return apply_plus(g.tree, v);
    case GeneratorKind::Minus: return straighten(g.tree, v);
    case GeneratorKind::D: {
      ModuleElement out;
      for (const auto& [s, p] : v.terms())
        out.add(s, PolynomialQ::linear(Rational(-static_cast<long>(s.order()))) * p);
      return out;
    }
  }
  return {};
}

ModuleElement WhittakerAction::apply(const AlgebraElement& x, const ModuleElement& v) const {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) out += c * apply(g, v);
  return out;
}

ModuleElement WhittakerAction::whittaker_defect(const Tree& t, const ModuleElement& v) const {
  ModuleElement out = apply_plus(t, v);
  out -= eta_(t) * v;
  return out;
}

ModuleElement act(const AlgebraElement& x, const ModuleElement& v, const EtaMap& eta) {
  return WhittakerAction(eta).apply(x, v);
}

// ---------------------------------------------------------------------------
// Text formats

std::string format_polynomial(const PolynomialQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!first) out += '+';
    out += format_rational(abs(c));
    if (k == 1) out += "*d";
    else if (k > 1) out += "*d^" + std::to_string(k);
    first = false;
  }
  return out;
}

PolynomialQ parse_polynomial(std::string_view text) {
  PolynomialQ out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial", pos);
    }
    Rational coef = 1;
    bool have_coef = false;
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > start) {
      try {
        coef = parse_rational(text.substr(start, pos - start));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed coefficient", start);
      }
      have_coef = true;
      skip_ws();
    }
    std::size_t power = 0;
    if (pos < text.size() && (text[pos] == '*' || text[pos] == 'd')) {
      if (text[pos] == '*') {
        if (!have_coef) throw ParseError("'*' without coefficient", pos);
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != 'd') throw ParseError("expected 'd'", pos);
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::size_t ps = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == ps) throw ParseError("expected exponent", pos);
        power = std::stoul(std::string(text.substr(ps, pos - ps)));
      }
    } else if (!have_coef) {
      throw ParseError("expected coefficient or 'd'", pos);
    }
    out += PolynomialQ::monomial(power, sign * coef);
    first = false;
  }
  return out;
}

std::string format_module_element(const ModuleElement& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [s, p] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += "D-[" + s.encoding() + "]*(" + format_polynomial(p) + ")";
  }
  return out;
}

ModuleElement parse_module_element(std::string_view text) {
  ModuleElement out;
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e) throw ParseError("empty module element", b);
  if (text.substr(b, e - b) == "0") return out;
  // Split on '+' outside brackets and parentheses.
  std::size_t start = b;
  int depth = 0;
  auto parse_term = [&](std::size_t from, std::size_t to) {
    while (from < to && std::isspace(static_cast<unsigned char>(text[from]))) ++from;
    while (to > from && std::isspace(static_cast<unsigned char>(text[to - 1]))) --to;
    const std::string_view term = text.substr(from, to - from);
    if (term.substr(0, 3) != "D-[") throw ParseError("module term must start with 'D-['", from);
    const auto close = term.find("]*(");
    if (close == std::string_view::npos) throw ParseError("expected ']*('", from);
    if (term.back() != ')') throw ParseError("module term must end with ')'", to);
    Forest s;
    try {
      s = parse_forest(term.substr(3, close - 3));
    } catch (const ParseError& err) {
      throw ParseError("bad forest", from + 3 + err.offset());
    }
    PolynomialQ p;
    try {
      p = parse_polynomial(term.substr(close + 3, term.size() - close - 4));
    } catch (const ParseError& err) {
      throw ParseError("bad polynomial", from + close + 3 + err.offset());
    }
    out.add(s, p);
  };
  for (std::size_t i = b; i < e; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == '+' && depth == 0) {
      parse_term(start, i);
      start = i + 1;
    }
    if (depth < 0) throw ParseError("unbalanced brackets", i);
  }
  if (depth != 0) throw ParseError("unbalanced brackets", e);
  parse_term(start, e);
  return out;
}

}  // namespace iealg
