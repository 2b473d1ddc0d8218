#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iealg/algebra.hpp"
#include "oracle/oracle.hpp"

using namespace iealg;

namespace {

AlgebraElement from_oracle(const std::vector<std::pair<oracle::Letter, Rational>>& terms) {
  AlgebraElement out;
  for (const auto& [l, c] : terms) {
    switch (l.kind) {
      case oracle::Kind::D: out.add(Generator::d(), c); break;
      case oracle::Kind::Plus: out.add(Generator::plus(oracle::to_tree(l.code)), c); break;
      case oracle::Kind::Minus: out.add(Generator::minus(oracle::to_tree(l.code)), c); break;
    }
  }
  return out;
}

oracle::Letter to_letter(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Plus: return {oracle::Kind::Plus, oracle::canon(g.tree)};
    case GeneratorKind::Minus: return {oracle::Kind::Minus, oracle::canon(g.tree)};
    case GeneratorKind::D: break;
  }
  return {oracle::Kind::D, ""};
}

}  // namespace

TEST_CASE("displayed bracket examples") {
  const Tree dot, ch = cherry();
  CHECK(format_element(bracket(Generator::minus(dot), Generator::plus(ch))) == "2*D+(())");
  CHECK(format_element(bracket(Generator::minus(ch), Generator::plus(dot))) == "D-(())");
  CHECK(bracket(Generator::plus(dot), Generator::plus(ch)) ==
        parse_element("D+(()()()) + 2*D+(()(())) - D+((()()))"));
  CHECK(bracket(Generator::minus(dot), Generator::minus(ch)) ==
        parse_element("-3*D-(()()()) - D-(()(())) + D-((()()))"));
}

TEST_CASE("d brackets and degrees") {
  const Tree ch = cherry();
  CHECK(bracket(Generator::d(), Generator::plus(ch)) == AlgebraElement(Generator::plus(ch), 3));
  CHECK(bracket(Generator::d(), Generator::minus(ch)) == AlgebraElement(Generator::minus(ch), -3));
  CHECK(bracket(Generator::d(), Generator::d()).is_zero());
  CHECK(bracket(Generator::minus(ch), Generator::plus(ch)).coefficient(Generator::d()) == 1);
  CHECK(Generator::plus(ch).degree() == 3);
  CHECK(Generator::minus(ch).degree() == -3);
  CHECK(grading_degree(Generator::plus(ch)) == 3);
  CHECK(grading_degree(AlgebraElement()) == 0);
  CHECK_FALSE(grading_degree(AlgebraElement(Generator::plus(ch)) + Generator::d()).has_value());
}

TEST_CASE("brackets agree with the defining relations evaluated by brute force") {
  const auto gens = generators_up_to(4);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      CAPTURE(format_generator(x));
      CAPTURE(format_generator(y));
      CHECK(bracket(x, y) == from_oracle(oracle::raw_bracket(to_letter(x), to_letter(y))));
    }
}

TEST_CASE("antisymmetry and Jacobi") {
  const auto anti = verify_antisymmetry(5);
  CHECK(anti.passed);
  CHECK(anti.pairs_checked > 0);
  const auto jac = verify_jacobi(4);
  CHECK(jac.passed);
  CHECK(jac.triples_checked == 969);
  CHECK(jac.counterexample.empty());
}

TEST_CASE("bracket is bilinear") {
  const AlgebraElement x = parse_element("2*D+() - 1/2*D-(())");
  const AlgebraElement y = parse_element("D-() + 3*d");
  AlgebraElement expected;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) expected += (cx * cy) * bracket(gx, gy);
  CHECK(bracket(x, y) == expected);
  CHECK(bracket(x, x).is_zero());
}

TEST_CASE("element text round trip and errors") {
  for (const char* text : {"0", "d", "-d", "2*D+((()))-1/3*d", "D-(()())+7/2*D+()"}) {
    const auto e = parse_element(text);
    CHECK(parse_element(format_element(e)) == e);
  }
  CHECK(format_element(parse_element("D+() + D+()")) == "2*D+()");
  CHECK(parse_element("D+() - D+()").is_zero());
  CHECK(format_element(parse_element("-1/3*d + 2*D+((()))")) == "2*D+((()))-1/3*d");
  for (const char* bad : {"", "D", "D*()", "2*", "D+(", "1/0*d", "d d", "D+()x"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_element(bad));
  }
}
