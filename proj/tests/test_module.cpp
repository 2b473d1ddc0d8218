#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iealg/module.hpp"
#include "oracle/oracle.hpp"

#include <random>
#include <thread>

using namespace iealg;

namespace {

const PolynomialQ d = PolynomialQ::monomial(1);

ModuleElement term(const Forest& s, const PolynomialQ& p) { return ModuleElement(s, p); }

std::vector<ModuleElement> basis_vectors(std::size_t max_order, std::size_t max_degree) {
  std::vector<ModuleElement> out;
  for (const auto& s : enumerate_forests_up_to(max_order))
    for (std::size_t k = 0; k <= max_degree; ++k) out.push_back(term(s, PolynomialQ::monomial(k)));
  return out;
}

std::vector<EtaMap> sample_etas() {
  return {EtaMap::zero(), EtaMap::dot(), EtaMap::ladder(Rational(-2, 3)),
          EtaMap(FiniteSupport{{{Tree(), 2}, {ladder(2), -1}, {ladder(3), 5}}})};
}

}  // namespace

TEST_CASE("sample characters are homomorphisms") {
  for (const auto& eta : sample_etas()) CHECK(check_homomorphism(eta, 6).passed);
}

TEST_CASE("polynomial arithmetic and text") {
  const PolynomialQ p{1, -2, 3};  // 3d² − 2d + 1
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == 9);
  CHECK(p.shifted(-1) == PolynomialQ{6, -8, 3});
  CHECK(format_polynomial(p) == "3*d^2-2*d+1");
  CHECK(format_polynomial(PolynomialQ()) == "0");
  CHECK(format_polynomial(PolynomialQ{Rational(-1, 2)}) == "-1/2");
  CHECK(parse_polynomial("d^2") == PolynomialQ::monomial(2));
  CHECK(parse_polynomial("-d + 5") == PolynomialQ{5, -1});
  CHECK(parse_polynomial("1/2*d^3 - 1/2*d^3") == PolynomialQ());
  for (const char* text : {"0", "d", "-1*d+5", "7/3*d^4-d", "1"}) {
    const auto q = parse_polynomial(text);
    CHECK(parse_polynomial(format_polynomial(q)) == q);
  }
  for (const char* bad : {"", "d^", "2*", "*d", "x", "1/0", "d d"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_polynomial(bad));
  }
}

TEST_CASE("module text format") {
  const ModuleElement v = term(Forest{cherry(), Tree()}, PolynomialQ{1, Rational(1, 2)}) +
                          term(Forest(), PolynomialQ{-3});
  const std::string text = format_module_element(v);
  CHECK(text == "D-[{||}]*(-3) + D-[{|(()()),()|}]*(1/2*d+1)");
  CHECK(parse_module_element(text) == v);
  CHECK(format_module_element(ModuleElement::cyclic()) == "D-[{||}]*(1)");
  CHECK(parse_module_element("0").is_zero());
  CHECK(parse_module_element("D-[{|()|}]*(d) + D-[{|()|}]*(-d)").is_zero());
  for (const char* bad : {"", "D-[{|()|}]", "D-[{|(|}]*(1)", "D+[{||}]*(1)", "D-[{||}]*(1) +",
                          "D-[{||}]*(x)"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_module_element(bad));
  }
}

TEST_CASE("straightening") {
  const Tree dot, ch = cherry();
  CHECK(straighten(dot, ModuleElement::cyclic()) == term(Forest{dot}, 1));
  CHECK(straighten(dot, term(Forest{dot}, 1)) == term(Forest{dot, dot}, 1));
  CHECK(straighten(ch, term(Forest{dot}, d)) == term(Forest{ch, dot}, d));

  // D_•⁻ D_cherry⁻ − D_cherry⁻ D_•⁻ = [D_•⁻, D_cherry⁻].
  const ModuleElement lhs = straighten(dot, term(Forest{ch}, 1)) - straighten(ch, term(Forest{dot}, 1));
  ModuleElement expected;
  for (const auto& [g, c] : bracket(Generator::minus(dot), Generator::minus(ch)).terms())
    expected.add(Forest{g.tree}, PolynomialQ(c));
  CHECK(lhs == expected);
  CHECK(lhs == parse_module_element("D-[{|((()()))|}]*(1) + D-[{|(()(()))|}]*(-1) + D-[{|(()()())|}]*(-3)"));
}

TEST_CASE("straightening is consistent across factor orders") {
  for (const auto& s : enumerate_forests_up_to(5)) {
    auto trees = s.descending();
    std::sort(trees.begin(), trees.end());
    do {
      // Apply factors right to left, then compare against word rewriting.
      ModuleElement v = ModuleElement::cyclic();
      oracle::Word w;
      for (auto it = trees.rbegin(); it != trees.rend(); ++it) v = straighten(*it, v);
      for (const auto& t : trees) w.push_back({oracle::Kind::Minus, oracle::canon(t)});
      CAPTURE(s.encoding());
      CHECK(v == oracle::reduce(w, 1, EtaMap::zero()));
      for (const auto& [f, c] : v.terms()) CHECK(f.order() == s.order());
    } while (std::next_permutation(trees.begin(), trees.end()));
    // Descending order is already normal.
    ModuleElement v = ModuleElement::cyclic();
    const auto desc = s.descending();
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) v = straighten(*it, v);
    CHECK(v == term(s, 1));
  }
}

TEST_CASE("action examples") {
  const EtaMap eta = EtaMap::dot();
  const Tree dot;
  CHECK(act(Generator::plus(dot), term(Forest(), d), eta) == term(Forest(), PolynomialQ{-1, 1}));
  CHECK(act(Generator::plus(dot), term(Forest{dot}, 1), eta) == term(Forest{dot}, 1) - term(Forest(), d));
  CHECK(act(Generator::d(), term(Forest{cherry()}, 1), EtaMap::ladder(3)) ==
        term(Forest{cherry()}, PolynomialQ{-3, 1}));
  const PolynomialQ p{2, 0, 1};
  CHECK(act(Generator::plus(ladder(2)), term(Forest{dot}, p), eta) ==
        term(Forest(), -p.shifted(-1)));
  CHECK(act(Generator::minus(dot), ModuleElement::cyclic(), eta) == term(Forest{dot}, 1));
  CHECK(act(AlgebraElement(), term(Forest{dot}, 1), eta).is_zero());
  // The plus action can raise the polynomial degree.
  CHECK(act(Generator::plus(dot), term(Forest{dot}, 1), eta).max_degree() == 1);
}

TEST_CASE("module axiom") {
  const auto gens = generators_up_to(3);
  const auto vectors = basis_vectors(3, 2);
  for (const auto& eta : sample_etas()) {
    const WhittakerAction a(eta);
    for (const auto& x : gens)
      for (const auto& y : gens) {
        const auto& xy = bracket(x, y);
        for (const auto& v : vectors) {
          const ModuleElement lhs = a.apply(xy, v);
          const ModuleElement rhs = a.apply(x, a.apply(y, v)) - a.apply(y, a.apply(x, v));
          if (!(lhs == rhs)) {
            CAPTURE(format_generator(x));
            CAPTURE(format_generator(y));
            CAPTURE(format_module_element(v));
            CHECK(format_module_element(lhs) == format_module_element(rhs));
          }
        }
      }
  }
}

TEST_CASE("Whittaker reduction agrees with word rewriting") {
  const auto trees = enumerate_trees_up_to(4);
  for (const auto& eta : sample_etas()) {
    const WhittakerAction a(eta);
    for (const auto& t : trees)
      for (const auto& s : enumerate_forests_up_to(3))
        for (std::size_t k = 0; k <= 2; ++k) {
          CAPTURE(t.encoding());
          CAPTURE(s.encoding());
          CAPTURE(k);
          CHECK(a.whittaker_defect(t, term(s, PolynomialQ::monomial(k))) ==
                oracle::defect(t, s, k, eta));
        }
  }
}

TEST_CASE("shift identity on random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-6, 6), deg(0, 4);
  const auto trees = enumerate_trees_up_to(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    const PolynomialQ p(c);
    const Tree& t = trees[static_cast<std::size_t>(rng()) % trees.size()];
    const EtaMap eta = sample_etas()[static_cast<std::size_t>(rng()) % 4];
    CHECK(act(Generator::plus(t), term(Forest(), p), eta) ==
          term(Forest(), eta(t) * p.shifted(Rational(-static_cast<long>(t.size())))));
  }
}

TEST_CASE("forest order never grows under the plus action") {
  // Terms of (D_t⁺ − η(t)) D_s⁻ p(d) ⊗ 1 either have smaller forest order or
  // sit on s itself with polynomial η(t)(p(d − |t|) − p(d)).
  for (const auto& eta : sample_etas()) {
    const WhittakerAction a(eta);
    for (const auto& t : enumerate_trees_up_to(4))
      for (const auto& s : enumerate_forests_up_to(4)) {
        if (s.empty()) continue;
        const PolynomialQ p{1, -1, 1};
        const ModuleElement img = a.whittaker_defect(t, term(s, p));
        for (const auto& [f, q] : img.terms()) {
          CHECK(f.order() <= s.order());
          if (f.order() == s.order()) {
            CHECK(f == s);
            CHECK(q == eta(t) * (p.shifted(Rational(-static_cast<long>(t.size()))) - p));
          } else {
            CHECK(q.degree() <= p.degree() + static_cast<long>(s.order() - f.order()));
          }
        }
      }
  }
}

TEST_CASE("action is thread safe") {
  const WhittakerAction a(EtaMap::ladder(1));
  const auto vectors = basis_vectors(3, 1);
  std::vector<std::vector<ModuleElement>> results(4);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (const auto& t : enumerate_trees_up_to(4))
        for (const auto& v : vectors) results[static_cast<std::size_t>(w)].push_back(a.whittaker_defect(t, v));
    });
  for (auto& th : pool) th.join();
  for (int w = 1; w < 4; ++w) CHECK(results[static_cast<std::size_t>(w)] == results[0]);
}

TEST_CASE("Verma quotient") {
  const Tree dot;
  const Rational xi(5);
  CHECK(verma_act(Generator::d(), verma_cyclic(xi)) == [&] {
    auto v = verma_cyclic(xi);
    v.terms.begin()->second = xi;
    return v;
  }());
  for (const auto& t : enumerate_trees_up_to(3))
    CHECK(verma_act(Generator::plus(t), verma_cyclic(xi)).terms.empty());

  VermaElement m1;
  m1.weight = xi;
  m1.add(Forest{dot}, 1);
  auto r = verma_act(Generator::plus(dot), m1);
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.at(Forest()) == -xi);

  const auto q1 = quotient_check(Rational(2), Generator::d(), term(Forest{dot}, 1), 3);
  CHECK(q1.checked);
  CHECK(q1.holds);
  CHECK(q1.via_m0.terms.at(Forest{dot}) == 1);
  CHECK(quotient_check(Rational(-3), Generator::plus(dot), term(Forest{dot}, d), 3).holds);
  const auto q2 = quotient_check(Rational(0), Generator::minus(dot), ModuleElement::cyclic(), 3);
  CHECK(q2.holds);
  CHECK(q2.via_verma == VermaElement{{{Forest{dot}, 1}}, 0});
  CHECK_FALSE(quotient_check(Rational(0), Generator::d(), term(Forest{ladder(4)}, 1), 3).checked);

  CHECK(project_to_verma(term(Forest{dot}, PolynomialQ{1, 1}), Rational(3)).terms.at(Forest{dot}) == 4);
  CHECK(lift_from_verma(m1) == term(Forest{dot}, 1));
  CHECK(format_verma_element(m1) == "1*D-[{|()|}] (weight 5)");
}
