#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iealg/eta.hpp"

#include <cstdio>
#include <fstream>

using namespace iealg;

TEST_CASE("evaluation") {
  const EtaMap dot = EtaMap::dot();
  CHECK(dot(Tree()) == 1);
  CHECK(eval_eta(dot, cherry()) == 0);
  const EtaMap lad = EtaMap::ladder(Rational(3, 2));
  CHECK(lad(ladder(7)) == Rational(3, 2));
  CHECK(lad(Tree()) == Rational(3, 2));
  CHECK(lad(cherry()) == 0);
  const EtaMap table(LadderFamily{{{2, 5}, {3, 0}}, 1});
  CHECK(table(ladder(2)) == 5);
  CHECK(table(ladder(3)) == 0);
  CHECK(table(ladder(4)) == 1);
  CHECK(EtaMap::zero()(Tree()) == 0);
}

TEST_CASE("construction normalizes and validates") {
  CHECK(EtaMap(FiniteSupport{{{Tree(), 0}}}) == EtaMap::zero());
  CHECK(EtaMap(LadderFamily{{{4, 1}}, 1}) == EtaMap::ladder(1));
  CHECK_THROWS_AS(EtaMap(LadderFamily{{{0, 1}}, 0}), std::invalid_argument);
}

TEST_CASE("homomorphism check") {
  const auto lad = check_homomorphism(EtaMap::ladder(1), 7);
  CHECK(lad.passed);
  CHECK(lad.pairs_checked > 0);
  CHECK(check_homomorphism(EtaMap::dot(), 7).passed);
  CHECK(check_homomorphism(EtaMap::zero(), 6).passed);

  const EtaMap bad(FiniteSupport{{{cherry(), 1}}});
  const auto rep = check_homomorphism(bad, 3);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.violating_pair.has_value());
  CHECK(rep.violating_pair->first == Tree());
  CHECK(rep.violating_pair->second == ladder(2));
  CHECK(rep.violating_value == 1);
}

TEST_CASE("omega values") {
  const EtaMap lad = EtaMap::ladder(1);
  CHECK(omega_n(lad, 1, 10).infinite());
  CHECK(omega_n(lad, 1, 10).certified);
  CHECK(omega_n(lad, 2, 10) == OmegaValue{0, true});
  CHECK(omega_n(lad, 0, 10) == OmegaValue{0, true});

  const EtaMap fin(FiniteSupport{{{Tree(), 1}, {cherry(), 2}, {ladder(4), 1}}});
  CHECK(omega_n(fin, 2, 10) == OmegaValue{3, true});
  CHECK(omega_n(fin, 1, 10) == OmegaValue{4, true});
  for (std::size_t n = 0; n <= 3; ++n) CHECK(scan_omega(fin, n, 6).value == omega_n(fin, n, 6).value);
  CHECK_FALSE(scan_omega(fin, 1, 6).certified);
  CHECK(scan_omega(lad, 1, 5).value == std::optional<std::size_t>(5));
}

TEST_CASE("profiles") {
  const auto dot = profile(EtaMap::dot());
  CHECK_FALSE(dot.is_zero);
  CHECK(dot.has_finite_support);
  CHECK(dot.depth_bounded_at == std::optional<std::size_t>(1));
  CHECK(dot.root_bounded_at == std::optional<std::size_t>(1));
  CHECK(strict_depth_bound(EtaMap::dot()) == std::optional<std::size_t>(0));

  const auto zero = profile(EtaMap::zero());
  CHECK(zero.is_zero);

  const auto lad = profile(EtaMap::ladder(1));
  CHECK_FALSE(lad.has_finite_support);
  CHECK_FALSE(lad.depth_bounded_at.has_value());
  CHECK(lad.root_bounded_at == std::optional<std::size_t>(2));
  CHECK(lad.r_eta == std::optional<std::size_t>(1));
  CHECK(lad.b_eta == std::optional<std::size_t>(0));
  CHECK_FALSE(strict_depth_bound(EtaMap::ladder(1)).has_value());

  const auto fin = profile(EtaMap(FiniteSupport{{{cherry(), 1}, {ladder(3), 2}}}));
  CHECK(fin.depth_bounded_at == std::optional<std::size_t>(3));
  CHECK(fin.root_bounded_at == std::optional<std::size_t>(3));

  const auto short_ladders = profile(EtaMap(LadderFamily{{{3, 1}}, 0}));
  CHECK(short_ladders.has_finite_support);
  CHECK(short_ladders.depth_bounded_at == std::optional<std::size_t>(3));
}

TEST_CASE("json round trip and errors") {
  const std::vector<EtaMap> samples{EtaMap::dot(Rational(-2, 3)), EtaMap::ladder(1), EtaMap::zero(),
                                    EtaMap(LadderFamily{{{2, 5}}, Rational(1, 2)}),
                                    EtaMap(FiniteSupport{{{cherry(), 4}, {Tree(), 1}}})};
  for (const EtaMap& e : samples) CHECK(parse_eta(format_eta(e)) == e);
  CHECK(parse_eta(R"j({"kind":"finite","support":[["()", 1]]})j") == EtaMap::dot());
  CHECK(parse_eta(R"j({"kind":"ladder","tail":"1"})j") == EtaMap::ladder(1));
  CHECK_THROWS_AS(parse_eta("{"), ParseError);
  CHECK_THROWS_AS(parse_eta(R"j({"kind":"other"})j"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta(R"j({"kind":"ladder","table":[[0,"1"]]})j"), std::invalid_argument);
  CHECK_THROWS_AS(parse_eta(R"j({"kind":"finite","support":[["()","1"],["()","2"]]})j"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_eta(R"j({"kind":"finite","support":[["()","1.5"]]})j"), std::invalid_argument);
  CHECK_THROWS(parse_eta(R"j({"kind":"finite","support":[["(()","1"]]})j"));
}

TEST_CASE("loading from a file") {
  const std::string path = "test_eta_tmp.json";
  {
    std::ofstream f(path);
    f << format_eta(EtaMap::ladder(2));
  }
  CHECK(load_eta(path) == EtaMap::ladder(2));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_eta("does/not/exist.json"), std::invalid_argument);
}
