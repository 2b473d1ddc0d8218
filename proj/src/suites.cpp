#include "iealg/suites.hpp"

#include "iealg/lemmas.hpp"
#include "iealg/solver.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace iealg {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome paper_examples() {
  const Tree dot, ch = cherry();
  struct Case {
    Generator x, y;
    const char* expected;
  };
  const Case cases[] = {
      {Generator::minus(dot), Generator::plus(ch), "2*D+(())"},
      {Generator::minus(ch), Generator::plus(dot), "D-(())"},
      {Generator::plus(dot), Generator::plus(ch), "-D+((()()))+2*D+(()(()))+D+(()()())"},
      {Generator::minus(dot), Generator::minus(ch), "D-((()()))-D-(()(()))-3*D-(()()())"},
  };
  std::size_t ok = 0;
  std::string detail;
  for (const auto& c : cases) {
    const auto& got = bracket(c.x, c.y);
    if (got == parse_element(c.expected)) ++ok;
    else
      detail += "[" + format_generator(c.x) + ", " + format_generator(c.y) + "] = " +
                format_element(got) + "; ";
  }
  return {ok == 4, std::to_string(ok) + "/4 brackets match" + (detail.empty() ? "" : ": " + detail)};
}

Outcome lie_axioms(const SuiteOptions& o) {
  const auto anti = verify_antisymmetry(o.antisymmetry_max_size);
  if (!anti.passed) return {false, "antisymmetry: " + anti.counterexample};
  const auto jac = verify_jacobi(o.jacobi_max_size);
  if (!jac.passed) return {false, "jacobi: " + jac.counterexample};
  return {true, std::to_string(anti.pairs_checked) + " pairs (size <= " +
                    std::to_string(o.antisymmetry_max_size) + "), " +
                    std::to_string(jac.triples_checked) + " triples (size <= " +
                    std::to_string(o.jacobi_max_size) + ")"};
}

Outcome grading() {
  const auto gens = generators_up_to(4);
  std::size_t pairs = 0;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      ++pairs;
      const auto& b = bracket(x, y);
      if (b.is_zero()) continue;
      const auto deg = grading_degree(b);
      if (!deg || *deg != x.degree() + y.degree())
        return {false, "[" + format_generator(x) + ", " + format_generator(y) + "] not in degree " +
                           std::to_string(x.degree() + y.degree())};
    }
  std::size_t trees = 0;
  for (const auto& t : enumerate_trees_up_to(6)) {
    ++trees;
    const Rational n(static_cast<long>(t.size()));
    if (!(bracket(Generator::d(), Generator::plus(t)) == AlgebraElement(Generator::plus(t), n)) ||
        !(bracket(Generator::d(), Generator::minus(t)) == AlgebraElement(Generator::minus(t), -n)))
      return {false, "[d, D_t] wrong for t = " + t.encoding()};
  }
  return {true, std::to_string(pairs) + " pairs graded, ad(d) checked on " + std::to_string(trees) +
                    " trees"};
}

Outcome enumeration() {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20};
  std::string counts;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto trees = enumerate_trees(n);
    counts += (n > 1 ? " " : "") + std::to_string(trees.size());
    if (trees.size() != expected[n - 1] || trees.size() != rooted_tree_count(n))
      return {false, "count mismatch at n = " + std::to_string(n)};
  }
  return {true, "counts " + counts};
}

PolynomialQ random_polynomial(std::mt19937& rng, std::size_t max_degree) {
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return PolynomialQ(std::move(c));
}

EtaMap random_eta(std::mt19937& rng, const std::vector<Tree>& trees) {
  std::uniform_int_distribution<int> kind(0, 2), num(-5, 5), pick(0, static_cast<int>(trees.size()) - 1);
  switch (kind(rng)) {
    case 0: return EtaMap::dot(Rational(num(rng)));
    case 1: return EtaMap::ladder(Rational(num(rng)));
    default: {
      FiniteSupport f;
      for (int i = 0; i < 3; ++i) f.table[trees[static_cast<std::size_t>(pick(rng))]] = num(rng);
      return EtaMap(std::move(f));
    }
  }
}

Outcome shift_identity() {
  std::mt19937 rng(20240611);
  const auto trees = enumerate_trees_up_to(4);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(trees.size()) - 1);
  for (int i = 0; i < 100; ++i) {
    const PolynomialQ p = random_polynomial(rng, 4);
    const Tree& t = trees[static_cast<std::size_t>(pick(rng))];
    const EtaMap eta = random_eta(rng, trees);
    const auto rep = verify_lemma_shift(p, t, eta);
    if (!rep.holds)
      return {false, "instance " + std::to_string(i) + ": p = " + format_polynomial(p) +
                         ", t = " + t.encoding()};
  }
  return {true, "100/100 instances"};
}

Outcome depth_collapse() {
  std::size_t count = 0;
  for (const auto& p : {PolynomialQ{0, 1}, PolynomialQ{Rational(1, 2), -3, 1}, PolynomialQ(1)}) {
    for (const auto& rep : sweep_depth_collapse(EtaMap::dot(), 3, 3, 5, p)) {
      if (!rep.preconditions_met || !rep.holds)
        return {false, "failed: lhs " + format_module_element(rep.lhs) + ", rhs " +
                           format_module_element(rep.rhs)};
      ++count;
    }
  }
  return {count >= 10, std::to_string(count) + " instances"};
}

Outcome root_bounded_lemmas() {
  const EtaMap eta = EtaMap::ladder(1);
  const PolynomialQ p{2, -1, 1};
  std::size_t vanish = 0;
  for (const auto& rep : sweep_root_vanish(eta, 2, 6, p)) {
    if (!rep.holds) return {false, "root-vanish failed: " + format_module_element(rep.lhs)};
    ++vanish;
  }
  std::size_t case_i = 0, case_ii = 0, with_xi = 0;
  for (const auto& rep : sweep_part_replacement(eta, 6, 2, p)) {
    if (!rep.holds)
      return {false, "part-replacement case " + rep.case_label +
                         " failed: " + format_module_element(rep.lhs)};
    if (rep.case_label == "ii") ++case_ii;
    else {
      ++case_i;
      if (rep.xi) ++with_xi;
    }
  }
  std::ostringstream os;
  os << vanish << " root-vanish, " << case_i << " part-replacement case i (" << with_xi
     << " with nonzero integer xi), " << case_ii << " case ii";
  return {vanish >= 6 && with_xi >= 6 && case_ii >= 6, os.str()};
}

Outcome kernel_check(const EtaMap& eta, std::size_t N, std::size_t D, std::size_t T,
                     const std::vector<ModuleElement>& expected_basis, std::size_t expected_dim,
                     unsigned threads) {
  const auto k = whittaker_kernel(eta, N, D, T, threads);
  std::string detail = "N=" + std::to_string(N) + " D=" + std::to_string(D) +
                       " T=" + std::to_string(T) + ": dimension " + std::to_string(k.dimension);
  bool ok = k.dimension == expected_dim;
  if (!expected_basis.empty()) ok = ok && k.basis_vectors == expected_basis;
  for (const auto& v : k.basis_vectors) detail += "; " + format_module_element(v);
  return {ok, detail};
}

Outcome homomorphism() {
  const auto rep = check_homomorphism(EtaMap::ladder(1), 7);
  if (!rep.passed)
    return {false, "violated at (" + rep.violating_pair->first.encoding() + ", " +
                       rep.violating_pair->second.encoding() + ")"};
  return {true, std::to_string(rep.pairs_checked) + " pairs"};
}

Outcome verma_quotient() {
  const auto gens = generators_up_to(3);
  const TruncationBasis basis(3, 2);
  std::size_t checks = 0;
  for (const Rational& xi : {Rational(0), Rational(1), Rational(-2)})
    for (const auto& g : gens)
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto rep = quotient_check(xi, g, basis.vector(i), 3);
        if (!rep.checked || !rep.holds)
          return {false, "xi = " + format_rational(xi) + ", x = " + format_generator(g) +
                             ", v = " + format_module_element(basis.vector(i))};
        ++checks;
      }
  return {true, std::to_string(checks) + " checks"};
}

const char* criterion_name(int id) {
  static const char* names[] = {
      "bracket examples",        "lie algebra axioms",      "grading",
      "tree enumeration",        "shift identity",          "depth collapse",
      "root-bounded lemmas",     "kernel finite support",   "kernel ladder family",
      "kernel zero map",         "ladder homomorphism",     "verma quotient"};
  return names[id - 1];
}

}  // namespace

std::size_t rooted_tree_count(std::size_t n) {
  std::vector<Integer> a(n + 1, 0);
  if (n == 0) return 0;
  a[1] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      Integer s = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) s += Integer(static_cast<unsigned long>(d)) * a[d];
      acc += s * a[m - k + 1];
    }
    a[m + 1] = acc / Integer(static_cast<unsigned long>(m));
  }
  return a[n].get_ui();
}

std::vector<int> suite_criteria(std::string_view name) {
  if (name == "paper-examples") return {1};
  if (name == "jacobi") return {2};
  if (name == "lemmas") return {5, 6, 7};
  if (name == "kernels") return {8, 9, 10};
  if (name == "all") {
    std::vector<int> all;
    for (int i = 1; i <= criterion_count; ++i) all.push_back(i);
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

CheckResult run_criterion(int id, const SuiteOptions& o) {
  if (id < 1 || id > criterion_count) throw std::out_of_range("criterion id out of range");
  const auto start = std::chrono::steady_clock::now();
  const ModuleElement one = ModuleElement::cyclic();
  const std::function<Outcome()> checks[] = {
      paper_examples,
      [&] { return lie_axioms(o); },
      grading,
      enumeration,
      shift_identity,
      depth_collapse,
      root_bounded_lemmas,
      [&] { return kernel_check(EtaMap::dot(), 4, 2, 5, {one}, 1, o.threads); },
      [&] { return kernel_check(EtaMap::ladder(1), 3, 1, 5, {}, 1, o.threads); },
      [&] {
        return kernel_check(EtaMap::zero(), 2, 2, 3,
                            {one, ModuleElement(Forest(), PolynomialQ::monomial(1)),
                             ModuleElement(Forest(), PolynomialQ::monomial(2))},
                            3, o.threads);
      },
      homomorphism,
      verma_quotient,
  };
  CheckResult r;
  r.id = id;
  r.name = criterion_name(id);
  try {
    const Outcome out = checks[id - 1]();
    r.passed = out.passed;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace iealg
