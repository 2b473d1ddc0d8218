#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iealg/solver.hpp"
#include "iealg/suites.hpp"
#include "oracle/oracle.hpp"

using namespace iealg;

namespace {

MatrixXq dense(const RationalMatrix& m) { return MatrixXq(m); }

std::vector<EtaMap> sample_etas() {
  return {EtaMap::zero(), EtaMap::dot(), EtaMap::ladder(1),
          EtaMap(FiniteSupport{{{Tree(), 2}, {ladder(2), -1}, {ladder(3), Rational(1, 3)}}})};
}

}  // namespace

TEST_CASE("sample characters are homomorphisms") {
  for (const auto& eta : sample_etas()) CHECK(check_homomorphism(eta, 6).passed);
}

TEST_CASE("truncation basis layout") {
  const TruncationBasis b(3, 2);
  std::size_t forests = 0;
  for (std::size_t n = 0; n <= 3; ++n) forests += rooted_tree_count(n + 1);
  CHECK(b.size() == forests * 3);
  CHECK(std::is_sorted(b.entries().begin(), b.entries().end()));
  CHECK(b.entries()[0] == BasisEntry{Forest(), 0});
  CHECK(b.entries()[1] == BasisEntry{Forest(), 1});
  CHECK(b.index_of(Forest{Tree()}, 2) == std::optional<std::size_t>(5));
  CHECK_FALSE(b.index_of(Forest{Tree()}, 3).has_value());
  CHECK(b.vector(5) == ModuleElement(Forest{Tree()}, PolynomialQ::monomial(2)));
  const auto c = b.codomain();
  CHECK(c.forest_order_bound() == 3);
  CHECK(c.degree_bound() == 5);
  CHECK(TruncationBasis(0, 0).size() == 1);

  VectorXq x = VectorXq::Constant(static_cast<Eigen::Index>(b.size()), Rational(0));
  x(1) = Rational(1, 2);
  x(5) = -1;
  const ModuleElement v = b.combine(x);
  CHECK(coordinates(v, b) == x);
  CHECK_THROWS_AS(coordinates(ModuleElement(Forest{ladder(4)}, 1), b), std::logic_error);
}

TEST_CASE("operator matrix examples") {
  const auto basis = TruncationBasis::from_entries(
      {{Forest{Tree()}, 0}, {Forest(), 1}, {Forest(), 0}, {Forest(), 0}});
  REQUIRE(basis.size() == 3);
  CHECK(basis.is_explicit());
  // Order: 1⊗1, d⊗1, D_•⁻⊗1.
  const MatrixXq m = dense(operator_matrix(Tree(), basis, EtaMap::dot()));
  MatrixXq expected = MatrixXq::Constant(3, 3, Rational(0));
  expected(0, 1) = -1;
  expected(1, 2) = -1;
  CHECK(m == expected);

  // η(D_t⁺) = 0 on polynomial vectors gives zero columns.
  const TruncationBasis polys(0, 3);
  CHECK(operator_matrix(cherry(), polys, EtaMap::dot()).nonZeros() == 0);
  // With η = 0 the cyclic vector is annihilated.
  const TruncationBasis b(3, 1);
  const MatrixXq z = dense(operator_matrix(Tree(), b, EtaMap::zero()));
  CHECK(z.col(0).isZero());

  // An image leaving an explicit window is reported.
  const auto tiny = TruncationBasis::from_entries({{Forest{Tree()}, 0}});
  CHECK_THROWS_AS(operator_matrix(Tree(), tiny, EtaMap::dot()), std::logic_error);
}

TEST_CASE("operator matrices agree with word rewriting") {
  const TruncationBasis basis(3, 1);
  const TruncationBasis target = basis.codomain();
  for (const auto& eta : sample_etas())
    for (const auto& t : enumerate_trees_up_to(3)) {
      const MatrixXq m = dense(operator_matrix(t, basis, eta));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& e = basis.entries()[j];
        const VectorXq col = coordinates(oracle::defect(t, e.forest, e.degree, eta), target);
        CAPTURE(t.encoding());
        CAPTURE(j);
        CHECK(m.col(static_cast<Eigen::Index>(j)) == col);
      }
    }
}

TEST_CASE("truncation closure") {
  for (const auto& eta : {EtaMap::dot(), EtaMap::ladder(1)}) {
    const WhittakerAction action(eta);
    for (std::size_t N = 0; N <= 5; ++N) {
      const TruncationBasis basis(N, 2);
      for (const auto& t : enumerate_trees_up_to(6)) CHECK_NOTHROW(operator_matrix(t, basis, action));
    }
  }
}

TEST_CASE("parallel columns match serial") {
  const TruncationBasis basis(4, 2);
  const WhittakerAction action(EtaMap::ladder(Rational(3, 2)));
  for (const auto& t : enumerate_trees_up_to(3)) {
    const MatrixXq serial = dense(operator_matrix(t, basis, action, 1));
    CHECK(serial == dense(operator_matrix(t, basis, action, 4)));
    CHECK(serial == dense(operator_matrix(t, basis, action, 1000)));
  }
  const auto a = whittaker_kernel(EtaMap::zero(), 2, 2, 3, 1);
  const auto b = whittaker_kernel(EtaMap::zero(), 2, 2, 3, 3);
  CHECK(a.basis_vectors == b.basis_vectors);
}

TEST_CASE("null space and echelon forms") {
  MatrixXz a(2, 4);
  a << 1, 2, 0, -1,  //
      2, 4, 1, 0;
  const MatrixXq k = null_space(a);
  REQUIRE(k.rows() == 2);
  CHECK((a.cast<Rational>() * k.transpose()).isZero());
  CHECK(k == rref(k));
  CHECK(k(0, 0) == 1);
  CHECK(k(0, 1) == 0);  // leading columns are free columns in order

  MatrixXz full(2, 2);
  full << 2, 1, 1, 1;
  CHECK(null_space(full).rows() == 0);
  CHECK(null_space(MatrixXz::Zero(0, 3)).rows() == 3);

  MatrixXq q(1, 3);
  q << Rational(1, 2), Rational(-2, 3), 0;
  const MatrixXz z = integer_rows(q);
  CHECK(z(0, 0) == 3);
  CHECK(z(0, 1) == -4);

  MatrixXq r(3, 3);
  r << 0, 2, 4, 1, 1, 1, 2, 4, 6;
  const MatrixXq e = rref(r);
  CHECK(e.rows() == 2);
  CHECK(e(0, 0) == 1);
  CHECK(e(1, 1) == 1);
  CHECK(e(0, 1) == 0);
}

TEST_CASE("kernel examples") {
  const auto dot = whittaker_kernel(EtaMap::dot(), 3, 2, 4);
  CHECK(dot.dimension == 1);
  REQUIRE(dot.basis_vectors.size() == 1);
  CHECK(dot.basis_vectors[0] == ModuleElement::cyclic());
  CHECK(dot.N == 3);
  CHECK(dot.D == 2);
  CHECK(dot.T == 4);

  const auto zero = whittaker_kernel(EtaMap::zero(), 2, 2, 3);
  CHECK(zero.dimension == 3);
  CHECK(zero.basis_vectors ==
        std::vector<ModuleElement>{ModuleElement::cyclic(),
                                   ModuleElement(Forest(), PolynomialQ::monomial(1)),
                                   ModuleElement(Forest(), PolynomialQ::monomial(2))});

  CHECK(whittaker_kernel(EtaMap::ladder(1), 3, 1, 5).dimension == 1);
  CHECK_THROWS_AS(whittaker_kernel(EtaMap::dot(), 1, 1, 0), std::invalid_argument);
}

TEST_CASE("kernel monotonicity and the cyclic vector") {
  for (const auto& eta : sample_etas()) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> dim;
    for (std::size_t N = 0; N <= 3; ++N)
      for (std::size_t D = 0; D <= 2; ++D)
        for (std::size_t T = 1; T <= 3; ++T) {
          const auto k = whittaker_kernel(eta, N, D, T);
          dim[{N, D, T}] = k.dimension;
          REQUIRE_FALSE(k.basis_vectors.empty());
          CHECK(k.basis_vectors[0] == ModuleElement::cyclic());
          const WhittakerAction a(eta);
          for (const auto& v : k.basis_vectors)
            for (const auto& t : enumerate_trees_up_to(T)) CHECK(a.whittaker_defect(t, v).is_zero());
        }
    for (const auto& [key, value] : dim) {
      const auto [N, D, T] = key;
      if (T < 3) CHECK(dim[{N, D, T + 1}] <= value);
      if (N < 3) CHECK(dim[{N + 1, D, T}] >= value);
      if (D < 2) CHECK(dim[{N, D + 1, T}] >= value);
    }
  }
}
