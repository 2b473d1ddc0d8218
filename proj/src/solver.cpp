#include "iealg/solver.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace iealg {

TruncationBasis::TruncationBasis(std::size_t N, std::size_t D) : N_(N), D_(D) {
  for (const auto& s : enumerate_forests_up_to(N))
    for (std::size_t k = 0; k <= D; ++k) entries_.push_back({s, k});
}

TruncationBasis TruncationBasis::from_entries(std::vector<BasisEntry> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  TruncationBasis b;
  b.explicit_ = true;
  for (const auto& e : entries) {
    b.N_ = std::max(b.N_, e.forest.order());
    b.D_ = std::max(b.D_, e.degree);
  }
  b.entries_ = std::move(entries);
  return b;
}

std::optional<std::size_t> TruncationBasis::index_of(const Forest& s, std::size_t degree) const {
  const BasisEntry key{s, degree};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key);
  if (it == entries_.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

ModuleElement TruncationBasis::vector(std::size_t i) const {
  const auto& e = entries_.at(i);
  return ModuleElement(e.forest, PolynomialQ::monomial(e.degree));
}

ModuleElement TruncationBasis::combine(const VectorXq& coefficients) const {
  ModuleElement out;
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    if (coefficients(i) == 0) continue;
    const auto& e = entries_.at(static_cast<std::size_t>(i));
    out.add(e.forest, PolynomialQ::monomial(e.degree, coefficients(i)));
  }
  return out;
}

TruncationBasis TruncationBasis::codomain() const {
  if (explicit_) return *this;
  return TruncationBasis(N_, D_ + N_);
}

VectorXq coordinates(const ModuleElement& v, const TruncationBasis& basis) {
  VectorXq out = VectorXq::Constant(static_cast<Eigen::Index>(basis.size()), Rational(0));
  for (const auto& [s, p] : v.terms())
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
      const Rational& c = p.coefficients()[k];
      if (c == 0) continue;
      auto i = basis.index_of(s, k);
      if (!i)
        throw std::logic_error("term D-[" + s.encoding() + "]*d^" + std::to_string(k) +
                               " lies outside the truncation window");
      out(static_cast<Eigen::Index>(*i)) = c;
    }
  return out;
}

RationalMatrix operator_matrix(const Tree& t, const TruncationBasis& basis, const EtaMap& eta,
                               unsigned threads) {
  const WhittakerAction action(eta);
  return operator_matrix(t, basis, action, threads);
}

RationalMatrix operator_matrix(const Tree& t, const TruncationBasis& basis,
                               const WhittakerAction& action, unsigned threads) {
  const TruncationBasis target = basis.codomain();
  const std::size_t cols = basis.size();
  std::vector<VectorXq> images(cols);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t j = begin; j < cols; j += stride)
      images[j] = coordinates(action.whittaker_defect(t, basis.vector(j)), target);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cols, 1))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, threads);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Eigen::Triplet<Rational>> triplets;
  for (std::size_t j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < images[j].size(); ++i)
      if (images[j](i) != 0)
        triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), images[j](i));
  RationalMatrix m(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(cols));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

MatrixXz integer_rows(const MatrixXq& a) {
  MatrixXz out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer den = 1, num = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Rational scaled = a(i, j) * Rational(den);
      out(i, j) = scaled.get_num();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), out(i, j).get_mpz_t());
    }
    if (num > 1)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        mpz_divexact(out(i, j).get_mpz_t(), out(i, j).get_mpz_t(), num.get_mpz_t());
  }
  return out;
}

MatrixXq rref(MatrixXq a) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = 1 / a(r, c);
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.topRows(r);
}

KernelResult whittaker_kernel(const EtaMap& eta, std::size_t N, std::size_t D, std::size_t T,
                              unsigned threads) {
  if (T == 0) throw std::invalid_argument("operator bound T must be at least 1");
  KernelResult res;
  res.N = N;
  res.D = D;
  res.T = T;
  const TruncationBasis basis(N, D);
  const WhittakerAction action(eta);
  const auto trees = enumerate_trees_up_to(T);
  res.operators = trees.size();

  // Distinct nonzero integer rows, in first-seen order.
  std::vector<std::vector<Integer>> rows;
  std::set<std::vector<Integer>> seen;
  const auto cols = static_cast<Eigen::Index>(basis.size());
  for (const auto& t : trees) {
    const RationalMatrix m = operator_matrix(t, basis, action, threads);
    const MatrixXz z = integer_rows(MatrixXq(m));
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
      std::vector<Integer> row(z.row(i).begin(), z.row(i).end());
      if (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; })) continue;
      // Normalize sign so that row and −row coincide.
      auto lead = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
      if (*lead < 0)
        for (auto& x : row) x = -x;
      if (seen.insert(row).second) rows.push_back(std::move(row));
    }
  }
  res.rows = rows.size();
  MatrixXz stacked(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      stacked(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  const MatrixXq kernel = null_space(stacked);
  res.dimension = static_cast<std::size_t>(kernel.rows());
  for (Eigen::Index i = 0; i < kernel.rows(); ++i)
    res.basis_vectors.push_back(basis.combine(kernel.row(i).transpose()));
  return res;
}

}  // namespace iealg
