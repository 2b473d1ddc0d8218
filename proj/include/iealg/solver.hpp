#pragma once

// Finite truncations of M_η, operator matrices of (D_t⁺ − η(D_t⁺)) and
// exact null spaces.

#include "iealg/module.hpp"
#include "iealg/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace iealg {

struct BasisEntry {
  Forest forest;
  std::size_t degree = 0;
  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
  /// Forest order, then forest encoding, then degree.
  friend std::strong_ordering operator<=>(const BasisEntry& a, const BasisEntry& b) {
    if (auto c = a.forest <=> b.forest; c != 0) return c;
    return a.degree <=> b.degree;
  }
};

/// The vectors D_s⁻ d^k ⊗ 1 with |s| ≤ N and k ≤ D, or an explicit list.
class TruncationBasis {
 public:
  TruncationBasis(std::size_t N, std::size_t D);
  /// Explicit basis; entries are sorted and deduplicated. Its own span is
  /// used as the codomain.
  static TruncationBasis from_entries(std::vector<BasisEntry> entries);

  std::size_t forest_order_bound() const noexcept { return N_; }
  std::size_t degree_bound() const noexcept { return D_; }
  bool is_explicit() const noexcept { return explicit_; }
  const std::vector<BasisEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<std::size_t> index_of(const Forest& s, std::size_t degree) const;
  ModuleElement vector(std::size_t i) const;
  /// Σ c_i · vector(i).
  ModuleElement combine(const VectorXq& coefficients) const;

  /// Window receiving the images of (D_t⁺ − η(D_t⁺)). The plus action can
  /// raise the polynomial degree by at most the forest order it consumes,
  /// so the window is (N, D + N) for a generated basis.
  TruncationBasis codomain() const;

 private:
  TruncationBasis() = default;
  std::size_t N_ = 0, D_ = 0;
  bool explicit_ = false;
  std::vector<BasisEntry> entries_;
};

/// Coordinates of v in basis; throws std::logic_error when v has a term
/// outside the span.
VectorXq coordinates(const ModuleElement& v, const TruncationBasis& basis);

/// Matrix of v ↦ (D_t⁺ − η(D_t⁺)) v from basis to basis.codomain().
/// Columns are computed on `threads` workers; the result does not depend on
/// the thread count.
RationalMatrix operator_matrix(const Tree& t, const TruncationBasis& basis, const EtaMap& eta,
                               unsigned threads = 1);
RationalMatrix operator_matrix(const Tree& t, const TruncationBasis& basis,
                               const WhittakerAction& action, unsigned threads = 1);

/// Null space of an integer matrix by fraction-free elimination. Pivots are
/// the first nonzero entry in column order. Returned vectors form the
/// reduced row echelon basis of the kernel (one per row).
template <typename Derived>
MatrixXq null_space(const Eigen::MatrixBase<Derived>& a);

/// Rows of a rational matrix scaled to coprime integers.
MatrixXz integer_rows(const MatrixXq& a);

/// Reduced row echelon form; zero rows dropped.
MatrixXq rref(MatrixXq a);

struct KernelResult {
  std::size_t dimension = 0;
  std::vector<ModuleElement> basis_vectors;
  std::size_t N = 0, D = 0, T = 0;
  std::size_t operators = 0;  // number of trees t with |t| ≤ T
  std::size_t rows = 0;       // distinct nonzero stacked rows
};

/// Vectors in the (N, D) window annihilated by every (D_t⁺ − η(D_t⁺)) with
/// |t| ≤ T. Throws std::invalid_argument for T = 0.
KernelResult whittaker_kernel(const EtaMap& eta, std::size_t N, std::size_t D, std::size_t T,
                              unsigned threads = 1);

// ---------------------------------------------------------------------------

template <typename Derived>
MatrixXq null_space(const Eigen::MatrixBase<Derived>& input) {
  MatrixXz a = input.template cast<Integer>();
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<VectorXq> kernel;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorXq x = VectorXq::Constant(cols, Rational(0));
    x(f) = 1;
    for (auto k = static_cast<Eigen::Index>(pivot_cols.size()) - 1; k >= 0; --k) {
      const Eigen::Index pc = pivot_cols[static_cast<std::size_t>(k)];
      Rational acc = 0;
      for (Eigen::Index j = pc + 1; j < cols; ++j)
        if (a(k, j) != 0 && x(j) != 0) acc += Rational(a(k, j)) * x(j);
      x(pc) = -acc / Rational(a(k, pc));
    }
    kernel.push_back(std::move(x));
  }
  MatrixXq basis(static_cast<Eigen::Index>(kernel.size()), cols);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    basis.row(static_cast<Eigen::Index>(i)) = kernel[i].transpose();
  return rref(std::move(basis));
}

}  // namespace iealg
