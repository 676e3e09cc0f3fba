#ifndef FINTRIPLE_LINALG_HPP
#define FINTRIPLE_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fintriple {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using IMatrix = Eigen::MatrixXi;

/// Relative singular-value cutoff used for every rank decision.
inline constexpr double kRankTol = 1e-9;

/// Max-norm (largest absolute entry); the residual measure for operator
/// identities.
double max_norm(const CMatrix& m);

/// Numerical rank of m: singular values below rel_tol * sigma_max count as
/// zero.  Rank of an empty or zero matrix is 0.
int numerical_rank(const CMatrix& m, double rel_tol = kRankTol);
int numerical_rank(const RMatrix& m, double rel_tol = kRankTol);

/// Orthonormal basis of the kernel of m (columns of the result).
CMatrix nullspace_basis(const CMatrix& m, double rel_tol = kRankTol);
RMatrix nullspace_basis(const RMatrix& m, double rel_tol = kRankTol);

/// Orthonormal basis of the column space of m (columns of the result).
CMatrix colspace_basis(const CMatrix& m, double rel_tol = kRankTol);

CVector vectorize(const CMatrix& m);
CMatrix unvectorize(const CVector& v, int rows, int cols);

/// A finite-dimensional space of operators on a fixed Hilbert space, stored
/// through an orthonormal basis under the trace inner product Tr(A^dag B).
/// Spans are taken over C by default; over R when real_span is set (the
/// scalars of a real-base algebra).
class OperatorSpace {
 public:
  OperatorSpace() = default;

  static OperatorSpace span(int op_rows, int op_cols,
                            const std::vector<CMatrix>& generators,
                            bool real_span = false,
                            double rel_tol = kRankTol);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  bool real_span() const { return real_span_; }

  /// Frobenius norm of X minus its orthogonal projection onto the span.
  double projection_residual(const CMatrix& x) const;
  CMatrix project(const CMatrix& x) const;
  bool contains(const CMatrix& x, double tol = kRankTol) const;

  /// Largest projection residual over the other space's basis; 0 when
  /// other is a subspace of *this.
  double subspace_residual(const OperatorSpace& other) const;

 private:
  int op_rows_ = 0, op_cols_ = 0;
  bool real_span_ = false;
  std::vector<CMatrix> basis_;
  // Vectorized orthonormal basis: complex N^2 x rank, or real 2N^2 x rank.
  CMatrix vec_basis_c_;
  RMatrix vec_basis_r_;
};

/// Exact determinant of a small integer matrix (fraction-free Bareiss
/// elimination); entries must stay within int64 range.
long long integer_determinant(const IMatrix& m);

}  // namespace fintriple

#endif
