#include "fintriple/linalg.hpp"

#include <Eigen/SVD>

namespace fintriple {

double max_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

namespace {

template <typename Mat>
int rank_impl(const Mat& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

template <typename Mat>
Mat nullspace_impl(const Mat& m, double rel_tol) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = (sv.size() > 0 && sv(0) > 0.0) ? rel_tol * sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace

int numerical_rank(const CMatrix& m, double rel_tol) { return rank_impl(m, rel_tol); }
int numerical_rank(const RMatrix& m, double rel_tol) { return rank_impl(m, rel_tol); }

CMatrix nullspace_basis(const CMatrix& m, double rel_tol) { return nullspace_impl(m, rel_tol); }
RMatrix nullspace_basis(const RMatrix& m, double rel_tol) { return nullspace_impl(m, rel_tol); }

CMatrix colspace_basis(const CMatrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return CMatrix(m.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = (sv.size() > 0 && sv(0) > 0.0) ? rel_tol * sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

CVector vectorize(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvectorize(const CVector& v, int rows, int cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

namespace {

RVector realify(const CVector& v) {
  RVector out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

}  // namespace

OperatorSpace OperatorSpace::span(int op_rows, int op_cols,
                                  const std::vector<CMatrix>& generators,
                                  bool real_span, double rel_tol) {
  OperatorSpace s;
  s.op_rows_ = op_rows;
  s.op_cols_ = op_cols;
  s.real_span_ = real_span;
  const int n2 = op_rows * op_cols;
  const int m = static_cast<int>(generators.size());
  if (real_span) {
    RMatrix cols(2 * n2, m);
    for (int j = 0; j < m; ++j) cols.col(j) = realify(vectorize(generators[j]));
    if (m > 0) {
      Eigen::JacobiSVD<RMatrix> svd(cols, Eigen::ComputeThinU);
      const auto& sv = svd.singularValues();
      const double cut = (sv.size() > 0 && sv(0) > 0.0) ? rel_tol * sv(0) : 0.0;
      int r = 0;
      for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
      s.vec_basis_r_ = svd.matrixU().leftCols(r);
      for (int j = 0; j < r; ++j) {
        CVector v = s.vec_basis_r_.col(j).head(n2).cast<Complex>() +
                    Complex(0, 1) * s.vec_basis_r_.col(j).tail(n2).cast<Complex>();
        s.basis_.push_back(unvectorize(v, op_rows, op_cols));
      }
    } else {
      s.vec_basis_r_ = RMatrix(2 * n2, 0);
    }
  } else {
    CMatrix cols(n2, m);
    for (int j = 0; j < m; ++j) cols.col(j) = vectorize(generators[j]);
    s.vec_basis_c_ = (m > 0) ? colspace_basis(cols, rel_tol) : CMatrix(n2, 0);
    for (int j = 0; j < s.vec_basis_c_.cols(); ++j)
      s.basis_.push_back(unvectorize(s.vec_basis_c_.col(j), op_rows, op_cols));
  }
  return s;
}

double OperatorSpace::projection_residual(const CMatrix& x) const {
  return (x - project(x)).norm();
}

CMatrix OperatorSpace::project(const CMatrix& x) const {
  if (rank() == 0) return CMatrix::Zero(x.rows(), x.cols());
  if (real_span_) {
    RVector v = realify(vectorize(x));
    RVector p = vec_basis_r_ * (vec_basis_r_.transpose() * v);
    const int n2 = static_cast<int>(x.size());
    CVector pc = p.head(n2).cast<Complex>() + Complex(0, 1) * p.tail(n2).cast<Complex>();
    return unvectorize(pc, static_cast<int>(x.rows()), static_cast<int>(x.cols()));
  }
  CVector v = vectorize(x);
  CVector p = vec_basis_c_ * (vec_basis_c_.adjoint() * v);
  return unvectorize(p, static_cast<int>(x.rows()), static_cast<int>(x.cols()));
}

bool OperatorSpace::contains(const CMatrix& x, double tol) const {
  return projection_residual(x) <= tol * std::max(1.0, x.norm());
}

double OperatorSpace::subspace_residual(const OperatorSpace& other) const {
  double worst = 0.0;
  for (const auto& b : other.basis())
    worst = std::max(worst, projection_residual(b));
  return worst;
}

long long integer_determinant(const IMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> a =
      m.cast<long long>();
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace fintriple
