#include "fintriple/hilbert.hpp"

namespace fintriple {

TripleSpace TripleSpace::build(AlgebraSpec algebra, IMatrix q) {
  const int L = algebra.num_labels();
  if (q.rows() != L || q.cols() != L)
    throw Error(ErrorCode::SizeMismatch,
                "q must be square over the algebra's irrep labels");
  if (q != q.transpose().eval())
    throw Error(ErrorCode::AsymmetricMatrix, "Krajewski matrix must be symmetric");
  // Faithfulness: every summand must act through at least one label.
  for (int s = 0; s < algebra.num_summands(); ++s) {
    bool acts = false;
    for (int l : algebra.labels_of_summand(s))
      for (int j = 0; j < L; ++j)
        if (q(l, j) != 0) acts = true;
    if (!acts)
      throw Error(ErrorCode::UnfaithfulRepresentation,
                  "summand " + std::to_string(s) + " acts as zero");
  }

  TripleSpace space;
  space.algebra_ = std::move(algebra);
  space.q_ = std::move(q);
  space.offset_ = IMatrix::Constant(L, L, -1);
  int pos = 0;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      const int r = std::abs(space.q_(i, j));
      if (r == 0) continue;
      space.offset_(i, j) = pos;
      const int di = space.algebra_.label_dim(i);
      const int dj = space.algebra_.label_dim(j);
      for (int a = 0; a < di; ++a)
        for (int s = 0; s < r; ++s)
          for (int b = 0; b < dj; ++b)
            space.basis_.push_back({i, j, a, s, b});
      pos += di * r * dj;
    }
  space.dim_ = pos;
  return space;
}

int TripleSpace::index_of(int i, int j, int a, int s, int b) const {
  const int dj = algebra_.label_dim(j);
  const int r = multiplicity(i, j);
  return offset_(i, j) + a * (r * dj) + s * dj + b;
}

CMatrix TripleSpace::rep_left(const AlgebraElement& x) const {
  if (x.spec() != algebra_)
    throw Error(ErrorCode::AlgebraMismatch, "element of a different algebra");
  CMatrix out = CMatrix::Zero(dim_, dim_);
  const int L = num_labels();
  for (int i = 0; i < L; ++i) {
    const CMatrix block = irrep_block(x, algebra_.label(i));
    const int di = algebra_.label_dim(i);
    for (int j = 0; j < L; ++j) {
      const int r = multiplicity(i, j);
      if (r == 0) continue;
      const int dj = algebra_.label_dim(j);
      const int off = offset_(i, j);
      const int inner = r * dj;  // identity on multiplicity and right factor
      for (int a = 0; a < di; ++a)
        for (int c = 0; c < di; ++c) {
          if (block(a, c) == Complex(0, 0)) continue;
          for (int t = 0; t < inner; ++t)
            out(off + a * inner + t, off + c * inner + t) = block(a, c);
        }
    }
  }
  return out;
}

CMatrix TripleSpace::rep_right(const AlgebraElement& x) const {
  if (x.spec() != algebra_)
    throw Error(ErrorCode::AlgebraMismatch, "element of a different algebra");
  CMatrix out = CMatrix::Zero(dim_, dim_);
  const int L = num_labels();
  for (int j = 0; j < L; ++j) {
    const CMatrix block = irrep_block(x, algebra_.label(j)).transpose();
    const int dj = algebra_.label_dim(j);
    for (int i = 0; i < L; ++i) {
      const int r = multiplicity(i, j);
      if (r == 0) continue;
      const int di = algebra_.label_dim(i);
      const int off = offset_(i, j);
      for (int a = 0; a < di; ++a)
        for (int s = 0; s < r; ++s)
          for (int b = 0; b < dj; ++b)
            for (int d = 0; d < dj; ++d) {
              if (block(b, d) == Complex(0, 0)) continue;
              out(off + (a * r + s) * dj + b, off + (a * r + s) * dj + d) =
                  block(b, d);
            }
    }
  }
  return out;
}

CMatrix TripleSpace::grading() const {
  CMatrix g = CMatrix::Zero(dim_, dim_);
  for (int i = 0; i < num_labels(); ++i)
    for (int j = 0; j < num_labels(); ++j) {
      if (multiplicity(i, j) == 0) continue;
      const int off = offset_(i, j);
      const int d = subspace_dim(i, j);
      for (int t = 0; t < d; ++t) g(off + t, off + t) = gamma_sign(i, j);
    }
  return g;
}

AntilinearOperator TripleSpace::real_structure() const {
  // J (i,j,a,s,b) = (j,i,b,s,a) with entrywise conjugation of coefficients.
  CMatrix u = CMatrix::Zero(dim_, dim_);
  for (int v = 0; v < dim_; ++v) {
    const BasisLabel& l = basis_[v];
    u(index_of(l.j, l.i, l.b, l.s, l.a), v) = 1.0;
  }
  return {u};
}

CMatrix TripleSpace::row_projector(int label) const {
  CMatrix p = CMatrix::Zero(dim_, dim_);
  for (int j = 0; j < num_labels(); ++j) {
    if (multiplicity(label, j) == 0) continue;
    const int off = offset_(label, j);
    const int d = subspace_dim(label, j);
    for (int t = 0; t < d; ++t) p(off + t, off + t) = 1.0;
  }
  return p;
}

CMatrix TripleSpace::summand_row_projector(int summand) const {
  CMatrix p = CMatrix::Zero(dim_, dim_);
  for (int l : algebra_.labels_of_summand(summand)) p += row_projector(l);
  return p;
}

AxiomReport TripleSpace::validate_axioms(double tol) const {
  AxiomReport report;
  report.tol = tol;
  const auto basis_elems = element_basis(algebra_);
  const CMatrix id = CMatrix::Identity(dim_, dim_);
  const AntilinearOperator J = real_structure();
  const CMatrix g = grading();

  auto add = [&](const std::string& name, double residual) {
    report.checks.push_back({name, residual, residual <= tol});
  };

  add("J_squared_identity", max_norm(J.u * J.u.conjugate() - id));
  add("J_antiunitary", max_norm(J.u * J.u.adjoint() - id));
  add("gamma_squared_identity", max_norm(g * g - id));
  add("gamma_selfadjoint", max_norm(g - g.adjoint()));
  add("gamma_commutes_J", max_norm(g * J.u - J.u * g.conjugate()));

  double rho_order0 = 0.0, rho_gamma = 0.0, rho_opposite = 0.0;
  std::vector<CMatrix> lefts, rights;
  lefts.reserve(basis_elems.size());
  for (const auto& e : basis_elems) {
    lefts.push_back(rep_left(e));
    rights.push_back(rep_right(e));
  }
  for (size_t i = 0; i < basis_elems.size(); ++i) {
    rho_gamma = std::max(rho_gamma, max_norm(g * lefts[i] - lefts[i] * g));
    rho_opposite = std::max(
        rho_opposite,
        max_norm(rights[i] - J.sandwich(rep_left(basis_elems[i].adjoint()))));
    for (size_t j = 0; j < basis_elems.size(); ++j)
      rho_order0 = std::max(
          rho_order0, max_norm(rights[i] * lefts[j] - lefts[j] * rights[i]));
  }
  add("order_zero_condition", rho_order0);
  add("gamma_commutes_representation", rho_gamma);
  add("opposite_via_J", rho_opposite);

  // Faithfulness: the vectorized left representation of the basis has full
  // column rank.
  CMatrix rep_cols(dim_ * dim_, static_cast<int>(lefts.size()));
  for (size_t i = 0; i < lefts.size(); ++i) rep_cols.col(i) = vectorize(lefts[i]);
  const bool faithful =
      numerical_rank(rep_cols) == static_cast<int>(lefts.size());
  report.checks.push_back({"faithful_representation",
                           faithful ? 0.0 : 1.0, faithful});
  return report;
}

}  // namespace fintriple
