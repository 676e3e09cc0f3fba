#ifndef FINTRIPLE_HILBERT_HPP
#define FINTRIPLE_HILBERT_HPP

#include <string>
#include <vector>

#include "fintriple/algebra.hpp"

namespace fintriple {

/// Antilinear operator J stored through its unitary part: J v = U conj(v).
struct AntilinearOperator {
  CMatrix u;
  CVector apply(const CVector& v) const { return u * v.conjugate(); }
  /// Conjugation of a linear operator: J X J as a matrix.
  CMatrix sandwich(const CMatrix& x) const {
    return u * x.conjugate() * u.conjugate();
  }
};

/// Canonical basis label of the Hilbert space: vector number a (x) s (x) b
/// inside the subspace attached to the label pair (i, j).
struct BasisLabel {
  int i, j;  // irrep label indices
  int a, s, b;  // 0-based coordinates, a < d_i, s < r_ij, b < d_j
};

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  double tol = kRankTol;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The Hilbert space of a finite real spectral triple, built from an algebra
/// and its Krajewski data q (symmetric integer matrix over irrep labels;
/// |q_ij| are multiplicities, signs the grading).  Immutable after build.
class TripleSpace {
 public:
  static TripleSpace build(AlgebraSpec algebra, IMatrix q);

  const AlgebraSpec& algebra() const { return algebra_; }
  const IMatrix& q() const { return q_; }
  int num_labels() const { return algebra_.num_labels(); }
  int dim() const { return dim_; }

  int multiplicity(int i, int j) const { return std::abs(q_(i, j)); }
  /// Grading sign on the (i, j) subspace; 0 where the subspace is absent.
  int gamma_sign(int i, int j) const {
    return (q_(i, j) > 0) - (q_(i, j) < 0);
  }
  int subspace_offset(int i, int j) const { return offset_(i, j); }
  int subspace_dim(int i, int j) const {
    return algebra_.label_dim(i) * multiplicity(i, j) * algebra_.label_dim(j);
  }
  const std::vector<BasisLabel>& basis() const { return basis_; }

  /// Flat index of a basis label.
  int index_of(int i, int j, int a, int s, int b) const;

  CMatrix rep_left(const AlgebraElement& x) const;
  CMatrix rep_right(const AlgebraElement& x) const;
  CMatrix grading() const;
  AntilinearOperator real_structure() const;

  /// Projection onto the span of the subspaces with row label i
  /// (the image of rep_left of the central projection of label i's summand,
  /// cut down to a single label).
  CMatrix row_projector(int label) const;
  /// Projection onto the row subspaces of one summand, all labels included;
  /// equals rep_left(central_projection(summand)).
  CMatrix summand_row_projector(int summand) const;

  AxiomReport validate_axioms(double tol = kRankTol) const;

 private:
  AlgebraSpec algebra_;
  IMatrix q_;
  IMatrix offset_;
  std::vector<BasisLabel> basis_;
  int dim_ = 0;
};

}  // namespace fintriple

#endif
