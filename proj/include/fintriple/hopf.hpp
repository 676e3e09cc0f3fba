#ifndef FINTRIPLE_HOPF_HPP
#define FINTRIPLE_HOPF_HPP

#include <string>
#include <vector>

#include "fintriple/forms.hpp"

namespace fintriple {

/// A finite group given by its multiplication table.  Associativity,
/// identity and inverses are verified exhaustively at construction.
class FiniteGroup {
 public:
  static FiniteGroup make(std::vector<std::string> names,
                          std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(names_.size()); }
  int mult(int g, int h) const { return table_[g][h]; }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_[g]; }
  const std::string& name(int g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> conjugacy_class_of(int g) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// The symmetric group on three letters with elements e, a, b, c, ab, ba
/// (a, b the generating transpositions, c = aba).
FiniteGroup s3();

/// A finite-dimensional representation: one matrix per group element,
/// verified to be a homomorphism.
struct GroupRep {
  int dim = 0;
  std::vector<CMatrix> mats;

  static GroupRep make(const FiniteGroup& group, std::vector<CMatrix> mats,
                       double tol = 1e-12);
  const CMatrix& at(int g) const { return mats[g]; }
};

/// The three irreducible representations of S3 in the order trivial, sign,
/// two-dimensional.
std::vector<GroupRep> s3_irreps();

/// The Haar functional on a group algebra: 1 at the identity, 0 elsewhere,
/// extended linearly to coefficient vectors.
struct HaarMeasure {
  int identity = 0;
  Complex operator()(const CVector& coeffs) const { return coeffs(identity); }
  double invariance_residual = 0.0;  // (id (x) mu) Delta f = mu(f) 1, per
                                     // group element
};

HaarMeasure haar_measure(const FiniteGroup& group);

/// A one-form over a group algebra calculus: coefficient vector v_g in V
/// for every group element.
struct GroupAlgebraForm {
  std::vector<CVector> coeffs;  // indexed by group element

  double norm() const {
    double s = 0.0;
    for (const auto& v : coeffs) s += v.squaredNorm();
    return std::sqrt(s);
  }
};

/// First-order bicovariant differential calculus attached to a group
/// representation: Omega1 = CG (x) V with h (g (x) v) = hg (x) pi(h) v and
/// d g = [g, 1 (x) v].  Construction requires the differentials to generate
/// V (span condition).
class BicovariantCalculus {
 public:
  static BicovariantCalculus make(FiniteGroup group, GroupRep rep, CVector v,
                                  double tol = 1e-12);

  const FiniteGroup& group() const { return group_; }
  const GroupRep& rep() const { return rep_; }
  const CVector& generator_vector() const { return v_; }

  GroupAlgebraForm zero_form() const;
  /// d of a group algebra element given by coefficients.
  GroupAlgebraForm differential(const CVector& coeffs) const;
  GroupAlgebraForm differential_of(int g) const;
  GroupAlgebraForm left_mult(int g, const GroupAlgebraForm& w) const;
  GroupAlgebraForm right_mult(const GroupAlgebraForm& w, int g) const;

  /// Exhaustive Leibniz residual over element pairs.
  double leibniz_residual() const;

 private:
  FiniteGroup group_;
  GroupRep rep_;
  CVector v_;
};

BicovariantCalculus bicovariant_calculus(const FiniteGroup& group,
                                         const GroupRep& rep, const CVector& v);

/// The averaged inner one-form chi = -(1/|G|) sum_h h^-1 dh and the residual
/// of dg = [g, chi] over all elements.
struct InnerChi {
  GroupAlgebraForm chi;
  double residual = 0.0;
};

InnerChi inner_chi(const BicovariantCalculus& calculus);

/// Basis of the center of the one-form bimodule: families {v_g} with
/// pi(h) v_g = v_{h g h^-1} for all g, h.
std::vector<GroupAlgebraForm> calculus_center(const FiniteGroup& group,
                                              const GroupRep& rep);

/// Bicovariance report for a commutative triple whose points carry a group
/// structure (points = elements in declaration order).
struct ChiReport {
  int g = 0;
  std::string name;
  bool chi_nonzero = false;
  std::vector<int> rows_hit;    // points i with some nonzero block
  bool uniform = false;         // all rows hit, or none
};

struct BicovarianceReport {
  std::vector<ChiReport> per_element;  // every g != e
  bool bicovariant = false;            // uniformity holds for every g
  bool class_closed = false;  // nonvanishing pattern is a union of classes
};

BicovarianceReport fn_algebra_bicovariance(const TripleSpace& space,
                                           const CMatrix& d,
                                           const FiniteGroup& group,
                                           double tol = kRankTol);

/// Per-summand weights of the central operator Z = sum z_i P_i whose
/// weighted trace is the Haar measure on the represented group algebra.
struct HaarWeight {
  std::vector<double> weights;
  double trace_residual = 0.0;  // max_g |Tr(pi(Z) pi(iso(g))) - delta_{g,e}|
};

/// Solve for the Haar weights of a triple carrying a group algebra through
/// the isomorphism iso (one AlgebraElement per group element, verified to be
/// multiplicative).
HaarWeight haar_weight_operator(const TripleSpace& space,
                                const FiniteGroup& group,
                                const std::vector<AlgebraElement>& iso,
                                double tol = kRankTol);

/// The Wedderburn isomorphism of the S3 group algebra with
/// M_2(C) (+) C (+) C: the algebra and the image of every group element in
/// the order of s3().
std::pair<AlgebraSpec, std::vector<AlgebraElement>> wedderburn_iso_s3();

/// Mechanical check that the S3 group algebra triple cannot carry a
/// bicovariance symmetry: the two-dimensional calculus has central
/// one-forms, the spectral-triple calculus has none, and the one-dimensional
/// calculus splits over the summands.
struct NoGoReport {
  int two_dim_center_dim = 0;
  double canonical_center_match_residual = 0.0;  // distance of the closed-form
                                                 // central element from the
                                                 // computed center
  int spectral_center_dim = 0;
  double one_dim_dab_norm = 0.0;  // d(ab) in the one-dimensional calculus
  double one_dim_dba_norm = 0.0;
  bool incompatible = false;
};

NoGoReport no_go_check(double tol = kRankTol);

}  // namespace fintriple

#endif
