#ifndef FINTRIPLE_ALGEBRA_HPP
#define FINTRIPLE_ALGEBRA_HPP

#include <functional>
#include <vector>

#include "fintriple/error.hpp"
#include "fintriple/linalg.hpp"

namespace fintriple {

/// Coefficient field of a simple summand M_n(F).
enum class FieldKind { Real, Complex, Quaternion };

/// Base field of the whole algebra.
enum class BaseField { Real, Complex };

struct Summand {
  int n = 1;
  FieldKind field = FieldKind::Complex;
  bool operator==(const Summand&) const = default;
};

/// A complex irreducible representation of one summand.  Summands over R and
/// H have a single one; complex summands of a real-base algebra have two,
/// the defining representation and its entrywise conjugate.
struct IrrepLabel {
  int summand = 0;
  bool conjugate = false;
  bool operator==(const IrrepLabel&) const = default;
};

/// A finite semisimple algebra given as an ordered direct sum of matrix
/// summands M_n(F).  Elements are always stored in the complex embedding
/// (n x n for F = R, C; 2n x 2n for F = H).
class AlgebraSpec {
 public:
  static AlgebraSpec make(BaseField base, std::vector<Summand> summands);

  BaseField base() const { return base_; }
  int num_summands() const { return static_cast<int>(summands_.size()); }
  const Summand& summand(int i) const { return summands_[i]; }
  const std::vector<Summand>& summands() const { return summands_; }

  /// Dimension of the complex embedding of summand i.
  int embed_dim(int i) const;

  int num_labels() const { return static_cast<int>(labels_.size()); }
  const IrrepLabel& label(int l) const { return labels_[l]; }
  const std::vector<IrrepLabel>& labels() const { return labels_; }
  /// Complex dimension of the irrep attached to label l.
  int label_dim(int l) const { return embed_dim(labels_[l].summand); }
  /// Label indices belonging to summand i (one, or two for C over R).
  std::vector<int> labels_of_summand(int i) const;

  bool operator==(const AlgebraSpec&) const = default;

 private:
  BaseField base_ = BaseField::Complex;
  std::vector<Summand> summands_;
  std::vector<IrrepLabel> labels_;
};

/// An element of an AlgebraSpec: one complex block per summand, in the
/// complex embedding.  Real and quaternionic summands keep their defining
/// symmetry as an invariant of the stored block, not a storage format.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraSpec spec, std::vector<CMatrix> blocks);

  static AlgebraElement zero(const AlgebraSpec& spec);
  static AlgebraElement identity(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  const CMatrix& block(int i) const { return blocks_[i]; }
  CMatrix& block(int i) { return blocks_[i]; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  AlgebraElement adjoint() const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const Complex& c) const;

  double norm() const;

 private:
  AlgebraSpec spec_;
  std::vector<CMatrix> blocks_;
};

AlgebraSpec make_algebra(BaseField base, std::vector<Summand> summands);

/// The central projection P_i: identity block in summand i, zero elsewhere.
AlgebraElement central_projection(const AlgebraSpec& spec, int i);

/// A basis of the algebra over its base field.  Ordering: summands in
/// declaration order; matrix units row-major within a summand; for complex
/// summands of a real algebra, E and iE interleaved; quaternion units in
/// order 1, i, j, k.
std::vector<AlgebraElement> element_basis(const AlgebraSpec& spec);

/// The irreducible representation attached to a label, as a map from
/// elements to complex matrices.
std::function<CMatrix(const AlgebraElement&)> irrep(const AlgebraSpec& spec,
                                                    const IrrepLabel& label);

/// Block of the irrep of label l applied to element a.
CMatrix irrep_block(const AlgebraElement& a, const IrrepLabel& label);

/// Complex embedding of the quaternion w + xi + yj + zk.
CMatrix quaternion_embed(double w, double x, double y, double z);

}  // namespace fintriple

#endif
