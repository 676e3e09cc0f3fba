#include "fintriple/algebra.hpp"

namespace fintriple {

AlgebraSpec AlgebraSpec::make(BaseField base, std::vector<Summand> summands) {
  if (summands.empty())
    throw Error(ErrorCode::EmptyAlgebra, "algebra needs at least one summand");
  for (const auto& s : summands) {
    if (s.n < 1)
      throw Error(ErrorCode::EmptyAlgebra, "summand size must be positive");
    if (base == BaseField::Complex && s.field != FieldKind::Complex)
      throw Error(ErrorCode::FieldBaseMismatch,
                  "complex-base algebras admit only complex summands");
  }
  AlgebraSpec spec;
  spec.base_ = base;
  spec.summands_ = std::move(summands);
  for (int i = 0; i < spec.num_summands(); ++i) {
    spec.labels_.push_back({i, false});
    if (base == BaseField::Real && spec.summands_[i].field == FieldKind::Complex)
      spec.labels_.push_back({i, true});
  }
  return spec;
}

int AlgebraSpec::embed_dim(int i) const {
  const Summand& s = summands_[i];
  return s.field == FieldKind::Quaternion ? 2 * s.n : s.n;
}

std::vector<int> AlgebraSpec::labels_of_summand(int i) const {
  std::vector<int> out;
  for (int l = 0; l < num_labels(); ++l)
    if (labels_[l].summand == i) out.push_back(l);
  return out;
}

AlgebraElement::AlgebraElement(AlgebraSpec spec, std::vector<CMatrix> blocks)
    : spec_(std::move(spec)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != spec_.num_summands())
    throw Error(ErrorCode::ShapeMismatch, "one block per summand required");
  for (int i = 0; i < spec_.num_summands(); ++i) {
    const int d = spec_.embed_dim(i);
    if (blocks_[i].rows() != d || blocks_[i].cols() != d)
      throw Error(ErrorCode::ShapeMismatch, "block size does not match summand");
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraSpec& spec) {
  std::vector<CMatrix> blocks;
  for (int i = 0; i < spec.num_summands(); ++i)
    blocks.push_back(CMatrix::Zero(spec.embed_dim(i), spec.embed_dim(i)));
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraSpec& spec) {
  std::vector<CMatrix> blocks;
  for (int i = 0; i < spec.num_summands(); ++i)
    blocks.push_back(CMatrix::Identity(spec.embed_dim(i), spec.embed_dim(i)));
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out = *this;
  for (auto& b : out.blocks_) b = b.adjoint().eval();
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  if (spec_ != rhs.spec_)
    throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
  AlgebraElement out = *this;
  for (int i = 0; i < num_blocks(); ++i) out.blocks_[i] = blocks_[i] * rhs.blocks_[i];
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  if (spec_ != rhs.spec_)
    throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
  AlgebraElement out = *this;
  for (int i = 0; i < num_blocks(); ++i) out.blocks_[i] += rhs.blocks_[i];
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  if (spec_ != rhs.spec_)
    throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
  AlgebraElement out = *this;
  for (int i = 0; i < num_blocks(); ++i) out.blocks_[i] -= rhs.blocks_[i];
  return out;
}

AlgebraElement AlgebraElement::operator*(const Complex& c) const {
  AlgebraElement out = *this;
  for (auto& b : out.blocks_) b *= c;
  return out;
}

double AlgebraElement::norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

AlgebraSpec make_algebra(BaseField base, std::vector<Summand> summands) {
  return AlgebraSpec::make(base, std::move(summands));
}

AlgebraElement central_projection(const AlgebraSpec& spec, int i) {
  if (i < 0 || i >= spec.num_summands())
    throw Error(ErrorCode::IndexOutOfRange, "no such summand");
  AlgebraElement p = AlgebraElement::zero(spec);
  p.block(i) = CMatrix::Identity(spec.embed_dim(i), spec.embed_dim(i));
  return p;
}

CMatrix quaternion_embed(double w, double x, double y, double z) {
  CMatrix q(2, 2);
  q(0, 0) = Complex(w, x);
  q(0, 1) = Complex(y, z);
  q(1, 0) = Complex(-y, z);
  q(1, 1) = Complex(w, -x);
  return q;
}

std::vector<AlgebraElement> element_basis(const AlgebraSpec& spec) {
  std::vector<AlgebraElement> basis;
  for (int i = 0; i < spec.num_summands(); ++i) {
    const Summand& s = spec.summand(i);
    const int n = s.n;
    if (spec.base() == BaseField::Complex || s.field == FieldKind::Real) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          AlgebraElement e = AlgebraElement::zero(spec);
          e.block(i)(r, c) = 1.0;
          basis.push_back(e);
        }
    } else if (s.field == FieldKind::Complex) {
      // M_n(C) as a real algebra: E_rc and i E_rc.
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          AlgebraElement e = AlgebraElement::zero(spec);
          e.block(i)(r, c) = 1.0;
          basis.push_back(e);
          AlgebraElement f = AlgebraElement::zero(spec);
          f.block(i)(r, c) = Complex(0, 1);
          basis.push_back(f);
        }
    } else {
      // M_n(H): quaternion units 1, i, j, k in each matrix-unit position.
      const double units[4][4] = {
          {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          for (const auto& u : units) {
            AlgebraElement e = AlgebraElement::zero(spec);
            e.block(i).block(2 * r, 2 * c, 2, 2) =
                quaternion_embed(u[0], u[1], u[2], u[3]);
            basis.push_back(e);
          }
    }
  }
  return basis;
}

CMatrix irrep_block(const AlgebraElement& a, const IrrepLabel& label) {
  const CMatrix& b = a.block(label.summand);
  return label.conjugate ? b.conjugate().eval() : b;
}

std::function<CMatrix(const AlgebraElement&)> irrep(const AlgebraSpec& spec,
                                                    const IrrepLabel& label) {
  bool valid = false;
  for (const auto& l : spec.labels())
    if (l == label) valid = true;
  if (!valid)
    throw Error(ErrorCode::InvalidLabel, "label does not belong to the algebra");
  return [label](const AlgebraElement& a) { return irrep_block(a, label); };
}

}  // namespace fintriple
