#include "fintriple/ktheory.hpp"

namespace fintriple {

namespace {

// Canonical-basis indices of the compressed subspace e_i e_j^0 H
// intersected with a chirality eigenspace.  The K0 generator of a summand
// keeps the leading coordinate of each tensor factor (two coordinates for a
// quaternionic summand when doubling is honored).
std::vector<int> compressed_indices(const TripleSpace& space, int summand_i,
                                    int summand_j, int chirality,
                                    bool double_quaternionic) {
  const auto& alg = space.algebra();
  auto generator_rank = [&](int summand) {
    return (double_quaternionic &&
            alg.summand(summand).field == FieldKind::Quaternion)
               ? 2
               : 1;
  };
  const int mi = generator_rank(summand_i);
  const int mj = generator_rank(summand_j);
  std::vector<int> out;
  for (int l : alg.labels_of_summand(summand_i))
    for (int m : alg.labels_of_summand(summand_j)) {
      if (space.gamma_sign(l, m) != chirality) continue;
      const int r = space.multiplicity(l, m);
      for (int a = 0; a < mi; ++a)
        for (int s = 0; s < r; ++s)
          for (int b = 0; b < mj; ++b)
            out.push_back(space.index_of(l, m, a, s, b));
    }
  return out;
}

int pairing_entry(const TripleSpace& space, const CMatrix& d, int i, int j,
                  bool double_quaternionic) {
  const auto plus = compressed_indices(space, i, j, +1, double_quaternionic);
  const auto minus = compressed_indices(space, i, j, -1, double_quaternionic);
  // D anticommutes with the grading, so its compression maps the negative
  // eigenspace into the positive one.
  CMatrix block(static_cast<int>(plus.size()), static_cast<int>(minus.size()));
  for (size_t r = 0; r < plus.size(); ++r)
    for (size_t c = 0; c < minus.size(); ++c)
      block(static_cast<int>(r), static_cast<int>(c)) = d(plus[r], minus[c]);
  const int rank = numerical_rank(block);
  const int dim_coker = static_cast<int>(plus.size()) - rank;
  const int dim_ker = static_cast<int>(minus.size()) - rank;
  return dim_coker - dim_ker;
}

}  // namespace

IntersectionForm index_pairing(const TripleSpace& space, const CMatrix& d,
                               bool double_quaternionic) {
  if (d.rows() != space.dim() || d.cols() != space.dim())
    throw Error(ErrorCode::ShapeMismatch, "operator dimension mismatch");
  const auto& alg = space.algebra();
  const int k = alg.num_summands();
  IntersectionForm form;
  form.matrix = IMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i)
    form.quaternionic.push_back(alg.summand(i).field == FieldKind::Quaternion);

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      form.matrix(i, j) = pairing_entry(space, d, i, j, double_quaternionic);

  // The index must not depend on the Dirac operator.
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    const CMatrix probe = random_dirac(space, seed).matrix;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (pairing_entry(space, probe, i, j, double_quaternionic) !=
            form.matrix(i, j))
          throw Error(ErrorCode::DisagreementAcrossD,
                      "index pairing varied across Dirac operators");
  }
  return form;
}

PoincareCheck poincare_check(const IMatrix& form) {
  PoincareCheck check;
  check.determinant = integer_determinant(form);
  check.nondegenerate = check.determinant != 0;
  return check;
}

}  // namespace fintriple
