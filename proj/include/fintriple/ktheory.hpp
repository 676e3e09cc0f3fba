#ifndef FINTRIPLE_KTHEORY_HPP
#define FINTRIPLE_KTHEORY_HPP

#include "fintriple/dirac.hpp"

namespace fintriple {

/// The K-theoretic intersection form over K0 generators, one per summand.
/// Quaternionic summands are flagged: their minimal projector embeds with
/// rank two, which doubles the corresponding rows and columns when the
/// doubling flag is honored.
struct IntersectionForm {
  IMatrix matrix;
  std::vector<bool> quaternionic;
};

/// Index pairing <e_i, e_j> of the K0 generators through the
/// chirality-compressed Dirac operator, computed numerically per entry and
/// re-derived for three independently sampled operators (any disagreement is
/// an error).  With double_quaternionic the honest rank-two quaternionic
/// projectors are used; otherwise every generator is compressed to a single
/// coordinate per tensor factor, which reproduces the Krajewski matrix
/// summand-wise.
IntersectionForm index_pairing(const TripleSpace& space, const CMatrix& d,
                               bool double_quaternionic = true);

struct PoincareCheck {
  long long determinant = 0;
  bool nondegenerate = false;
};

PoincareCheck poincare_check(const IMatrix& form);

}  // namespace fintriple

#endif
