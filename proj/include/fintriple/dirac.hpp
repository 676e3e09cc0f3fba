#ifndef FINTRIPLE_DIRAC_HPP
#define FINTRIPLE_DIRAC_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fintriple/hilbert.hpp"

namespace fintriple {

enum class SlotKind { LeftEquivariant, RightEquivariant };

/// One admissible block of a Dirac operator: a map from the (si, sj)
/// subspace to the (ti, tj) subspace.  Left-equivariant blocks (ti == si)
/// have the shape 1 (x) T; right-equivariant ones (tj == sj) the shape
/// T (x) 1.
struct BlockSlot {
  int ti, tj, si, sj;  // irrep label indices
  SlotKind kind;

  /// Free parameter matrix dimensions.
  int t_rows = 0, t_cols = 0;

  std::array<int, 4> key() const { return {ti, tj, si, sj}; }
  bool operator==(const BlockSlot& o) const { return key() == o.key(); }
};

/// The orbit of a slot under taking adjoints and J-conjugates.  One free
/// complex parameter matrix per orbit determines four blocks of D.
struct SlotOrbit {
  BlockSlot rep;          // lexicographically smallest slot of the orbit
  std::vector<BlockSlot> slots;
  bool self_paired = false;  // orbit folded onto itself (cannot occur for
                             // admissible slots; kept for exact counting)
  int real_params = 0;
};

/// All admissible block-slot orbits of the space, sorted by representative.
std::vector<SlotOrbit> allowed_blocks(const TripleSpace& space);

/// Total real parameter count of the admissible Dirac space.
int dof_count(const TripleSpace& space);

/// A Dirac operator together with the parameters it was assembled from.
struct DiracOperator {
  CMatrix matrix;
  std::vector<CMatrix> params;  // one T per orbit, in allowed_blocks order
};

/// Assemble the full operator from one parameter matrix per orbit.
/// Self-adjointness and J-commutation hold exactly by construction;
/// anticommutation with the grading by slot admissibility.
DiracOperator assemble(const TripleSpace& space,
                       const std::vector<CMatrix>& orbit_params);

/// Deterministic generic operator: independent standard complex Gaussian
/// parameter entries drawn from the seed.
DiracOperator random_dirac(const TripleSpace& space, std::uint64_t seed);

struct DiracReport {
  double selfadjoint_residual = 0.0;
  double j_commutation_residual = 0.0;
  double gamma_anticommutation_residual = 0.0;
  double first_order_residual = 0.0;      // over all basis element pairs
  double first_order_real_center = 0.0;   // b = P_j for every summand
  double first_order_imag_center = 0.0;   // b = i P_j, complex summands of a
                                          // real-base algebra
  double tol = kRankTol;
  bool pass = false;
};

/// Check self-adjointness, J-commutation, grading anticommutation and the
/// first-order condition [[D, pi(a)], pi0(b)] = 0 over the element basis.
/// For real-base algebras the b = z P_j probes (z = 1 and z = i) are
/// reported separately; z = i detects blocks mixing a representation with
/// its conjugate.
DiracReport validate_dirac(const TripleSpace& space, const CMatrix& d,
                           double tol = kRankTol);

}  // namespace fintriple

#endif
