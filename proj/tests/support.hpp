// Test-only oracles kept independent of the implementation paths they check.
#ifndef FINTRIPLE_TESTS_SUPPORT_HPP
#define FINTRIPLE_TESTS_SUPPORT_HPP

#include <vector>

#include "fintriple/dirac.hpp"
#include "fintriple/linalg.hpp"

namespace fintriple::testing {

// Nullity of the stacked real-linear constraint system on a dense operator:
// self-adjointness, J-commutation, grading anticommutation and the
// first-order condition over all element-basis pairs.  Feasible for small
// spaces; this is the ground truth for dof_count.
inline int brute_force_dirac_nullity(const TripleSpace& space) {
  const int n = space.dim();
  const int unknowns = 2 * n * n;  // Re D, Im D

  std::vector<RMatrix> rows;
  auto add_complex_linear = [&](auto&& entry_of) {
    // One complex equation per matrix entry, given as a function of the
    // unknown through unit probes.
    RMatrix block(2 * n * n, unknowns);
    block.setZero();
    for (int var = 0; var < unknowns; ++var) {
      CMatrix probe = CMatrix::Zero(n, n);
      const int pos = var % (n * n);
      probe(pos % n, pos / n) = (var < n * n) ? Complex(1, 0) : Complex(0, 1);
      const CMatrix image = entry_of(probe);
      for (int e = 0; e < n * n; ++e) {
        block(2 * e, var) = image(e % n, e / n).real();
        block(2 * e + 1, var) = image(e % n, e / n).imag();
      }
    }
    rows.push_back(std::move(block));
  };

  const AntilinearOperator J = space.real_structure();
  const CMatrix g = space.grading();
  add_complex_linear([&](const CMatrix& d) { return (d - d.adjoint()).eval(); });
  add_complex_linear(
      [&](const CMatrix& d) { return (d * J.u - J.u * d.conjugate()).eval(); });
  add_complex_linear([&](const CMatrix& d) { return (d * g + g * d).eval(); });

  std::vector<CMatrix> lefts, rights;
  for (const auto& e : element_basis(space.algebra())) {
    lefts.push_back(space.rep_left(e));
    rights.push_back(space.rep_right(e));
  }
  for (const auto& pa : lefts)
    for (const auto& pb : rights)
      add_complex_linear([&](const CMatrix& d) {
        const CMatrix br = d * pa - pa * d;
        return (br * pb - pb * br).eval();
      });

  int total_rows = 0;
  for (const auto& r : rows) total_rows += static_cast<int>(r.rows());
  RMatrix system(total_rows, unknowns);
  int at = 0;
  for (const auto& r : rows) {
    system.middleRows(at, r.rows()) = r;
    at += static_cast<int>(r.rows());
  }
  return unknowns - numerical_rank(system);
}

// Projection-word calculus for commutative triples (every summand of size
// one), assembled directly from the stored blocks of D rather than through
// operator products with the represented algebra.
struct ProjectionWordOracle {
  const TripleSpace& space;
  const CMatrix& d;

  // pi(P_i dP_j) for i != j: the blocks (i,l) <- (j,l) of D.  For i == j,
  // uses sum_t dP_t = 0.
  CMatrix degree1(int i, int j) const {
    const int n = space.num_labels();
    if (i == j) {
      CMatrix out = CMatrix::Zero(space.dim(), space.dim());
      for (int t = 0; t < n; ++t)
        if (t != i) out -= degree1(i, t);
      return out;
    }
    CMatrix out = CMatrix::Zero(space.dim(), space.dim());
    for (int l = 0; l < n; ++l) {
      if (space.multiplicity(i, l) == 0 || space.multiplicity(j, l) == 0)
        continue;
      out.block(space.subspace_offset(i, l), space.subspace_offset(j, l),
                space.subspace_dim(i, l), space.subspace_dim(j, l)) =
          d.block(space.subspace_offset(i, l), space.subspace_offset(j, l),
                  space.subspace_dim(i, l), space.subspace_dim(j, l));
    }
    return out;
  }

  // pi(dP_i) assembled from the degree-1 words.
  CMatrix d_of_projection(int i) const {
    CMatrix out = CMatrix::Zero(space.dim(), space.dim());
    for (int s = 0; s < space.num_labels(); ++s) {
      if (s == i) continue;
      out += degree1(s, i) - degree1(i, s);
    }
    return out;
  }

  // pi(P_k dP_i dP_j) through the assembled pieces.
  CMatrix degree2(int k, int i, int j) const {
    return degree1(k, i) * d_of_projection(j);
  }

  int one_form_rank() const {
    std::vector<CMatrix> words;
    const int n = space.num_labels();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) words.push_back(degree1(i, j));
    return OperatorSpace::span(space.dim(), space.dim(), words).rank();
  }

  int two_form_rank() const {
    std::vector<CMatrix> words;
    const int n = space.num_labels();
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) words.push_back(degree2(k, i, j));
    return OperatorSpace::span(space.dim(), space.dim(), words).rank();
  }

  // Junk rank from the kernel of the degree-1 word map.
  int junk_rank() const {
    const int n = space.num_labels();
    const int n2 = space.dim() * space.dim();
    CMatrix words(n2, n * n);
    std::vector<CMatrix> dwords;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        words.col(i * n + j) = vectorize(degree1(i, j));
        dwords.push_back(d_of_projection(i) * d_of_projection(j));
      }
    const CMatrix kernel = nullspace_basis(words);
    std::vector<CMatrix> junk;
    for (int c = 0; c < kernel.cols(); ++c) {
      CMatrix img = CMatrix::Zero(space.dim(), space.dim());
      for (int w = 0; w < n * n; ++w) img += kernel(w, c) * dwords[w];
      junk.push_back(img);
    }
    return OperatorSpace::span(space.dim(), space.dim(), junk).rank();
  }
};

}  // namespace fintriple::testing

#endif
