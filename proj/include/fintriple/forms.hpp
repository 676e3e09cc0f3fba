#ifndef FINTRIPLE_FORMS_HPP
#define FINTRIPLE_FORMS_HPP

#include <optional>
#include <vector>

#include "fintriple/dirac.hpp"

namespace fintriple {

/// A universal one-form: a formal sum of words a db, kept as coefficient
/// pairs.  Its representation is sum_t c_t pi(a_t) [D, pi(b_t)].
struct UniversalOneForm {
  struct Term {
    Complex coeff;
    AlgebraElement a, b;
  };
  std::vector<Term> terms;

  static UniversalOneForm word(const AlgebraElement& a, const AlgebraElement& b) {
    return {{{Complex(1, 0), a, b}}};
  }
};

/// pi of a universal one-form under the Dirac operator d.
CMatrix pi_one_form(const TripleSpace& space, const CMatrix& d,
                    const UniversalOneForm& form);

/// pi(a db dc) = pi(a) [D, pi(b)] [D, pi(c)].
CMatrix pi_two_word(const TripleSpace& space, const CMatrix& d,
                    const AlgebraElement& a, const AlgebraElement& b,
                    const AlgebraElement& c);

/// pi of the word a0 da1 ... dan given as [a0, a1, ..., an].  Degrees above
/// two are not part of the calculus here.
CMatrix pi_word(const TripleSpace& space, const CMatrix& d,
                const std::vector<AlgebraElement>& word);

/// The distinguished one-form xi = sum_{i != j} P_i dP_j making the calculus
/// inner, its representation, and the row-compressed square Xi.
struct XiData {
  UniversalOneForm form;
  CMatrix pi_xi;
  CMatrix pi_xi_squared;
  CMatrix pi_big_xi;  // sum_i pi(P_i) pi(xi)^2 pi(P_i) over summands
  double inner_derivation_residual = 0.0;  // max_a |[pi(xi),pi(a)] - [D,pi(a)]|
  double reconstruction_residual = 0.0;    // |D - pi(xi) - J pi(xi) J|
  double selfadjoint_residual = 0.0;
  double corner_residual = 0.0;            // max_i |P_i pi(xi) P_i|
};

XiData xi(const TripleSpace& space, const CMatrix& d);

/// Span of pi(a db) over the element basis.
OperatorSpace one_forms(const TripleSpace& space, const CMatrix& d);

/// Junk two-forms: the span of pi(dw) over one-forms w with pi(w) = 0,
/// computed from the kernel of the degree-one representation over basis
/// words.
OperatorSpace junk_two_forms(const TripleSpace& space, const CMatrix& d);

struct TwoFormRanks {
  int universal_rank = 0;  // rank of pi over degree-2 words
  int junk_rank = 0;
  int omega2_dim = 0;      // universal_rank - junk_rank
  double junk_inside_residual = 0.0;  // junk must sit inside the image
};

TwoFormRanks two_forms(const TripleSpace& space, const CMatrix& d);

struct InnerCheck {
  double center_commutator_residual = 0.0;  // max_i |[pi(xi)^2, pi(P_i)]|
  double xi_square_vs_big_xi = 0.0;         // |pi(xi)^2 - pi(Xi)|
  bool is_inner = false;
  bool gray_zone = false;  // residuals straddle [tol, 10 tol); not asserted
  bool criteria_agree = false;
};

/// Both sides of the equivalence: pi(xi)^2 commutes with the image of the
/// center iff pi(xi)^2 = pi(Xi).  Evaluated independently and compared.
InnerCheck inner_check(const TripleSpace& space, const CMatrix& d,
                       double tol = kRankTol);

/// Residual of d xi = xi xi + sum_i P_i xi xi P_i against the junk space:
/// the difference of the two sides must be a junk two-form.
double dxi_identity_residual(const TripleSpace& space, const CMatrix& d);

/// Curvature of the connection one-form -2 xi, projected modulo junk.
/// Refuses when the calculus is not inner.
double curvature_flat_residual(const TripleSpace& space, const CMatrix& d,
                               double tol = kRankTol);

/// Dimension of the center of the one-form bimodule (expected 0).
int center_one_forms(const TripleSpace& space, const CMatrix& d);

/// Scalar product (w, r)_Z = Tr(Z pi(w) pi(r)^dag); Z defaults to the
/// identity and must be self-adjoint and invariant under algebra unitaries.
Complex form_inner_product(const TripleSpace& space, const CMatrix& d,
                           const UniversalOneForm& omega,
                           const UniversalOneForm& rho,
                           const std::optional<CMatrix>& weight = std::nullopt,
                           double tol = kRankTol);

}  // namespace fintriple

#endif
