#include "fintriple/forms.hpp"

namespace fintriple {

namespace {

CMatrix bracket(const TripleSpace& space, const CMatrix& d,
                const AlgebraElement& a) {
  const CMatrix p = space.rep_left(a);
  return d * p - p * d;
}

std::vector<CMatrix> basis_reps(const TripleSpace& space) {
  std::vector<CMatrix> reps;
  for (const auto& e : element_basis(space.algebra()))
    reps.push_back(space.rep_left(e));
  return reps;
}

bool real_span(const TripleSpace& space) {
  return space.algebra().base() == BaseField::Real;
}

}  // namespace

CMatrix pi_one_form(const TripleSpace& space, const CMatrix& d,
                    const UniversalOneForm& form) {
  CMatrix out = CMatrix::Zero(space.dim(), space.dim());
  for (const auto& term : form.terms)
    out += term.coeff * space.rep_left(term.a) * bracket(space, d, term.b);
  return out;
}

CMatrix pi_two_word(const TripleSpace& space, const CMatrix& d,
                    const AlgebraElement& a, const AlgebraElement& b,
                    const AlgebraElement& c) {
  return space.rep_left(a) * bracket(space, d, b) * bracket(space, d, c);
}

CMatrix pi_word(const TripleSpace& space, const CMatrix& d,
                const std::vector<AlgebraElement>& word) {
  if (word.empty() || word.size() > 3)
    throw Error(ErrorCode::DegreeUnsupported,
                "words carry degree zero, one or two");
  CMatrix out = space.rep_left(word.front());
  for (size_t i = 1; i < word.size(); ++i) out = out * bracket(space, d, word[i]);
  return out;
}

XiData xi(const TripleSpace& space, const CMatrix& d) {
  const auto& alg = space.algebra();
  const int k = alg.num_summands();
  XiData data;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      data.form.terms.push_back({Complex(1, 0), central_projection(alg, i),
                                 central_projection(alg, j)});
    }

  data.pi_xi = CMatrix::Zero(space.dim(), space.dim());
  std::vector<CMatrix> row(k);
  for (int i = 0; i < k; ++i) row[i] = space.summand_row_projector(i);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) data.pi_xi += row[i] * d * row[j];

  data.pi_xi_squared = data.pi_xi * data.pi_xi;
  data.pi_big_xi = CMatrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < k; ++i)
    data.pi_big_xi += row[i] * data.pi_xi_squared * row[i];

  data.selfadjoint_residual = max_norm(data.pi_xi - data.pi_xi.adjoint());
  for (int i = 0; i < k; ++i)
    data.corner_residual =
        std::max(data.corner_residual, max_norm(row[i] * data.pi_xi * row[i]));

  for (const auto& e : element_basis(alg)) {
    const CMatrix p = space.rep_left(e);
    data.inner_derivation_residual =
        std::max(data.inner_derivation_residual,
                 max_norm((data.pi_xi * p - p * data.pi_xi) - bracket(space, d, e)));
  }
  const AntilinearOperator J = space.real_structure();
  data.reconstruction_residual =
      max_norm(d - data.pi_xi - J.sandwich(data.pi_xi));
  return data;
}

OperatorSpace one_forms(const TripleSpace& space, const CMatrix& d) {
  const auto reps = basis_reps(space);
  std::vector<CMatrix> brackets;
  for (const auto& p : reps) brackets.push_back(d * p - p * d);
  std::vector<CMatrix> ops;
  ops.reserve(reps.size() * reps.size());
  for (const auto& p : reps)
    for (const auto& br : brackets) ops.push_back(p * br);
  return OperatorSpace::span(space.dim(), space.dim(), ops, real_span(space));
}

OperatorSpace junk_two_forms(const TripleSpace& space, const CMatrix& d) {
  const auto reps = basis_reps(space);
  const int K = static_cast<int>(reps.size());
  std::vector<CMatrix> brackets;
  for (const auto& p : reps) brackets.push_back(d * p - p * d);

  const int n2 = space.dim() * space.dim();
  std::vector<CMatrix> junk_gens;
  if (real_span(space)) {
    RMatrix words(2 * n2, K * K);
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b) {
        const CVector v = vectorize(reps[a] * brackets[b]);
        words.col(a * K + b).head(n2) = v.real();
        words.col(a * K + b).tail(n2) = v.imag();
      }
    const RMatrix kernel = nullspace_basis(words);
    for (int c = 0; c < kernel.cols(); ++c) {
      CMatrix img = CMatrix::Zero(space.dim(), space.dim());
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
          img += kernel(a * K + b, c) * brackets[a] * brackets[b];
      junk_gens.push_back(img);
    }
  } else {
    CMatrix words(n2, K * K);
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b)
        words.col(a * K + b) = vectorize(reps[a] * brackets[b]);
    const CMatrix kernel = nullspace_basis(words);
    for (int c = 0; c < kernel.cols(); ++c) {
      CMatrix img = CMatrix::Zero(space.dim(), space.dim());
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
          img += kernel(a * K + b, c) * brackets[a] * brackets[b];
      junk_gens.push_back(img);
    }
  }
  return OperatorSpace::span(space.dim(), space.dim(), junk_gens,
                             real_span(space));
}

TwoFormRanks two_forms(const TripleSpace& space, const CMatrix& d) {
  const auto reps = basis_reps(space);
  std::vector<CMatrix> brackets;
  for (const auto& p : reps) brackets.push_back(d * p - p * d);

  // Span of pi over degree-2 words, factored through a basis of the
  // degree-1 image to keep the generator count down.
  std::vector<CMatrix> degree1;
  for (const auto& p : reps)
    for (const auto& br : brackets) degree1.push_back(p * br);
  const OperatorSpace omega1 =
      OperatorSpace::span(space.dim(), space.dim(), degree1, real_span(space));
  std::vector<CMatrix> degree2;
  for (const auto& w : omega1.basis())
    for (const auto& br : brackets) degree2.push_back(w * br);
  const OperatorSpace universal =
      OperatorSpace::span(space.dim(), space.dim(), degree2, real_span(space));

  const OperatorSpace junk = junk_two_forms(space, d);
  TwoFormRanks ranks;
  ranks.universal_rank = universal.rank();
  ranks.junk_rank = junk.rank();
  ranks.omega2_dim = ranks.universal_rank - ranks.junk_rank;
  ranks.junk_inside_residual = universal.subspace_residual(junk);
  return ranks;
}

InnerCheck inner_check(const TripleSpace& space, const CMatrix& d, double tol) {
  const XiData data = xi(space, d);
  InnerCheck check;
  const int k = space.algebra().num_summands();
  for (int i = 0; i < k; ++i) {
    const CMatrix p = space.summand_row_projector(i);
    check.center_commutator_residual =
        std::max(check.center_commutator_residual,
                 max_norm(data.pi_xi_squared * p - p * data.pi_xi_squared));
  }
  check.xi_square_vs_big_xi = max_norm(data.pi_xi_squared - data.pi_big_xi);
  const bool a_small = check.center_commutator_residual <= tol;
  const bool b_small = check.xi_square_vs_big_xi <= tol;
  const bool a_large = check.center_commutator_residual >= 10 * tol;
  const bool b_large = check.xi_square_vs_big_xi >= 10 * tol;
  check.gray_zone = (!a_small && !a_large) || (!b_small && !b_large);
  check.criteria_agree = (a_small && b_small) || (a_large && b_large);
  check.is_inner = a_small && b_small;
  return check;
}

double dxi_identity_residual(const TripleSpace& space, const CMatrix& d) {
  const auto& alg = space.algebra();
  const int k = alg.num_summands();
  CMatrix pi_dxi = CMatrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < k; ++i) {
    const CMatrix br = bracket(space, d, central_projection(alg, i));
    pi_dxi -= br * br;
  }
  const XiData data = xi(space, d);
  const CMatrix rhs = data.pi_xi_squared + data.pi_big_xi;
  const OperatorSpace junk = junk_two_forms(space, d);
  return junk.projection_residual(pi_dxi - rhs);
}

double curvature_flat_residual(const TripleSpace& space, const CMatrix& d,
                               double tol) {
  const InnerCheck check = inner_check(space, d, tol);
  if (!check.is_inner)
    throw Error(ErrorCode::NotInner,
                "curvature is only defined for an inner calculus");
  const auto& alg = space.algebra();
  const int k = alg.num_summands();
  CMatrix pi_dxi = CMatrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < k; ++i) {
    const CMatrix br = bracket(space, d, central_projection(alg, i));
    pi_dxi -= br * br;
  }
  const XiData data = xi(space, d);
  // F(-2 xi) = d(-2 xi) + (-2 xi)(-2 xi).
  const CMatrix curvature = -2.0 * pi_dxi + 4.0 * data.pi_xi_squared;
  const OperatorSpace junk = junk_two_forms(space, d);
  return junk.projection_residual(curvature);
}

int center_one_forms(const TripleSpace& space, const CMatrix& d) {
  const OperatorSpace omega1 = one_forms(space, d);
  if (omega1.rank() == 0) return 0;
  const auto reps = basis_reps(space);
  const int n2 = space.dim() * space.dim();
  const int r = omega1.rank();
  if (real_span(space)) {
    RMatrix system(2 * n2 * static_cast<int>(reps.size()), r);
    for (size_t a = 0; a < reps.size(); ++a)
      for (int b = 0; b < r; ++b) {
        const CVector v =
            vectorize(omega1.basis()[b] * reps[a] - reps[a] * omega1.basis()[b]);
        system.col(b).segment(2 * n2 * static_cast<int>(a), n2) = v.real();
        system.col(b).segment(2 * n2 * static_cast<int>(a) + n2, n2) = v.imag();
      }
    return r - numerical_rank(system);
  }
  CMatrix system(n2 * static_cast<int>(reps.size()), r);
  for (size_t a = 0; a < reps.size(); ++a)
    for (int b = 0; b < r; ++b)
      system.col(b).segment(n2 * static_cast<int>(a), n2) = vectorize(
          omega1.basis()[b] * reps[a] - reps[a] * omega1.basis()[b]);
  return r - numerical_rank(system);
}

Complex form_inner_product(const TripleSpace& space, const CMatrix& d,
                           const UniversalOneForm& omega,
                           const UniversalOneForm& rho,
                           const std::optional<CMatrix>& weight, double tol) {
  CMatrix z = weight.value_or(CMatrix::Identity(space.dim(), space.dim()));
  if (z.rows() != space.dim() || z.cols() != space.dim())
    throw Error(ErrorCode::InvalidWeight, "weight dimension mismatch");
  if (max_norm(z - z.adjoint()) > tol)
    throw Error(ErrorCode::InvalidWeight, "weight must be self-adjoint");
  for (const auto& e : element_basis(space.algebra())) {
    const CMatrix p = space.rep_left(e);
    if (max_norm(z * p - p * z) > tol * std::max(1.0, max_norm(p)))
      throw Error(ErrorCode::InvalidWeight,
                  "weight must be invariant under algebra unitaries");
  }
  const CMatrix pw = pi_one_form(space, d, omega);
  const CMatrix pr = pi_one_form(space, d, rho);
  return (z * pw * pr.adjoint()).trace();
}

}  // namespace fintriple
