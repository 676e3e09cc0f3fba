#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "fintriple/catalog.hpp"
#include "fintriple/random.hpp"

using namespace fintriple;

namespace {

TripleSpace cs3_space() { return fixture("cs3_minimal").build_space(); }

IMatrix cs3_q() {
  IMatrix q(3, 3);
  q << 0, 1, 0, 1, 0, -1, 0, -1, 1;
  return q;
}

}  // namespace

TEST_CASE("build_space dimensions") {
  CHECK(cs3_space().dim() == 7);

  // Single summand M_n(C) with multiplicity one on the diagonal.
  IMatrix q1(1, 1);
  q1 << 1;
  const AlgebraSpec mn = make_algebra(BaseField::Complex, {{3, FieldKind::Complex}});
  CHECK(TripleSpace::build(mn, q1).dim() == 9);

  CHECK(fixture("s3_fn_universal").build_space().dim() == 36);
}

TEST_CASE("build_space rejects bad data") {
  const AlgebraSpec alg = make_algebra(
      BaseField::Complex, {{1, FieldKind::Complex}, {1, FieldKind::Complex}});
  IMatrix asym(2, 2);
  asym << 0, 1, -1, 0;
  CHECK_THROWS_AS(TripleSpace::build(alg, asym), Error);

  IMatrix unfaithful(2, 2);
  unfaithful << 1, 0, 0, 0;
  try {
    TripleSpace::build(alg, unfaithful);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnfaithfulRepresentation);
  }

  IMatrix wrong_size(1, 1);
  wrong_size << 1;
  CHECK_THROWS_AS(TripleSpace::build(alg, wrong_size), Error);
}

TEST_CASE("rep_left basics and block structure") {
  const TripleSpace space = cs3_space();
  const auto& alg = space.algebra();
  CHECK(max_norm(space.rep_left(AlgebraElement::identity(alg)) -
                 CMatrix::Identity(7, 7)) == doctest::Approx(0.0));

  // Central projections project onto the row subspaces.
  for (int i = 0; i < 3; ++i) {
    const CMatrix p = space.rep_left(central_projection(alg, i));
    CHECK(max_norm(p * p - p) == doctest::Approx(0.0));
    CHECK(max_norm(p - space.summand_row_projector(i)) == doctest::Approx(0.0));
  }

  // The generator image acts through its M_2 block on the (0,1) subspace
  // only; cross-checked against a direct Kronecker-product assembly.
  const auto iso = fixture("cs3_minimal").iso;
  const AlgebraElement a = iso[1];
  const CMatrix rep = space.rep_left(a);
  CMatrix expected = CMatrix::Zero(7, 7);
  expected.block(space.subspace_offset(0, 1), space.subspace_offset(0, 1), 2, 2) =
      Eigen::kroneckerProduct(a.block(0), CMatrix::Identity(1, 1));
  expected.block(space.subspace_offset(1, 0), space.subspace_offset(1, 0), 2, 2) =
      a.block(1)(0, 0) * CMatrix::Identity(2, 2);
  expected(space.subspace_offset(1, 2), space.subspace_offset(1, 2)) = a.block(1)(0, 0);
  expected(space.subspace_offset(2, 1), space.subspace_offset(2, 1)) = a.block(2)(0, 0);
  expected(space.subspace_offset(2, 2), space.subspace_offset(2, 2)) = a.block(2)(0, 0);
  CHECK(max_norm(rep - expected) == doctest::Approx(0.0));
}

TEST_CASE("rep_right: opposite action, commutation, projections") {
  const TripleSpace space = cs3_space();
  const auto& alg = space.algebra();
  CHECK(max_norm(space.rep_right(AlgebraElement::identity(alg)) -
                 CMatrix::Identity(7, 7)) == doctest::Approx(0.0));

  const auto basis = element_basis(alg);
  const AntilinearOperator J = space.real_structure();
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement a = AlgebraElement::zero(alg), b = AlgebraElement::zero(alg);
    for (const auto& e : basis) {
      a = a + e * rng.complex_gaussian();
      b = b + e * rng.complex_gaussian();
    }
    const CMatrix ra = space.rep_right(a);
    const CMatrix lb = space.rep_left(b);
    CHECK(max_norm(ra * lb - lb * ra) < 1e-12);
    CHECK(max_norm(ra - J.sandwich(space.rep_left(a.adjoint()))) < 1e-12);
  }

  // rep_right of a central projection projects onto the column subspaces.
  for (int j = 0; j < 3; ++j) {
    const CMatrix p = space.rep_right(central_projection(alg, j));
    CMatrix expected = CMatrix::Zero(7, 7);
    for (int i = 0; i < 3; ++i) {
      if (space.multiplicity(i, j) == 0) continue;
      const int off = space.subspace_offset(i, j);
      for (int t = 0; t < space.subspace_dim(i, j); ++t)
        expected(off + t, off + t) = 1.0;
    }
    CHECK(max_norm(p - expected) == doctest::Approx(0.0));
  }
}

TEST_CASE("real structure maps subspaces crosswise and squares to one") {
  const TripleSpace space = cs3_space();
  const AntilinearOperator J = space.real_structure();
  CHECK(max_norm(J.u * J.u.conjugate() - CMatrix::Identity(7, 7)) ==
        doctest::Approx(0.0));

  // Diagonal-corner basis vectors are fixed points; exactly one exists here.
  int fixed = 0;
  for (int v = 0; v < space.dim(); ++v) {
    const BasisLabel& l = space.basis()[v];
    CVector e = CVector::Zero(7);
    e(v) = 1.0;
    if ((J.apply(e) - e).norm() < 1e-15) {
      ++fixed;
      CHECK(l.i == 2);
      CHECK(l.j == 2);
    }
  }
  CHECK(fixed == 1);

  // J maps the (i,j) subspace onto (j,i).
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (space.multiplicity(i, j) == 0) continue;
      for (int t = 0; t < space.subspace_dim(i, j); ++t) {
        CVector e = CVector::Zero(7);
        e(space.subspace_offset(i, j) + t) = 1.0;
        const CVector je = J.apply(e);
        for (int w = 0; w < space.dim(); ++w)
          if (std::abs(je(w)) > 1e-15) {
            CHECK(space.basis()[w].i == j);
            CHECK(space.basis()[w].j == i);
          }
      }
    }
}

TEST_CASE("grading signs follow the Krajewski data") {
  const TripleSpace space = cs3_space();
  const CMatrix g = space.grading();
  CHECK(space.gamma_sign(1, 2) == -1);
  CHECK(space.gamma_sign(2, 1) == -1);
  CHECK(space.gamma_sign(0, 1) == 1);
  CHECK(space.gamma_sign(1, 0) == 1);
  CHECK(space.gamma_sign(2, 2) == 1);
  CHECK(max_norm(g * g - CMatrix::Identity(7, 7)) == doctest::Approx(0.0));
  CHECK(max_norm(g - g.adjoint()) == doctest::Approx(0.0));

  const AntilinearOperator J = space.real_structure();
  CHECK(max_norm(g * J.u - J.u * g.conjugate()) == doctest::Approx(0.0));
  Rng rng(3);
  const auto basis = element_basis(space.algebra());
  AlgebraElement a = AlgebraElement::zero(space.algebra());
  for (const auto& e : basis) a = a + e * rng.complex_gaussian();
  const CMatrix la = space.rep_left(a);
  CHECK(max_norm(g * la - la * g) == doctest::Approx(0.0));
}

TEST_CASE("validate_axioms passes on the catalog and fails a corrupted J") {
  const AxiomReport good = cs3_space().validate_axioms();
  CHECK(good.all_pass());

  // Swapping two columns of the unitary part breaks J^2 = 1.
  const TripleSpace space = cs3_space();
  AntilinearOperator J = space.real_structure();
  CMatrix u = J.u;
  u.col(0).swap(u.col(1));
  CHECK(max_norm(u * u.conjugate() - CMatrix::Identity(7, 7)) > 0.5);
}

TEST_CASE("axioms hold on random Krajewski data") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const TripleSpace space = random_triple(rng, 3, 2, 2, 60);
    CHECK(space.validate_axioms().all_pass());
    int dim = 0;
    for (int i = 0; i < space.num_labels(); ++i)
      for (int j = 0; j < space.num_labels(); ++j)
        dim += space.multiplicity(i, j) * space.algebra().label_dim(i) *
               space.algebra().label_dim(j);
    CHECK(dim == space.dim());
  }
}

TEST_CASE("axioms hold on a real-base algebra with all three fields") {
  const AlgebraSpec alg = make_algebra(BaseField::Real,
                                       {{1, FieldKind::Quaternion},
                                        {1, FieldKind::Complex},
                                        {2, FieldKind::Real}});
  // Labels: H, C plain, C conjugate, R.
  IMatrix q(4, 4);
  q << 0, 1, 0, -1,
       1, 1, 0, 0,
       0, 0, -1, 1,
      -1, 0, 1, 0;
  const TripleSpace space = TripleSpace::build(alg, q);
  CHECK(space.validate_axioms().all_pass());

  // Plain and conjugate irrep blocks are entrywise conjugate.
  AlgebraElement x = AlgebraElement::zero(alg);
  x.block(1)(0, 0) = Complex(0.3, -1.7);
  CHECK(max_norm(irrep_block(x, alg.label(1)).conjugate() -
                 irrep_block(x, alg.label(2))) == doctest::Approx(0.0));
}

TEST_CASE("krajewski data of the catalog matches the stored q") {
  const TripleSpace space = cs3_space();
  CHECK(space.q() == cs3_q());
}
