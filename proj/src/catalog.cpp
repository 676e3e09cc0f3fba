#include "fintriple/catalog.hpp"

#include <cmath>

namespace fintriple {

TripleSpace Fixture::build_space() const {
  if (!has_triple())
    throw Error(ErrorCode::UnknownFixture,
                name + " does not describe a spectral triple");
  return TripleSpace::build(*algebra, *q);
}

std::vector<std::string> catalog_names() {
  return {"cs3_minimal", "s3_fn_universal", "s3_fn_bicov2", "s3_irreps",
          "s3_wedderburn"};
}

namespace {

Fixture cs3_minimal() {
  Fixture f;
  f.name = "cs3_minimal";
  f.description =
      "Lowest-dimensional spectral triple over the S3 group algebra "
      "M_2(C) (+) C (+) C";
  auto [spec, iso] = wedderburn_iso_s3();
  f.algebra = spec;
  IMatrix q(3, 3);
  q << 0, 1, 0, 1, 0, -1, 0, -1, 1;
  f.q = q;
  // Balanced parameters x = 1, y = 1, z = sqrt(2): the squared canonical
  // one-form then lands in the represented algebra.
  CMatrix t1(2, 1), t2(1, 1);
  t1 << 1.0, 1.0;
  t2 << std::sqrt(2.0);
  f.dirac_params = {t1, t2};
  f.group = s3();
  f.iso = iso;
  f.expected_dim = 7;
  f.expected_intersection_form = q;
  f.expected_haar_weights = {1.0 / 3.0, 1.0 / 18.0, 1.0 / 12.0};
  return f;
}

Fixture s3_fn_universal() {
  Fixture f;
  f.name = "s3_fn_universal";
  f.description =
      "Function algebra on the six points of S3 whose generic Dirac operator "
      "induces the universal calculus";
  std::vector<Summand> summands(6, Summand{1, FieldKind::Complex});
  f.algebra = make_algebra(BaseField::Complex, summands);
  IMatrix q = IMatrix::Constant(6, 6, 1);
  for (int i = 0; i < 6; ++i) q(i, i) = -1;
  f.q = q;
  // Point order matches the group element order e, a, b, c, ab, ba.
  f.group = s3();
  f.expected_dim = 36;
  f.expected_intersection_form = q;
  return f;
}

Fixture s3_fn_bicov2() {
  Fixture f;
  f.name = "s3_fn_bicov2";
  f.description =
      "Function algebra on S3 with points ordered a, b, c, e, ab, ba whose "
      "calculus is generated by the two three-cycle forms";
  std::vector<Summand> summands(6, Summand{1, FieldKind::Complex});
  f.algebra = make_algebra(BaseField::Complex, summands);
  IMatrix q(6, 6);
  q << 1, 1, -1, 0, 0, 0,
       1, -1, 0, 0, 0, 0,
      -1, 0, 0, 0, 0, 0,
       0, 0, 0, 1, 1, -1,
       0, 0, 0, 1, -1, 0,
       0, 0, 0, -1, 0, 0;
  f.q = q;
  // Same group, relabeled so points follow the declaration order above.
  const FiniteGroup base = s3();
  const std::vector<int> order = {1, 2, 3, 0, 4, 5};  // a, b, c, e, ab, ba
  std::vector<int> position(6);
  for (int i = 0; i < 6; ++i) position[order[i]] = i;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) names.push_back(base.name(order[i]));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      table[i][j] = position[base.mult(order[i], order[j])];
  f.group = FiniteGroup::make(names, table);
  f.expected_dim = 12;
  f.expected_intersection_form = q;
  return f;
}

Fixture s3_irreps_fixture() {
  Fixture f;
  f.name = "s3_irreps";
  f.description = "The trivial, sign and two-dimensional representations of S3";
  f.group = s3();
  f.reps = s3_irreps();
  return f;
}

Fixture s3_wedderburn_fixture() {
  Fixture f;
  f.name = "s3_wedderburn";
  f.description =
      "Wedderburn isomorphism of the S3 group algebra with M_2(C) (+) C (+) C";
  auto [spec, iso] = wedderburn_iso_s3();
  f.algebra = spec;
  f.group = s3();
  f.iso = iso;
  return f;
}

}  // namespace

Fixture fixture(const std::string& name) {
  if (name == "cs3_minimal") return cs3_minimal();
  if (name == "s3_fn_universal") return s3_fn_universal();
  if (name == "s3_fn_bicov2") return s3_fn_bicov2();
  if (name == "s3_irreps") return s3_irreps_fixture();
  if (name == "s3_wedderburn") return s3_wedderburn_fixture();
  throw Error(ErrorCode::UnknownFixture, "no catalog entry named " + name);
}

}  // namespace fintriple
