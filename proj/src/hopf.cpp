#include "fintriple/hopf.hpp"

#include <cmath>

namespace fintriple {

FiniteGroup FiniteGroup::make(std::vector<std::string> names,
                              std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0 || static_cast<int>(names.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "names must match the table size");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::SizeMismatch, "multiplication table must be square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error(ErrorCode::SizeMismatch, "table entry out of range");
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n; ++g)
      ok = ok && table[e][g] == g && table[g][e] == g;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
  std::vector<int> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) inverse[g] = h;
    if (inverse[g] < 0)
      throw Error(ErrorCode::NoInverse, "element without inverse");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          throw Error(ErrorCode::NotAssociative, "multiplication table violates associativity");
  FiniteGroup group;
  group.names_ = std::move(names);
  group.table_ = std::move(table);
  group.identity_ = identity;
  group.inverse_ = std::move(inverse);
  return group;
}

std::vector<int> FiniteGroup::conjugacy_class_of(int g) const {
  std::vector<bool> in(order(), false);
  for (int h = 0; h < order(); ++h) in[mult(mult(h, g), inverse(h))] = true;
  std::vector<int> out;
  for (int x = 0; x < order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(order(), false);
  for (int g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    auto cls = conjugacy_class_of(g);
    for (int x : cls) seen[x] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteGroup s3() {
  // a, b transpositions, c = aba, ab and ba the three-cycles.
  return FiniteGroup::make(
      {"e", "a", "b", "c", "ab", "ba"},
      {{0, 1, 2, 3, 4, 5},
       {1, 0, 4, 5, 2, 3},
       {2, 5, 0, 4, 3, 1},
       {3, 4, 5, 0, 1, 2},
       {4, 3, 1, 2, 5, 0},
       {5, 2, 3, 1, 0, 4}});
}

GroupRep GroupRep::make(const FiniteGroup& group, std::vector<CMatrix> mats,
                        double tol) {
  if (static_cast<int>(mats.size()) != group.order())
    throw Error(ErrorCode::SizeMismatch, "one matrix per group element");
  GroupRep rep;
  rep.dim = static_cast<int>(mats.front().rows());
  rep.mats = std::move(mats);
  for (const auto& m : rep.mats)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw Error(ErrorCode::ShapeMismatch, "representation matrices must share a size");
  if (max_norm(rep.mats[group.identity()] - CMatrix::Identity(rep.dim, rep.dim)) > tol)
    throw Error(ErrorCode::ShapeMismatch, "identity must map to the unit matrix");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      if (max_norm(rep.mats[g] * rep.mats[h] - rep.mats[group.mult(g, h)]) > tol)
        throw Error(ErrorCode::ShapeMismatch, "matrices do not represent the group");
  return rep;
}

namespace {

// Build a representation from generator images along words in a, b.
std::vector<CMatrix> from_s3_generators(const CMatrix& ma, const CMatrix& mb) {
  const CMatrix id = CMatrix::Identity(ma.rows(), ma.cols());
  return {id, ma, mb, ma * mb * ma, ma * mb, mb * ma};
}

}  // namespace

std::vector<GroupRep> s3_irreps() {
  const FiniteGroup group = s3();
  const double h = std::sqrt(3.0) / 2.0;
  CMatrix ta(1, 1), tb(1, 1), sa(1, 1), sb(1, 1);
  ta << 1; tb << 1;
  sa << -1; sb << -1;
  CMatrix da(2, 2), db(2, 2);
  da << 1, 0, 0, -1;
  db << -0.5, h, h, 0.5;
  return {GroupRep::make(group, from_s3_generators(ta, tb)),
          GroupRep::make(group, from_s3_generators(sa, sb)),
          GroupRep::make(group, from_s3_generators(da, db))};
}

HaarMeasure haar_measure(const FiniteGroup& group) {
  HaarMeasure mu;
  mu.identity = group.identity();
  // (id (x) mu) Delta g = mu(g) g equals mu(g) 1 exactly on every generator;
  // the residual is kept for the report.
  double r = 0.0;
  for (int g = 0; g < group.order(); ++g) {
    CVector lhs = CVector::Zero(group.order());
    lhs(g) = (g == mu.identity) ? 1.0 : 0.0;
    CVector rhs = CVector::Zero(group.order());
    rhs(mu.identity) = (g == mu.identity) ? 1.0 : 0.0;
    r = std::max(r, (lhs - rhs).norm());
  }
  mu.invariance_residual = r;
  return mu;
}

BicovariantCalculus BicovariantCalculus::make(FiniteGroup group, GroupRep rep,
                                              CVector v, double tol) {
  if (v.size() != rep.dim)
    throw Error(ErrorCode::ShapeMismatch, "generating vector dimension mismatch");
  CMatrix span(rep.dim, group.order());
  for (int h = 0; h < group.order(); ++h) span.col(h) = v - rep.at(h) * v;
  if (numerical_rank(span, tol) != rep.dim)
    throw Error(ErrorCode::SpanConditionFailed,
                "differentials do not generate the representation space");
  BicovariantCalculus c;
  c.group_ = std::move(group);
  c.rep_ = std::move(rep);
  c.v_ = std::move(v);
  return c;
}

BicovariantCalculus bicovariant_calculus(const FiniteGroup& group,
                                         const GroupRep& rep, const CVector& v) {
  return BicovariantCalculus::make(group, rep, v);
}

GroupAlgebraForm BicovariantCalculus::zero_form() const {
  GroupAlgebraForm w;
  w.coeffs.assign(group_.order(), CVector::Zero(rep_.dim));
  return w;
}

GroupAlgebraForm BicovariantCalculus::differential_of(int g) const {
  GroupAlgebraForm w = zero_form();
  w.coeffs[g] = rep_.at(g) * v_ - v_;
  return w;
}

GroupAlgebraForm BicovariantCalculus::differential(const CVector& coeffs) const {
  GroupAlgebraForm w = zero_form();
  for (int g = 0; g < group_.order(); ++g)
    w.coeffs[g] = coeffs(g) * (rep_.at(g) * v_ - v_);
  return w;
}

GroupAlgebraForm BicovariantCalculus::left_mult(int g,
                                                const GroupAlgebraForm& w) const {
  GroupAlgebraForm out = zero_form();
  for (int h = 0; h < group_.order(); ++h)
    out.coeffs[group_.mult(g, h)] += rep_.at(g) * w.coeffs[h];
  return out;
}

GroupAlgebraForm BicovariantCalculus::right_mult(const GroupAlgebraForm& w,
                                                 int g) const {
  GroupAlgebraForm out = zero_form();
  for (int h = 0; h < group_.order(); ++h)
    out.coeffs[group_.mult(h, g)] += w.coeffs[h];
  return out;
}

double BicovariantCalculus::leibniz_residual() const {
  double worst = 0.0;
  for (int g = 0; g < group_.order(); ++g)
    for (int h = 0; h < group_.order(); ++h) {
      GroupAlgebraForm lhs = differential_of(group_.mult(g, h));
      GroupAlgebraForm rhs = right_mult(differential_of(g), h);
      const GroupAlgebraForm gdh = left_mult(g, differential_of(h));
      for (int x = 0; x < group_.order(); ++x)
        lhs.coeffs[x] -= rhs.coeffs[x] + gdh.coeffs[x];
      worst = std::max(worst, lhs.norm());
    }
  return worst;
}

InnerChi inner_chi(const BicovariantCalculus& calculus) {
  const FiniteGroup& group = calculus.group();
  InnerChi result;
  result.chi = calculus.zero_form();
  for (int h = 0; h < group.order(); ++h) {
    const GroupAlgebraForm term =
        calculus.left_mult(group.inverse(h), calculus.differential_of(h));
    for (int x = 0; x < group.order(); ++x)
      result.chi.coeffs[x] -= term.coeffs[x] / double(group.order());
  }
  for (int g = 0; g < group.order(); ++g) {
    GroupAlgebraForm commutator = calculus.left_mult(g, result.chi);
    const GroupAlgebraForm cg = calculus.right_mult(result.chi, g);
    for (int x = 0; x < group.order(); ++x)
      commutator.coeffs[x] -= cg.coeffs[x];
    GroupAlgebraForm dg = calculus.differential_of(g);
    for (int x = 0; x < group.order(); ++x)
      dg.coeffs[x] -= commutator.coeffs[x];
    result.residual = std::max(result.residual, dg.norm());
  }
  return result;
}

std::vector<GroupAlgebraForm> calculus_center(const FiniteGroup& group,
                                              const GroupRep& rep) {
  const int n = group.order();
  const int dv = rep.dim;
  // Unknowns: stacked v_g; equations pi(h) v_g = v_{h g h^-1}.
  CMatrix system(n * n * dv, n * dv);
  system.setZero();
  int row = 0;
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      const int target = group.mult(group.mult(h, g), group.inverse(h));
      system.block(row, g * dv, dv, dv) += rep.at(h);
      system.block(row, target * dv, dv, dv) -= CMatrix::Identity(dv, dv);
      row += dv;
    }
  const CMatrix kernel = nullspace_basis(system);
  std::vector<GroupAlgebraForm> basis;
  for (int c = 0; c < kernel.cols(); ++c) {
    GroupAlgebraForm w;
    for (int g = 0; g < n; ++g) w.coeffs.push_back(kernel.col(c).segment(g * dv, dv));
    basis.push_back(std::move(w));
  }
  return basis;
}

BicovarianceReport fn_algebra_bicovariance(const TripleSpace& space,
                                           const CMatrix& d,
                                           const FiniteGroup& group,
                                           double tol) {
  const auto& alg = space.algebra();
  if (alg.base() != BaseField::Complex ||
      alg.num_summands() != group.order())
    throw Error(ErrorCode::SizeMismatch,
                "need a commutative triple with one point per group element");
  for (const auto& s : alg.summands())
    if (s.n != 1)
      throw Error(ErrorCode::SizeMismatch, "function algebra points must be one-dimensional");

  const int n = group.order();
  BicovarianceReport report;
  std::vector<bool> nonzero(n, false);
  for (int g = 0; g < n; ++g) {
    if (g == group.identity()) continue;
    ChiReport chi;
    chi.g = g;
    chi.name = group.name(g);
    for (int i = 0; i < n; ++i) {
      const int src = group.mult(i, group.inverse(g));
      bool hit = false;
      for (int j = 0; j < n; ++j) {
        if (space.multiplicity(i, j) == 0 || space.multiplicity(src, j) == 0)
          continue;
        const CMatrix block =
            d.block(space.subspace_offset(i, j), space.subspace_offset(src, j),
                    space.subspace_dim(i, j), space.subspace_dim(src, j));
        if (max_norm(block) > tol) hit = true;
      }
      if (hit) chi.rows_hit.push_back(i);
    }
    chi.chi_nonzero = !chi.rows_hit.empty();
    chi.uniform = chi.rows_hit.empty() || static_cast<int>(chi.rows_hit.size()) == n;
    nonzero[g] = chi.chi_nonzero;
    report.per_element.push_back(std::move(chi));
  }
  report.bicovariant = true;
  for (const auto& chi : report.per_element)
    report.bicovariant = report.bicovariant && chi.uniform;
  report.class_closed = true;
  for (int g = 0; g < n; ++g) {
    if (g == group.identity() || !nonzero[g]) continue;
    for (int x : group.conjugacy_class_of(g))
      if (!nonzero[x]) report.class_closed = false;
  }
  return report;
}

HaarWeight haar_weight_operator(const TripleSpace& space,
                                const FiniteGroup& group,
                                const std::vector<AlgebraElement>& iso,
                                double tol) {
  const auto& alg = space.algebra();
  if (static_cast<int>(iso.size()) != group.order())
    throw Error(ErrorCode::SizeMismatch, "one algebra element per group element");
  const double strict = 1e-12;
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      if ((iso[g] * iso[h] - iso[group.mult(g, h)]).norm() > strict)
        throw Error(ErrorCode::ShapeMismatch, "iso is not multiplicative");
  if ((iso[group.identity()] - AlgebraElement::identity(alg)).norm() > strict)
    throw Error(ErrorCode::ShapeMismatch, "iso must send the identity to 1");

  // Left-representation multiplicity of each label, and summand totals.
  const int k = alg.num_summands();
  std::vector<double> label_mult(alg.num_labels(), 0.0);
  for (int l = 0; l < alg.num_labels(); ++l)
    for (int m = 0; m < alg.num_labels(); ++m)
      label_mult[l] += space.multiplicity(l, m) * alg.label_dim(m);
  for (int i = 0; i < k; ++i) {
    double mi = 0.0;
    for (int l : alg.labels_of_summand(i)) mi += label_mult[l];
    if (mi <= 0.0)
      throw Error(ErrorCode::SingularSystem,
                  "a summand does not appear in the left representation");
  }

  // Tr(pi(P_i) pi(x)) = sum over labels of summand i of m_l tr(irrep_l(x)).
  CMatrix system(group.order(), k);
  CVector rhs = CVector::Zero(group.order());
  rhs(group.identity()) = 1.0;
  for (int g = 0; g < group.order(); ++g)
    for (int i = 0; i < k; ++i) {
      Complex entry = 0.0;
      for (int l : alg.labels_of_summand(i))
        entry += label_mult[l] * irrep_block(iso[g], alg.label(l)).trace();
      system(g, i) = entry;
    }
  Eigen::JacobiSVD<CMatrix> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (numerical_rank(system) < k)
    throw Error(ErrorCode::SingularSystem, "Haar weight system is rank deficient");
  const CVector z = svd.solve(rhs);
  if ((system * z - rhs).norm() > tol)
    throw Error(ErrorCode::SingularSystem, "no weights reproduce the Haar measure");

  HaarWeight weight;
  for (int i = 0; i < k; ++i) weight.weights.push_back(z(i).real());

  CMatrix pi_z = CMatrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < k; ++i)
    pi_z += weight.weights[i] * space.rep_left(central_projection(alg, i));
  for (int g = 0; g < group.order(); ++g) {
    const Complex tr = (pi_z * space.rep_left(iso[g])).trace();
    const double expected = (g == group.identity()) ? 1.0 : 0.0;
    weight.trace_residual =
        std::max(weight.trace_residual, std::abs(tr - expected));
  }
  return weight;
}

std::pair<AlgebraSpec, std::vector<AlgebraElement>> wedderburn_iso_s3() {
  AlgebraSpec spec = make_algebra(
      BaseField::Complex,
      {{2, FieldKind::Complex}, {1, FieldKind::Complex}, {1, FieldKind::Complex}});
  const double h = std::sqrt(3.0) / 2.0;
  AlgebraElement ia = AlgebraElement::zero(spec);
  ia.block(0) << 1, 0, 0, -1;
  ia.block(1) << 1;
  ia.block(2) << -1;
  AlgebraElement ib = AlgebraElement::zero(spec);
  ib.block(0) << -0.5, h, h, 0.5;
  ib.block(1) << 1;
  ib.block(2) << -1;
  std::vector<AlgebraElement> iso = {AlgebraElement::identity(spec),
                                     ia,
                                     ib,
                                     ia * ib * ia,
                                     ia * ib,
                                     ib * ia};
  return {spec, iso};
}

NoGoReport no_go_check(double tol) {
  const FiniteGroup group = s3();
  const auto irreps = s3_irreps();
  NoGoReport report;

  // Two-dimensional bicovariant calculus and its central one-forms.
  CVector v(2);
  v << 1.0, -std::sqrt(3.0);
  const BicovariantCalculus calculus = bicovariant_calculus(group, irreps[2], v);
  const auto center = calculus_center(group, irreps[2]);
  report.two_dim_center_dim = static_cast<int>(center.size());

  // The closed-form central combination (2a - b - c) chi^2 + (2b - a - c) chi^1
  // with chi^1 = a da, chi^2 = b db.
  const int a = 1, b = 2, c = 3;
  const GroupAlgebraForm chi1 = calculus.left_mult(a, calculus.differential_of(a));
  const GroupAlgebraForm chi2 = calculus.left_mult(b, calculus.differential_of(b));
  GroupAlgebraForm canonical = calculus.zero_form();
  auto accumulate = [&](const GroupAlgebraForm& base, int g, double w) {
    const GroupAlgebraForm term = calculus.left_mult(g, base);
    for (int x = 0; x < group.order(); ++x)
      canonical.coeffs[x] += w * term.coeffs[x];
  };
  accumulate(chi2, a, 2.0); accumulate(chi2, b, -1.0); accumulate(chi2, c, -1.0);
  accumulate(chi1, b, 2.0); accumulate(chi1, a, -1.0); accumulate(chi1, c, -1.0);

  // Distance from the computed center (stacked-coefficient projection).
  const int dv = irreps[2].dim;
  CMatrix basis(group.order() * dv, std::max<int>(1, report.two_dim_center_dim));
  basis.setZero();
  for (size_t i = 0; i < center.size(); ++i)
    for (int g = 0; g < group.order(); ++g)
      basis.col(static_cast<int>(i)).segment(g * dv, dv) = center[i].coeffs[g];
  CVector target(group.order() * dv);
  for (int g = 0; g < group.order(); ++g)
    target.segment(g * dv, dv) = canonical.coeffs[g];
  if (report.two_dim_center_dim > 0) {
    const CMatrix q = colspace_basis(basis);
    report.canonical_center_match_residual =
        (target - q * (q.adjoint() * target)).norm() / target.norm();
  } else {
    report.canonical_center_match_residual = 1.0;
  }

  // One-dimensional calculus: differentials of the three-cycles vanish.
  CVector one(1);
  one << 1.0;
  const BicovariantCalculus sign_calc = bicovariant_calculus(group, irreps[1], one);
  report.one_dim_dab_norm = sign_calc.differential_of(4).norm();
  report.one_dim_dba_norm = sign_calc.differential_of(5).norm();

  // Spectral-triple side: the group algebra triple has no central one-forms.
  IMatrix q(3, 3);
  q << 0, 1, 0, 1, 0, -1, 0, -1, 1;
  const TripleSpace space =
      TripleSpace::build(wedderburn_iso_s3().first, q);
  const CMatrix d = random_dirac(space, 7).matrix;
  report.spectral_center_dim = center_one_forms(space, d);

  report.incompatible =
      report.two_dim_center_dim >= 1 && report.spectral_center_dim == 0 &&
      report.canonical_center_match_residual <= tol;
  return report;
}

}  // namespace fintriple
