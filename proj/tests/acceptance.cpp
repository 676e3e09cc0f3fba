// Acceptance suite: one verdict line per criterion, nonzero exit on any
// failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fintriple/catalog.hpp"
#include "fintriple/ktheory.hpp"
#include "fintriple/random.hpp"
#include "support.hpp"

using namespace fintriple;

namespace {

constexpr double kTol = 1e-9;

struct Runner {
  int failures = 0;

  void run(int number, const std::string& title,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d [%s] %s%s%s\n", number, ok ? "PASS" : "FAIL",
                title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

TripleSpace cs3_space() { return fixture("cs3_minimal").build_space(); }

CMatrix cs3_dirac(Complex x, Complex y, Complex z) {
  CMatrix t1(2, 1), t2(1, 1);
  t1 << x, y;
  t2 << z;
  return assemble(cs3_space(), {t1, t2}).matrix;
}

TripleSpace commutative(const IMatrix& q) {
  std::vector<Summand> summands(q.rows(), Summand{1, FieldKind::Complex});
  return TripleSpace::build(make_algebra(BaseField::Complex, summands), q);
}

bool criterion1(std::string& detail) {
  const TripleSpace space = cs3_space();
  if (space.dim() != 7) {
    detail = "dim != 7";
    return false;
  }
  const AxiomReport report = space.validate_axioms(kTol);
  if (!report.all_pass()) {
    detail = "axiom failure";
    return false;
  }
  int fixed = 0;
  bool in_33 = true;
  for (const BasisLabel& l : space.basis())
    if (l.i == l.j && l.a == l.b) {
      ++fixed;
      in_33 = in_33 && l.i == 2;
    }
  detail = "dim 7, axioms pass, " + std::to_string(fixed) + " J-fixed vector";
  return fixed == 1 && in_33;
}

bool criterion2(std::string& detail) {
  const TripleSpace space = cs3_space();
  const auto orbits = allowed_blocks(space);
  if (orbits.size() != 2) return false;
  const bool first = orbits[0].rep.ti == 0 && orbits[0].rep.tj == 1 &&
                     orbits[0].rep.si == 2 && orbits[0].rep.sj == 1;
  const bool second = orbits[1].rep.ti == 1 && orbits[1].rep.tj == 2 &&
                      orbits[1].rep.si == 2 && orbits[1].rep.sj == 2;
  const int dof = dof_count(space);
  const int brute = testing::brute_force_dirac_nullity(space);
  detail = "dof " + std::to_string(dof) + ", brute force " + std::to_string(brute);
  return first && second && dof == 6 && brute == 6;
}

bool criterion3(std::string& detail) {
  const TripleSpace space = cs3_space();
  const int h12 = space.subspace_offset(0, 1);
  const int h21 = space.subspace_offset(1, 0);
  const int h23 = space.subspace_offset(1, 2);
  const int h32 = space.subspace_offset(2, 1);
  const int h33 = space.subspace_offset(2, 2);

  Rng rng(303);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex x = rng.complex_gaussian(), y = rng.complex_gaussian(),
                  z = rng.complex_gaussian();
    const CMatrix d = cs3_dirac(x, y, z);
    const XiData data = xi(space, d);

    // Displayed one-form on the ordered restriction.
    const std::vector<int> idx = {h12, h12 + 1, h32, h23, h33};
    CMatrix expected_xi(5, 5);
    expected_xi << 0, 0, x, 0, 0,
                   0, 0, y, 0, 0,
                   std::conj(x), std::conj(y), 0, 0, 0,
                   0, 0, 0, 0, z,
                   0, 0, 0, std::conj(z), 0;
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c)
        worst = std::max(worst,
                         std::abs(data.pi_xi(idx[r], idx[c]) - expected_xi(r, c)));

    // Squared one-form blockwise.
    CMatrix expected_sq = CMatrix::Zero(7, 7);
    expected_sq(h12 + 0, h12 + 0) = x * std::conj(x);
    expected_sq(h12 + 0, h12 + 1) = x * std::conj(y);
    expected_sq(h12 + 1, h12 + 0) = y * std::conj(x);
    expected_sq(h12 + 1, h12 + 1) = y * std::conj(y);
    expected_sq(h32, h32) = x * std::conj(x) + y * std::conj(y);
    expected_sq(h23, h23) = z * std::conj(z);
    expected_sq(h33, h33) = z * std::conj(z);
    worst = std::max(worst, max_norm(data.pi_xi_squared - expected_sq));
    // And the mirrored subspace is untouched.
    worst = std::max(worst,
                     max_norm(data.pi_xi_squared.block(h21, h21, 2, 2)));
  }

  // Balanced parameters: the square lies in the represented algebra on the
  // restriction to the four subspaces the one-form acts on.
  const CMatrix d = cs3_dirac({1, 0}, {1, 0}, {std::sqrt(2.0), 0});
  const XiData data = xi(space, d);
  std::vector<int> coords = {h12, h12 + 1, h32, h23, h33};
  auto compress = [&](const CMatrix& m) {
    CMatrix out(coords.size(), coords.size());
    for (size_t r = 0; r < coords.size(); ++r)
      for (size_t c = 0; c < coords.size(); ++c)
        out(static_cast<int>(r), static_cast<int>(c)) = m(coords[r], coords[c]);
    return out;
  };
  std::vector<CMatrix> algebra_reps;
  for (const auto& e : element_basis(space.algebra()))
    algebra_reps.push_back(compress(space.rep_left(e)));
  const OperatorSpace pi_algebra = OperatorSpace::span(
      static_cast<int>(coords.size()), static_cast<int>(coords.size()), algebra_reps);
  const double membership = pi_algebra.projection_residual(compress(data.pi_xi_squared));

  std::ostringstream msg;
  msg << "display residual " << worst << ", membership residual " << membership;
  detail = msg.str();
  return worst < kTol && membership < kTol;
}

bool criterion4(std::string& detail) {
  const Fixture f = fixture("cs3_minimal");
  const TripleSpace space = f.build_space();
  const HaarWeight w = haar_weight_operator(space, *f.group, f.iso, kTol);
  const double err = std::max({std::abs(w.weights[0] - 1.0 / 3.0),
                               std::abs(w.weights[1] - 1.0 / 18.0),
                               std::abs(w.weights[2] - 1.0 / 12.0)});
  std::ostringstream msg;
  msg << "weight error " << err << ", trace residual " << w.trace_residual;
  detail = msg.str();
  return err < 1e-12 && w.trace_residual < kTol;
}

bool criterion5(std::string& detail) {
  for (const char* name : {"cs3_minimal", "s3_fn_universal", "s3_fn_bicov2"}) {
    const Fixture f = fixture(name);
    const TripleSpace space = f.build_space();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const IntersectionForm form =
          index_pairing(space, random_dirac(space, seed).matrix);
      if (form.matrix != *f.expected_intersection_form) {
        detail = std::string("fixture mismatch on ") + name;
        return false;
      }
    }
  }
  Rng rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    const TripleSpace space = random_triple(rng, 3, 2, 2, 40);
    for (int probe = 0; probe < 3; ++probe) {
      const CMatrix d = random_dirac(space, rng.next_u64()).matrix;
      if (index_pairing(space, d).matrix != space.q()) {
        detail = "random instance mismatch";
        return false;
      }
    }
  }
  const PoincareCheck cs3 = poincare_check(*fixture("cs3_minimal").expected_intersection_form);
  const PoincareCheck universal =
      poincare_check(*fixture("s3_fn_universal").expected_intersection_form);
  std::ostringstream msg;
  msg << "103 instances, cs3 det " << cs3.determinant << ", universal det "
      << universal.determinant;
  detail = msg.str();
  return cs3.determinant == -1 && cs3.nondegenerate && universal.nondegenerate;
}

bool criterion6(std::string& detail) {
  Rng rng(606);
  int gray = 0, agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const TripleSpace space = random_triple(rng, 3, 2, 2, 16);
    const CMatrix d = random_dirac(space, rng.next_u64()).matrix;
    const InnerCheck check = inner_check(space, d, kTol);
    if (check.gray_zone) {
      ++gray;
      continue;
    }
    if (!check.criteria_agree) {
      detail = "criteria disagree on a clear instance";
      return false;
    }
    ++agree;
  }
  detail = std::to_string(agree) + " agreeing, " + std::to_string(gray) +
           " gray-zone (expected 0)";
  return gray == 0;
}

bool criterion7(std::string& detail) {
  Rng rng(707);
  int inner_count = 0;
  double worst_dxi = 0.0, worst_flat = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const TripleSpace space = random_triple(rng, 3, 2, 1, 16);
    const CMatrix d = random_dirac(space, rng.next_u64()).matrix;
    worst_dxi = std::max(worst_dxi, dxi_identity_residual(space, d));
    if (inner_check(space, d, kTol).is_inner) {
      worst_flat = std::max(worst_flat, curvature_flat_residual(space, d, kTol));
      ++inner_count;
    }
  }
  std::ostringstream msg;
  msg << "dxi residual " << worst_dxi << ", flat residual " << worst_flat
      << " over " << inner_count << " inner instances";
  detail = msg.str();
  return worst_dxi < kTol && worst_flat < kTol;
}

bool criterion8(std::string& detail) {
  const TripleSpace space = cs3_space();
  Rng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix d = cs3_dirac(rng.complex_gaussian(), rng.complex_gaussian(),
                                rng.complex_gaussian());
    if (center_one_forms(space, d) != 0) {
      detail = "nonzero center on the group-algebra triple";
      return false;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const TripleSpace s = random_triple(rng, 3, 2, 2, 16);
    if (center_one_forms(s, random_dirac(s, rng.next_u64()).matrix) != 0) {
      detail = "nonzero center on a random instance";
      return false;
    }
  }
  detail = "center trivial on 120 instances";
  return true;
}

bool criterion9(std::string& detail) {
  int instances = 0, generators = 0;
  for (int pattern = 0; pattern < 729; ++pattern) {
    int digits = pattern;
    auto next = [&digits]() {
      const int v = digits % 3;
      digits /= 3;
      return v - 1;
    };
    IMatrix q(3, 3);
    q(0, 0) = next();
    q(1, 1) = next();
    q(2, 2) = next();
    q(0, 1) = q(1, 0) = next();
    q(0, 2) = q(2, 0) = next();
    q(1, 2) = q(2, 1) = next();
    bool faithful = true;
    for (int i = 0; i < 3; ++i) {
      bool acts = false;
      for (int j = 0; j < 3; ++j) acts = acts || q(i, j) != 0;
      faithful = faithful && acts;
    }
    if (!faithful) continue;
    ++instances;
    const TripleSpace space = commutative(q);
    const CMatrix d = random_dirac(space, 900 + pattern).matrix;
    const testing::ProjectionWordOracle oracle{space, d};

    const int r1 = one_forms(space, d).rank();
    const TwoFormRanks ranks = two_forms(space, d);
    if (r1 != oracle.one_form_rank() ||
        ranks.universal_rank != oracle.two_form_rank() ||
        ranks.junk_rank != oracle.junk_rank()) {
      detail = "rank mismatch on pattern " + std::to_string(pattern);
      return false;
    }

    const OperatorSpace junk = junk_two_forms(space, d);
    const auto& alg = space.algebra();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        if (max_norm(pi_one_form(space, d,
                                 UniversalOneForm::word(
                                     central_projection(alg, i),
                                     central_projection(alg, j)))) > kTol)
          continue;
        CMatrix generator = CMatrix::Zero(space.dim(), space.dim());
        for (int s = 0; s < 3; ++s) {
          if (s == i || s == j) continue;
          generator += pi_two_word(space, d, central_projection(alg, i),
                                   central_projection(alg, s),
                                   central_projection(alg, j));
        }
        if (max_norm(generator) > kTol) ++generators;
        if (!junk.contains(generator, kTol)) {
          detail = "junk generator escapes on pattern " + std::to_string(pattern);
          return false;
        }
      }
  }
  detail = std::to_string(instances) + " faithful patterns, " +
           std::to_string(generators) + " nontrivial junk generators contained";
  return instances > 0 && generators > 0;
}

bool criterion10(std::string& detail) {
  {
    const Fixture f = fixture("s3_fn_universal");
    const TripleSpace space = f.build_space();
    const BicovarianceReport report = fn_algebra_bicovariance(
        space, random_dirac(space, 10).matrix, *f.group, kTol);
    if (!report.bicovariant) return false;
    for (const auto& chi : report.per_element)
      if (!chi.chi_nonzero) {
        detail = "universal fixture has a vanishing generator";
        return false;
      }
  }
  const Fixture f = fixture("s3_fn_bicov2");
  const TripleSpace space = f.build_space();
  const DiracOperator d = random_dirac(space, 20);
  const BicovarianceReport report =
      fn_algebra_bicovariance(space, d.matrix, *f.group, kTol);
  if (!report.bicovariant) {
    detail = "two-block fixture not bicovariant";
    return false;
  }
  for (const auto& chi : report.per_element) {
    const bool is_cycle = chi.name == "ab" || chi.name == "ba";
    if (chi.chi_nonzero != is_cycle) {
      detail = "unexpected vanishing pattern for " + chi.name;
      return false;
    }
  }

  // Negative control: remove one required block orbit.
  const auto orbits = allowed_blocks(space);
  std::vector<CMatrix> params = d.params;
  bool zeroed = false;
  for (size_t k = 0; k < orbits.size(); ++k)
    for (const BlockSlot& s : orbits[k].slots)
      if (s.ti == 0 && s.tj == 0 && s.si == 2 && s.sj == 0) {
        params[k].setZero();
        zeroed = true;
      }
  if (!zeroed) {
    detail = "expected block orbit not found";
    return false;
  }
  const BicovarianceReport broken = fn_algebra_bicovariance(
      space, assemble(space, params).matrix, *f.group, kTol);
  detail = "fixtures match; negative control flips the verdict";
  return !broken.bicovariant;
}

bool criterion11(std::string& detail) {
  const NoGoReport report = no_go_check(kTol);
  std::ostringstream msg;
  msg << "center dim " << report.two_dim_center_dim << ", match residual "
      << report.canonical_center_match_residual << ", spectral center "
      << report.spectral_center_dim << ", verdict "
      << (report.incompatible ? "incompatible" : "compatible");
  detail = msg.str();
  return report.two_dim_center_dim >= 1 &&
         report.canonical_center_match_residual < kTol &&
         report.one_dim_dab_norm == 0.0 && report.one_dim_dba_norm == 0.0 &&
         report.incompatible;
}

bool criterion12(std::string& detail) {
  const AlgebraSpec alg = make_algebra(BaseField::Real,
                                       {{1, FieldKind::Quaternion},
                                        {1, FieldKind::Complex},
                                        {2, FieldKind::Real}});
  IMatrix q(4, 4);
  q << 0, 1, 0, 1,
       1, 0, 0, 0,
       0, 0, 0, -1,
       1, 0, -1, 0;
  const TripleSpace space = TripleSpace::build(alg, q);
  if (!space.validate_axioms(kTol).all_pass()) {
    detail = "axioms fail on the real-base instance";
    return false;
  }

  const DiracOperator good = random_dirac(space, 1212);
  if (!validate_dirac(space, good.matrix, kTol).pass) {
    detail = "admissible operator rejected";
    return false;
  }

  // Inject a block joining the plain and conjugate columns of the complex
  // summand, completed so every symmetry except the z = i probe survives.
  Rng rng(13);
  CMatrix injected = CMatrix::Zero(space.dim(), space.dim());
  injected.block(space.subspace_offset(0, 1), space.subspace_offset(3, 2),
                 space.subspace_dim(0, 1), space.subspace_dim(3, 2)) =
      rng.gaussian_matrix(space.subspace_dim(0, 1), space.subspace_dim(3, 2));
  const AntilinearOperator J = space.real_structure();
  CMatrix violation = injected + J.sandwich(injected);
  violation = (violation + violation.adjoint()).eval();
  const DiracReport bad = validate_dirac(space, good.matrix + violation, kTol);
  const bool rejected = !bad.pass && bad.first_order_real_center < kTol &&
                        bad.first_order_imag_center > 1e-3;

  // Quaternionic doubling against the summed label pairing.
  const IntersectionForm plain = index_pairing(space, good.matrix, false);
  const IntersectionForm doubled = index_pairing(space, good.matrix, true);
  bool doubling = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int factor = 1;
      if (plain.quaternionic[i]) factor *= 2;
      if (plain.quaternionic[j]) factor *= 2;
      doubling = doubling && doubled.matrix(i, j) == factor * plain.matrix(i, j);
    }
  std::ostringstream msg;
  msg << "z=i residual " << bad.first_order_imag_center << ", doubling "
      << (doubling ? "holds" : "fails");
  detail = msg.str();
  return rejected && doubling;
}

}  // namespace

int main() {
  Runner runner;
  runner.run(1, "group-algebra triple: dimension, axioms, J-fixed vector", criterion1);
  runner.run(2, "Dirac slot orbits and parameter count", criterion2);
  runner.run(3, "canonical one-form and its square", criterion3);
  runner.run(4, "Haar weight operator", criterion4);
  runner.run(5, "intersection form recovers the Krajewski matrix", criterion5);
  runner.run(6, "inner-calculus equivalence", criterion6);
  runner.run(7, "differential of the one-form and flat curvature", criterion7);
  runner.run(8, "one-form bimodule has no center", criterion8);
  runner.run(9, "commutative junk against the projection-word calculus", criterion9);
  runner.run(10, "bicovariance patterns of the function-algebra fixtures", criterion10);
  runner.run(11, "no bicovariance symmetry for the group-algebra triple", criterion11);
  runner.run(12, "real-base mixing rules and quaternionic doubling", criterion12);
  if (runner.failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", runner.failures);
  return 1;
}
