#include "fintriple/dirac.hpp"

#include <algorithm>
#include <map>

#include "fintriple/random.hpp"

namespace fintriple {

namespace {

BlockSlot make_slot(const TripleSpace& space, int ti, int tj, int si, int sj) {
  BlockSlot s;
  s.ti = ti; s.tj = tj; s.si = si; s.sj = sj;
  s.kind = (ti == si) ? SlotKind::LeftEquivariant : SlotKind::RightEquivariant;
  const auto& alg = space.algebra();
  if (s.kind == SlotKind::LeftEquivariant) {
    // 1_{d_ti} (x) T, T: multiplicity (x) right factor of the source to
    // the same of the target.
    s.t_rows = space.multiplicity(ti, tj) * alg.label_dim(tj);
    s.t_cols = space.multiplicity(si, sj) * alg.label_dim(sj);
  } else {
    // T (x) 1_{d_tj}.
    s.t_rows = alg.label_dim(ti) * space.multiplicity(ti, tj);
    s.t_cols = alg.label_dim(si) * space.multiplicity(si, sj);
  }
  return s;
}

bool admissible(const TripleSpace& space, int ti, int tj, int si, int sj) {
  if (ti == si && tj == sj) return false;
  if (space.multiplicity(ti, tj) == 0 || space.multiplicity(si, sj) == 0)
    return false;
  if (space.gamma_sign(ti, tj) * space.gamma_sign(si, sj) != -1) return false;
  return ti == si || tj == sj;
}

std::array<int, 4> adjoint_key(const std::array<int, 4>& k) {
  return {k[2], k[3], k[0], k[1]};
}
std::array<int, 4> jconj_key(const std::array<int, 4>& k) {
  return {k[1], k[0], k[3], k[2]};
}

}  // namespace

std::vector<SlotOrbit> allowed_blocks(const TripleSpace& space) {
  const int L = space.num_labels();
  std::map<std::array<int, 4>, BlockSlot> slots;
  for (int ti = 0; ti < L; ++ti)
    for (int tj = 0; tj < L; ++tj)
      for (int si = 0; si < L; ++si)
        for (int sj = 0; sj < L; ++sj)
          if (admissible(space, ti, tj, si, sj)) {
            BlockSlot s = make_slot(space, ti, tj, si, sj);
            slots.emplace(s.key(), s);
          }

  std::vector<SlotOrbit> orbits;
  std::map<std::array<int, 4>, bool> seen;
  for (const auto& [key, slot] : slots) {
    if (seen.count(key)) continue;
    std::vector<std::array<int, 4>> member_keys = {
        key, adjoint_key(key), jconj_key(key), adjoint_key(jconj_key(key))};
    std::sort(member_keys.begin(), member_keys.end());
    member_keys.erase(std::unique(member_keys.begin(), member_keys.end()),
                      member_keys.end());
    SlotOrbit orbit;
    orbit.rep = slots.at(member_keys.front());
    for (const auto& mk : member_keys) {
      seen[mk] = true;
      orbit.slots.push_back(slots.at(mk));
    }
    // A slot can fold onto itself only when target and source coincide or
    // share the chirality, which admissibility excludes; the branch keeps
    // the count exact if that reasoning is ever violated.
    orbit.self_paired = member_keys.size() < 4;
    orbit.real_params = orbit.self_paired
                            ? orbit.rep.t_rows * orbit.rep.t_cols
                            : 2 * orbit.rep.t_rows * orbit.rep.t_cols;
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const SlotOrbit& a, const SlotOrbit& b) {
              return a.rep.key() < b.rep.key();
            });
  return orbits;
}

int dof_count(const TripleSpace& space) {
  int total = 0;
  for (const auto& orbit : allowed_blocks(space)) total += orbit.real_params;
  return total;
}

namespace {

// Dense block of a slot given its parameter matrix.
CMatrix slot_block(const TripleSpace& space, const BlockSlot& s,
                   const CMatrix& t) {
  const auto& alg = space.algebra();
  const int rows = space.subspace_dim(s.ti, s.tj);
  const int cols = space.subspace_dim(s.si, s.sj);
  CMatrix block = CMatrix::Zero(rows, cols);
  if (s.kind == SlotKind::LeftEquivariant) {
    const int d = alg.label_dim(s.ti);
    const int tr = s.t_rows, tc = s.t_cols;
    for (int a = 0; a < d; ++a)
      block.block(a * tr, a * tc, tr, tc) = t;
  } else {
    const int d = alg.label_dim(s.tj);
    for (int r = 0; r < s.t_rows; ++r)
      for (int c = 0; c < s.t_cols; ++c)
        for (int b = 0; b < d; ++b)
          block(r * d + b, c * d + b) = t(r, c);
  }
  return block;
}

void place_block(const TripleSpace& space, CMatrix& d, int ti, int tj, int si,
                 int sj, const CMatrix& block) {
  d.block(space.subspace_offset(ti, tj), space.subspace_offset(si, sj),
          block.rows(), block.cols()) = block;
}

// The J-conjugate of a block: the (tj,ti) <- (sj,si) block whose entries are
// the conjugated entries of the (ti,tj) <- (si,sj) block with both tensor
// factors swapped.
CMatrix jconj_block(const TripleSpace& space, const BlockSlot& s,
                    const CMatrix& block) {
  const auto& alg = space.algebra();
  const int dti = alg.label_dim(s.ti), dtj = alg.label_dim(s.tj);
  const int dsi = alg.label_dim(s.si), dsj = alg.label_dim(s.sj);
  const int rt = space.multiplicity(s.ti, s.tj);
  const int rs = space.multiplicity(s.si, s.sj);
  CMatrix out = CMatrix::Zero(space.subspace_dim(s.tj, s.ti),
                              space.subspace_dim(s.sj, s.si));
  for (int a = 0; a < dti; ++a)
    for (int m = 0; m < rt; ++m)
      for (int b = 0; b < dtj; ++b)
        for (int c = 0; c < dsi; ++c)
          for (int n = 0; n < rs; ++n)
            for (int e = 0; e < dsj; ++e) {
              const Complex v = block((a * rt + m) * dtj + b,
                                      (c * rs + n) * dsj + e);
              if (v == Complex(0, 0)) continue;
              out((b * rt + m) * dti + a, (e * rs + n) * dsi + c) =
                  std::conj(v);
            }
  return out;
}

}  // namespace

DiracOperator assemble(const TripleSpace& space,
                       const std::vector<CMatrix>& orbit_params) {
  const auto orbits = allowed_blocks(space);
  if (orbit_params.size() != orbits.size())
    throw Error(ErrorCode::ShapeMismatch,
                "expected one parameter matrix per slot orbit");
  DiracOperator d;
  d.matrix = CMatrix::Zero(space.dim(), space.dim());
  d.params = orbit_params;
  for (size_t k = 0; k < orbits.size(); ++k) {
    const BlockSlot& s = orbits[k].rep;
    const CMatrix& t = orbit_params[k];
    if (t.rows() != s.t_rows || t.cols() != s.t_cols)
      throw Error(ErrorCode::ShapeMismatch,
                  "parameter matrix does not match slot shape");
    const CMatrix block = slot_block(space, s, t);
    const CMatrix mirror = jconj_block(space, s, block);
    place_block(space, d.matrix, s.ti, s.tj, s.si, s.sj, block);
    place_block(space, d.matrix, s.si, s.sj, s.ti, s.tj, block.adjoint());
    place_block(space, d.matrix, s.tj, s.ti, s.sj, s.si, mirror);
    place_block(space, d.matrix, s.sj, s.si, s.tj, s.ti, mirror.adjoint());
  }
  return d;
}

DiracOperator random_dirac(const TripleSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CMatrix> params;
  for (const auto& orbit : allowed_blocks(space))
    params.push_back(rng.gaussian_matrix(orbit.rep.t_rows, orbit.rep.t_cols));
  return assemble(space, params);
}

DiracReport validate_dirac(const TripleSpace& space, const CMatrix& d,
                           double tol) {
  if (d.rows() != space.dim() || d.cols() != space.dim())
    throw Error(ErrorCode::ShapeMismatch, "operator dimension mismatch");
  DiracReport report;
  report.tol = tol;
  report.selfadjoint_residual = max_norm(d - d.adjoint());
  const AntilinearOperator J = space.real_structure();
  report.j_commutation_residual = max_norm(d * J.u - J.u * d.conjugate());
  const CMatrix g = space.grading();
  report.gamma_anticommutation_residual = max_norm(d * g + g * d);

  const auto& alg = space.algebra();
  const auto basis = element_basis(alg);
  std::vector<CMatrix> bracket;  // [D, pi(a)] per basis element
  bracket.reserve(basis.size());
  for (const auto& a : basis) {
    const CMatrix p = space.rep_left(a);
    bracket.push_back(d * p - p * d);
  }
  double rho = 0.0;
  for (const auto& br : bracket)
    for (const auto& b : basis) {
      const CMatrix p0 = space.rep_right(b);
      rho = std::max(rho, max_norm(br * p0 - p0 * br));
    }
  report.first_order_residual = rho;

  double rho_real = 0.0, rho_imag = 0.0;
  for (int sidx = 0; sidx < alg.num_summands(); ++sidx) {
    const AlgebraElement p = central_projection(alg, sidx);
    const CMatrix p0 = space.rep_right(p);
    for (const auto& br : bracket)
      rho_real = std::max(rho_real, max_norm(br * p0 - p0 * br));
    if (alg.base() == BaseField::Real &&
        alg.summand(sidx).field == FieldKind::Complex) {
      const CMatrix ip0 = space.rep_right(p * Complex(0, 1));
      for (const auto& br : bracket)
        rho_imag = std::max(rho_imag, max_norm(br * ip0 - ip0 * br));
    }
  }
  report.first_order_real_center = rho_real;
  report.first_order_imag_center = rho_imag;

  report.pass = report.selfadjoint_residual <= tol &&
                report.j_commutation_residual <= tol &&
                report.gamma_anticommutation_residual <= tol &&
                report.first_order_residual <= tol &&
                report.first_order_imag_center <= tol;
  return report;
}

}  // namespace fintriple
