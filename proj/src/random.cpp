#include "fintriple/random.hpp"

#include <cmath>
#include <numbers>

namespace fintriple {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double scale = std::numbers::sqrt2 / 2.0;
  return Complex(gaussian() * scale, gaussian() * scale);
}

CMatrix Rng::gaussian_matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian();
  return m;
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

TripleSpace random_triple(Rng& rng, int max_summands, int max_n, int max_q,
                          int max_dim) {
  for (;;) {
    const int k = rng.uniform_int(1, max_summands);
    std::vector<Summand> summands;
    for (int i = 0; i < k; ++i)
      summands.push_back({rng.uniform_int(1, max_n), FieldKind::Complex});
    IMatrix q = IMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        const int v = rng.uniform_int(-max_q, max_q);
        q(i, j) = v;
        q(j, i) = v;
      }
    bool faithful = true;
    int dim = 0;
    for (int i = 0; i < k; ++i) {
      bool acts = false;
      for (int j = 0; j < k; ++j) {
        if (q(i, j) != 0) acts = true;
        dim += std::abs(q(i, j)) * summands[i].n * summands[j].n;
      }
      faithful = faithful && acts;
    }
    if (!faithful || dim > max_dim) continue;
    return TripleSpace::build(make_algebra(BaseField::Complex, summands), q);
  }
}

}  // namespace fintriple
