#ifndef FINTRIPLE_RANDOM_HPP
#define FINTRIPLE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fintriple/hilbert.hpp"

namespace fintriple {

/// Seeded random source with a fixed Gaussian transform (Box-Muller over
/// mt19937_64), so sampled operators do not depend on the standard library's
/// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    // 53-bit mantissa in (0, 1].
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian();

  /// Standard complex Gaussian: independent N(0, 1/2) real and imaginary
  /// parts (unit variance overall).
  Complex complex_gaussian();

  CMatrix gaussian_matrix(int rows, int cols);

  std::uint64_t next_u64() { return engine_(); }
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// A random complex-base triple: k <= max_summands summands of size
/// <= max_n, symmetric q with |entries| <= max_q, faithful, and total
/// dimension <= max_dim.
TripleSpace random_triple(Rng& rng, int max_summands, int max_n, int max_q,
                          int max_dim);

}  // namespace fintriple

#endif
