#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "commulab/matrix.hpp"
#include "commulab/ring.hpp"

namespace commulab {

/// Deterministic seeded generator. All randomized checks draw through this
/// so a fixed seed reproduces a run exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish value in [0, k); k > 0. Deterministic across platforms.
  std::uint64_t below(std::uint64_t k) { return gen_() % k; }
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// Random element: indexes `table` when given (finite rings), otherwise
/// small integers / fractions for Z and Q.
RingValue random_element(Rng& rng, const RingSpec& ring,
                         const std::vector<RingValue>* table = nullptr);

Matrix random_matrix(Rng& rng, const RingSpec& ring, int n,
                     const std::vector<RingValue>* table = nullptr);

/// Random strictly upper triangular (hence nilpotent) matrix.
Matrix random_strict_upper(Rng& rng, const RingSpec& ring, int n,
                           const std::vector<RingValue>* table = nullptr);

}  // namespace commulab
