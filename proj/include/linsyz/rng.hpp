#pragma once

#include <cstdint>

#include "linsyz/field.hpp"

namespace linsyz {

/// Counter-based splittable generator (splitmix64 finalizer over a keyed
/// counter). A stream is fully determined by (seed, stream key); `split`
/// derives independent child streams so parallel work is reproducible no
/// matter how it is partitioned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  Rng split(std::uint64_t key) const;

  /// Uniform over F_p; an integer in [-9, 9] over Q.
  Scalar scalar(const Field& f);
  /// Integer in [-bound, bound] mapped into f. Same draws give the "same"
  /// integral object across fields.
  Scalar small_scalar(const Field& f, std::int64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace linsyz
