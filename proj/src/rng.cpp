#include "linsyz/rng.hpp"

namespace linsyz {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL))) {}

std::uint64_t Rng::next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::split(std::uint64_t key) const { return Rng(key_, key + 1); }

Scalar Rng::scalar(const Field& f) {
  if (f.is_prime()) return f.from_int(static_cast<std::int64_t>(below(f.characteristic())));
  return f.from_int(uniform_int(-9, 9));
}

Scalar Rng::small_scalar(const Field& f, std::int64_t bound) {
  return f.from_int(uniform_int(-bound, bound));
}

}  // namespace linsyz
