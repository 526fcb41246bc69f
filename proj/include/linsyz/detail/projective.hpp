#pragma once

#include <stdexcept>

namespace linsyz {

template <class Visit>
void for_each_projective_point(const Field& f, std::size_t d, Visit&& visit) {
  if (!f.is_prime()) throw std::invalid_argument("projective enumeration needs a prime field");
  const std::uint32_t q = f.characteristic();
  std::vector<std::uint32_t> digits;
  Vec v = zero_vec(f, d);
  for (std::size_t lead = 0; lead < d; ++lead) {
    // coordinates before `lead` are zero, `lead` is one, the rest range over F_q
    const std::size_t free = d - lead - 1;
    digits.assign(free, 0);
    for (;;) {
      for (std::size_t t = 0; t < d; ++t) v[t] = f.zero();
      v[lead] = f.one();
      for (std::size_t t = 0; t < free; ++t) v[lead + 1 + t] = f.from_int(digits[t]);
      if (!visit(static_cast<const Vec&>(v))) return;
      bool wrapped = true;
      for (std::size_t pos = free; pos-- > 0;) {
        if (++digits[pos] < q) {
          wrapped = false;
          break;
        }
        digits[pos] = 0;
      }
      if (wrapped) break;
    }
  }
}

}  // namespace linsyz
