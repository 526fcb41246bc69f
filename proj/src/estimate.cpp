#include "linsyz/estimate.hpp"

namespace linsyz {

int threshold_dimension(const std::vector<PointCount>& counts, int max_dim) {
  if (counts.empty()) return -1;
  for (int d = max_dim; d >= 0; --d) {
    bool ok = true;
    for (const auto& c : counts) {
      // 2 * count >= q^d, saturating
      unsigned __int128 qd = 1;
      for (int t = 0; t < d && qd <= (static_cast<unsigned __int128>(1) << 100); ++t) qd *= c.q;
      if (static_cast<unsigned __int128>(c.count) * 2 < qd) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  return -1;
}

}  // namespace linsyz
