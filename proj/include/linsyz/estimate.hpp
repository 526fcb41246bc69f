#pragma once

#include <cstdint>
#include <vector>

namespace linsyz {

/// Number of F_q-points of some locus.
struct PointCount {
  std::uint32_t q = 0;
  std::uint64_t count = 0;
};

/// Largest d in [0, max_dim] with count(q) >= q^d / 2 for every sample, or
/// -1 when no such d exists (including an empty sample list).
///
/// A d-dimensional variety over F_q has about q^d points; the factor 1/2
/// absorbs lower-order terms at small q. This is a heuristic: a component
/// whose conjugates are not defined over F_q contributes few rational points.
int threshold_dimension(const std::vector<PointCount>& counts, int max_dim);

}  // namespace linsyz
