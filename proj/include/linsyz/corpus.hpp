#pragma once

#include <cstddef>
#include <vector>

#include "linsyz/graded_module.hpp"
#include "linsyz/koszul.hpp"
#include "linsyz/linforms.hpp"
#include "linsyz/points.hpp"
#include "linsyz/rng.hpp"

namespace linsyz {

/// Uniform over F_p; an integer in [-bound, bound] over Q.
Scalar draw(const Field& f, Rng& rng, std::int64_t bound = 9);

LinearFormMatrix random_linear_form_matrix(const Field& f, std::size_t b, std::size_t a, int n, Rng& rng);

/// S(V)^g in degrees 0..top. Degree-q basis: generator slowest, then the
/// monomials of S^qV.
GradedModule free_module(const Field& f, int n, std::size_t g, int top);

/// Free module (degrees 0..top) modulo the submodule generated by
/// `relations` random degree-1 elements.
GradedModule random_quotient_module(const Field& f, int n, std::size_t g, std::size_t relations, int top, Rng& rng);

struct SeededModule {
  GradedModule module;
  KoszulClass alpha;
};

/// Degrees 0..1 with M_0 = k^g and M_1 = (V ⊗ M_0) / R, where
/// alpha = sum_{i<p} w_i ⊗ m_i with w_i products of p random linear forms,
/// and R is spanned by the contractions of alpha plus `extra` random
/// relations. alpha is a nonzero element of K_{p,0}.
SeededModule class_seeded_module(const Field& f, int n, int p, std::size_t g, std::size_t extra, Rng& rng);

/// `dim` random elements of ∧^degree V (small integers over Q).
std::vector<ExtElement> random_exterior_subspace(const Field& f, int n, int degree, std::size_t dim, Rng& rng);

/// `count` random distinct points of P^r (coordinates in [-4, 4] over Q).
PointSet random_points(const Field& f, int r, std::size_t count, Rng& rng);

/// `cluster` of the points lie in a random P^{cluster_dim}; the rest are
/// random.
PointSet degenerate_points(const Field& f, int r, std::size_t count, int cluster_dim, std::size_t cluster, Rng& rng);

}  // namespace linsyz
