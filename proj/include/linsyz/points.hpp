#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linsyz/graded_module.hpp"
#include "linsyz/matrix.hpp"
#include "linsyz/verdict.hpp"

namespace linsyz {

/// Distinct points of P^r with fixed representatives in k^{r+1}, normalized so
/// the last nonzero coordinate is 1.
class PointSet {
 public:
  /// Normalizes; throws for zero vectors, wrong lengths, or repeated points.
  PointSet(Field f, int r, std::vector<Vec> points);

  const Field& field() const { return field_; }
  int r() const { return r_; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }

  PointSet subset(const std::vector<std::size_t>& idx) const;
  /// Throws std::domain_error on a bad denominator, std::invalid_argument if
  /// two points collide mod p.
  PointSet reduce(const Field& target) const;
  /// dim of the linear span in P^r.
  int span_dim() const;
  /// The same points written in coordinates of a basis of their span.
  PointSet in_span() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  Field field_;
  int r_;
  std::vector<Vec> points_;
};

/// N x dim S^dV; entry (i, mu) is the monomial mu at p_i.
Matrix evaluation_matrix(const PointSet& z, int d);
std::size_t h0_ideal(const PointSet& z, int d);
std::size_t h1_ideal(const PointSet& z, int d);
/// min{d : rank ev_d = N}
int saturation_degree(const PointSet& z);

/// S/I_Z in degrees 0..d_sat + extra; A_d = image of ev_d in k^N with the
/// image basis (pivot columns), or the standard basis once A_d = k^N.
GradedModule coordinate_ring(const PointSet& z, int extra = 1);

/// Basis of H^1(I_Z(k))* = A_k^perp ⊆ k^N as columns (N x h1(k)).
Matrix h1_dual_basis(const PointSet& z, int k);

/// N_q = H^1(I_Z(d_sat - q))* for q = 0..d_sat, action (l·phi)_i = l(p_i) phi_i.
GradedModule h1_module(const PointSet& z);
/// H^1(I_Z(k)) for k = 0..d_sat with the standard (degree-raising) action,
/// realized as k^N / A_k.
GradedModule h1_module_standard(const PointSet& z);
/// Degree 0: H^1(I_Z(1))*, degree 1: H^1(I_Z(0))*; its degree-0 relations are
/// the relations l ⊗ phi with l(p_i) phi_i = 0.
GradedModule relation_module(const PointSet& z);

struct BettiTable {
  int r = 0;
  int d_sat = 0;
  std::map<std::pair<int, int>, std::size_t> beta;  // (i, j) -> beta_{i,j}, nonzero only

  std::size_t at(int i, int j) const;
};

/// beta_{i,i+q} = dim K_{i,q}(S/I_Z) for 0 <= i <= r+1, 0 <= q <= d_sat.
/// Also computes q = d_sat + 1 and throws std::logic_error if it is nonzero.
BettiTable betti_table(const PointSet& z);
/// TSV: header row of j - i, one row per i.
void write_betti_tsv(std::ostream& os, const BettiTable& t);

struct NpResult {
  bool holds = true;
  /// failing (i, j), or (0, 2) with h1 for an N_0 failure
  int fail_i = -1;
  int fail_j = -1;
  std::size_t h1_2 = 0;
  std::string certificate;
};

/// N_0 iff h1(I_Z(2)) = 0; N_p iff N_0 and beta_{i,j} = 0 for 1 <= i <= p,
/// j >= i + 2.
NpResult np_check(const PointSet& z, int p);

/// Parameters t give (1, t, ..., t^r); nullopt stands for the point at
/// infinity (0, ..., 0, 1).
PointSet rnc_points(const Field& f, int r, const std::vector<std::optional<Scalar>>& params);

struct N0Witness {
  std::vector<std::size_t> z_prime;  // indices into Z
  Vec phi;                           // nonzero in H^1(I_{Z'}(2))*, all coordinates nonzero
  std::size_t h1_one = 0;            // h1(I_{Z'}(1))
  std::optional<Vec> h;              // linear form vanishing on Z'
  int span_dim = 0;                  // dim of the span L of Z'
  bool enough_points = false;        // |Z'| >= 2 dim L + 2
  std::vector<std::string> trace;
};

/// Greedy minimal N_0-violating subset and a hyperplane through it. Throws
/// std::invalid_argument if N_0 holds.
N0Witness n0_witness_hyperplane(const PointSet& z);

struct RankOneStratum {
  std::vector<std::size_t> z_prime;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  int cone_dim = -1;
};

struct RankOnePointsReport {
  std::vector<RankOneStratum> strata;  // every subset, in mask order
  int max_dim = -1;
  std::vector<std::size_t> argmax;  // first maximizing Z'
};

/// Affine dimension of rank-one relations l ⊗ phi of the relation module,
/// stratified by the vanishing set Z' of l. N <= 20.
RankOnePointsReport rank_one_relations_points(const PointSet& z);

struct Thm6Result {
  bool hypothesis_size = true;  // |Z| = 2r + 1 - p
  bool np_holds = false;
  std::vector<std::size_t> z_prime;
  int l_dim = -1;
  NpResult proof;
  std::uint64_t subsets_checked = 0;
  Verdict verdict = Verdict::unknown;
  std::string note;
};

/// Either N_p holds for Z, or the first subset Z' (size-descending, then
/// lexicographic) with |Z'| >= 2 dim L + 2 - p for which N_p fails inside
/// L = span(Z'). No witness is a FALSIFICATION. N <= 16.
Thm6Result theorem6_witness(const PointSet& z, int p);

}  // namespace linsyz
