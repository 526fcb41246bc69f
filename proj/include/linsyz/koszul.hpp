#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "linsyz/estimate.hpp"
#include "linsyz/graded_module.hpp"
#include "linsyz/multilinear.hpp"
#include "linsyz/verdict.hpp"

namespace linsyz {

/// Element of ∧^pV ⊗ M_q. Coordinates: subset of ∧^pV slowest, then the
/// basis of M_q.
struct KoszulClass {
  int p = 0;
  int q = 0;
  Vec value;
};

/// d(x_S ⊗ m) = sum_t (-1)^{t-1} x_{S - s_t} ⊗ x_{s_t} m, as a matrix
/// ∧^pV ⊗ M_q -> ∧^{p-1}V ⊗ M_{q+1}. For p = 0 the target is zero
/// (0 x dim matrix).
Matrix koszul_differential(const GradedModule& m, int p, int q);

struct KoszulCohomology {
  /// dim ker d_{p,q} - rank d_{p+1,q-1}
  std::size_t dim = 0;
  /// cocycles spanning the lexicographically first complement of the
  /// coboundaries; basis.size() is the second count of dim
  std::vector<KoszulClass> basis;
};

KoszulCohomology koszul_cohomology(const GradedModule& m, int p, int q);
/// dim K_{p,q} by rank-nullity only.
std::size_t koszul_dim(const GradedModule& m, int p, int q);

bool is_cocycle(const GradedModule& m, const KoszulClass& c);
/// c lies in the image of d_{p+1,q-1}.
bool is_coboundary(const GradedModule& m, const KoszulClass& c);

struct StrandEuler {
  int s = 0;  // p + q
  std::int64_t chain_sum = 0;
  std::int64_t cohomology_sum = 0;
};

/// Alternating sums along p + q = s of dim ∧^pV ⊗ M_{s-p} and dim K_{p,s-p}.
StrandEuler strand_euler(const GradedModule& m, int s);

/// Basis of R = ker(M_0 ⊗ V -> M_1); coordinates m-index slowest, then x_k.
std::vector<Vec> relations(const GradedModule& m);
/// Rank of t ∈ M_0 ⊗ V as a dim M_0 x n matrix.
std::size_t tensor_rank(const Vec& t, std::size_t dim_m0, int n);

/// Number of t ∈ R(F_q) with tensor rank <= 1 (including 0), via the
/// incidence with P(M_0): 1 + sum over [m] of (q^{d_m} - 1), where d_m is the
/// dimension of {v : m ⊗ v ∈ R}. `c` is any matrix on M_0 ⊗ V (m-index
/// slowest) whose kernel is R. Requires a prime field.
std::uint64_t rank_one_count(const Matrix& c, std::size_t dim_m0, int n);
std::uint64_t rank_one_count(const GradedModule& m);

struct RankOneEstimate {
  std::vector<PointCount> counts;
  int dim_estimate = -1;  // -1: empty (only 0), or unknown
  bool known = false;
  bool bad_reduction = false;
  std::string note;
};

/// Rank-one relation counts over each F_q and the q^d/2 threshold estimate of
/// the affine dimension of R_1. Over Q, integral bases of R and of its
/// annihilator are reduced mod each q (a rank drop makes the estimate
/// unknown); over F_p only that prime is used. Needs #P(M_0)(F_q) <= budget.
RankOneEstimate rank_one_dimension_estimate(const GradedModule& m, const std::vector<std::uint32_t>& q_list,
                                            std::uint64_t budget);

struct Thm4Report {
  int p = 0;
  std::size_t k_dim = 0;
  RankOneEstimate r1;
  Tristate consistent = Tristate::unknown;
  /// dim K_{k,0} for k = p..n
  std::vector<std::size_t> propagation;
  bool propagation_ok = true;
  Verdict verdict = Verdict::unknown;
  std::string note;
};

/// Checks: K_{p,0} != 0 implies the rank-one estimate is >= p, and
/// K_{p,0} = 0 implies K_{k,0} = 0 for k > p. Needs dim M_0 = p > 0 and no
/// pieces in negative degree.
Thm4Report thm4_check(const GradedModule& m, const std::vector<std::uint32_t>& q_list, std::uint64_t budget);
/// Same, with the rank-one dimension supplied (e.g. the exact count for
/// point-set modules).
Thm4Report thm4_check(const GradedModule& m, const RankOneEstimate& r1);

struct ClassSubspace {
  std::vector<ExtElement> w;        // basis of W ⊆ ∧^pV
  std::vector<ExtElement> w_prime;  // <tau, w_i> in ∧^{n-p}V*
  bool shrinkable = false;          // dim W < dim M_0
};

/// W = image of M_0* -> ∧^pV given by alpha (q = 0); tau = coefficient times
/// e_1 ∧ ... ∧ e_n (defaults to 1).
ClassSubspace class_to_subspace(const GradedModule& m, const KoszulClass& alpha, const Scalar* tau_coeff = nullptr);

struct Cor5Trial {
  bool survives = false;
  RankOneEstimate r1;
  Verdict verdict = Verdict::unknown;
};

struct Cor5Report {
  int p = 0;
  std::size_t m0 = 0;
  bool precondition = false;  // K_{p,0} != 0
  std::vector<Cor5Trial> trials;
  std::size_t surviving = 0;
  Verdict verdict = Verdict::unknown;
  std::string note;
};

/// For random (m0 - p)-dimensional S ⊆ M_0: forms M / <S>, checks a class of
/// K_{p,0}(M) survives in ∧^pV ⊗ (M_0 / S), and that the rank-one estimate
/// of the quotient is >= p. Over Q, S is drawn with small integer entries and
/// everything is reduced mod each q.
Cor5Report cor5_check(const GradedModule& m, int p, std::size_t trials, std::uint64_t seed,
                      const std::vector<std::uint32_t>& q_list, std::uint64_t budget);

struct ContractResult {
  /// columns y_1..y_n of V with v(y_1) = 1 and y_2..y_n a basis of v^perp
  Matrix basis_change;
  /// M as a module over S(v^perp) in the basis y_2..y_n
  GradedModule restricted;
  /// <lambda, v> over the restricted module, degree (p-1, q)
  KoszulClass contracted;
  bool cocycle = false;
  /// M_{q-1} = 0 and the image of ∧^{p-1}V* -> V ⊗ M_q is not in v^perp ⊗ M_q
  bool hypotheses = false;
  /// contracted is not a coboundary over v^perp
  bool nonzero = false;
};

/// Contraction of a Koszul class by v ∈ V*. Throws for v = 0, p = 0, or a
/// non-cocycle.
ContractResult contract_class(const GradedModule& m, const KoszulClass& lambda, const Vec& v);

}  // namespace linsyz
