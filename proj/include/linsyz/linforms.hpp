#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "linsyz/estimate.hpp"
#include "linsyz/matrix.hpp"
#include "linsyz/multilinear.hpp"
#include "linsyz/verdict.hpp"

namespace linsyz {

/// A b x a matrix of linear forms, i.e. a linear map M : A -> B ⊗ V.
///
/// coeff(j, i, k) is the coefficient of b_j ⊗ x_k in M(a_i); the entry
/// m_{ji} is the linear form sum_k coeff(j, i, k) x_k. Indices are 0-based.
class LinearFormMatrix {
 public:
  LinearFormMatrix(Field f, std::size_t b, std::size_t a, int n);

  const Field& field() const { return field_; }
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  int n() const { return n_; }

  Scalar& coeff(std::size_t j, std::size_t i, int k);
  const Scalar& coeff(std::size_t j, std::size_t i, int k) const;

  /// m_{ji} as n coordinates.
  Vec entry(std::size_t j, std::size_t i) const;
  void set_entry(std::size_t j, std::size_t i, const Vec& form);

  /// The (b n) x a matrix of M with rows indexed by b_j ⊗ x_k (j slowest).
  Matrix as_matrix() const;

  LinearFormMatrix reduce(const Field& target) const;

  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;

 private:
  Field field_;
  std::size_t b_, a_;
  int n_;
  Vec coeff_;
};

/// M(alpha) : B* -> V as an n x b matrix; column j is sum_i alpha_i m_{ji}.
Matrix generalized_column(const LinearFormMatrix& m, const Vec& alpha);
/// M(beta*) : A -> V as an n x a matrix; column i is sum_j beta_j m_{ji}.
Matrix generalized_row(const LinearFormMatrix& m, const Vec& beta);

enum class MinorKind : std::uint8_t { symmetric, exterior };

/// Matrix of Mi^k_s or Mi^k_e in the fixed bases.
///
/// Columns: column subsets I of A (lexicographic) slowest, then row data:
/// k-subsets J of B for the symmetric kind, degree-k monomials mu of S^kB*
/// for the exterior kind. Rows: the monomial basis of S^kV, or the subset
/// basis of ∧^kV.
struct MinorMap {
  MinorKind kind;
  int k;
  Matrix matrix;
};

MinorMap minor_map(const LinearFormMatrix& m, int k, MinorKind kind);

/// P_e(M(a_{c_1}) ∧ ... ∧ M(a_{c_k})) for the listed columns, as coordinates in
/// S^kB ⊗ ∧^kV (monomial of B slowest). Multiplication is symmetric on B,
/// alternating on V; each ordered row sequence contributes one term.
Vec full_exterior(const LinearFormMatrix& m, const std::vector<std::size_t>& columns);

/// (id ⊗ pi) ∘ M for pi : V -> V' given as an n' x n matrix.
LinearFormMatrix project(const LinearFormMatrix& m, const Matrix& pi);

struct Projection {
  Matrix pi;  // target_dim x n, full rank
  LinearFormMatrix image;
};

/// Seeded random surjection V -> V' of dimension target_dim applied to M.
Projection general_projection(const LinearFormMatrix& m, int target_dim, std::uint64_t seed);

struct Prop1Report {
  Tristate hypothesis = Tristate::unknown;  // every generalized column has rank b
  std::uint64_t columns_checked = 0;
  std::size_t minor_rank = 0;
  std::uint64_t expected = 0;  // C(a + b - 1, a)
  /// Meaningful only when hypothesis == yes.
  bool pass = false;
};

/// Checks that the a x a exterior minors are independent when every
/// generalized column has rank b. Over F_p the hypothesis is checked on every
/// point of P^{a-1}(F_p) if that fits in `budget`; otherwise (and over Q) the
/// caller may assert it.
Prop1Report prop1_check(const LinearFormMatrix& m, std::uint64_t budget, bool assume_hypothesis = false);

/// f_M : ∧^mV ⊗ A -> ∧^{m+1}V ⊗ B, f(w ⊗ a_i) = sum_j (w ∧ m_{ji}) ⊗ b_j.
/// Rows/columns: exterior index slowest, then B (resp. A).
Matrix syzygy_map(const LinearFormMatrix& m, int degree);

struct Prop2Report {
  bool pass = true;
  std::size_t kernel_dim = 0;
  std::size_t generators = 0;
  std::size_t products_checked = 0;
};

/// Every generator of I^a_e(M) wedges every component of every kernel element
/// of f_M to zero.
Prop2Report prop2_check(const LinearFormMatrix& m, int degree);

/// M' : B ⊗ V -> S^aB ⊗ ∧^aV ⊗ A with ∧^aA* trivialized by a_1 ∧ ... ∧ a_a.
/// Component i'' of M'(b_j ⊗ x_k) is (-1)^{a-1-i''} b_j · E_{i''} ∧ x_k with
/// E_{i''} the full exterior element of M with column i'' deleted (0-based).
/// Rows: (monomial, exterior subset, A index), first slowest.
Matrix companion_map(const LinearFormMatrix& m);

/// M' M == Full(M) ⊗ id_A exactly.
bool companion_identity_check(const LinearFormMatrix& m);

/// The matrix of linear relations of a subspace W of ∧^dV with basis w_1..w_p:
/// B* = ker(W ⊗ V -> ∧^{d+1}V), and m_{ji} = sum_k kappa_j(w_i ⊗ x_k) x_k for
/// the j-th kernel basis vector kappa_j. Throws if the basis is dependent.
LinearFormMatrix relations_matrix_of_subspace(const std::vector<ExtElement>& w);

/// dim im(U ⊗ V -> ∧^{d+1}V) for U spanned by the given elements.
std::size_t wedge_image_dim(const std::vector<ExtElement>& u);

/// c(U) = dim im(W ⊗ V) - dim im(U ⊗ V) for U = ker(w*) ⊆ W.
std::size_t hyperplane_codimension(const std::vector<ExtElement>& w, const Vec& w_star);

struct Prop3Stratum {
  int k = 0;                       // threshold on c(U)
  std::vector<PointCount> counts;  // #{U : c(U) >= k} per prime
  int dim_estimate = -1;
};

struct Prop3Report {
  std::size_t p = 0;
  std::vector<Prop3Stratum> strata;  // k = 1..p
  /// tallies[q index][c] = #{U : c(U) = c}
  std::vector<std::vector<std::uint64_t>> tallies;
  int witness_k = 0;  // 0 when none
  Verdict verdict = Verdict::unknown;
  bool bad_reduction = false;
  std::string note;
};

/// Enumerates the hyperplanes U ⊂ W over each F_q and looks for k in [1, p]
/// with an estimated (p - k)-dimensional family of U having c(U) >= k.
/// W over Q is reduced mod each q (bad reduction gives unknown); W over F_q
/// uses that prime alone.
Prop3Report prop3_witness(const std::vector<ExtElement>& w, const std::vector<std::uint32_t>& q_list,
                          std::uint64_t budget);

/// Points of P^{d-1}(F_q) with first nonzero coordinate 1, in a fixed order.
/// Calls visit(vec) for each; stops early if visit returns false.
template <class Visit>
void for_each_projective_point(const Field& f, std::size_t d, Visit&& visit);

}  // namespace linsyz

#include "linsyz/detail/projective.hpp"
