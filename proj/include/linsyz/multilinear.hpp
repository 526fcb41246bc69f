#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "linsyz/matrix.hpp"

namespace linsyz {

/// Subsets of {0..n-1} are bitmasks; bit t stands for x_{t+1}.
using Mask = std::uint32_t;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Basis of the k-th exterior power of an n-dimensional space: the
/// k-subsets in lexicographic order of their increasing tuples.
class ExteriorBasis {
 public:
  ExteriorBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return subsets_.size(); }
  Mask subset(std::size_t i) const { return subsets_[i]; }
  const std::vector<Mask>& subsets() const { return subsets_; }
  /// Position of a k-subset, or npos when |mask| != k.
  std::size_t index_of(Mask m) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int n_, k_;
  std::vector<Mask> subsets_;
  std::vector<std::size_t> lookup_;
};

/// Monomial basis of S^kV: exponent vectors of total degree k, ordered
/// lexicographically with larger leading exponents first
/// (x1^2, x1x2, x1x3, x2^2, ...).
class SymmetricBasis {
 public:
  using Exponents = std::vector<std::uint8_t>;

  SymmetricBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponents& monomial(std::size_t i) const { return monomials_[i]; }
  std::size_t index_of(const Exponents& e) const;

 private:
  int n_, k_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> lookup_;
};

/// An ambient vector space V of dimension n, or its dual V*.
struct VSpace {
  int n = 1;
  bool dual = false;
  friend bool operator==(const VSpace&, const VSpace&) = default;
};

/// Element of the exterior power of V (or of V* when space.dual).
struct ExtElement {
  Field field;
  VSpace space;
  int degree = 0;
  Vec coords;  // indexed by ExteriorBasis(n, degree)

  static ExtElement zero(const Field& f, VSpace s, int degree);
  /// The basis vector x_S (or e_S in the dual).
  static ExtElement basis(const Field& f, VSpace s, Mask subset);
  /// A degree-1 element from its n coordinates.
  static ExtElement linear(VSpace s, const Vec& v);
  bool is_zero() const;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Element of S^kV in the monomial basis.
struct SymElement {
  Field field;
  int n = 1;
  int degree = 0;
  Vec coords;  // indexed by SymmetricBasis(n, degree)

  static SymElement linear(const Vec& v);
  friend bool operator==(const SymElement&, const SymElement&) = default;
};

ExtElement operator+(const ExtElement& a, const ExtElement& b);
ExtElement operator*(const Scalar& s, const ExtElement& a);

/// Sign of merging disjoint S then T into sorted order.
int merge_sign(Mask s, Mask t);

/// u ∧ w. Throws FieldMismatch/invalid_argument when the ambient spaces differ.
ExtElement wedge(const ExtElement& u, const ExtElement& w);
/// Interior product of a covector f (n coordinates) into u.
/// iota_{e_j}(x_{s_1} ∧ ... ∧ x_{s_p}) = (-1)^{t-1} x_{S \ s_t} when s_t = j.
ExtElement contract(const ExtElement& u, const Vec& f);
/// Iterated contraction by a dual multivector: <e_T, .> applies
/// iota_{e_{t_1}} first, then iota_{e_{t_2}}, and so on.
ExtElement contract(const ExtElement& u, const ExtElement& beta);
SymElement sym_mult(const SymElement& u, const SymElement& w);

/// <tau, u> for tau a nonzero multiple of e_1 ∧ ... ∧ e_n: x_S maps to
/// sign(S, S^c) e_{S^c}, scaled by tau's coefficient. Result lives in the
/// opposite space (V <-> V*). Throws for tau = 0.
ExtElement hodge_contract(const ExtElement& u, const ExtElement& tau);

/// Matrix of the k-th exterior power of g : K^cols -> K^rows in the
/// lexicographic subset bases (entries are k x k minors).
Matrix exterior_power(const Matrix& g, int k);

/// Matrix of wedge-on-the-right by w: ∧^p -> ∧^{p+deg w}, u |-> u ∧ w.
Matrix right_wedge_matrix(const ExtElement& w, int p);

/// Coarse factor description for tensor products of multilinear spaces.
struct Factor {
  enum class Kind : std::uint8_t { exterior, symmetric, plain };
  Kind kind = Kind::plain;
  int n = 0;       // ambient dimension (plain: the dimension itself)
  int degree = 0;  // unused for plain
  std::size_t dim() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Element of a tensor product of factors; coordinates in the
/// lexicographic product basis (first factor slowest).
struct TensorElement {
  Field field;
  std::vector<Factor> shape;
  Vec coords;

  static TensorElement zero(const Field& f, std::vector<Factor> shape);
  std::size_t flat_index(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
};

}  // namespace linsyz
