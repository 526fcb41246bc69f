#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linsyz/matrix.hpp"

namespace linsyz {

struct InvalidModule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A graded S(V)-module given by finitely many pieces M_q, q in [q_min, q_max],
/// and the action of each variable x_k as a dim M_{q+1} x dim M_q matrix.
/// Pieces outside the window are zero.
class GradedModule {
 public:
  /// mult[q - q_min][k] is the action of x_{k+1} on M_q, for q in
  /// [q_min, q_max - 1]. Throws InvalidModule (with a counterexample) if the
  /// actions do not commute or shapes are wrong.
  GradedModule(Field f, int n, int q_min, std::vector<std::size_t> dims,
               std::vector<std::vector<Matrix>> mult);
  /// Same data, shape-checked only.
  static GradedModule unchecked(Field f, int n, int q_min, std::vector<std::size_t> dims,
                                std::vector<std::vector<Matrix>> mult);
  /// The module k concentrated in degree 0.
  static GradedModule trivial(const Field& f, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int q_min() const { return q_min_; }
  int q_max() const { return q_min_ + static_cast<int>(dims_.size()) - 1; }
  /// 0 outside the window.
  std::size_t dim(int q) const;
  /// Action of x_{k+1}: M_q -> M_{q+1}; a zero matrix of the right shape
  /// outside the window.
  Matrix action(int q, int k) const;
  /// Action of the linear form sum_k l_k x_k.
  Matrix action(int q, const Vec& l) const;

  GradedModule reduce(const Field& target) const;
  /// Pieces in [lo, hi] only.
  GradedModule truncate(int lo, int hi) const;

  const std::vector<std::size_t>& dims() const { return dims_; }

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  GradedModule(Field f, int n, int q_min, std::vector<std::size_t> dims,
               std::vector<std::vector<Matrix>> mult, bool check);

  Field field_;
  int n_;
  int q_min_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> mult_;
};

struct ModuleCheck {
  bool pass = true;
  std::string counterexample;  // empty on pass
};

/// x_k x_l = x_l x_k on every piece.
ModuleCheck validate_module(const GradedModule& m);

/// A degreewise subspace N_q ⊆ M_q; basis[q - q_min] has independent columns
/// in M_q coordinates (possibly zero columns wide).
struct SubmoduleEmbedding {
  int q_min = 0;
  std::vector<Matrix> basis;
};

struct Submodule {
  SubmoduleEmbedding embedding;
  GradedModule module;
};

/// The submodule generated by the span of the columns of `s` (dim M_degree
/// rows), over the same degree window as m.
Submodule submodule_generated(const GradedModule& m, const Matrix& s, int degree = 0);

struct Quotient {
  GradedModule module;
  /// projection[q - q_min] : M_q -> M_q / N_q.
  std::vector<Matrix> projection;
};

/// M / N. Throws InvalidModule if N is not closed under the action.
Quotient quotient_module(const GradedModule& m, const SubmoduleEmbedding& n);

}  // namespace linsyz
