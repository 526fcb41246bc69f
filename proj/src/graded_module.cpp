#include "linsyz/graded_module.hpp"

#include <sstream>

namespace linsyz {

GradedModule::GradedModule(Field f, int n, int q_min, std::vector<std::size_t> dims,
                           std::vector<std::vector<Matrix>> mult, bool check)
    : field_(f), n_(n), q_min_(q_min), dims_(std::move(dims)), mult_(std::move(mult)) {
  if (n_ < 1 || n_ > 20) throw InvalidModule("module needs 1 <= n <= 20");
  if (dims_.empty()) throw InvalidModule("module needs at least one degree");
  if (mult_.size() + 1 != dims_.size())
    throw InvalidModule("expected " + std::to_string(dims_.size() - 1) + " multiplication blocks, got " +
                        std::to_string(mult_.size()));
  for (std::size_t t = 0; t < mult_.size(); ++t) {
    if (mult_[t].size() != static_cast<std::size_t>(n_))
      throw InvalidModule("degree " + std::to_string(q_min_ + static_cast<int>(t)) + ": expected " +
                          std::to_string(n_) + " variable actions");
    for (int k = 0; k < n_; ++k) {
      const Matrix& a = mult_[t][static_cast<std::size_t>(k)];
      if (a.rows() != dims_[t + 1] || a.cols() != dims_[t])
        throw InvalidModule("mult q=" + std::to_string(q_min_ + static_cast<int>(t)) + " k=" +
                            std::to_string(k + 1) + ": expected " + std::to_string(dims_[t + 1]) + "x" +
                            std::to_string(dims_[t]) + " matrix");
      if (!(a.field() == field_)) throw FieldMismatch("module action field");
    }
  }
  if (check) {
    const auto r = validate_module(*this);
    if (!r.pass) throw InvalidModule(r.counterexample);
  }
}

GradedModule::GradedModule(Field f, int n, int q_min, std::vector<std::size_t> dims,
                           std::vector<std::vector<Matrix>> mult)
    : GradedModule(f, n, q_min, std::move(dims), std::move(mult), true) {}

GradedModule GradedModule::unchecked(Field f, int n, int q_min, std::vector<std::size_t> dims,
                                     std::vector<std::vector<Matrix>> mult) {
  return GradedModule(f, n, q_min, std::move(dims), std::move(mult), false);
}

GradedModule GradedModule::trivial(const Field& f, int n) { return GradedModule(f, n, 0, {1}, {}); }

std::size_t GradedModule::dim(int q) const {
  if (q < q_min_ || q > q_max()) return 0;
  return dims_[static_cast<std::size_t>(q - q_min_)];
}

Matrix GradedModule::action(int q, int k) const {
  if (k < 0 || k >= n_) throw std::out_of_range("variable index");
  if (q < q_min_ || q >= q_max()) return Matrix(field_, dim(q + 1), dim(q));
  return mult_[static_cast<std::size_t>(q - q_min_)][static_cast<std::size_t>(k)];
}

Matrix GradedModule::action(int q, const Vec& l) const {
  if (l.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("linear form needs n coordinates");
  Matrix out(field_, dim(q + 1), dim(q));
  if (q < q_min_ || q >= q_max()) return out;
  for (int k = 0; k < n_; ++k) {
    const Scalar& c = l[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Matrix& a = mult_[static_cast<std::size_t>(q - q_min_)][static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += c * a(i, j);
  }
  return out;
}

GradedModule GradedModule::reduce(const Field& target) const {
  std::vector<std::vector<Matrix>> mult;
  for (const auto& blk : mult_) {
    std::vector<Matrix> r;
    for (const auto& a : blk) r.push_back(a.reduce(target));
    mult.push_back(std::move(r));
  }
  return GradedModule(target, n_, q_min_, dims_, std::move(mult), false);
}

GradedModule GradedModule::truncate(int lo, int hi) const {
  lo = std::max(lo, q_min_);
  hi = std::min(hi, q_max());
  if (lo > hi) throw std::invalid_argument("empty truncation window");
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> mult;
  for (int q = lo; q <= hi; ++q) {
    dims.push_back(dim(q));
    if (q < hi) mult.push_back(mult_[static_cast<std::size_t>(q - q_min_)]);
  }
  return GradedModule(field_, n_, lo, std::move(dims), std::move(mult), false);
}

ModuleCheck validate_module(const GradedModule& m) {
  ModuleCheck out;
  for (int q = m.q_min(); q + 2 <= m.q_max(); ++q) {
    if (m.dim(q) == 0 || m.dim(q + 2) == 0) continue;
    for (int k = 0; k < m.n(); ++k)
      for (int l = k + 1; l < m.n(); ++l) {
        const Matrix kl = m.action(q + 1, k) * m.action(q, l);
        const Matrix lk = m.action(q + 1, l) * m.action(q, k);
        if (kl == lk) continue;
        std::ostringstream os;
        os << "commutativity fails at q=" << q << ": x" << (k + 1) << "*x" << (l + 1) << " != x" << (l + 1)
           << "*x" << (k + 1);
        for (std::size_t i = 0; i < kl.rows(); ++i)
          for (std::size_t j = 0; j < kl.cols(); ++j)
            if (!(kl(i, j) == lk(i, j))) {
              os << " (entry row " << (i + 1) << " col " << (j + 1) << ": " << kl(i, j).to_string() << " vs "
                 << lk(i, j).to_string() << ")";
              out.pass = false;
              out.counterexample = os.str();
              return out;
            }
      }
  }
  return out;
}

namespace {

Matrix columns_matrix(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

Submodule submodule_generated(const GradedModule& m, const Matrix& s, int degree) {
  if (degree < m.q_min() || degree > m.q_max()) throw std::invalid_argument("generating degree outside the module");
  if (s.rows() != m.dim(degree)) throw std::invalid_argument("generating subspace has the wrong ambient dimension");
  const Field& f = m.field();
  SubmoduleEmbedding emb;
  emb.q_min = m.q_min();
  for (int q = m.q_min(); q <= m.q_max(); ++q) {
    if (q < degree) {
      emb.basis.emplace_back(f, m.dim(q), 0);
    } else if (q == degree) {
      emb.basis.push_back(columns_matrix(f, m.dim(q), image_basis(s)));
    } else {
      const Matrix& prev = emb.basis.back();
      Matrix gens(f, m.dim(q), 0);
      for (int k = 0; k < m.n(); ++k) gens = gens.hstack(m.action(q - 1, k) * prev);
      emb.basis.push_back(columns_matrix(f, m.dim(q), image_basis(gens)));
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& b : emb.basis) dims.push_back(b.cols());
  std::vector<std::vector<Matrix>> mult;
  for (int q = m.q_min(); q < m.q_max(); ++q) {
    const std::size_t t = static_cast<std::size_t>(q - m.q_min());
    std::vector<Matrix> blk;
    for (int k = 0; k < m.n(); ++k) {
      const Matrix img = m.action(q, k) * emb.basis[t];
      blk.push_back(emb.basis[t + 1].cols() == 0 ? Matrix(f, 0, emb.basis[t].cols())
                                                 : coordinates_in(emb.basis[t + 1], img));
    }
    mult.push_back(std::move(blk));
  }
  GradedModule sub(f, m.n(), m.q_min(), std::move(dims), std::move(mult));
  return Submodule{std::move(emb), std::move(sub)};
}

Quotient quotient_module(const GradedModule& m, const SubmoduleEmbedding& n) {
  const Field& f = m.field();
  if (n.q_min != m.q_min() || n.basis.size() != m.dims().size())
    throw std::invalid_argument("submodule window must match the module");
  std::vector<Matrix> proj, section;
  std::vector<std::size_t> dims;
  for (int q = m.q_min(); q <= m.q_max(); ++q) {
    const Matrix& b = n.basis[static_cast<std::size_t>(q - m.q_min())];
    if (b.rows() != m.dim(q)) throw std::invalid_argument("submodule basis has wrong ambient dimension");
    if (rank(b) != b.cols()) throw std::invalid_argument("submodule basis columns must be independent");
    // rows of P span the annihilator of N_q
    const auto ann = kernel_basis(b.transpose());
    Matrix p = Matrix::from_rows(f, m.dim(q), ann);
    Matrix s(f, m.dim(q), ann.size());
    for (std::size_t i = 0; i < ann.size(); ++i) {
      Vec e = zero_vec(f, ann.size());
      e[i] = f.one();
      s.set_column(i, *solve(p, e));
    }
    dims.push_back(ann.size());
    proj.push_back(std::move(p));
    section.push_back(std::move(s));
  }
  std::vector<std::vector<Matrix>> mult;
  for (int q = m.q_min(); q < m.q_max(); ++q) {
    const std::size_t t = static_cast<std::size_t>(q - m.q_min());
    std::vector<Matrix> blk;
    for (int k = 0; k < m.n(); ++k) {
      const Matrix a = m.action(q, k);
      if (!(proj[t + 1] * (a * n.basis[t])).is_zero())
        throw InvalidModule("subspace is not closed under x" + std::to_string(k + 1) + " in degree " +
                            std::to_string(q));
      blk.push_back(proj[t + 1] * a * section[t]);
    }
    mult.push_back(std::move(blk));
  }
  GradedModule quot(f, m.n(), m.q_min(), std::move(dims), std::move(mult));
  return Quotient{std::move(quot), std::move(proj)};
}

}  // namespace linsyz
