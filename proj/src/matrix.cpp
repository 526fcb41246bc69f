#include "linsyz/matrix.hpp"

#include <ostream>
#include <stdexcept>

#include "linsyz/rng.hpp"

namespace linsyz {

namespace {

void require_same(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw FieldMismatch(std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x = s * x;
  return r;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same(f, rows[i][j].field(), "Matrix::from_rows");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    require_same(field_, v[i].field(), "Matrix::set_column");
    (*this)(i, j) = v[i];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(field_, o.field_, "Matrix product");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(field_, o.field_, "Matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same(field_, o.field_, "Matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
  return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  require_same(field_, o.field_, "hstack");
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  require_same(field_, o.field_, "vstack");
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

Matrix Matrix::reduce(const Field& target) const {
  Matrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].reduce(target);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

RrefResult rref(const Matrix& m) {
  Matrix a(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // forward elimination only
  Matrix a(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  const auto rr = rref(m);
  std::vector<Vec> basis;
  basis.reserve(rr.pivots.size());
  for (auto p : rr.pivots) basis.push_back(m.column(p));
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    if (!(b[i].field() == m.field())) throw FieldMismatch("solve: right-hand side field");
    aug(i, m.cols()) = b[i];
  }
  const auto rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

Matrix coordinates_in(const Matrix& basis, const Matrix& targets) {
  require_same(basis.field(), targets.field(), "coordinates_in");
  if (basis.rows() != targets.rows()) throw std::invalid_argument("coordinates_in: row mismatch");
  const auto rr = rref(basis.hstack(targets));
  // pivots must be exactly the basis columns
  if (rr.rank != basis.cols() || (rr.rank > 0 && rr.pivots.back() != rr.rank - 1))
    throw std::invalid_argument("coordinates_in: dependent basis or target outside its span");
  Matrix x(basis.field(), basis.cols(), targets.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j) x(i, j) = rr.reduced(i, basis.cols() + j);
  return x;
}

std::vector<Vec> integer_kernel(const Matrix& m) {
  const Field& f = m.field();
  if (!f.is_rationals()) throw std::invalid_argument("integer_kernel needs rational entries");
  const std::size_t rows = m.rows(), w = m.cols();
  // B = A U with U unimodular; column operations only
  std::vector<std::vector<mpz_class>> b(rows, std::vector<mpz_class>(w)), u(w, std::vector<mpz_class>(w));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < w; ++j) den = lcm(den, m(i, j).rational().get_den());
    for (std::size_t j = 0; j < w; ++j) b[i][j] = mpz_class(m(i, j).rational() * den);
  }
  for (std::size_t j = 0; j < w; ++j) u[j][j] = 1;
  auto column_op = [&](std::size_t x, std::size_t y, const mpz_class& a, const mpz_class& bb, const mpz_class& c,
                       const mpz_class& d) {
    // (col x, col y) <- (a x + b y, c x + d y), determinant +-1
    for (auto* mat : {&b, &u})
      for (auto& row : *mat) {
        const mpz_class nx = a * row[x] + bb * row[y];
        const mpz_class ny = c * row[x] + d * row[y];
        row[x] = nx;
        row[y] = ny;
      }
  };
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < w; ++i) {
    for (std::size_t j = k + 1; j < w; ++j) {
      if (b[i][j] == 0) continue;
      if (b[i][k] == 0) {
        column_op(k, j, 0, 1, 1, 0);
        continue;
      }
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[i][k].get_mpz_t(), b[i][j].get_mpz_t());
      const mpz_class bk = b[i][k] / g, bj = b[i][j] / g;
      column_op(k, j, s, t, -bj, bk);
    }
    if (b[i][k] != 0) ++k;
  }
  std::vector<Vec> out;
  for (std::size_t j = k; j < w; ++j) {
    Vec v;
    mpz_class g = 0;
    for (std::size_t r = 0; r < w; ++r) g = gcd(g, u[r][j]);
    for (std::size_t r = 0; r < w; ++r) v.push_back(f.from_mpz(u[r][j] / g));
    out.push_back(std::move(v));
  }
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a(m);
  Scalar det = m.field().one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, std::uint64_t seed) {
  Rng rng(seed, (static_cast<std::uint64_t>(rows) << 32) ^ cols);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(f);
  return m;
}

}  // namespace linsyz
