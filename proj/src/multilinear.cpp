#include "linsyz/multilinear.hpp"

#include <bit>
#include <stdexcept>

namespace linsyz {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void lex_subsets(int n, int k, int start, Mask acc, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int t = start; t <= n - k; ++t) lex_subsets(n, k - 1, t + 1, acc | (Mask{1} << t), out);
}

void lex_monomials(int n, int k, int pos, SymmetricBasis::Exponents& cur,
                   std::vector<SymmetricBasis::Exponents>& out) {
  if (pos == n - 1) {
    cur[pos] = static_cast<std::uint8_t>(k);
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = static_cast<std::uint8_t>(e);
    lex_monomials(n, k - e, pos + 1, cur, out);
  }
}

int sign_of(int parity) { return (parity & 1) ? -1 : 1; }

void require_same_space(const ExtElement& u, const ExtElement& w) {
  if (!(u.field == w.field)) throw FieldMismatch("exterior elements over different fields");
  if (!(u.space == w.space)) throw std::invalid_argument("exterior elements over different ambient spaces");
}

Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

}  // namespace

ExteriorBasis::ExteriorBasis(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > 20) throw std::invalid_argument("exterior basis supports 0 <= n <= 20");
  if (k >= 0 && k <= n) lex_subsets(n, k, 0, 0, subsets_);
  lookup_.assign(std::size_t{1} << n, npos);
  for (std::size_t i = 0; i < subsets_.size(); ++i) lookup_[subsets_[i]] = i;
}

std::size_t ExteriorBasis::index_of(Mask m) const {
  if (m >= lookup_.size()) return npos;
  return lookup_[m];
}

SymmetricBasis::SymmetricBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0 || k > 255) throw std::invalid_argument("symmetric basis needs n >= 1, 0 <= k <= 255");
  Exponents cur(static_cast<std::size_t>(n), 0);
  lex_monomials(n, k, 0, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t SymmetricBasis::index_of(const Exponents& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::invalid_argument("exponent vector not in this symmetric basis");
  return it->second;
}

ExtElement ExtElement::zero(const Field& f, VSpace s, int degree) {
  return ExtElement{f, s, degree, zero_vec(f, binomial(s.n, degree < 0 ? s.n + 1 : degree))};
}

ExtElement ExtElement::basis(const Field& f, VSpace s, Mask subset) {
  const int k = std::popcount(subset);
  ExtElement e = zero(f, s, k);
  const auto idx = ExteriorBasis(s.n, k).index_of(subset);
  if (idx == ExteriorBasis::npos) throw std::invalid_argument("subset outside the ambient space");
  e.coords[idx] = f.one();
  return e;
}

ExtElement ExtElement::linear(VSpace s, const Vec& v) {
  if (v.size() != static_cast<std::size_t>(s.n)) throw std::invalid_argument("linear element needs n coordinates");
  return ExtElement{v.front().field(), s, 1, v};
}

bool ExtElement::is_zero() const { return linsyz::is_zero(coords); }

SymElement SymElement::linear(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("linear element needs n >= 1 coordinates");
  const int n = static_cast<int>(v.size());
  SymmetricBasis b(n, 1);
  Vec c = zero_vec(v.front().field(), b.size());
  for (int t = 0; t < n; ++t) {
    SymmetricBasis::Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(t)] = 1;
    c[b.index_of(e)] = v[static_cast<std::size_t>(t)];
  }
  return SymElement{v.front().field(), n, 1, std::move(c)};
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same_space(a, b);
  if (a.degree != b.degree) throw std::invalid_argument("adding exterior elements of different degrees");
  return ExtElement{a.field, a.space, a.degree, a.coords + b.coords};
}

ExtElement operator*(const Scalar& s, const ExtElement& a) {
  return ExtElement{a.field, a.space, a.degree, s * a.coords};
}

int merge_sign(Mask s, Mask t) {
  // inversions: pairs (i in S, j in T) with i > j
  int inv = 0;
  while (t) {
    const int j = std::countr_zero(t);
    t &= t - 1;
    inv += std::popcount(s >> (j + 1));
  }
  return sign_of(inv);
}

ExtElement wedge(const ExtElement& u, const ExtElement& w) {
  require_same_space(u, w);
  const int n = u.space.n;
  ExtElement out = ExtElement::zero(u.field, u.space, u.degree + w.degree);
  if (u.degree + w.degree > n) return out;
  const ExteriorBasis bu(n, u.degree), bw(n, w.degree), bo(n, u.degree + w.degree);
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (u.coords[i].is_zero()) continue;
    const Mask s = bu.subset(i);
    for (std::size_t j = 0; j < bw.size(); ++j) {
      const Mask t = bw.subset(j);
      if ((s & t) || w.coords[j].is_zero()) continue;
      Scalar c = u.coords[i] * w.coords[j];
      if (merge_sign(s, t) < 0) c = -c;
      out.coords[bo.index_of(s | t)] += c;
    }
  }
  return out;
}

ExtElement contract(const ExtElement& u, const Vec& f) {
  const int n = u.space.n;
  if (f.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("covector length must equal n");
  if (u.degree < 1) throw std::invalid_argument("contraction needs degree >= 1");
  ExtElement out = ExtElement::zero(u.field, u.space, u.degree - 1);
  const ExteriorBasis bu(n, u.degree), bo(n, u.degree - 1);
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (u.coords[i].is_zero()) continue;
    const Mask s = bu.subset(i);
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1) || f[static_cast<std::size_t>(j)].is_zero()) continue;
      const int before = std::popcount(s & ((Mask{1} << j) - 1));
      Scalar c = u.coords[i] * f[static_cast<std::size_t>(j)];
      if (before & 1) c = -c;
      out.coords[bo.index_of(s & ~(Mask{1} << j))] += c;
    }
  }
  return out;
}

ExtElement contract(const ExtElement& u, const ExtElement& beta) {
  if (!(u.field == beta.field)) throw FieldMismatch("contraction over different fields");
  if (u.space.n != beta.space.n || u.space.dual == beta.space.dual)
    throw std::invalid_argument("contraction pairs a space with its dual");
  const int n = u.space.n;
  if (beta.degree > u.degree) return ExtElement::zero(u.field, u.space, u.degree - beta.degree);
  ExtElement out = ExtElement::zero(u.field, u.space, u.degree - beta.degree);
  const ExteriorBasis bb(n, beta.degree);
  for (std::size_t i = 0; i < bb.size(); ++i) {
    if (beta.coords[i].is_zero()) continue;
    ExtElement cur = u;
    Mask t = bb.subset(i);
    while (t) {
      const int j = std::countr_zero(t);
      t &= t - 1;
      Vec f = zero_vec(u.field, static_cast<std::size_t>(n));
      f[static_cast<std::size_t>(j)] = u.field.one();
      cur = contract(cur, f);
    }
    out = out + beta.coords[i] * cur;
  }
  return out;
}

SymElement sym_mult(const SymElement& u, const SymElement& w) {
  if (!(u.field == w.field)) throw FieldMismatch("symmetric elements over different fields");
  if (u.n != w.n) throw std::invalid_argument("symmetric elements over different ambient spaces");
  const SymmetricBasis bu(u.n, u.degree), bw(w.n, w.degree), bo(u.n, u.degree + w.degree);
  SymElement out{u.field, u.n, u.degree + w.degree, zero_vec(u.field, bo.size())};
  SymmetricBasis::Exponents e(static_cast<std::size_t>(u.n));
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < bw.size(); ++j) {
      if (w.coords[j].is_zero()) continue;
      for (std::size_t t = 0; t < e.size(); ++t)
        e[t] = static_cast<std::uint8_t>(bu.monomial(i)[t] + bw.monomial(j)[t]);
      out.coords[bo.index_of(e)] += u.coords[i] * w.coords[j];
    }
  }
  return out;
}

ExtElement hodge_contract(const ExtElement& u, const ExtElement& tau) {
  const int n = u.space.n;
  if (tau.space.n != n || tau.space.dual == u.space.dual || tau.degree != n)
    throw std::invalid_argument("tau must be a top-degree element of the dual space");
  if (!(tau.field == u.field)) throw FieldMismatch("hodge_contract over different fields");
  if (tau.is_zero()) throw std::invalid_argument("tau must be nonzero");
  const Scalar& c = tau.coords[0];
  VSpace target{n, !u.space.dual};
  ExtElement out = ExtElement::zero(u.field, target, n - u.degree);
  const ExteriorBasis bu(n, u.degree), bo(n, n - u.degree);
  const Mask all = full_mask(n);
  for (std::size_t i = 0; i < bu.size(); ++i) {
    if (u.coords[i].is_zero()) continue;
    const Mask s = bu.subset(i);
    Scalar v = u.coords[i] * c;
    if (merge_sign(s, all & ~s) < 0) v = -v;
    out.coords[bo.index_of(all & ~s)] += v;
  }
  return out;
}

Matrix exterior_power(const Matrix& g, int k) {
  const ExteriorBasis br(static_cast<int>(g.rows()), k), bc(static_cast<int>(g.cols()), k);
  Matrix out(g.field(), br.size(), bc.size());
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < br.size(); ++i) {
    ri.clear();
    for (Mask m = br.subset(i); m; m &= m - 1) ri.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    const Matrix rows = g.select_rows(ri);
    for (std::size_t j = 0; j < bc.size(); ++j) {
      ci.clear();
      for (Mask m = bc.subset(j); m; m &= m - 1) ci.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      out(i, j) = k == 0 ? g.field().one() : determinant(rows.select_columns(ci));
    }
  }
  return out;
}

Matrix right_wedge_matrix(const ExtElement& w, int p) {
  const int n = w.space.n;
  const ExteriorBasis bs(n, p), bt(n, p + w.degree);
  Matrix out(w.field, bt.size(), bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const ExtElement r = wedge(ExtElement::basis(w.field, w.space, bs.subset(i)), w);
    out.set_column(i, r.coords);
  }
  return out;
}

std::size_t Factor::dim() const {
  switch (kind) {
    case Kind::exterior:
      return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(degree));
    case Kind::symmetric:
      return binomial(static_cast<std::uint64_t>(n + degree - 1), static_cast<std::uint64_t>(degree));
    case Kind::plain:
      return static_cast<std::size_t>(n);
  }
  return 0;
}

TensorElement TensorElement::zero(const Field& f, std::vector<Factor> shape) {
  std::size_t d = 1;
  for (const auto& fa : shape) d *= fa.dim();
  return TensorElement{f, std::move(shape), zero_vec(f, d)};
}

std::size_t TensorElement::flat_index(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape.size()) throw std::invalid_argument("tensor index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t t = 0; t < shape.size(); ++t) {
    const std::size_t d = shape[t].dim();
    if (idx[t] >= d) throw std::out_of_range("tensor index out of range");
    flat = flat * d + idx[t];
  }
  return flat;
}

bool TensorElement::is_zero() const { return linsyz::is_zero(coords); }

}  // namespace linsyz
