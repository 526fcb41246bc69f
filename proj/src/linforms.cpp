#include "linsyz/linforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "linsyz/rng.hpp"

namespace linsyz {

LinearFormMatrix::LinearFormMatrix(Field f, std::size_t b, std::size_t a, int n)
    : field_(f), b_(b), a_(a), n_(n), coeff_(zero_vec(f, b * a * static_cast<std::size_t>(n))) {
  if (a == 0 || b == 0 || n < 1) throw std::invalid_argument("linear form matrix needs a, b, n >= 1");
}

Scalar& LinearFormMatrix::coeff(std::size_t j, std::size_t i, int k) {
  return coeff_[(j * a_ + i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k)];
}

const Scalar& LinearFormMatrix::coeff(std::size_t j, std::size_t i, int k) const {
  return coeff_[(j * a_ + i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k)];
}

Vec LinearFormMatrix::entry(std::size_t j, std::size_t i) const {
  if (j >= b_ || i >= a_) throw std::out_of_range("linear form matrix entry");
  const auto base = static_cast<std::ptrdiff_t>((j * a_ + i) * static_cast<std::size_t>(n_));
  return Vec(coeff_.begin() + base, coeff_.begin() + base + n_);
}

void LinearFormMatrix::set_entry(std::size_t j, std::size_t i, const Vec& form) {
  if (form.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("linear form needs n coordinates");
  for (int k = 0; k < n_; ++k) {
    if (!(form[static_cast<std::size_t>(k)].field() == field_)) throw FieldMismatch("linear form entry field");
    coeff(j, i, k) = form[static_cast<std::size_t>(k)];
  }
}

Matrix LinearFormMatrix::as_matrix() const {
  Matrix m(field_, b_ * static_cast<std::size_t>(n_), a_);
  for (std::size_t j = 0; j < b_; ++j)
    for (int k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < a_; ++i) m(j * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k), i) = coeff(j, i, k);
  return m;
}

LinearFormMatrix LinearFormMatrix::reduce(const Field& target) const {
  LinearFormMatrix r(target, b_, a_, n_);
  for (std::size_t t = 0; t < coeff_.size(); ++t) r.coeff_[t] = coeff_[t].reduce(target);
  return r;
}

Matrix generalized_column(const LinearFormMatrix& m, const Vec& alpha) {
  if (alpha.size() != m.a()) throw std::invalid_argument("generalized column: alpha must have a coordinates");
  if (is_zero(alpha)) throw std::invalid_argument("generalized column: alpha must be nonzero");
  Matrix out(m.field(), static_cast<std::size_t>(m.n()), m.b());
  for (std::size_t j = 0; j < m.b(); ++j)
    for (std::size_t i = 0; i < m.a(); ++i) {
      if (alpha[i].is_zero()) continue;
      for (int k = 0; k < m.n(); ++k) out(static_cast<std::size_t>(k), j) += alpha[i] * m.coeff(j, i, k);
    }
  return out;
}

Matrix generalized_row(const LinearFormMatrix& m, const Vec& beta) {
  if (beta.size() != m.b()) throw std::invalid_argument("generalized row: beta must have b coordinates");
  if (is_zero(beta)) throw std::invalid_argument("generalized row: beta must be nonzero");
  Matrix out(m.field(), static_cast<std::size_t>(m.n()), m.a());
  for (std::size_t i = 0; i < m.a(); ++i)
    for (std::size_t j = 0; j < m.b(); ++j) {
      if (beta[j].is_zero()) continue;
      for (int k = 0; k < m.n(); ++k) out(static_cast<std::size_t>(k), i) += beta[j] * m.coeff(j, i, k);
    }
  return out;
}

namespace {

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inv = 0;
  for (std::size_t x = 0; x < perm.size(); ++x)
    for (std::size_t y = x + 1; y < perm.size(); ++y)
      if (perm[x] > perm[y]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace

Vec full_exterior(const LinearFormMatrix& m, const std::vector<std::size_t>& columns) {
  const int k = static_cast<int>(columns.size());
  const int n = m.n();
  const VSpace v{n, false};
  const SymmetricBasis sb(static_cast<int>(m.b()), k);
  const std::size_t ext_dim = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  Vec out = zero_vec(m.field(), sb.size() * ext_dim);
  if (ext_dim == 0) return out;

  std::vector<ExtElement> forms;  // forms[j * k + t] = m_{j, columns[t]}
  for (std::size_t j = 0; j < m.b(); ++j)
    for (int t = 0; t < k; ++t) forms.push_back(ExtElement::linear(v, m.entry(j, columns[static_cast<std::size_t>(t)])));

  std::vector<std::size_t> seq;
  for (std::size_t mu = 0; mu < sb.size(); ++mu) {
    seq.clear();
    for (std::size_t j = 0; j < m.b(); ++j)
      for (int e = 0; e < sb.monomial(mu)[j]; ++e) seq.push_back(j);
    // each distinct rearrangement of the row multiset contributes once
    do {
      ExtElement prod = ExtElement::basis(m.field(), v, 0);
      for (int t = 0; t < k; ++t) prod = wedge(prod, forms[seq[static_cast<std::size_t>(t)] * static_cast<std::size_t>(k) + static_cast<std::size_t>(t)]);
      for (std::size_t s = 0; s < ext_dim; ++s) out[mu * ext_dim + s] += prod.coords[s];
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return out;
}

MinorMap minor_map(const LinearFormMatrix& m, int k, MinorKind kind) {
  if (k < 1 || static_cast<std::size_t>(k) > m.a()) throw std::invalid_argument("minor size k must satisfy 1 <= k <= a");
  if (kind == MinorKind::symmetric && static_cast<std::size_t>(k) > m.b())
    throw std::invalid_argument("symmetric minors need k <= b");
  const int n = m.n();
  const ExteriorBasis cols_a(static_cast<int>(m.a()), k);

  if (kind == MinorKind::exterior) {
    const SymmetricBasis sb(static_cast<int>(m.b()), k);
    const std::size_t ext_dim = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    Matrix out(m.field(), ext_dim, cols_a.size() * sb.size());
    for (std::size_t ci = 0; ci < cols_a.size(); ++ci) {
      const Vec full = full_exterior(m, mask_indices(cols_a.subset(ci)));
      for (std::size_t mu = 0; mu < sb.size(); ++mu)
        for (std::size_t s = 0; s < ext_dim; ++s) out(s, ci * sb.size() + mu) = full[mu * ext_dim + s];
    }
    return MinorMap{kind, k, std::move(out)};
  }

  const ExteriorBasis rows_b(static_cast<int>(m.b()), k);
  const SymmetricBasis target(n, k);
  Matrix out(m.field(), target.size(), cols_a.size() * rows_b.size());
  std::vector<SymElement> forms(m.b() * m.a(), SymElement{m.field(), n, 1, {}});
  for (std::size_t j = 0; j < m.b(); ++j)
    for (std::size_t i = 0; i < m.a(); ++i) forms[j * m.a() + i] = SymElement::linear(m.entry(j, i));

  for (std::size_t ci = 0; ci < cols_a.size(); ++ci) {
    const auto is = mask_indices(cols_a.subset(ci));
    for (std::size_t rj = 0; rj < rows_b.size(); ++rj) {
      const auto js = mask_indices(rows_b.subset(rj));
      std::vector<std::size_t> perm(static_cast<std::size_t>(k));
      for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = t;
      SymElement det{m.field(), n, k, zero_vec(m.field(), target.size())};
      do {
        SymElement prod{m.field(), n, 0, {m.field().one()}};
        for (std::size_t t = 0; t < perm.size(); ++t) prod = sym_mult(prod, forms[js[perm[t]] * m.a() + is[t]]);
        const Scalar sgn = m.field().from_int(permutation_sign(perm));
        for (std::size_t s = 0; s < target.size(); ++s) det.coords[s] += sgn * prod.coords[s];
      } while (std::next_permutation(perm.begin(), perm.end()));
      out.set_column(ci * rows_b.size() + rj, det.coords);
    }
  }
  return MinorMap{kind, k, std::move(out)};
}

LinearFormMatrix project(const LinearFormMatrix& m, const Matrix& pi) {
  if (pi.cols() != static_cast<std::size_t>(m.n())) throw std::invalid_argument("projection must have n columns");
  if (!(pi.field() == m.field())) throw FieldMismatch("projection field");
  LinearFormMatrix out(m.field(), m.b(), m.a(), static_cast<int>(pi.rows()));
  for (std::size_t j = 0; j < m.b(); ++j)
    for (std::size_t i = 0; i < m.a(); ++i) out.set_entry(j, i, pi * m.entry(j, i));
  return out;
}

Projection general_projection(const LinearFormMatrix& m, int target_dim, std::uint64_t seed) {
  if (target_dim < 1 || target_dim > m.n()) throw std::invalid_argument("projection target dimension must be in [1, n]");
  Rng rng(seed, 0x70726f6aULL);
  for (;;) {
    Matrix pi(m.field(), static_cast<std::size_t>(target_dim), static_cast<std::size_t>(m.n()));
    for (std::size_t r = 0; r < pi.rows(); ++r)
      for (std::size_t c = 0; c < pi.cols(); ++c) pi(r, c) = rng.scalar(m.field());
    if (rank(pi) == static_cast<std::size_t>(target_dim)) {
      LinearFormMatrix image = project(m, pi);
      return Projection{std::move(pi), std::move(image)};
    }
  }
}

Prop1Report prop1_check(const LinearFormMatrix& m, std::uint64_t budget, bool assume_hypothesis) {
  Prop1Report rep;
  rep.expected = binomial(m.a() + m.b() - 1, m.a());
  const auto minors = minor_map(m, static_cast<int>(m.a()), MinorKind::exterior);
  rep.minor_rank = rank(minors.matrix);

  bool enumerable = false;
  if (m.field().is_prime()) {
    const std::uint64_t q = m.field().characteristic();
    std::uint64_t points = 0, qp = 1;
    for (std::size_t t = 0; t < m.a() && points <= budget; ++t) {
      points += qp;
      qp = qp > budget ? budget + 1 : qp * q;
    }
    enumerable = points <= budget;
  }
  if (enumerable) {
    rep.hypothesis = Tristate::yes;
    for_each_projective_point(m.field(), m.a(), [&](const Vec& alpha) {
      ++rep.columns_checked;
      if (rank(generalized_column(m, alpha)) != m.b()) {
        rep.hypothesis = Tristate::no;
        return false;
      }
      return true;
    });
  } else if (assume_hypothesis) {
    rep.hypothesis = Tristate::yes;
  }
  rep.pass = rep.hypothesis == Tristate::yes && rep.minor_rank == rep.expected;
  return rep;
}

Matrix syzygy_map(const LinearFormMatrix& m, int degree) {
  const int n = m.n();
  if (degree < 0 || degree > n - 1) throw std::invalid_argument("syzygy map degree must be in [0, n-1]");
  const VSpace v{n, false};
  const ExteriorBasis src(n, degree), dst(n, degree + 1);
  Matrix out(m.field(), dst.size() * m.b(), src.size() * m.a());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const ExtElement omega = ExtElement::basis(m.field(), v, src.subset(s));
    for (std::size_t i = 0; i < m.a(); ++i)
      for (std::size_t j = 0; j < m.b(); ++j) {
        const ExtElement img = wedge(omega, ExtElement::linear(v, m.entry(j, i)));
        for (std::size_t t = 0; t < dst.size(); ++t)
          if (!img.coords[t].is_zero()) out(t * m.b() + j, s * m.a() + i) = img.coords[t];
      }
  }
  return out;
}

Prop2Report prop2_check(const LinearFormMatrix& m, int degree) {
  Prop2Report rep;
  const int n = m.n();
  const VSpace v{n, false};
  const auto kernel = kernel_basis(syzygy_map(m, degree));
  const auto gens = image_basis(minor_map(m, static_cast<int>(m.a()), MinorKind::exterior).matrix);
  rep.kernel_dim = kernel.size();
  rep.generators = gens.size();
  const std::size_t src_dim = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(degree));
  for (const auto& alpha : kernel) {
    for (std::size_t i = 0; i < m.a(); ++i) {
      ExtElement component = ExtElement::zero(m.field(), v, degree);
      for (std::size_t s = 0; s < src_dim; ++s) component.coords[s] = alpha[s * m.a() + i];
      for (const auto& g : gens) {
        const ExtElement phi{m.field(), v, static_cast<int>(m.a()), g};
        ++rep.products_checked;
        if (!wedge(phi, component).is_zero()) rep.pass = false;
      }
    }
  }
  return rep;
}

Matrix companion_map(const LinearFormMatrix& m) {
  const int n = m.n();
  const std::size_t a = m.a(), b = m.b();
  const SymmetricBasis sb_top(static_cast<int>(b), static_cast<int>(a));
  const SymmetricBasis sb_low(static_cast<int>(b), static_cast<int>(a) - 1);
  const std::size_t ext_top = binomial(static_cast<std::uint64_t>(n), a);
  const std::size_t ext_low = binomial(static_cast<std::uint64_t>(n), a - 1);
  const ExteriorBasis eb_top(n, static_cast<int>(a)), eb_low(n, static_cast<int>(a) - 1);
  Matrix out(m.field(), sb_top.size() * ext_top * a, b * static_cast<std::size_t>(n));
  if (ext_top == 0) return out;

  for (std::size_t del = 0; del < a; ++del) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a; ++i)
      if (i != del) cols.push_back(i);
    const Vec e = full_exterior(m, cols);
    const bool negate = ((a - 1 - del) & 1) != 0;
    for (std::size_t nu = 0; nu < sb_low.size(); ++nu)
      for (std::size_t t = 0; t < ext_low; ++t) {
        const Scalar& c = e[nu * ext_low + t];
        if (c.is_zero()) continue;
        const Mask tm = eb_low.subset(t);
        for (std::size_t j = 0; j < b; ++j) {
          SymmetricBasis::Exponents mu = sb_low.monomial(nu);
          ++mu[j];
          const std::size_t mu_idx = sb_top.index_of(mu);
          for (int k = 0; k < n; ++k) {
            const Mask km = Mask{1} << k;
            if (tm & km) continue;
            Scalar v = c;
            if ((merge_sign(tm, km) < 0) != negate) v = -v;
            const std::size_t row = (mu_idx * ext_top + eb_top.index_of(tm | km)) * a + del;
            out(row, j * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)) += v;
          }
        }
      }
  }
  return out;
}

bool companion_identity_check(const LinearFormMatrix& m) {
  const std::size_t a = m.a();
  const Matrix lhs = companion_map(m) * m.as_matrix();
  std::vector<std::size_t> all(a);
  for (std::size_t i = 0; i < a; ++i) all[i] = i;
  const Vec full = full_exterior(m, all);
  Matrix rhs(m.field(), full.size() * a, a);
  for (std::size_t r = 0; r < full.size(); ++r)
    for (std::size_t i = 0; i < a; ++i) rhs(r * a + i, i) = full[r];
  return lhs == rhs;
}

namespace {

Matrix wedge_v_matrix(const std::vector<ExtElement>& u, int n, int d, const Field& f) {
  const ExteriorBasis dst(n, d + 1);
  const VSpace v{n, false};
  Matrix out(f, dst.size(), u.size() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (int k = 0; k < n; ++k) {
      Vec x = zero_vec(f, static_cast<std::size_t>(n));
      x[static_cast<std::size_t>(k)] = f.one();
      const ExtElement img = wedge(u[i], ExtElement::linear(u[i].space, x));
      (void)v;
      out.set_column(i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k), img.coords);
    }
  return out;
}

void check_subspace(const std::vector<ExtElement>& w) {
  if (w.empty()) throw std::invalid_argument("subspace needs at least one basis vector");
  for (const auto& e : w)
    if (!(e.space == w.front().space) || e.degree != w.front().degree || !(e.field == w.front().field))
      throw std::invalid_argument("subspace basis vectors must share space, degree and field");
}

}  // namespace

std::size_t wedge_image_dim(const std::vector<ExtElement>& u) {
  if (u.empty()) return 0;
  check_subspace(u);
  return rank(wedge_v_matrix(u, u.front().space.n, u.front().degree, u.front().field));
}

LinearFormMatrix relations_matrix_of_subspace(const std::vector<ExtElement>& w) {
  check_subspace(w);
  const Field& f = w.front().field;
  const int n = w.front().space.n;
  const int d = w.front().degree;
  std::vector<Vec> cols;
  for (const auto& e : w) cols.push_back(e.coords);
  if (rank(Matrix::from_columns(f, w.front().coords.size(), cols)) != w.size())
    throw std::invalid_argument("subspace basis is linearly dependent");
  const auto kappa = kernel_basis(wedge_v_matrix(w, n, d, f));
  if (kappa.empty()) throw std::invalid_argument("W ⊗ V -> ∧V is injective: no linear relations (b = 0)");
  LinearFormMatrix out(f, kappa.size(), w.size(), n);
  for (std::size_t j = 0; j < kappa.size(); ++j)
    for (std::size_t i = 0; i < w.size(); ++i)
      for (int k = 0; k < n; ++k) out.coeff(j, i, k) = kappa[j][i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
  return out;
}

std::size_t hyperplane_codimension(const std::vector<ExtElement>& w, const Vec& w_star) {
  check_subspace(w);
  if (w_star.size() != w.size()) throw std::invalid_argument("w* must have dim W coordinates");
  const Field& f = w.front().field;
  const auto u_coords = kernel_basis(Matrix::from_rows(f, w.size(), {w_star}));
  std::vector<ExtElement> u;
  for (const auto& c : u_coords) {
    ExtElement e = ExtElement::zero(f, w.front().space, w.front().degree);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!c[i].is_zero()) e = e + c[i] * w[i];
    u.push_back(std::move(e));
  }
  return wedge_image_dim(w) - wedge_image_dim(u);
}

Prop3Report prop3_witness(const std::vector<ExtElement>& w, const std::vector<std::uint32_t>& q_list,
                          std::uint64_t budget) {
  check_subspace(w);
  Prop3Report rep;
  rep.p = w.size();
  const std::size_t p = w.size();
  const Field& base = w.front().field;
  if (static_cast<int>(p) + w.front().degree != w.front().space.n)
    rep.note = "degree of W is not n - dim W; hypothesis unmet. ";

  std::vector<Field> fields;
  if (base.is_prime()) {
    fields.push_back(base);
  } else {
    for (auto q : q_list) fields.push_back(Field::prime(q));
  }

  const std::size_t base_image = base.is_prime() ? 0 : wedge_image_dim(w);
  rep.strata.resize(p);
  for (std::size_t k = 1; k <= p; ++k) rep.strata[k - 1].k = static_cast<int>(k);

  for (const auto& fq : fields) {
    std::vector<ExtElement> wq;
    try {
      for (const auto& e : w) wq.push_back(ExtElement{fq, e.space, e.degree, [&] {
                                               Vec c;
                                               for (const auto& s : e.coords) c.push_back(s.reduce(fq));
                                               return c;
                                             }()});
    } catch (const std::domain_error&) {
      rep.note += "bad reduction at " + fq.to_string() + ". ";
      rep.bad_reduction = true;
      rep.verdict = Verdict::unknown;
      return rep;
    }
    std::vector<Vec> cols;
    for (const auto& e : wq) cols.push_back(e.coords);
    if (rank(Matrix::from_columns(fq, wq.front().coords.size(), cols)) != p) {
      rep.note += "basis becomes dependent mod " + std::to_string(fq.characteristic()) + ". ";
      rep.bad_reduction = true;
      rep.verdict = Verdict::unknown;
      return rep;
    }
    if (!(fq == base) && wedge_image_dim(wq) != base_image) {
      rep.note += "bad reduction mod " + std::to_string(fq.characteristic()) + " (dim im(W ⊗ V) changes). ";
      rep.bad_reduction = true;
      rep.verdict = Verdict::unknown;
      return rep;
    }
    const std::uint64_t q = fq.characteristic();
    std::uint64_t points = 0, qp = 1;
    for (std::size_t t = 0; t < p && points <= budget; ++t) {
      points += qp;
      qp = qp > budget ? budget + 1 : qp * q;
    }
    if (points > budget) {
      rep.note += "enumeration over " + fq.to_string() + " exceeds budget. ";
      rep.verdict = Verdict::unknown;
      return rep;
    }
    const std::size_t full = wedge_image_dim(wq);
    std::vector<std::uint64_t> tally(full + 1, 0);
    for_each_projective_point(fq, p, [&](const Vec& ws) {
      const auto u_coords = kernel_basis(Matrix::from_rows(fq, p, {ws}));
      std::vector<ExtElement> u;
      for (const auto& c : u_coords) {
        ExtElement e = ExtElement::zero(fq, wq.front().space, wq.front().degree);
        for (std::size_t i = 0; i < p; ++i)
          if (!c[i].is_zero()) e = e + c[i] * wq[i];
        u.push_back(std::move(e));
      }
      ++tally[full - wedge_image_dim(u)];
      return true;
    });
    for (std::size_t k = 1; k <= p; ++k) {
      std::uint64_t at_least = 0;
      for (std::size_t c = k; c < tally.size(); ++c) at_least += tally[c];
      rep.strata[k - 1].counts.push_back(PointCount{static_cast<std::uint32_t>(q), at_least});
    }
    rep.tallies.push_back(std::move(tally));
  }

  for (auto& s : rep.strata) {
    s.dim_estimate = threshold_dimension(s.counts, static_cast<int>(p) - 1);
    if (rep.witness_k == 0 && s.dim_estimate >= static_cast<int>(p) - s.k) rep.witness_k = s.k;
  }
  rep.verdict = rep.witness_k ? Verdict::pass : Verdict::fail;
  if (!rep.witness_k) rep.note += "no stratum reached the q^d/2 point-count threshold (heuristic estimate). ";
  return rep;
}

}  // namespace linsyz
