#include "linsyz/corpus.hpp"

#include <stdexcept>

namespace linsyz {

Scalar draw(const Field& f, Rng& rng, std::int64_t bound) {
  return f.is_prime() ? rng.scalar(f) : rng.small_scalar(f, bound);
}

LinearFormMatrix random_linear_form_matrix(const Field& f, std::size_t b, std::size_t a, int n, Rng& rng) {
  LinearFormMatrix m(f, b, a, n);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < a; ++i)
      for (int k = 0; k < n; ++k) m.coeff(j, i, k) = draw(f, rng);
  return m;
}

GradedModule free_module(const Field& f, int n, std::size_t g, int top) {
  if (g == 0 || top < 0) throw std::invalid_argument("free module needs g >= 1 and top >= 0");
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> mult;
  for (int q = 0; q <= top; ++q) dims.push_back(g * SymmetricBasis(n, q).size());
  for (int q = 0; q < top; ++q) {
    const SymmetricBasis from(n, q), to(n, q + 1);
    std::vector<Matrix> blk;
    for (int k = 0; k < n; ++k) {
      Matrix a(f, g * to.size(), g * from.size());
      for (std::size_t mu = 0; mu < from.size(); ++mu) {
        auto e = from.monomial(mu);
        ++e[static_cast<std::size_t>(k)];
        const std::size_t nu = to.index_of(e);
        for (std::size_t gen = 0; gen < g; ++gen) a(gen * to.size() + nu, gen * from.size() + mu) = f.one();
      }
      blk.push_back(std::move(a));
    }
    mult.push_back(std::move(blk));
  }
  return GradedModule(f, n, 0, std::move(dims), std::move(mult));
}

GradedModule random_quotient_module(const Field& f, int n, std::size_t g, std::size_t relations, int top, Rng& rng) {
  if (top < 1) throw std::invalid_argument("quotient by degree-1 relations needs top >= 1");
  const GradedModule fm = free_module(f, n, g, top);
  Matrix rel(f, fm.dim(1), relations);
  for (std::size_t r = 0; r < rel.rows(); ++r)
    for (std::size_t c = 0; c < rel.cols(); ++c) rel(r, c) = draw(f, rng);
  return quotient_module(fm, submodule_generated(fm, rel, 1).embedding).module;
}

SeededModule class_seeded_module(const Field& f, int n, int p, std::size_t g, std::size_t extra, Rng& rng) {
  if (p < 1 || p > n || static_cast<std::size_t>(p) > g) throw std::invalid_argument("class-seeded module needs 1 <= p <= min(n, g)");
  const GradedModule fm = free_module(f, n, g, 1);
  const VSpace v{n, false};
  const ExteriorBasis eb(n, p);
  for (int attempt = 0; attempt < 100; ++attempt) {
    KoszulClass alpha{p, 0, zero_vec(f, eb.size() * g)};
    for (int i = 0; i < p; ++i) {
      ExtElement w = ExtElement::basis(f, v, 0);
      for (int t = 0; t < p; ++t) {
        Vec l(static_cast<std::size_t>(n));
        for (auto& c : l) c = draw(f, rng, 3);
        w = wedge(w, ExtElement::linear(v, l));
      }
      for (std::size_t s = 0; s < eb.size(); ++s) alpha.value[s * g + static_cast<std::size_t>(i)] = w.coords[s];
    }
    if (is_zero(alpha.value)) continue;
    // the blocks of d(alpha) in ∧^{p-1}V ⊗ (V ⊗ M_0) span the contractions
    const Vec d = koszul_differential(fm, p, 0) * alpha.value;
    const std::size_t f1 = fm.dim(1);
    std::vector<Vec> rels;
    for (std::size_t t = 0; t * f1 < d.size(); ++t) rels.emplace_back(d.begin() + static_cast<std::ptrdiff_t>(t * f1),
                                                                     d.begin() + static_cast<std::ptrdiff_t>((t + 1) * f1));
    for (std::size_t e = 0; e < extra; ++e) {
      Vec r(f1);
      for (auto& c : r) c = draw(f, rng);
      rels.push_back(std::move(r));
    }
    const Matrix relm = Matrix::from_columns(f, f1, rels);
    GradedModule quot = quotient_module(fm, submodule_generated(fm, relm, 1).embedding).module;
    if (!is_cocycle(quot, alpha)) throw std::logic_error("seeded class is not a cocycle");
    return SeededModule{std::move(quot), std::move(alpha)};
  }
  throw std::runtime_error("could not draw a nonzero seeded class");
}

std::vector<ExtElement> random_exterior_subspace(const Field& f, int n, int degree, std::size_t dim, Rng& rng) {
  const VSpace v{n, false};
  const std::size_t ed = ExteriorBasis(n, degree).size();
  if (dim > ed) throw std::invalid_argument("subspace dimension exceeds the exterior power");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<ExtElement> out;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < dim; ++i) {
      ExtElement e = ExtElement::zero(f, v, degree);
      for (auto& c : e.coords) c = draw(f, rng, 3);
      cols.push_back(e.coords);
      out.push_back(std::move(e));
    }
    if (rank(Matrix::from_columns(f, ed, cols)) == dim) return out;
  }
  throw std::runtime_error("could not draw an independent subspace");
}

namespace {

bool try_add(std::vector<Vec>& pts, Vec p) {
  if (is_zero(p)) return false;
  std::size_t last = p.size();
  while (last-- > 0 && p[last].is_zero()) {
  }
  const Scalar inv = p[last].inverse();
  for (auto& c : p) c *= inv;
  for (const auto& q : pts)
    if (q == p) return false;
  pts.push_back(std::move(p));
  return true;
}

}  // namespace

PointSet random_points(const Field& f, int r, std::size_t count, Rng& rng) {
  std::vector<Vec> pts;
  for (int guard = 0; pts.size() < count; ++guard) {
    if (guard > 100000) throw std::runtime_error("could not draw distinct points");
    Vec p(static_cast<std::size_t>(r + 1));
    for (auto& c : p) c = draw(f, rng, 4);
    try_add(pts, std::move(p));
  }
  return PointSet(f, r, std::move(pts));
}

PointSet degenerate_points(const Field& f, int r, std::size_t count, int cluster_dim, std::size_t cluster, Rng& rng) {
  if (cluster_dim < 0 || cluster_dim > r || cluster > count) throw std::invalid_argument("bad cluster shape");
  std::vector<Vec> basis;
  while (basis.empty() || rank(Matrix::from_rows(f, static_cast<std::size_t>(r + 1), basis)) < basis.size()) {
    basis.clear();
    for (int t = 0; t <= cluster_dim; ++t) {
      Vec b(static_cast<std::size_t>(r + 1));
      for (auto& c : b) c = draw(f, rng, 2);
      basis.push_back(std::move(b));
    }
  }
  std::vector<Vec> pts;
  for (int guard = 0; pts.size() < cluster; ++guard) {
    if (guard > 100000) throw std::runtime_error("could not draw distinct cluster points");
    Vec p = zero_vec(f, static_cast<std::size_t>(r + 1));
    for (const auto& b : basis) p = p + draw(f, rng, 3) * b;
    try_add(pts, std::move(p));
  }
  for (int guard = 0; pts.size() < count; ++guard) {
    if (guard > 100000) throw std::runtime_error("could not draw distinct points");
    Vec p(static_cast<std::size_t>(r + 1));
    for (auto& c : p) c = draw(f, rng, 4);
    try_add(pts, std::move(p));
  }
  return PointSet(f, r, std::move(pts));
}

}  // namespace linsyz
