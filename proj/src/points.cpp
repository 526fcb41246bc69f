#include "linsyz/points.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "linsyz/koszul.hpp"
#include "linsyz/multilinear.hpp"

namespace linsyz {

namespace {

Vec normalize(Vec v) {
  std::size_t last = v.size();
  for (std::size_t t = v.size(); t-- > 0;)
    if (!v[t].is_zero()) {
      last = t;
      break;
    }
  if (last == v.size()) throw std::invalid_argument("point representative must be nonzero");
  const Scalar inv = v[last].inverse();
  for (auto& c : v) c *= inv;
  return v;
}

Scalar eval_monomial(const Vec& p, const SymmetricBasis::Exponents& mu) {
  Scalar acc = p.front().field().one();
  for (std::size_t k = 0; k < mu.size(); ++k)
    for (int e = 0; e < mu[k]; ++e) acc *= p[k];
  return acc;
}

Matrix diag_action(const PointSet& z, int k) {
  Matrix d(z.field(), z.size(), z.size());
  for (std::size_t i = 0; i < z.size(); ++i) d(i, i) = z.point(i)[static_cast<std::size_t>(k)];
  return d;
}

Matrix columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) { return Matrix::from_columns(f, rows, cols); }

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t t = 0; t < idx.size(); ++t) s += (t ? "," : "") + std::to_string(idx[t] + 1);
  return s + "}";
}

}  // namespace

PointSet::PointSet(Field f, int r, std::vector<Vec> points) : field_(f), r_(r) {
  if (r < 0 || r > 19) throw std::invalid_argument("ambient dimension must be in [0, 19]");
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  for (auto& p : points) {
    if (p.size() != static_cast<std::size_t>(r + 1))
      throw std::invalid_argument("point needs r+1 = " + std::to_string(r + 1) + " coordinates");
    for (const auto& c : p)
      if (!(c.field() == f)) throw FieldMismatch("point coordinate field");
    Vec np = normalize(std::move(p));
    for (std::size_t t = 0; t < points_.size(); ++t)
      if (points_[t] == np)
        throw std::invalid_argument("duplicate point: points " + std::to_string(t + 1) + " and " +
                                    std::to_string(points_.size() + 1) + " coincide");
    points_.push_back(std::move(np));
  }
}

PointSet PointSet::subset(const std::vector<std::size_t>& idx) const {
  std::vector<Vec> pts;
  for (auto i : idx) pts.push_back(points_.at(i));
  return PointSet(field_, r_, std::move(pts));
}

PointSet PointSet::reduce(const Field& target) const {
  std::vector<Vec> pts;
  for (const auto& p : points_) {
    Vec q;
    for (const auto& c : p) q.push_back(c.reduce(target));
    pts.push_back(std::move(q));
  }
  return PointSet(target, r_, std::move(pts));
}

int PointSet::span_dim() const {
  return static_cast<int>(rank(Matrix::from_rows(field_, static_cast<std::size_t>(r_ + 1), points_))) - 1;
}

PointSet PointSet::in_span() const {
  const Matrix pm = Matrix::from_columns(field_, static_cast<std::size_t>(r_ + 1), points_);
  const auto basis = image_basis(pm);
  const Matrix b = columns(field_, static_cast<std::size_t>(r_ + 1), basis);
  const Matrix coords = coordinates_in(b, pm);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < points_.size(); ++i) pts.push_back(coords.column(i));
  return PointSet(field_, static_cast<int>(basis.size()) - 1, std::move(pts));
}

Matrix evaluation_matrix(const PointSet& z, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  const SymmetricBasis sb(z.r() + 1, d);
  Matrix ev(z.field(), z.size(), sb.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t mu = 0; mu < sb.size(); ++mu) ev(i, mu) = eval_monomial(z.point(i), sb.monomial(mu));
  return ev;
}

std::size_t h0_ideal(const PointSet& z, int d) {
  const Matrix ev = evaluation_matrix(z, d);
  return ev.cols() - rank(ev);
}

std::size_t h1_ideal(const PointSet& z, int d) { return z.size() - rank(evaluation_matrix(z, d)); }

int saturation_degree(const PointSet& z) {
  for (int d = 0;; ++d)
    if (rank(evaluation_matrix(z, d)) == z.size()) return d;
}

namespace {

// basis of A_d = im ev_d as columns of an N x dim matrix
Matrix ring_basis(const PointSet& z, int d) {
  const Matrix ev = evaluation_matrix(z, d);
  if (rank(ev) == z.size()) return Matrix::identity(z.field(), z.size());
  return columns(z.field(), z.size(), image_basis(ev));
}

}  // namespace

GradedModule coordinate_ring(const PointSet& z, int extra) {
  if (extra < 0) throw std::invalid_argument("extra degrees must be >= 0");
  const int top = saturation_degree(z) + extra;
  const Field& f = z.field();
  const int n = z.r() + 1;
  std::vector<Matrix> bases;
  for (int d = 0; d <= top; ++d) bases.push_back(ring_basis(z, d));
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<std::vector<Matrix>> mult;
  for (int d = 0; d < top; ++d) {
    std::vector<Matrix> blk;
    for (int k = 0; k < n; ++k)
      blk.push_back(coordinates_in(bases[static_cast<std::size_t>(d + 1)], diag_action(z, k) * bases[static_cast<std::size_t>(d)]));
    mult.push_back(std::move(blk));
  }
  return GradedModule(f, n, 0, std::move(dims), std::move(mult));
}

Matrix h1_dual_basis(const PointSet& z, int k) {
  if (k < 0) throw std::invalid_argument("degree must be >= 0");
  const Matrix a = ring_basis(z, k);
  return columns(z.field(), z.size(), kernel_basis(a.transpose()));
}

namespace {

// M*_k -> M*_{k-1} for x_{var}, in the given bases
Matrix dual_action(const PointSet& z, const Matrix& from, const Matrix& to, int var) {
  if (to.cols() == 0 || from.cols() == 0) return Matrix(z.field(), to.cols(), from.cols());
  return coordinates_in(to, diag_action(z, var) * from);
}

}  // namespace

GradedModule h1_module(const PointSet& z) {
  const int ds = saturation_degree(z);
  const int n = z.r() + 1;
  std::vector<Matrix> bases;  // bases[q] = basis of M*_{ds - q}
  for (int q = 0; q <= ds; ++q) bases.push_back(h1_dual_basis(z, ds - q));
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<std::vector<Matrix>> mult;
  for (int q = 0; q < ds; ++q) {
    std::vector<Matrix> blk;
    for (int k = 0; k < n; ++k)
      blk.push_back(dual_action(z, bases[static_cast<std::size_t>(q)], bases[static_cast<std::size_t>(q + 1)], k));
    mult.push_back(std::move(blk));
  }
  return GradedModule(z.field(), n, 0, std::move(dims), std::move(mult));
}

GradedModule h1_module_standard(const PointSet& z) {
  const int ds = saturation_degree(z);
  const int n = z.r() + 1;
  const Field& f = z.field();
  std::vector<std::size_t> dims(static_cast<std::size_t>(ds + 1), z.size());
  std::vector<std::vector<Matrix>> mult;
  for (int d = 0; d < ds; ++d) {
    std::vector<Matrix> blk;
    for (int k = 0; k < n; ++k) blk.push_back(diag_action(z, k));
    mult.push_back(std::move(blk));
  }
  const GradedModule sections(f, n, 0, std::move(dims), std::move(mult));
  SubmoduleEmbedding emb;
  for (int d = 0; d <= ds; ++d) emb.basis.push_back(ring_basis(z, d));
  return quotient_module(sections, emb).module;
}

GradedModule relation_module(const PointSet& z) {
  const int n = z.r() + 1;
  const Matrix b1 = h1_dual_basis(z, 1);
  const Matrix b0 = h1_dual_basis(z, 0);
  std::vector<Matrix> blk;
  for (int k = 0; k < n; ++k) blk.push_back(dual_action(z, b1, b0, k));
  return GradedModule(z.field(), n, 0, {b1.cols(), b0.cols()}, {std::move(blk)});
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

BettiTable betti_table(const PointSet& z) {
  BettiTable t;
  t.r = z.r();
  t.d_sat = saturation_degree(z);
  const GradedModule ring = coordinate_ring(z, 2);
  const int n = z.r() + 1;
  for (int i = 0; i <= n; ++i) {
    for (int q = 0; q <= t.d_sat; ++q) {
      const std::size_t b = koszul_dim(ring, i, q);
      if (b) t.beta[{i, i + q}] = b;
    }
    if (koszul_dim(ring, i, t.d_sat + 1) != 0)
      throw std::logic_error("Koszul cohomology beyond the saturation degree does not vanish");
  }
  return t;
}

void write_betti_tsv(std::ostream& os, const BettiTable& t) {
  os << "i";
  for (int s = 0; s <= t.d_sat; ++s) os << "\tj-i=" << s;
  os << "\n";
  for (int i = 0; i <= t.r + 1; ++i) {
    os << i;
    for (int s = 0; s <= t.d_sat; ++s) os << "\t" << t.at(i, i + s);
    os << "\n";
  }
}

NpResult np_check(const PointSet& z, int p) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  NpResult out;
  out.h1_2 = h1_ideal(z, 2);
  if (out.h1_2 != 0) {
    out.holds = false;
    out.fail_i = 0;
    out.fail_j = 2;
    out.certificate = "h1(I_Z(2)) = " + std::to_string(out.h1_2);
    return out;
  }
  if (p == 0) return out;
  const BettiTable t = betti_table(z);
  for (int i = 1; i <= p; ++i)
    for (int j = i + 2; j <= i + t.d_sat; ++j)
      if (t.at(i, j) != 0) {
        out.holds = false;
        out.fail_i = i;
        out.fail_j = j;
        out.certificate = "beta_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + std::to_string(t.at(i, j));
        return out;
      }
  return out;
}

PointSet rnc_points(const Field& f, int r, const std::vector<std::optional<Scalar>>& params) {
  if (params.empty()) throw std::invalid_argument("need at least one parameter");
  std::vector<Vec> pts;
  for (std::size_t t = 0; t < params.size(); ++t) {
    for (std::size_t u = 0; u < t; ++u)
      if (params[t].has_value() == params[u].has_value() && (!params[t] || *params[t] == *params[u]))
        throw std::invalid_argument("repeated curve parameter at positions " + std::to_string(u + 1) + " and " +
                                    std::to_string(t + 1));
    Vec p = zero_vec(f, static_cast<std::size_t>(r + 1));
    if (!params[t]) {
      p.back() = f.one();
    } else {
      Scalar pw = f.one();
      for (int k = 0; k <= r; ++k, pw *= *params[t]) p[static_cast<std::size_t>(k)] = pw;
    }
    pts.push_back(std::move(p));
  }
  return PointSet(f, r, std::move(pts));
}

N0Witness n0_witness_hyperplane(const PointSet& z) {
  if (h1_ideal(z, 2) == 0) throw std::invalid_argument("N_0 holds");
  N0Witness w;
  std::vector<std::size_t> keep(z.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::vector<std::size_t> trial;
    for (auto k : keep)
      if (k != i) trial.push_back(k);
    if (!trial.empty() && h1_ideal(z.subset(trial), 2) > 0) keep = std::move(trial);
  }
  w.z_prime = keep;
  const PointSet zp = z.subset(keep);
  w.trace.push_back("minimal N_0-violating subset Z' = " + index_list(keep) + " (" + std::to_string(keep.size()) +
                    " points)");

  const Matrix dual2 = h1_dual_basis(zp, 2);
  w.phi = dual2.column(0);
  for (const auto& c : w.phi)
    if (c.is_zero()) throw std::logic_error("minimal subset has an element of H^1(I(2))* with a zero coordinate");

  const Matrix dual1 = h1_dual_basis(zp, 1);
  w.h1_one = dual1.cols();
  const int n = z.r() + 1;
  const Field& f = z.field();
  // h |-> sum_i h(p_i) phi_i v_i in H^1(I_{Z'}(1))*
  Matrix map(f, dual1.cols(), static_cast<std::size_t>(n));
  if (dual1.cols() > 0)
    for (int k = 0; k < n; ++k) {
      Vec img = zero_vec(f, zp.size());
      for (std::size_t i = 0; i < zp.size(); ++i) img[i] = zp.point(i)[static_cast<std::size_t>(k)] * w.phi[i];
      const auto c = solve(dual1, img);
      if (!c) throw std::logic_error("multiplication does not land in H^1(I(1))*");
      map.set_column(static_cast<std::size_t>(k), *c);
    }
  const auto hs = kernel_basis(map);
  w.trace.push_back("h1(I_Z'(1)) = " + std::to_string(w.h1_one) + ", r = " + std::to_string(z.r()));
  if (!hs.empty()) {
    w.h = hs.front();
    for (std::size_t i = 0; i < zp.size(); ++i) {
      Scalar v = f.zero();
      for (int k = 0; k < n; ++k) v += (*w.h)[static_cast<std::size_t>(k)] * zp.point(i)[static_cast<std::size_t>(k)];
      if (!v.is_zero()) throw std::logic_error("hyperplane does not vanish on Z'");
    }
    w.trace.push_back("hyperplane h annihilates phi, so Z' lies on h");
  } else {
    w.trace.push_back("no linear form annihilates phi: h1(I_Z'(1)) > r, Z' spans P^r");
  }

  // descend through spans while the count is too small for the current dimension
  PointSet cur = zp;
  while (true) {
    const int k = cur.span_dim();
    const std::size_t m = cur.size();
    if (k < cur.r()) {
      w.trace.push_back("Z' spans a P^" + std::to_string(k) + "; restricting to its span");
      cur = cur.in_span();
      continue;
    }
    if (m >= static_cast<std::size_t>(2 * k + 2)) {
      w.trace.push_back(std::to_string(m) + " >= 2*" + std::to_string(k) + "+2 points in a P^" + std::to_string(k) +
                        ": done");
    } else {
      w.trace.push_back(std::to_string(m) + " < 2*" + std::to_string(k) + "+2 points in a P^" + std::to_string(k) +
                        ": the dimension count does not close here");
    }
    w.span_dim = k;
    w.enough_points = m >= static_cast<std::size_t>(2 * k + 2);
    break;
  }
  return w;
}

RankOnePointsReport rank_one_relations_points(const PointSet& z) {
  if (z.size() > 20) throw std::invalid_argument("subset enumeration is capped at N <= 20");
  RankOnePointsReport rep;
  const std::size_t total = std::size_t{1} << z.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    RankOneStratum s;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (mask >> i & 1u) s.z_prime.push_back(i);
    const PointSet zp = z.subset(s.z_prime);
    s.h0 = h0_ideal(zp, 1);
    s.h1 = h1_ideal(zp, 1);
    if (s.h0 > 0 && s.h1 > 0) s.cone_dim = static_cast<int>(s.h0 + s.h1) - 1;
    if (s.cone_dim > rep.max_dim) {
      rep.max_dim = s.cone_dim;
      rep.argmax = s.z_prime;
    }
    rep.strata.push_back(std::move(s));
  }
  return rep;
}

Thm6Result theorem6_witness(const PointSet& z, int p) {
  if (z.size() > 16) throw std::invalid_argument("witness enumeration is capped at N <= 16");
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  Thm6Result res;
  res.hypothesis_size = static_cast<int>(z.size()) == 2 * z.r() + 1 - p;
  if (!res.hypothesis_size) res.note = "|Z| != 2r+1-p: hypothesis unmet. ";
  const NpResult whole = np_check(z, p);
  if (whole.holds) {
    res.np_holds = true;
    res.verdict = Verdict::pass;
    return res;
  }
  const std::size_t n = z.size();
  for (std::size_t size = n; size >= 1; --size) {
    // lexicographic k-subsets via an index odometer
    std::vector<std::size_t> idx(size);
    for (std::size_t t = 0; t < size; ++t) idx[t] = t;
    while (true) {
      ++res.subsets_checked;
      const PointSet zp = z.subset(idx);
      const int l = zp.span_dim();
      if (static_cast<int>(size) >= 2 * l + 2 - p) {
        const NpResult np = np_check(zp.in_span(), p);
        if (!np.holds) {
          res.z_prime = idx;
          res.l_dim = l;
          res.proof = np;
          res.verdict = Verdict::pass;
          return res;
        }
      }
      std::size_t t = size;
      while (t > 0 && idx[t - 1] == n - size + (t - 1)) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t u = t; u < size; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  res.verdict = Verdict::falsification;
  res.note += "N_p fails for Z but no subset witness exists";
  return res;
}

}  // namespace linsyz
