#include "linsyz/koszul.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "linsyz/detail/projective.hpp"
#include "linsyz/rng.hpp"

namespace linsyz {

namespace {

std::size_t ext_dim(int n, int p) {
  if (p < 0 || p > n) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p));
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t t = 0; t < e; ++t) r = sat_mul(r, q);
  return r;
}

std::uint64_t projective_size(std::uint64_t q, std::size_t d) {
  std::uint64_t total = 0, qp = 1;
  for (std::size_t t = 0; t < d; ++t) {
    total = sat_add(total, qp);
    qp = sat_mul(qp, q);
  }
  return total;
}

Vec block(const Vec& v, std::size_t s, std::size_t width) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(s * width),
             v.begin() + static_cast<std::ptrdiff_t>((s + 1) * width));
}

}  // namespace

Matrix koszul_differential(const GradedModule& m, int p, int q) {
  const Field& f = m.field();
  const int n = m.n();
  const std::size_t src = ext_dim(n, p) * m.dim(q);
  if (p <= 0) return Matrix(f, 0, src);
  const std::size_t dq = m.dim(q), dq1 = m.dim(q + 1);
  Matrix out(f, ext_dim(n, p - 1) * dq1, src);
  if (src == 0 || out.rows() == 0) return out;
  std::vector<Matrix> act;
  for (int k = 0; k < n; ++k) act.push_back(m.action(q, k));
  const ExteriorBasis from(n, p), to(n, p - 1);
  for (std::size_t s = 0; s < from.size(); ++s) {
    const Mask sm = from.subset(s);
    int t = 0;
    for (Mask rest = sm; rest; rest &= rest - 1, ++t) {
      const int k = std::countr_zero(rest);
      const std::size_t tgt = to.index_of(sm & ~(Mask{1} << k));
      const bool neg = (t & 1) != 0;
      const Matrix& a = act[static_cast<std::size_t>(k)];
      for (std::size_t r = 0; r < dq1; ++r)
        for (std::size_t c = 0; c < dq; ++c) {
          if (a(r, c).is_zero()) continue;
          out(tgt * dq1 + r, s * dq + c) = neg ? -a(r, c) : a(r, c);
        }
    }
  }
  return out;
}

std::size_t koszul_dim(const GradedModule& m, int p, int q) {
  const Matrix d = koszul_differential(m, p, q);
  const std::size_t nullity = d.cols() - rank(d);
  if (p + 1 > m.n()) return nullity;
  return nullity - rank(koszul_differential(m, p + 1, q - 1));
}

KoszulCohomology koszul_cohomology(const GradedModule& m, int p, int q) {
  KoszulCohomology out;
  const Field& f = m.field();
  const Matrix d = koszul_differential(m, p, q);
  const auto z = kernel_basis(d);
  const Matrix b = koszul_differential(m, p + 1, q - 1);
  const std::size_t rb = rank(b);
  out.dim = z.size() - rb;
  if (z.empty()) return out;
  const Matrix stacked = b.hstack(Matrix::from_columns(f, d.cols(), z));
  const auto rr = rref(stacked);
  for (auto piv : rr.pivots)
    if (piv >= b.cols()) out.basis.push_back(KoszulClass{p, q, z[piv - b.cols()]});
  return out;
}

bool is_cocycle(const GradedModule& m, const KoszulClass& c) {
  const Matrix d = koszul_differential(m, c.p, c.q);
  if (c.value.size() != d.cols()) throw std::invalid_argument("class has wrong dimension for its bidegree");
  return is_zero(d * c.value);
}

bool is_coboundary(const GradedModule& m, const KoszulClass& c) {
  const Matrix b = koszul_differential(m, c.p + 1, c.q - 1);
  if (c.value.size() != b.rows()) throw std::invalid_argument("class has wrong dimension for its bidegree");
  if (is_zero(c.value)) return true;
  return solve(b, c.value).has_value();
}

StrandEuler strand_euler(const GradedModule& m, int s) {
  StrandEuler out;
  out.s = s;
  for (int p = 0; p <= m.n(); ++p) {
    const int q = s - p;
    const auto sign = (p & 1) ? -1 : 1;
    out.chain_sum += sign * static_cast<std::int64_t>(ext_dim(m.n(), p) * m.dim(q));
    out.cohomology_sum += sign * static_cast<std::int64_t>(koszul_dim(m, p, q));
  }
  return out;
}

std::vector<Vec> relations(const GradedModule& m);

std::size_t tensor_rank(const Vec& t, std::size_t dim_m0, int n) {
  if (t.size() != dim_m0 * static_cast<std::size_t>(n)) throw std::invalid_argument("tensor has wrong size");
  if (t.empty()) return 0;
  Matrix r(t.front().field(), dim_m0, static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < dim_m0; ++i)
    for (int k = 0; k < n; ++k) r(i, static_cast<std::size_t>(k)) = t[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
  return rank(r);
}

std::uint64_t rank_one_count(const Matrix& c, std::size_t dim_m0, int n) {
  const Field& f = c.field();
  if (!f.is_prime()) throw std::invalid_argument("rank-one counting needs a prime field");
  if (c.cols() != dim_m0 * static_cast<std::size_t>(n)) throw std::invalid_argument("relation matrix has wrong width");
  const std::uint64_t q = f.characteristic();
  std::uint64_t total = 1;
  for_each_projective_point(f, dim_m0, [&](const Vec& x) {
    Matrix img(f, c.rows(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < dim_m0; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (int k = 0; k < n; ++k)
          img(r, static_cast<std::size_t>(k)) += x[i] * c(r, i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k));
    }
    const std::size_t d = static_cast<std::size_t>(n) - rank(img);
    total = sat_add(total, sat_pow(q, d) - 1);
    return true;
  });
  return total;
}

namespace {

Matrix relation_map(const GradedModule& m) {
  const std::size_t d0 = m.dim(0);
  const int n = m.n();
  Matrix big(m.field(), m.dim(1), d0 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Matrix a = m.action(0, k);
    for (std::size_t i = 0; i < d0; ++i)
      big.set_column(i * static_cast<std::size_t>(n) + static_cast<std::size_t>(k), a.column(i));
  }
  return big;
}

// smallest integral multiple with coprime entries
}  // namespace

std::vector<Vec> relations(const GradedModule& m) { return kernel_basis(relation_map(m)); }

std::uint64_t rank_one_count(const GradedModule& m) { return rank_one_count(relation_map(m), m.dim(0), m.n()); }

RankOneEstimate rank_one_dimension_estimate(const GradedModule& m, const std::vector<std::uint32_t>& q_list,
                                            std::uint64_t budget) {
  RankOneEstimate out;
  std::vector<Field> fields;
  if (m.field().is_prime()) {
    fields.push_back(m.field());
  } else {
    for (auto q : q_list) fields.push_back(Field::prime(q));
  }
  if (fields.empty()) {
    out.note = "empty prime list";
    return out;
  }
  for (const auto& fq : fields) {
    if (projective_size(fq.characteristic(), m.dim(0)) > budget) {
      out.note = "P(M_0) over " + fq.to_string() + " exceeds budget";
      return out;
    }
  }
  const std::size_t width = m.dim(0) * static_cast<std::size_t>(m.n());
  const auto rel = relations(m);
  const std::size_t rel_dim = rel.size();
  Matrix c = relation_map(m);
  Matrix r_basis(m.field(), 0, width);
  if (m.field().is_rationals()) {
    // saturated lattices R ∩ Z^w and its annihilator reduce to a pair of
    // complementary subspaces mod every prime
    const auto r_sat = integer_kernel(c);
    r_basis = Matrix::from_rows(m.field(), width, r_sat);
    c = Matrix::from_rows(m.field(), width, integer_kernel(r_sat.empty() ? Matrix(m.field(), 0, width) : r_basis));
  }
  for (const auto& fq : fields) {
    Matrix cq = c;
    if (!(fq == m.field())) {
      cq = c.reduce(fq);
      if (rank(cq) != width - rel_dim || rank(r_basis.reduce(fq)) != rel_dim) {
        out.note = "bad reduction mod " + std::to_string(fq.characteristic()) + " (relation space changes dimension)";
        out.bad_reduction = true;
        return out;
      }
    }
    const std::uint64_t cnt = rank_one_count(cq, m.dim(0), m.n());
    if (cnt == kSaturated) {
      out.note = "point count overflow over " + fq.to_string();
      return out;
    }
    out.counts.push_back(PointCount{fq.characteristic(), cnt});
  }
  out.known = true;
  const int d = threshold_dimension(out.counts, static_cast<int>(rel_dim));
  // only the zero tensor: the cone of rank-one relations is empty
  out.dim_estimate = d <= 0 ? -1 : d;
  return out;
}

Thm4Report thm4_check(const GradedModule& m, const std::vector<std::uint32_t>& q_list, std::uint64_t budget) {
  return thm4_check(m, rank_one_dimension_estimate(m, q_list, budget));
}

Thm4Report thm4_check(const GradedModule& m, const RankOneEstimate& r1) {
  for (int q = m.q_min(); q < 0; ++q)
    if (m.dim(q) != 0) throw std::invalid_argument("thm4_check needs M_q = 0 for q < 0");
  Thm4Report rep;
  rep.p = static_cast<int>(m.dim(0));
  if (rep.p <= 0) throw std::invalid_argument("thm4_check needs rank M_0 > 0");
  rep.k_dim = koszul_dim(m, rep.p, 0);
  for (int k = rep.p; k <= m.n(); ++k) rep.propagation.push_back(k == rep.p ? rep.k_dim : koszul_dim(m, k, 0));
  if (rep.k_dim == 0)
    for (auto d : rep.propagation) rep.propagation_ok = rep.propagation_ok && d == 0;
  rep.r1 = r1;
  if (rep.k_dim == 0) {
    rep.consistent = Tristate::yes;
  } else if (!rep.r1.known) {
    rep.consistent = Tristate::unknown;
    rep.note = "rank-one estimate unavailable: " + rep.r1.note;
  } else {
    rep.consistent = rep.r1.dim_estimate >= rep.p ? Tristate::yes : Tristate::no;
  }
  if (!rep.propagation_ok || rep.consistent == Tristate::no) {
    rep.verdict = Verdict::falsification;
    if (!rep.propagation_ok) rep.note += "K_{p,0} = 0 but some K_{k,0} != 0 for k > p. ";
    if (rep.consistent == Tristate::no) rep.note += "K_{p,0} != 0 with rank-one estimate below p (heuristic estimate). ";
  } else {
    rep.verdict = rep.consistent == Tristate::yes ? Verdict::pass : Verdict::unknown;
  }
  return rep;
}

ClassSubspace class_to_subspace(const GradedModule& m, const KoszulClass& alpha, const Scalar* tau_coeff) {
  if (alpha.q != 0) throw std::invalid_argument("class_to_subspace needs a class of degree q = 0");
  if (!is_cocycle(m, alpha)) throw std::invalid_argument("alpha is not a cocycle");
  const Field& f = m.field();
  const int n = m.n();
  const std::size_t d0 = m.dim(0);
  const std::size_t ed = ext_dim(n, alpha.p);
  std::vector<Vec> comps(d0, zero_vec(f, ed));
  for (std::size_t s = 0; s < ed; ++s)
    for (std::size_t i = 0; i < d0; ++i) comps[i][s] = alpha.value[s * d0 + i];
  ClassSubspace out;
  const VSpace v{n, false};
  for (auto& c : image_basis(Matrix::from_columns(f, ed, comps))) out.w.push_back(ExtElement{f, v, alpha.p, std::move(c)});
  out.shrinkable = out.w.size() < d0;
  ExtElement tau = ExtElement::basis(f, VSpace{n, true}, (Mask{1} << n) - 1);
  if (tau_coeff) tau = *tau_coeff * tau;
  for (const auto& w : out.w) out.w_prime.push_back(hodge_contract(w, tau));
  return out;
}

Cor5Report cor5_check(const GradedModule& m, int p, std::size_t trials, std::uint64_t seed,
                      const std::vector<std::uint32_t>& q_list, std::uint64_t budget) {
  Cor5Report rep;
  rep.p = p;
  rep.m0 = m.dim(0);
  if (p <= 0 || static_cast<std::size_t>(p) > rep.m0) throw std::invalid_argument("cor5_check needs 0 < p <= rank M_0");
  const Field& f = m.field();
  const auto classes = koszul_cohomology(m, p, 0);
  rep.precondition = classes.dim != 0;
  if (!rep.precondition) {
    rep.note = "K_{p,0} = 0: precondition violated, no claim";
    return rep;
  }
  const std::size_t s_dim = rep.m0 - static_cast<std::size_t>(p);
  const std::size_t runs = s_dim == 0 ? 1 : trials;
  const std::size_t ed = ext_dim(m.n(), p);
  Rng rng(seed, 0x636f7235ULL);
  Verdict agg = Verdict::pass;
  for (std::size_t t = 0; t < runs; ++t) {
    Rng r = rng.split(t);
    Cor5Trial trial;
    // redraw S when its quotient reduces badly mod some q; the choice never
    // looks at the estimate itself
    for (int draw_no = 0; draw_no < 16; ++draw_no) {
      Matrix s(f, rep.m0, s_dim);
      for (int attempt = 0; attempt < 64; ++attempt) {
        for (std::size_t i = 0; i < s.rows(); ++i)
          for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = f.is_prime() ? r.scalar(f) : r.small_scalar(f, 9);
        if (rank(s) == s_dim) break;
      }
      trial = Cor5Trial{};
      if (rank(s) != s_dim) break;
      const auto sub = submodule_generated(m, s);
      const auto quot = quotient_module(m, sub.embedding);
      const Matrix& p0 = quot.projection[static_cast<std::size_t>(0 - m.q_min())];
      for (const auto& c : classes.basis) {
        for (std::size_t e = 0; e < ed && !trial.survives; ++e) trial.survives = !is_zero(p0 * block(c.value, e, rep.m0));
        if (trial.survives) break;
      }
      if (!trial.survives) break;
      trial.r1 = rank_one_dimension_estimate(quot.module, q_list, budget);
      if (!trial.r1.bad_reduction) break;
    }
    if (trial.survives) {
      ++rep.surviving;
      if (!trial.r1.known) {
        trial.verdict = Verdict::unknown;
      } else {
        trial.verdict = trial.r1.dim_estimate >= p ? Verdict::pass : Verdict::falsification;
      }
      agg = merge(agg, trial.verdict);
    }
    rep.trials.push_back(std::move(trial));
  }
  if (rep.surviving == 0) {
    rep.verdict = Verdict::unknown;
    rep.note = "class died for every sampled S: inconclusive";
  } else {
    rep.verdict = agg;
    if (agg == Verdict::falsification) rep.note = "surviving class with rank-one estimate below p (heuristic estimate)";
  }
  return rep;
}

ContractResult contract_class(const GradedModule& m, const KoszulClass& lambda, const Vec& v) {
  const Field& f = m.field();
  const int n = m.n();
  if (v.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("v must have n coordinates");
  if (is_zero(v)) throw std::invalid_argument("v must be nonzero");
  if (lambda.p < 1) throw std::invalid_argument("contraction needs p >= 1");
  if (n < 2) throw std::invalid_argument("contraction needs n >= 2");
  if (!is_cocycle(m, lambda)) throw std::invalid_argument("lambda is not a cocycle");

  // y_1 with v(y_1) = 1, then a basis of ker v
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  std::vector<Vec> ys;
  Vec y1 = zero_vec(f, static_cast<std::size_t>(n));
  y1[lead] = v[lead].inverse();
  ys.push_back(y1);
  for (auto& k : kernel_basis(Matrix::from_rows(f, static_cast<std::size_t>(n), {v}))) ys.push_back(std::move(k));
  Matrix g = Matrix::from_columns(f, static_cast<std::size_t>(n), ys);
  Matrix g_inv(f, g.rows(), g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    Vec e = zero_vec(f, g.rows());
    e[c] = f.one();
    g_inv.set_column(c, *solve(g, e));
  }

  const std::size_t dq = m.dim(lambda.q);
  const std::size_t ed = ext_dim(n, lambda.p);
  const Matrix change = exterior_power(g_inv, lambda.p);
  const ExteriorBasis src(n, lambda.p);
  const ExteriorBasis dst(n - 1, lambda.p - 1);
  Vec out = zero_vec(f, dst.size() * dq);
  for (std::size_t i = 0; i < dq; ++i) {
    Vec comp = zero_vec(f, ed);
    for (std::size_t s = 0; s < ed; ++s) comp[s] = lambda.value[s * dq + i];
    const Vec ycomp = change * comp;
    for (std::size_t s = 0; s < ed; ++s) {
      const Mask sm = src.subset(s);
      if (!(sm & 1u)) continue;
      out[dst.index_of(sm >> 1) * dq + i] += ycomp[s];
    }
  }

  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> mult;
  for (int q = m.q_min(); q <= m.q_max(); ++q) {
    dims.push_back(m.dim(q));
    if (q == m.q_max()) break;
    std::vector<Matrix> blk;
    for (int j = 1; j < n; ++j) blk.push_back(m.action(q, ys[static_cast<std::size_t>(j)]));
    mult.push_back(std::move(blk));
  }
  GradedModule restricted(f, n - 1, m.q_min(), std::move(dims), std::move(mult));

  ContractResult res{std::move(g), std::move(restricted), KoszulClass{lambda.p - 1, lambda.q, std::move(out)}};
  res.cocycle = is_cocycle(res.restricted, res.contracted);
  res.nonzero = !is_coboundary(res.restricted, res.contracted);

  bool escapes = false;
  const VSpace vs{n, false}, dual{n, true};
  const ExteriorBasis tb(n, lambda.p - 1);
  for (std::size_t i = 0; i < dq && !escapes; ++i) {
    ExtElement li = ExtElement::zero(f, vs, lambda.p);
    for (std::size_t s = 0; s < ed; ++s) li.coords[s] = lambda.value[s * dq + i];
    for (std::size_t t = 0; t < tb.size() && !escapes; ++t) {
      const ExtElement img = contract(li, ExtElement::basis(f, dual, tb.subset(t)));
      Scalar acc = f.zero();
      for (int k = 0; k < n; ++k) acc += v[static_cast<std::size_t>(k)] * img.coords[static_cast<std::size_t>(k)];
      escapes = !acc.is_zero();
    }
  }
  res.hypotheses = m.dim(lambda.q - 1) == 0 && escapes;
  return res;
}

}  // namespace linsyz
