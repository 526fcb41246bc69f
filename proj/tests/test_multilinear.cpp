#include <doctest.h>

#include "linsyz/multilinear.hpp"
#include "linsyz/rng.hpp"

using namespace linsyz;

namespace {

const Field F = Field::prime(10007);
const Field QQ = Field::rationals();

Mask bits(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << (i - 1);
  return m;
}

ExtElement x(int n, std::initializer_list<int> idx, const Field& f = QQ) {
  return ExtElement::basis(f, VSpace{n, false}, bits(idx));
}

ExtElement random_ext(const Field& f, int n, int k, Rng& r) {
  ExtElement e = ExtElement::zero(f, VSpace{n, false}, k);
  for (auto& c : e.coords) c = r.scalar(f);
  return e;
}

Vec random_vec(const Field& f, int n, Rng& r) {
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(r.scalar(f));
  return v;
}

// sign of sorting a sequence of distinct indices, counted by inversions
int sequence_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  return inv % 2 ? -1 : 1;
}

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("basis orders") {
  const ExteriorBasis e(3, 2);
  REQUIRE(e.size() == 3);
  CHECK(e.subset(0) == bits({1, 2}));
  CHECK(e.subset(1) == bits({1, 3}));
  CHECK(e.subset(2) == bits({2, 3}));
  CHECK(e.index_of(bits({2, 3})) == 2);
  CHECK(ExteriorBasis(5, 0).size() == 1);
  CHECK(ExteriorBasis(6, 3).size() == 20);

  const SymmetricBasis s(2, 2);
  REQUIRE(s.size() == 3);
  CHECK(s.monomial(0) == SymmetricBasis::Exponents{2, 0});
  CHECK(s.monomial(1) == SymmetricBasis::Exponents{1, 1});
  CHECK(s.monomial(2) == SymmetricBasis::Exponents{0, 2});
  CHECK(SymmetricBasis(4, 3).size() == binomial(6, 3));
}

TEST_CASE("wedge examples") {
  CHECK(wedge(x(3, {1}), x(3, {1})).is_zero());
  CHECK(wedge(x(3, {2}), x(3, {1})) == -QQ.one() * x(3, {1, 2}));
  const auto lhs = wedge(wedge(x(3, {1}) + x(3, {2}), x(3, {3})), x(3, {2}));
  CHECK(lhs == -QQ.one() * x(3, {1, 2, 3}));
  CHECK(lhs.coords[0] == QQ.from_int(-1));
}

TEST_CASE("wedge on basis agrees with a sequence-sorting sign") {
  const int n = 5;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    for (Mask t = 0; t < (Mask{1} << n); ++t) {
      const auto w = wedge(ExtElement::basis(QQ, VSpace{n, false}, s), ExtElement::basis(QQ, VSpace{n, false}, t));
      if (s & t) {
        CHECK(w.is_zero());
        continue;
      }
      auto seq = members(s);
      const auto tail = members(t);
      seq.insert(seq.end(), tail.begin(), tail.end());
      CHECK(w == QQ.from_int(sequence_sign(seq)) * ExtElement::basis(QQ, VSpace{n, false}, s | t));
    }
}

TEST_CASE("contraction examples") {
  const Vec e1{QQ.one(), QQ.zero(), QQ.zero()};
  const Vec e2{QQ.zero(), QQ.one(), QQ.zero()};
  const Vec e3{QQ.zero(), QQ.zero(), QQ.one()};
  CHECK(contract(x(3, {1, 2}), e1) == x(3, {2}));
  CHECK(contract(x(3, {1, 2}), e3).is_zero());
  CHECK(contract(x(3, {1, 2, 3}), e2) == -QQ.one() * x(3, {1, 3}));
  CHECK_THROWS(contract(ExtElement::zero(QQ, VSpace{3, false}, 0), e1));
}

TEST_CASE("symmetric multiplication examples") {
  const Vec v1{QQ.one(), QQ.zero(), QQ.zero()};
  const Vec v2{QQ.zero(), QQ.one(), QQ.zero()};
  const auto a = SymElement::linear(v1), b = SymElement::linear(v2);
  const SymmetricBasis s(3, 2);
  auto ab = sym_mult(a, b);
  CHECK(ab.coords[s.index_of({1, 1, 0})] == QQ.one());
  auto aa = sym_mult(a, a);
  CHECK(aa.coords[s.index_of({2, 0, 0})] == QQ.one());
  auto sum = sym_mult(SymElement::linear(v1 + v2), a);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& m = s.monomial(i);
    const bool expected = m == SymmetricBasis::Exponents{2, 0, 0} || m == SymmetricBasis::Exponents{1, 1, 0};
    CHECK(sum.coords[i] == (expected ? QQ.one() : QQ.zero()));
  }
}

TEST_CASE("hodge contraction examples") {
  const VSpace vd{2, true};
  const auto tau = ExtElement::basis(QQ, vd, bits({1, 2}));
  CHECK(hodge_contract(x(2, {1}), tau) == ExtElement::basis(QQ, vd, bits({2})));
  CHECK(hodge_contract(x(2, {2}), tau) == -QQ.one() * ExtElement::basis(QQ, vd, bits({1})));
  const auto top = hodge_contract(x(2, {1, 2}), tau);
  CHECK(top.degree == 0);
  CHECK(top.coords[0] == QQ.one());
  CHECK_THROWS(hodge_contract(x(2, {1}), ExtElement::zero(QQ, vd, 2)));
}

TEST_CASE("hodge contraction is bijective") {
  for (int n = 1; n <= 6; ++n) {
    const auto tau = QQ.from_int(3) * ExtElement::basis(QQ, VSpace{n, true}, (Mask{1} << n) - 1);
    for (int p = 0; p <= n; ++p) {
      const ExteriorBasis b(n, p);
      std::vector<Vec> cols;
      for (std::size_t i = 0; i < b.size(); ++i)
        cols.push_back(hodge_contract(ExtElement::basis(QQ, VSpace{n, false}, b.subset(i)), tau).coords);
      CHECK(rank(Matrix::from_columns(QQ, binomial(n, n - p), cols)) == binomial(n, p));
    }
  }
}

TEST_CASE("exterior algebra identities on random elements") {
  Rng r(11);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 5;
    const int p = static_cast<int>(r.below(n + 1)), q = static_cast<int>(r.below(n + 1));
    const auto u = random_ext(F, n, p, r), w = random_ext(F, n, q, r);
    const Scalar sign = F.from_int((p * q) % 2 ? -1 : 1);
    CHECK(wedge(u, w) == sign * wedge(w, u));

    const int s = static_cast<int>(r.below(n + 1));
    const auto z = random_ext(F, n, s, r);
    CHECK(wedge(wedge(u, w), z) == wedge(u, wedge(w, z)));

    const Vec f = random_vec(F, n, r);
    if (p + q >= 1 && p + q <= n) {
      const auto lhs = contract(wedge(u, w), f);
      ExtElement rhs = ExtElement::zero(F, VSpace{n, false}, p + q - 1);
      if (p >= 1) rhs = rhs + wedge(contract(u, f), w);
      if (q >= 1) rhs = rhs + F.from_int(p % 2 ? -1 : 1) * wedge(u, contract(w, f));
      CHECK(lhs == rhs);
    }
    if (p >= 2) CHECK(contract(contract(u, f), f).is_zero());
  }
}

TEST_CASE("symmetric multiplication is commutative and associative") {
  Rng r(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 4;
    const auto a = SymElement::linear(random_vec(F, n, r));
    const auto b = SymElement::linear(random_vec(F, n, r));
    const auto c = SymElement::linear(random_vec(F, n, r));
    CHECK(sym_mult(a, b) == sym_mult(b, a));
    CHECK(sym_mult(sym_mult(a, b), c) == sym_mult(a, sym_mult(b, c)));
  }
}

TEST_CASE("exterior power of a matrix is multiplicative") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix g = random_matrix(4, 4, F, s), h = random_matrix(4, 4, F, s + 50);
    for (int k = 0; k <= 4; ++k) CHECK(exterior_power(g * h, k) == exterior_power(g, k) * exterior_power(h, k));
    CHECK(exterior_power(g, 4)(0, 0) == determinant(g));
  }
}

TEST_CASE("tensor flat index is lexicographic") {
  const std::vector<Factor> shape{{Factor::Kind::exterior, 3, 1}, {Factor::Kind::plain, 2, 0}};
  auto t = TensorElement::zero(F, shape);
  CHECK(t.coords.size() == 6);
  CHECK(t.flat_index({1, 0}) == 2);
  CHECK(t.flat_index({2, 1}) == 5);
  CHECK(t.is_zero());
}
