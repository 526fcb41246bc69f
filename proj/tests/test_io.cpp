#include <doctest.h>

#include <sstream>

#include "linsyz/corpus.hpp"
#include "linsyz/io.hpp"
#include "linsyz/koszul.hpp"
#include "linsyz/rng.hpp"

using namespace linsyz;

namespace {

const Field QQ = Field::rationals();
const Field F = Field::prime(10007);

template <class T, class Read, class Write>
T round_trip(const T& x, Read read, Write write) {
  std::stringstream ss;
  write(ss, x);
  return read(ss);
}

std::size_t error_line(const std::string& text, PointSet (*)(std::istream&)) {
  std::istringstream in(text);
  try {
    read_pointset(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("linear forms parse and print") {
  CHECK(parse_linear_form(QQ, 4, "2*x1 + 3*x4") == Vec{QQ.from_int(2), QQ.zero(), QQ.zero(), QQ.from_int(3)});
  CHECK(parse_linear_form(QQ, 3, "-x2") == Vec{QQ.zero(), QQ.from_int(-1), QQ.zero()});
  CHECK(parse_linear_form(QQ, 3, "1/2 x3")[2] == QQ.parse_scalar("1/2"));
  CHECK(is_zero(parse_linear_form(QQ, 3, "0")));
  CHECK(parse_linear_form(QQ, 2, "x1 + x1")[0] == QQ.from_int(2));
  CHECK_THROWS_AS(parse_linear_form(QQ, 2, "x3"), ParseError);
  CHECK_THROWS_AS(parse_linear_form(QQ, 2, "2*y1"), ParseError);
  CHECK(format_linear(Vec{QQ.from_int(2), QQ.zero(), QQ.from_int(-1)}) == "2*x1 - x3");

  const VSpace v{3, false};
  const auto e = QQ.from_int(3) * ExtElement::basis(QQ, v, 0b011) + QQ.from_int(-1) * ExtElement::basis(QQ, v, 0b101);
  CHECK(format_exterior(e) == "3*x1^x2 - x1^x3");
  const SymmetricBasis sb(2, 3);
  SymElement s{QQ, 2, 3, zero_vec(QQ, sb.size())};
  s.coords[sb.index_of({2, 1})] = QQ.from_int(3);
  CHECK(format_symmetric(s) == "3*x1^2*x2");
}

TEST_CASE("linform-matrix files") {
  std::istringstream in(
      "linform-matrix v1\n"
      "# comment\n"
      "field Fp 10007\n"
      "dims a=2 b=3 n=4\n"
      "entry j=1 i=1 : 2*x1 + 3*x4   # trailing\n"
      "entry j=1 i=2 : x2\n");
  const auto m = read_linform_matrix(in);
  CHECK(m.a() == 2);
  CHECK(m.b() == 3);
  CHECK(m.n() == 4);
  CHECK(m.entry(0, 0) == Vec{F.from_int(2), F.zero(), F.zero(), F.from_int(3)});
  CHECK(is_zero(m.entry(2, 1)));

  Rng r(1);
  for (const Field& f : {F, QQ}) {
    const auto x = random_linear_form_matrix(f, 2, 3, 4, r);
    CHECK(round_trip(x, read_linform_matrix, write_linform_matrix) == x);
  }

  std::istringstream bad("linform-matrix v1\nfield Q\ndims a=1 b=1 n=2\nentry j=2 i=1 : x1\n");
  try {
    read_linform_matrix(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("graded-module files") {
  Rng r(2);
  for (const Field& f : {F, QQ}) {
    const auto m = random_quotient_module(f, 3, 2, 2, 2, r);
    CHECK(round_trip(m, read_graded_module, write_graded_module) == m);
  }
  const auto k = GradedModule::trivial(QQ, 4);
  const auto k2 = round_trip(k, read_graded_module, write_graded_module);
  CHECK(koszul_dim(k2, 2, 0) == 6);

  // x1 and x2 act on a free module but do not commute in degree 1
  std::istringstream bad(
      "graded-module v1\n"
      "field Q\n"
      "n=2 degrees 0..2 dims 1 2 3\n"
      "mult q=0 k=1 : 1 ; 0\n"
      "mult q=0 k=2 : 0 ; 1\n"
      "mult q=1 k=1 : 1 0 ; 0 1 ; 0 0\n"
      "mult q=1 k=2 : 0 0 ; 0 1 ; 0 1\n");
  CHECK_THROWS_AS(read_graded_module(bad), InvalidModule);

  std::istringstream shape("graded-module v1\nfield Q\nn=2 degrees 0..1 dims 1 1\nmult q=0 k=1 : 1 2\n");
  try {
    read_graded_module(shape);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("pointset files") {
  Rng r(3);
  for (const Field& f : {F, QQ}) {
    const auto z = random_points(f, 3, 6, r);
    CHECK(round_trip(z, read_pointset, write_pointset) == z);
  }
  CHECK(error_line("pointset v1\nfield Q\nambient r=2\npoint 1 0 0\n# same point\npoint 2 0 0\n", read_pointset) == 6);
  CHECK(error_line("pointset v1\nfield Q\nambient r=2\npoint 1 0\n", read_pointset) == 4);
  CHECK(error_line("pointset v2\n", read_pointset) == 1);
  CHECK(error_line("pointset v1\nfield Q\nambient r=2\npoint 0 0 0\n", read_pointset) == 4);
}
