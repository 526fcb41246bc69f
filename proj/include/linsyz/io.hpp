#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linsyz/graded_module.hpp"
#include "linsyz/linforms.hpp"
#include "linsyz/multilinear.hpp"
#include "linsyz/points.hpp"

namespace linsyz {

/// Malformed input. line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// "2*x1 + 3*x4", "-x2", "1/2 x3", "0". Variables x1..xn.
Vec parse_linear_form(const Field& f, int n, std::string_view text);

std::string format_linear(const Vec& form);
/// "3*x1^x2^x4 - x1^x3"; the empty product prints as its coefficient.
std::string format_exterior(const ExtElement& e);
/// "3*x1^2*x2 + x3^2"
std::string format_symmetric(const SymElement& e);

/// linform-matrix v1
LinearFormMatrix read_linform_matrix(std::istream& in);
void write_linform_matrix(std::ostream& out, const LinearFormMatrix& m);

/// graded-module v1; commutativity is enforced (InvalidModule carries the
/// counterexample).
GradedModule read_graded_module(std::istream& in);
void write_graded_module(std::ostream& out, const GradedModule& m);

/// pointset v1; repeated points are a ParseError.
PointSet read_pointset(std::istream& in);
void write_pointset(std::ostream& out, const PointSet& z);

}  // namespace linsyz
