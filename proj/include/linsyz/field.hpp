#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace linsyz {

class Scalar;

/// Raised when values over different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field: a prime field F_p (p < 2^31) or the rationals.
///
/// A Field is a small value type; two fields compare equal iff they are the
/// same field. Every Scalar carries its Field so mixed arithmetic is caught.
class Field {
 public:
  enum class Kind : std::uint8_t { prime, rationals };

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(Kind::rationals, 0); }

  /// Parses "Fp:10007", "Fp 10007", "F10007" or "Q".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  /// Zero for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Throws std::domain_error if the denominator vanishes in this field.
  Scalar from_rational(const mpq_class& v) const;
  /// Accepts "7", "-3", "4/6".
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;  // "Fp 10007" or "Q"

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element in canonical form: 0 <= v < p for F_p, a reduced
/// fraction with positive denominator for Q.
class Scalar {
 public:
  /// Zero of F_2; placeholder for containers. Prefer Field::zero().
  Scalar() : field_(Field::Kind::prime, 2), v_(std::uint32_t{0}) {}

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  /// Residue for F_p (throws for Q).
  std::uint32_t residue() const;
  /// Value for Q (throws for F_p).
  const mpq_class& rational() const;

  /// Reduces into `target`: identity for the same field, residue map Q -> F_p.
  Scalar reduce(const Field& target) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Field;
  Scalar(Field f, std::uint32_t v) : field_(f), v_(v) {}
  Scalar(Field f, mpq_class v) : field_(f), v_(std::move(v)) {}

  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Field& f);

}  // namespace linsyz
