#include "linsyz/field.hpp"

#include <charconv>
#include <ostream>

namespace linsyz {

namespace {

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !::linsyz::is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:") || text.starts_with("Fp ")) {
    digits = trim(text.substr(3));
  } else if (text.starts_with("F")) {
    digits = trim(text.substr(1));
  } else {
    throw std::invalid_argument("unrecognized field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("unrecognized field '" + std::string(text) + "'");
  return prime(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rationals()) return Scalar(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(*this, static_cast<std::uint32_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return Scalar(*this, mpq_class(v));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(*this, static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_rationals()) return Scalar(*this, v);
  Scalar den = from_mpz(v.get_den());
  if (den.is_zero())
    throw std::domain_error("denominator " + v.get_den().get_str() + " vanishes in " + to_string());
  return from_mpz(v.get_num()) / den;
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.front() == '+') text.remove_prefix(1);
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return from_rational(q);
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("Q") : "Fp " + std::to_string(p_);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars over " + field_.to_string() + " and " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  if (auto* v = std::get_if<std::uint32_t>(&v_)) return *v == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* v = std::get_if<std::uint32_t>(&v_)) return *v == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(v_)} + std::get<std::uint32_t>(o.v_);
    if (s >= field_.p_) s -= field_.p_;
    return Scalar(field_, static_cast<std::uint32_t>(s));
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime()) {
    std::uint64_t a = std::get<std::uint32_t>(v_), b = std::get<std::uint32_t>(o.v_);
    return Scalar(field_, static_cast<std::uint32_t>(a >= b ? a - b : a + field_.p_ - b));
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime()) {
    std::uint64_t a = std::get<std::uint32_t>(v_), b = std::get<std::uint32_t>(o.v_);
    return Scalar(field_, static_cast<std::uint32_t>(a * b % field_.p_));
  }
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime()) {
    std::uint32_t a = std::get<std::uint32_t>(v_);
    return Scalar(field_, a == 0 ? 0u : field_.p_ - a);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in " + field_.to_string());
  if (field_.is_prime())
    return Scalar(field_, mod_pow(std::get<std::uint32_t>(v_), field_.p_ - 2, field_.p_));
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw std::logic_error("residue() on a rational scalar");
  return std::get<std::uint32_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw std::logic_error("rational() on a prime-field scalar");
  return std::get<mpq_class>(v_);
}

Scalar Scalar::reduce(const Field& target) const {
  if (target == field_) return *this;
  if (field_.is_rationals()) return target.from_rational(std::get<mpq_class>(v_));
  throw FieldMismatch("cannot map " + field_.to_string() + " into " + target.to_string());
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.to_string(); }

}  // namespace linsyz
