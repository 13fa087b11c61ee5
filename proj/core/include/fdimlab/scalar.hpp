#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fdimlab {

// Thrown on domain violations (field mismatch, division by zero, bad input).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ground field of a computation: the rationals or GF(p) with p prime, p < 2^31.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static Field rationals() { return Field{Kind::Rational, 0}; }
  static Field prime(std::uint32_t p);

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  bool is_rational() const { return kind == Kind::Rational; }
  std::string name() const;

  // Parses "QQ" or "GF(p)".
  static Field parse(const std::string& s);
};

// Exact field element, tagged by its field. Rationals are kept reduced with a
// positive denominator (mpq_class canonical form); prime-field values in [0,p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_mpq(const Field& f, const mpq_class& q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  std::string str() const;

 private:
  Field field_;
  mpq_class q_;             // used when field is rational
  std::uint32_t v_ = 0;     // used when field is GF(p)

  void check_same(const Scalar& o) const;
};

}  // namespace fdimlab
