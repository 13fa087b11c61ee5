#include "fdimlab/scalar.hpp"

namespace fdimlab {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p); a != 0 mod p
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw domain_error("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw domain_error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Field{Kind::Prime, p};
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p) + ")";
}

Field Field::parse(const std::string& s) {
  if (s == "QQ") return rationals();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    const std::string body = s.substr(3, s.size() - 4);
    for (char c : body)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw domain_error("bad field spec: " + s);
    return prime(static_cast<std::uint32_t>(std::stoul(body)));
  }
  throw domain_error("bad field spec: " + s + " (expected QQ or GF(p))");
}

Scalar Scalar::from_int(const Field& f, long long n) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    long long r = n % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    s.v_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
  } else {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pm(f.p);
    mpz_class nr = num % pm;
    if (nr < 0) nr += pm;
    mpz_class dr = den % pm;
    if (dr < 0) dr += pm;
    if (dr == 0) throw domain_error("denominator vanishes mod p");
    std::uint32_t n32 = static_cast<std::uint32_t>(nr.get_ui());
    std::uint32_t d32 = static_cast<std::uint32_t>(dr.get_ui());
    s.v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(n32) * mod_inverse(d32, f.p)) % f.p);
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : v_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : v_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw domain_error("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ + o.q_;
  else
    r.v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v_) + o.v_) % field_.p);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ - o.q_;
  else
    r.v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v_) + field_.p - o.v_) % field_.p);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ * o.q_;
  else
    r.v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v_) * o.v_) % field_.p);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.v_ = v_ == 0 ? 0 : field_.p - v_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("division by zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.v_ = mod_inverse(v_, field_.p);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.is_rational() ? q_ == o.q_ : v_ == o.v_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw domain_error("not a rational scalar");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw domain_error("not a prime-field scalar");
  return v_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(v_);
}

}  // namespace fdimlab
