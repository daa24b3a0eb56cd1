#include "skoda/field.hpp"

#include <stdexcept>

namespace skoda {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

void Field::reduce(Coeff& a) const {
  if (kind_ == Kind::Rational) return;
  // a is an integer here; bring it into [0, p).
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(p_));
  a = r;
}

Coeff Field::normalize(const Coeff& a) const {
  if (kind_ == Kind::Rational) {
    Coeff r = a;
    r.canonicalize();
    return r;
  }
  return from_fraction(a.get_num(), a.get_den());
}

Coeff Field::from_int(long v) const {
  Coeff r(v);
  reduce(r);
  return r;
}

Coeff Field::from_mpz(const mpz_class& v) const {
  Coeff r(v);
  reduce(r);
  return r;
}

Coeff Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == Kind::Rational) {
    if (den == 0) throw std::domain_error("division by zero");
    Coeff r(num, den);
    r.canonicalize();
    return r;
  }
  Coeff d = from_mpz(den);
  if (is_zero(d)) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  return mul(from_mpz(num), inv(d));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  Coeff r = a + b;
  if (kind_ == Kind::Prime && r >= static_cast<unsigned long>(p_)) r -= static_cast<unsigned long>(p_);
  return r;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  Coeff r = a - b;
  if (kind_ == Kind::Prime && sgn(r) < 0) r += static_cast<unsigned long>(p_);
  return r;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  Coeff r = a * b;
  reduce(r);
  return r;
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == Kind::Prime) return is_zero(a) ? a : Coeff(static_cast<unsigned long>(p_)) - a;
  return -a;
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::Rational) return 1 / a;
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string Field::to_string(const Coeff& a) const { return a.get_str(); }

std::string Field::describe() const {
  return kind_ == Kind::Rational ? "QQ" : "ZZ/" + std::to_string(p_);
}

}  // namespace skoda
