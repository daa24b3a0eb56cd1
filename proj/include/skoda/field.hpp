#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace skoda {

/// Field elements are GMP rationals. Over F_p they are kept as integers in [0, p).
using Coeff = mpq_class;

/// Coefficient field descriptor: the rationals or a prime field.
class Field {
public:
  enum class Kind { Rational, Prime };

  Field() = default;
  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rational; }

  Coeff from_int(long v) const;
  Coeff from_mpz(const mpz_class& v) const;
  /// num/den; throws std::domain_error when den is zero in the field.
  Coeff from_fraction(const mpz_class& num, const mpz_class& den) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  /// Brings an arbitrary rational into canonical form for this field.
  Coeff normalize(const Coeff& a) const;

  std::string to_string(const Coeff& a) const;
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

private:
  void reduce(Coeff& a) const;

  Kind kind_ = Kind::Rational;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace skoda
