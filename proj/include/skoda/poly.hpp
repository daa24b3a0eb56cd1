#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skoda/field.hpp"
#include "skoda/monomial.hpp"

namespace skoda {

/// Ambient polynomial ring: coefficient field, ordered variable names, term order.
class PolyRing {
public:
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
  }

private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial (or free-module vector when terms carry components) with
/// terms sorted strictly descending under the ring order and no zero coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes ownership of unsorted terms; sorts, combines, and drops zeros.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly constant(RingPtr ring, long c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly term(RingPtr ring, const Monomial& m, const Coeff& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Coeff& lead_coeff() const { return terms_.front().coeff; }
  /// Maximal total degree of a term; 0 for the zero polynomial.
  unsigned degree() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Coeff& c) const;
  Poly times_term(const Monomial& m, const Coeff& c) const;
  Poly pow(unsigned k) const;
  Poly monic() const;
  /// Same terms moved to free-module component c.
  Poly with_component(std::uint32_t c) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

  /// Direct access for the Groebner engine; callers must preserve the invariants.
  std::vector<Term>& mutable_terms() { return terms_; }

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// a - c*m*b, with both inputs already sorted.
Poly sub_scaled(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b);

/// Ring homomorphism on the ambient polynomial ring: variable i of p's ring maps to images[i].
Poly substitute(const Poly& p, std::span<const Poly> images, const RingPtr& target);

/// Re-expresses p in another ring by variable name; every variable used by p must exist there.
Poly embed_by_name(const Poly& p, const RingPtr& target);

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

}  // namespace skoda
