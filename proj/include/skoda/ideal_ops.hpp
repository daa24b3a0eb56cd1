#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skoda/ideal.hpp"

namespace skoda {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Generated by all k-fold products of generators (multisets), duplicates up
/// to a scalar removed.
Ideal ideal_power(const Ideal& I, unsigned k);
/// Number of k-fold generator products before duplicates are removed.
std::size_t power_product_count(std::size_t ngens, unsigned k);

using Exponent = std::vector<unsigned>;

/// Monomial ideal in a polynomial ring, stored by its minimal generators.
class MonomialIdeal {
public:
  /// Minimalizes the given exponent vectors.
  MonomialIdeal(Presentation ring, std::vector<Exponent> exps);
  /// Throws std::invalid_argument unless every generator of I is a monomial in a polynomial ring.
  static MonomialIdeal from_ideal(const Ideal& I);

  const Presentation& ring() const { return ring_; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::size_t nvars() const { return ring_->nvars(); }
  bool contains(const Exponent& e) const;
  MonomialIdeal power(unsigned m) const;
  Ideal to_ideal() const;
  Poly monomial(const Exponent& e) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.exps_ == b.exps_; }

private:
  Presentation ring_;
  std::vector<Exponent> exps_;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent exponent_of(const Poly& monomial);

/// e lies in conv(generator exponents) + nonnegative orthant. Decided by an
/// exact rational phase-one simplex.
bool newton_hull_member(const Exponent& e, const MonomialIdeal& I);
/// Rational weights (summing to one) on the generators with sum w_j v_j <= e, if any.
std::optional<std::vector<Coeff>> newton_hull_weights(const Exponent& e, const MonomialIdeal& I);

/// Minimal generators of the integral closure of I^m.
MonomialIdeal monomial_integral_closure(const MonomialIdeal& I, unsigned m);

}  // namespace skoda
