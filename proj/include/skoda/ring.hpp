#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "skoda/groebner.hpp"
#include "skoda/poly.hpp"

namespace skoda {

/// A finitely presented commutative algebra k[vars]/(relations). The stored
/// relations are the reduced Groebner basis of the relation ideal, so every
/// element handed out by this class is a canonical normal form.
class RingPresentation {
public:
  RingPresentation(RingPtr ambient, std::vector<Poly> relations_gb);

  const RingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<std::string>& vars() const { return ambient_->vars(); }
  const std::vector<Poly>& relations() const { return reducer_.basis(); }
  bool has_relations() const { return !reducer_.basis().empty(); }
  /// True when 1 lies in the relation ideal.
  bool is_zero_ring() const { return zero_; }

  Poly reduce(const Poly& p) const { return reducer_.normal_form(p); }
  Poly parse(std::string_view text) const;

  Poly zero() const { return Poly(ambient_); }
  Poly one() const { return reduce(Poly::constant(ambient_, 1)); }
  Poly constant(long c) const { return reduce(Poly::constant(ambient_, c)); }
  Poly var(std::size_t i) const { return reduce(Poly::variable(ambient_, i)); }
  Poly var(std::string_view name) const;

  Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
  Poly sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly pow(const Poly& a, unsigned k) const;

private:
  RingPtr ambient_;
  Reducer reducer_;
  bool zero_ = false;
};

using Presentation = std::shared_ptr<const RingPresentation>;

/// The polynomial ring itself (no relations).
Presentation polynomial_ring(RingPtr ambient);
Presentation polynomial_ring(std::vector<std::string> vars, Field field = Field::rationals(),
                             MonomialOrder order = MonomialOrder::grevlex());

/// base / (relation_gens). Relations already present in base are kept.
/// A zero ring is flagged, never rejected.
Presentation ring_quotient(const Presentation& base, std::vector<Poly> relation_gens);

/// Parses relation strings against the ambient ring of base.
Presentation ring_quotient(const Presentation& base, const std::vector<std::string>& relation_exprs);

/// Homomorphism of presented rings given by the images of the source's ambient variables.
class RingMap {
public:
  RingMap(Presentation source, Presentation target, std::vector<Poly> images);

  const Presentation& source() const { return source_; }
  const Presentation& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }

  Poly operator()(const Poly& p) const;
  /// Every source relation maps to zero.
  bool is_well_defined() const;
  /// this after first.
  RingMap compose_after(const RingMap& first) const;

private:
  Presentation source_, target_;
  std::vector<Poly> images_;
};

}  // namespace skoda
