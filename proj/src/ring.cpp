#include "skoda/ring.hpp"

#include <stdexcept>

#include "skoda/parse.hpp"

namespace skoda {

RingPresentation::RingPresentation(RingPtr ambient, std::vector<Poly> relations_gb)
    : ambient_(std::move(ambient)), reducer_(std::move(relations_gb)) {
  for (const auto& r : reducer_.basis())
    if (r.is_constant() && !r.is_zero()) zero_ = true;
}

Poly RingPresentation::parse(std::string_view text) const { return reduce(parse_ambient_poly(text, ambient_)); }

Poly RingPresentation::var(std::string_view name) const {
  int i = ambient_->index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return var(static_cast<std::size_t>(i));
}

Poly RingPresentation::pow(const Poly& a, unsigned k) const {
  Poly result = one();
  Poly base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

Presentation polynomial_ring(RingPtr ambient) {
  return std::make_shared<const RingPresentation>(std::move(ambient), std::vector<Poly>{});
}

Presentation polynomial_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
  return polynomial_ring(make_ring(field, std::move(vars), std::move(order)));
}

Presentation ring_quotient(const Presentation& base, std::vector<Poly> relation_gens) {
  std::vector<Poly> gens = base->relations();
  const std::size_t known = gens.size();
  for (auto& g : relation_gens) {
    if (g.ring() && !g.ring()->same_as(*base->ambient()))
      throw std::invalid_argument("ring_quotient: relation from a different ring");
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return std::make_shared<const RingPresentation>(base->ambient(), groebner_basis(std::move(gens), known));
}

Presentation ring_quotient(const Presentation& base, const std::vector<std::string>& relation_exprs) {
  std::vector<Poly> gens;
  for (const auto& e : relation_exprs) gens.push_back(parse_ambient_poly(e, base->ambient()));
  return ring_quotient(base, std::move(gens));
}

RingMap::RingMap(Presentation source, Presentation target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->nvars())
    throw std::invalid_argument("ring map needs one image per source variable");
  for (auto& im : images_) im = target_->reduce(im.ring() ? im : Poly(target_->ambient()));
}

Poly RingMap::operator()(const Poly& p) const {
  return target_->reduce(substitute(p, images_, target_->ambient()));
}

bool RingMap::is_well_defined() const {
  for (const auto& r : source_->relations())
    if (!(*this)(r).is_zero()) return false;
  return true;
}

RingMap RingMap::compose_after(const RingMap& first) const {
  std::vector<Poly> imgs;
  imgs.reserve(first.images().size());
  for (const auto& im : first.images()) imgs.push_back((*this)(im));
  return RingMap(first.source(), target_, std::move(imgs));
}

}  // namespace skoda
