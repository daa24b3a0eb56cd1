#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skoda/poly.hpp"

namespace skoda {

/// Budget for a single Groebner basis computation.
struct GbLimits {
  std::size_t max_pairs = 200000;
  /// Largest sugar degree an S-pair may have (never below the largest input degree).
  unsigned max_degree = 40;
};

/// A computation ran past its GbLimits. Always distinct from a true/false answer.
class ResourceCapExceeded : public std::runtime_error {
public:
  enum class Kind { Pairs, Degree };
  ResourceCapExceeded(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Limits used by computations on this thread when none are passed explicitly.
const GbLimits& active_limits();

/// Overrides active_limits() on this thread for its lifetime.
class LimitScope {
public:
  explicit LimitScope(const GbLimits& limits);
  ~LimitScope();
  LimitScope(const LimitScope&) = delete;
  LimitScope& operator=(const LimitScope&) = delete;

private:
  GbLimits saved_;
};

/// Reduced Groebner basis of the submodule generated by gens, under the ring's
/// order with position-over-term on components. Elements are monic and sorted
/// by leading term, descending. The first known_gb entries must already be a
/// Groebner basis of what they generate; pairs among them are skipped.
std::vector<Poly> groebner_basis(std::vector<Poly> gens, std::size_t known_gb = 0,
                                 const GbLimits& limits = active_limits());

Poly s_polynomial(const Poly& f, const Poly& g);

/// Full normal form against a fixed list of reducers.
class Reducer {
public:
  Reducer() = default;
  explicit Reducer(std::vector<Poly> basis);

  const std::vector<Poly>& basis() const { return basis_; }
  Poly normal_form(const Poly& p) const;
  bool reduces_to_zero(const Poly& p) const { return normal_form(p).is_zero(); }

private:
  std::vector<Poly> basis_;
};

}  // namespace skoda
