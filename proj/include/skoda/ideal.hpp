#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skoda/ring.hpp"

namespace skoda {

/// Finitely generated ideal of a presented ring. The reduced Groebner basis of
/// gens + relations in the ambient ring is computed on first use and shared by copies.
class Ideal {
public:
  Ideal(Presentation ring, std::vector<Poly> gens);
  Ideal(Presentation ring, const std::vector<std::string>& exprs);

  const Presentation& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Groebner basis (includes the ring relations). May throw ResourceCapExceeded.
  const std::vector<Poly>& groebner_basis() const { return reducer().basis(); }
  const Reducer& reducer() const;
  Poly normal_form(const Poly& p) const { return reducer().normal_form(p); }
  bool contains(const Poly& h) const { return normal_form(h).is_zero(); }
  bool is_unit() const;

  std::string to_string() const;

private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const Reducer> gb;
  };

  Presentation ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

bool same_ring(const RingPresentation& a, const RingPresentation& b);

std::vector<Poly> groebner_basis(const Ideal& I);
bool ideal_member(const Poly& h, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& big, const Ideal& small);

/// I intersected with the subring on the kept variables; the result lives in
/// the polynomial ring on those variables (relations are adjoined first).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep);
/// I : g^infinity via an auxiliary inverse of g.
Ideal saturate(const Ideal& I, const Poly& g);
/// I : J = { r : r J in I }.
Ideal colon(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

/// Matrix over a presented ring; entries are kept in normal form.
class ModuleMatrix {
public:
  ModuleMatrix(Presentation ring, std::size_t rows, std::size_t cols);
  ModuleMatrix(Presentation ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  const Presentation& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Poly& p) { entries_[r * cols_ + c] = ring_->reduce(p); }
  std::vector<Poly> column(std::size_t c) const;
  bool is_zero() const;

  std::vector<Poly> apply(const std::vector<Poly>& x) const;
  friend ModuleMatrix operator*(const ModuleMatrix& a, const ModuleMatrix& b);
  ModuleMatrix scaled(const Poly& s) const;
  /// Same entries pushed through a ring map into its target.
  ModuleMatrix mapped(const RingMap& map) const;
  friend bool operator==(const ModuleMatrix& a, const ModuleMatrix& b);

private:
  Presentation ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> entries_;
};

/// Decides M x = b over the presented ring with a position-over-term module
/// Groebner basis of the columns of M, augmented by relation multiples in every
/// coordinate. The basis is built once and reused across right-hand sides.
class ModuleSolver {
public:
  explicit ModuleSolver(ModuleMatrix M);
  const ModuleMatrix& matrix() const { return M_; }
  std::optional<std::vector<Poly>> solve(const std::vector<Poly>& b) const;
  /// Generators of ker M (columns of the returned cols x s matrix).
  ModuleMatrix kernel() const;

private:
  ModuleMatrix M_;
  std::vector<Poly> gb_;
  Reducer reducer_;
};

std::optional<std::vector<Poly>> module_solve(const ModuleMatrix& M, const std::vector<Poly>& b);
ModuleMatrix syzygies(const ModuleMatrix& M);
/// Coefficients c with sum c_i g_i = h, or nothing when h is not in (gens).
std::optional<std::vector<Poly>> lift(const Poly& h, const Ideal& I);

/// Splits a module vector (components 1..n) into its coordinates.
std::vector<Poly> split_components(const Poly& v, std::size_t first, std::size_t count, const RingPtr& ring);

}  // namespace skoda
