#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skoda/ideal.hpp"

namespace skoda {

/// Bounded complex of finite free modules 0 <- F_0 <- F_1 <- ... <- F_len.
struct FreeComplex {
  Presentation ring;
  std::vector<std::size_t> ranks;               // ranks[i] = rank F_i
  std::vector<ModuleMatrix> d;                  // d[i-1] : F_i -> F_{i-1}
  std::vector<std::vector<std::string>> labels;  // optional, labels[i][j] for basis element j of F_i

  std::size_t length() const { return d.size(); }
  const ModuleMatrix& differential(std::size_t i) const { return d.at(i - 1); }
  /// Shapes chain correctly; throws std::logic_error otherwise.
  void validate() const;
};

bool check_d_squared(const FreeComplex& C);
/// ker d_i is contained in im d_{i+1}; i >= 1. Degrees above the length are trivially exact.
bool homology_is_zero_at(const FreeComplex& C, std::size_t i);
/// Entries pushed through a ring map.
FreeComplex base_change(const FreeComplex& C, const RingMap& map);

nlohmann::json to_json(const FreeComplex& C);
nlohmann::json to_json(const ModuleMatrix& M);

using IndexSet = std::vector<std::size_t>;
std::string index_set_string(const IndexSet& s);

/// Rings and restriction maps of an affine cover, enough to form Cech cochains.
/// cells[p] lists the (p+1)-element index sets in lexicographic order;
/// restriction(face, cell) is defined whenever face is cell minus one index.
struct CechCover {
  std::size_t ncharts = 0;
  std::vector<std::vector<IndexSet>> cells;
  std::map<IndexSet, Presentation> rings;
  std::map<std::pair<IndexSet, IndexSet>, RingMap> restrictions;

  const RingMap& restriction(const IndexSet& face, const IndexSet& cell) const;
};

/// Cech cochain of vectors: one vector of ring elements per cell of a fixed degree.
using Cochain = std::map<IndexSet, std::vector<Poly>>;

/// delta(c)_gamma = sum_t (-1)^t res(c_{gamma minus gamma_t}); c lives in degree p.
Cochain cech_differential(const CechCover& cover, std::size_t p, const Cochain& c, std::size_t width);

/// Per-cell data for the twisted construction: on cell gamma with a = min gamma,
/// the base differentials are f_a times (f_a^k on d_1) those of the unit complex.
struct CellTwist {
  Poly f_min;              // f_a in the cell ring
  std::vector<Poly> ratio;  // f_b / f_a in the cell ring, b = 0..n-1
  FreeComplex unit;         // L^k(ratio) over the cell ring
};

struct SolverCache;

/// L (over the base) tensored with the Cech complex of a cover. The total
/// differential on L_i (x) C^p is d + (-1)^i delta.
struct TotalComplexSystem {
  FreeComplex L;
  unsigned k = 1;
  std::size_t n = 0;
  CechCover cover;
  std::map<IndexSet, RingMap> base_to_cell;
  std::map<IndexSet, FreeComplex> L_on_cell;
  std::optional<std::map<IndexSet, CellTwist>> twist;
  /// Module Groebner bases reused across right-hand sides; shared by copies.
  std::shared_ptr<SolverCache> solvers;

  /// Largest Cech degree: ncharts - 1.
  std::size_t top_degree() const { return cover.ncharts - 1; }
};

TotalComplexSystem assemble_total_system(FreeComplex L, unsigned k, std::size_t n, CechCover cover,
                                         std::map<IndexSet, RingMap> base_to_cell,
                                         std::optional<std::map<IndexSet, CellTwist>> twist = std::nullopt);

/// z[i] is a cochain of degree i with values in L_{i+1}.
struct Witness {
  std::vector<Cochain> z;
};

enum class LiftMethod { Twisted, Direct };

struct VanishingResult {
  std::optional<Witness> witness;
  LiftMethod method = LiftMethod::Direct;
  std::size_t failed_stage = 0;  // meaningful when no witness
  IndexSet failed_cell;
  std::string note;
};

/// d_1(z_0) = (h, ..., h) and d_{i+1}(z_i) = (-1)^{i+1} delta(z_{i-1}) for i >= 1.
bool verify_witness(const TotalComplexSystem& S, const Poly& h, const Witness& w);

/// Solves the lifting system stage by stage. With twist data the target of the
/// class is the twisted complex (h must lie in f_a^{n+k-1} on every chart);
/// without it the base differentials are lifted directly. Any returned witness
/// has passed verify_witness.
VanishingResult class_vanishes_in_H0(const TotalComplexSystem& S, const Poly& h);
/// Forces the direct stage-wise method even when twist data is present.
VanishingResult class_vanishes_direct(const TotalComplexSystem& S, const Poly& h);

/// D(D(x)) = 0 for a cochain x of Cech degree p with values in L_j.
bool total_differential_squares_to_zero(const TotalComplexSystem& S, std::size_t j, std::size_t p,
                                        const Cochain& x);

nlohmann::json to_json(const Witness& w);

}  // namespace skoda
