#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skoda/complex.hpp"

namespace skoda {

/// Kernel of base[T_1..T_m] -> base[s], T_i -> g_i s. Lives in the polynomial
/// ring on base variables and T's, with the base relations among its generators.
Ideal rees_presentation(const Ideal& I);

/// Affine chart of the blowup of the center along f_a^power: base[u_g] / kernel,
/// u_g standing for g / f_a^power.
struct BlowupChart {
  std::size_t index = 0;
  Presentation ring;
  RingMap from_base;
  Poly generator;                         // f_a
  std::vector<Poly> center_images;        // u_g
  std::vector<Poly> q;                    // f_b^power / f_a^power
  std::optional<std::vector<Poly>> ratio;  // f_b / f_a, when the center contains J^power
};

/// Data attached to every cell gamma of the cover (a = min gamma).
struct BlowupCell {
  IndexSet charts;
  Presentation ring;
  RingMap from_base;
  RingMap from_chart;  // chart a -> cell
  Poly generator;      // f_a
  std::vector<Poly> q;
  std::optional<std::vector<Poly>> ratio;
};

struct BlowupModel {
  Presentation base;
  std::vector<Poly> center_gens;
  std::vector<Poly> chart_index_gens;
  unsigned power = 1;
  std::vector<BlowupChart> charts;
  std::map<IndexSet, BlowupCell> cells;
  CechCover cover;

  std::size_t ncharts() const { return charts.size(); }
  bool has_ratios() const;
};

struct BlowupOptions {
  /// Build overlaps of all sizes (default) or stop after charts.
  bool overlaps = true;
};

/// Charts indexed by chart_index_gens, each f_i^power required to lie in the center.
BlowupModel build_blowup(const Presentation& base, const std::vector<Poly>& center_gens,
                         const std::vector<Poly>& chart_index_gens, unsigned power, BlowupOptions opts = {});

struct CechComplex {
  CechCover cover;
  bool delta_squared_zero = false;
};

/// Checks delta o delta on the generators of every cochain ring.
CechComplex cech_complex(const BlowupModel& model);

/// Restriction maps are well defined, commute on every codimension-two square,
/// and the two images of each center generator agree on overlaps.
struct ModelCheck {
  bool maps_well_defined = true;
  bool squares_commute = true;
  bool center_images_agree = true;
  bool ratios_consistent = true;
  std::vector<std::string> problems;
  bool ok() const { return maps_well_defined && squares_commute && center_images_agree && ratios_consistent; }
};
ModelCheck check_model(const BlowupModel& model);

/// h in (f_i^m) Gamma(Y_i), chart by chart.
std::vector<bool> exceptional_power_membership(const BlowupModel& model, const Poly& h, unsigned m);

/// h^s lies in f_i^{power*s} Gamma(Y_i) on every chart, i.e. h / f_i^power is a
/// root of a monic X^s - c with c regular on the chart.
std::vector<bool> power_redundancy(const BlowupModel& model, const Poly& h, unsigned s);

nlohmann::json to_json(const BlowupModel& model);
nlohmann::json presentation_json(const RingPresentation& R);

}  // namespace skoda
