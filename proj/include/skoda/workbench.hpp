#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skoda/blowup.hpp"
#include "skoda/bs.hpp"
#include "skoda/closure.hpp"

namespace skoda {

/// A supplied closure generator could not be certified.
class CertificationError : public std::runtime_error {
public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate element of the closure of J^m with an optional hint: a power s to
/// try first, and an intermediate ideal K (inside the closure of J) over which
/// the power certificate is sought.
struct ClosureHint {
  Poly g;
  unsigned s = 0;
  std::vector<Poly> via;
};

ClosureVerdict certify(const ClosureHint& hint, const Ideal& J, unsigned m, const ClosureCaps& caps = {});

struct GeneratorCheck {
  Poly g;
  ClosureVerdict verdict;
  bool in_Jk = false;
};

struct BsReport {
  Presentation ring;
  std::vector<Poly> J;
  std::size_t n = 0;
  unsigned k = 1;
  std::vector<GeneratorCheck> generators;
  bool holds = true;
  std::vector<Poly> failing;
  double seconds = 0;
  nlohmann::json extra = nlohmann::json::object();
};

/// Checks every certified generator of the closure of J^{n+k-1} against J^k,
/// n = number of generators of J. Without hints J must be monomial. Throws
/// CertificationError when a supplied generator cannot be certified.
BsReport bs_check(const Ideal& J, unsigned k, const std::optional<std::vector<ClosureHint>>& closure_gens = std::nullopt,
                  const ClosureCaps& caps = {});

/// Blowup with charts by f_i and power p = n+k-1 of the center J^p + (extra).
/// For extras integral over J^p the f_i-charts cover it.
BlowupModel closure_model(const Presentation& R, const std::vector<Poly>& f, unsigned k, const std::vector<Poly>& extra,
                          BlowupOptions opts = {});

/// L^k(f) over the base tensored with the Cech complex of the model. Twist data
/// is attached when the charts are indexed by f with power n+k-1 and the ratios exist.
TotalComplexSystem total_system(const BlowupModel& model, const std::vector<Poly>& f, unsigned k, bool twisted = true);

struct MainTheoremResult {
  ClosureVerdict certificate;
  std::optional<BlowupModel> model;
  std::optional<TotalComplexSystem> system;
  VanishingResult vanishing;
  /// A certified h without a witness.
  bool alarm = false;
  double seconds = 0;
};

/// Certifies h in the closure of J^{n+k-1}, J = (f), then builds the model and
/// the lifting system and returns the re-verified witness. Throws
/// CertificationError when the certificate does not validate.
MainTheoremResult main_theorem_verify(const Presentation& R, const Poly& h, const std::vector<Poly>& f, unsigned k,
                                      const ClosureHint& hint = {}, const ClosureCaps& caps = {});

/// h in (f)^k Gamma(Y_j) on every chart of the closure model (h joins the
/// center only when it certifies).
std::vector<bool> chart_level_check(const Presentation& R, const Poly& h, const std::vector<Poly>& f, unsigned k,
                                    const ClosureCaps& caps = {});

struct BirResult {
  bool member = false;
  /// "base" (h in J^k), "twisted" or "direct".
  std::string route;
  std::optional<Witness> witness;
  std::string note;
};

/// Vanishing of the class of h in H_0 of L^k(J) tensored with RGamma(Y, O_Y) for
/// the given model; true answers are certified, false answers are model-relative.
BirResult bir_preclosure_member(const Poly& h, const Ideal& J, unsigned k, const BlowupModel& model);

/// Q[xu, xv, yu, yv, zu, zv] presented as a quotient of
/// Q[a, b, c, d, e, g], the relations derived by elimination from x^3 + y^3 + z^3.
std::vector<Poly> derive_elliptic_relations(const Presentation& abcdeg);
/// The derived ring, computed once per process.
Presentation elliptic_cross_p1();

struct CounterexampleResult {
  Presentation ring;
  bool segre_relation = false;  // a*d - b*c in the relation ideal
  bool h_cube_in_Jp6 = false;
  bool h_not_in_J = false;
  BsReport report;
  bool as_expected() const { return segre_relation && h_cube_in_Jp6 && h_not_in_J && !report.holds; }
};

CounterexampleResult counterexample_suite(const ClosureCaps& caps = {});

/// Timing is left out unless asked for, so that output is reproducible.
nlohmann::json to_json(const BsReport& r, bool timing = false);
nlohmann::json to_json(const MainTheoremResult& r, bool timing = false);
nlohmann::json to_json(const BirResult& r);

}  // namespace skoda
