#include "skoda/workbench.hpp"

#include <chrono>
#include <mutex>

namespace skoda {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Ideal power_of(const Ideal& J, unsigned e) {
  if (is_monomial_ideal(J)) return MonomialIdeal::from_ideal(J).power(e).to_ideal();
  return ideal_power(J, e);
}

std::vector<Poly> reduced(const Presentation& R, const std::vector<Poly>& v) {
  std::vector<Poly> out;
  for (const auto& p : v) out.push_back(R->reduce(p));
  return out;
}

// Generators of J^p plus the extras not already in their span.
std::vector<Poly> closure_center(const Ideal& J, unsigned p, const std::vector<Poly>& extra) {
  std::vector<Poly> center = power_of(J, p).gens();
  for (const auto& h : extra) {
    Poly hr = J.ring()->reduce(h);
    if (hr.is_zero() || ideal_member(hr, Ideal(J.ring(), center))) continue;
    center.push_back(hr);
  }
  return center;
}

nlohmann::json strings(const std::vector<Poly>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

}  // namespace

ClosureVerdict certify(const ClosureHint& hint, const Ideal& J, unsigned m, const ClosureCaps& caps) {
  const Poly g = J.ring()->reduce(hint.g);
  if (!hint.via.empty()) {
    Ideal K(J.ring(), hint.via);
    if (hint.s > 0) {
      auto v = power_certificate_via(g, J, K, m, hint.s, caps);
      if (v.member()) return v;
    } else {
      for (unsigned s = 1; s <= caps.power_s; ++s) {
        auto v = power_certificate_via(g, J, K, m, s, caps);
        if (v.member()) return v;
      }
    }
  } else if (hint.s > 0) {
    auto v = power_certificate(g, J, m, hint.s);
    if (v.member()) return v;
  }
  return closure_member(g, J, m, caps);
}

BsReport bs_check(const Ideal& J, unsigned k, const std::optional<std::vector<ClosureHint>>& closure_gens,
                  const ClosureCaps& caps) {
  if (k == 0) throw std::invalid_argument("bs_check: k must be positive");
  if (J.gens().empty()) throw std::invalid_argument("bs_check: J has no generators");
  const auto t0 = Clock::now();
  BsReport r;
  r.ring = J.ring();
  r.J = J.gens();
  r.n = J.gens().size();
  r.k = k;
  const unsigned p = static_cast<unsigned>(r.n) + k - 1;

  std::vector<CertifiedGenerator> gens;
  if (closure_gens) {
    for (const auto& hint : *closure_gens) {
      auto v = certify(hint, J, p, caps);
      if (!v.member())
        throw CertificationError("cannot certify " + hint.g.to_string() + " in the closure of J^" + std::to_string(p));
      gens.push_back({J.ring()->reduce(hint.g), std::move(v)});
    }
  } else {
    auto G = closure_generators(J, p, caps);
    if (!G.rejected.empty())
      throw CertificationError("closure generator " + G.rejected.front().to_string() + " could not be certified");
    gens = std::move(G.accepted);
  }

  Ideal Jk = power_of(J, k);
  for (auto& c : gens) {
    GeneratorCheck chk{c.g, std::move(c.verdict), ideal_member(c.g, Jk)};
    if (!chk.in_Jk) {
      r.holds = false;
      r.failing.push_back(chk.g);
    }
    r.generators.push_back(std::move(chk));
  }
  r.seconds = since(t0);
  return r;
}

BlowupModel closure_model(const Presentation& R, const std::vector<Poly>& f, unsigned k, const std::vector<Poly>& extra,
                          BlowupOptions opts) {
  const auto fr = reduced(R, f);
  Ideal J(R, fr);
  const unsigned p = static_cast<unsigned>(fr.size()) + k - 1;
  return build_blowup(R, closure_center(J, p, extra), fr, p, opts);
}

TotalComplexSystem total_system(const BlowupModel& model, const std::vector<Poly>& f, unsigned k, bool twisted) {
  const auto& R = model.base;
  const auto fr = reduced(R, f);
  const std::size_t n = fr.size();
  FreeComplex L = l_complex(R, fr, k);
  std::map<IndexSet, RingMap> base_to_cell;
  for (const auto& [gamma, cell] : model.cells) base_to_cell.emplace(gamma, cell.from_base);
  std::optional<std::map<IndexSet, CellTwist>> twist;
  const bool applicable = model.chart_index_gens == fr && model.power == n + k - 1 && model.has_ratios();
  if (twisted && applicable) {
    twist.emplace();
    for (const auto& [gamma, cell] : model.cells)
      twist->emplace(gamma,
                     CellTwist{cell.generator, *cell.ratio, twisted_chart_complex(*cell.ratio, k, gamma.front(), cell.ring).complex});
  }
  return assemble_total_system(std::move(L), k, n, model.cover, std::move(base_to_cell), std::move(twist));
}

MainTheoremResult main_theorem_verify(const Presentation& R, const Poly& h, const std::vector<Poly>& f, unsigned k,
                                      const ClosureHint& hint, const ClosureCaps& caps) {
  if (f.empty()) throw std::invalid_argument("main_theorem_verify: no generators");
  if (k == 0) throw std::invalid_argument("main_theorem_verify: k must be positive");
  const auto t0 = Clock::now();
  const Poly hr = R->reduce(h);
  const auto fr = reduced(R, f);
  Ideal J(R, fr);
  const unsigned p = static_cast<unsigned>(fr.size()) + k - 1;
  MainTheoremResult res;
  ClosureHint full = hint;
  full.g = hr;
  res.certificate = certify(full, J, p, caps);
  if (!res.certificate.member())
    throw CertificationError("cannot certify " + hr.to_string() + " in the closure of J^" + std::to_string(p));
  res.model = closure_model(R, fr, k, {hr});
  res.system = total_system(*res.model, fr, k);
  res.vanishing = class_vanishes_in_H0(*res.system, hr);
  res.alarm = !res.vanishing.witness.has_value();
  res.seconds = since(t0);
  return res;
}

std::vector<bool> chart_level_check(const Presentation& R, const Poly& h, const std::vector<Poly>& f, unsigned k,
                                    const ClosureCaps& caps) {
  const Poly hr = R->reduce(h);
  const auto fr = reduced(R, f);
  Ideal J(R, fr);
  const unsigned p = static_cast<unsigned>(fr.size()) + k - 1;
  std::vector<Poly> extra;
  if (closure_member(hr, J, p, caps).member()) extra.push_back(hr);
  BlowupOptions opts;
  opts.overlaps = false;
  BlowupModel M = closure_model(R, fr, k, extra, opts);
  const auto Jk = power_of(J, k).gens();
  std::vector<bool> out;
  for (const auto& C : M.charts) {
    std::vector<Poly> row;
    for (const auto& g : Jk) row.push_back(C.from_base(g));
    ModuleMatrix A(C.ring, 1, row.size(), row);
    out.push_back(module_solve(A, {C.from_base(hr)}).has_value());
  }
  return out;
}

BirResult bir_preclosure_member(const Poly& h, const Ideal& J, unsigned k, const BlowupModel& model) {
  if (!same_ring(*J.ring(), *model.base)) throw std::invalid_argument("bir_preclosure_member: model over another ring");
  const auto& R = J.ring();
  const Poly hr = R->reduce(h);
  BirResult res;
  if (ideal_member(hr, power_of(J, k))) {
    res.member = true;
    res.route = "base";
    return res;
  }
  const auto& f = J.gens();
  TotalComplexSystem S = total_system(model, f, k);
  VanishingResult v = class_vanishes_in_H0(S, hr);
  res.route = S.twist ? "twisted" : "direct";
  if (!v.witness && S.twist) {
    // Divisibility by f_a^{n+k-1} is not necessary for vanishing; retry directly.
    v = class_vanishes_direct(S, hr);
    res.route = "direct";
  }
  res.member = v.witness.has_value();
  res.witness = std::move(v.witness);
  res.note = v.note;
  return res;
}

std::vector<Poly> derive_elliptic_relations(const Presentation& abcdeg) {
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "g"};
  if (abcdeg->vars() != names) throw std::invalid_argument("derive_elliptic_relations: expects variables a,b,c,d,e,g");
  std::vector<std::string> vars{"x", "y", "z", "u", "v"};
  vars.insert(vars.end(), names.begin(), names.end());
  auto P = polynomial_ring(vars, abcdeg->field());
  Ideal K(P, std::vector<std::string>{"x^3 + y^3 + z^3", "a - x*u", "b - x*v", "c - y*u", "d - y*v", "e - z*u",
                                      "g - z*v"});
  Ideal I = eliminate(K, names);
  std::vector<Poly> out;
  for (const auto& g : I.gens()) out.push_back(abcdeg->reduce(embed_by_name(g, abcdeg->ambient())));
  return out;
}

Presentation elliptic_cross_p1() {
  static std::once_flag once;
  static Presentation ring;
  std::call_once(once, [] {
    auto base = polynomial_ring({"a", "b", "c", "d", "e", "g"});
    ring = ring_quotient(base, derive_elliptic_relations(base));
  });
  return ring;
}

CounterexampleResult counterexample_suite(const ClosureCaps& caps) {
  GbLimits limits = active_limits();
  limits.max_pairs *= 4;
  limits.max_degree = std::max(limits.max_degree, 60u);
  LimitScope scope(limits);
  CounterexampleResult res;
  const auto& R = elliptic_cross_p1();
  res.ring = R;
  res.segre_relation = R->reduce(R->parse("a*d - b*c")).is_zero();
  Ideal J(R, std::vector<std::string>{"a^2", "e^2"});
  Ideal Jp(R, std::vector<std::string>{"a^2", "a*e", "e^2"});
  const Poly h = R->parse("a*c^2*e");
  res.h_cube_in_Jp6 = ideal_member(R->pow(h, 3), ideal_power(Jp, 6));
  res.h_not_in_J = !ideal_member(h, J);
  res.report = bs_check(J, 1, std::vector<ClosureHint>{{h, 3, Jp.gens()}}, caps);
  res.report.extra = {{"segre_relation", res.segre_relation},
                      {"h_cube_in_Jp6", res.h_cube_in_Jp6},
                      {"h_not_in_J", res.h_not_in_J}};
  return res;
}

nlohmann::json to_json(const BsReport& r, bool timing) {
  nlohmann::json j;
  j["ring"] = presentation_json(*r.ring);
  j["J"] = strings(r.J);
  j["n"] = r.n;
  j["k"] = r.k;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.generators)
    gens.push_back({{"generator", g.g.to_string()}, {"certificate", to_json(g.verdict)}, {"in_Jk", g.in_Jk}});
  j["generators"] = std::move(gens);
  j["verdict"] = r.holds ? "HOLDS" : "FAILS";
  j["failing"] = strings(r.failing);
  if (!r.extra.empty()) j["checks"] = r.extra;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::json to_json(const MainTheoremResult& r, bool timing) {
  nlohmann::json j;
  j["certificate"] = to_json(r.certificate);
  if (r.model) {
    j["model"] = {{"center", strings(r.model->center_gens)},
                  {"chart_generators", strings(r.model->chart_index_gens)},
                  {"power", r.model->power},
                  {"charts", r.model->ncharts()}};
  }
  j["method"] = r.vanishing.method == LiftMethod::Twisted ? "twisted" : "direct";
  j["witness"] = r.vanishing.witness ? to_json(*r.vanishing.witness) : nlohmann::json(nullptr);
  j["alarm"] = r.alarm;
  if (r.alarm) {
    j["failed_stage"] = r.vanishing.failed_stage;
    j["note"] = r.vanishing.note;
  }
  if (timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::json to_json(const BirResult& r) {
  nlohmann::json j;
  j["member"] = r.member;
  j["route"] = r.route;
  j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace skoda
