#include "skoda/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace skoda {

namespace {

// A stem such that stem followed by digits never collides with an existing name.
std::string fresh_stem(const std::vector<std::string>& taken, std::string stem) {
  auto collides = [&](const std::string& s) {
    for (const auto& v : taken) {
      if (v.size() <= s.size() || v.compare(0, s.size(), s) != 0) continue;
      auto digit = [](unsigned char ch) { return std::isdigit(ch) != 0; };
      if (std::all_of(v.begin() + static_cast<std::ptrdiff_t>(s.size()), v.end(), digit)) return true;
    }
    return false;
  };
  while (collides(stem)) stem += "_";
  return stem;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

std::vector<Poly> embed_all(const std::vector<Poly>& ps, const RingPtr& target) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(embed_by_name(p, target));
  return out;
}

RingMap variable_embedding(const Presentation& source, const Presentation& target) {
  std::vector<Poly> images;
  for (const auto& v : source->vars()) images.push_back(target->var(v));
  return RingMap(source, target, std::move(images));
}

// sum_l c_l * u_l in the chart
Poly combine(const std::vector<Poly>& coeffs, const BlowupChart& chart) {
  const auto& R = chart.ring;
  Poly acc = R->zero();
  for (std::size_t l = 0; l < coeffs.size(); ++l)
    if (!coeffs[l].is_zero()) acc = acc + chart.from_base(coeffs[l]) * chart.center_images[l];
  return R->reduce(acc);
}

void index_sets(std::size_t n, std::size_t size, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    index_sets(n, size, i + 1, cur, out);
    cur.pop_back();
  }
}

IndexSet drop(const IndexSet& s, std::size_t t) {
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != t) out.push_back(s[i]);
  return out;
}

}  // namespace

bool BlowupModel::has_ratios() const {
  return std::all_of(charts.begin(), charts.end(), [](const BlowupChart& c) { return c.ratio.has_value(); });
}

Ideal rees_presentation(const Ideal& I) {
  if (I.gens().empty()) throw std::invalid_argument("rees_presentation: zero ideal");
  const auto& base = I.ring();
  std::vector<std::string> vars = base->vars();
  const std::string T = fresh_stem(vars, "T");
  const std::size_t m = I.gens().size();
  for (std::size_t i = 0; i < m; ++i) vars.push_back(T + std::to_string(i + 1));
  std::vector<std::string> keep = vars;
  vars.push_back(fresh_name(vars, "s"));
  RingPtr P = make_ring(base->field(), vars);
  std::vector<Poly> gens = embed_all(base->relations(), P);
  Poly s = Poly::variable(P, vars.size() - 1);
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Poly::variable(P, base->nvars() + i) - embed_by_name(I.gens()[i], P) * s);
  return eliminate(Ideal(polynomial_ring(P), std::move(gens)), keep);
}

BlowupModel build_blowup(const Presentation& base, const std::vector<Poly>& center_gens,
                         const std::vector<Poly>& chart_index_gens, unsigned power, BlowupOptions opts) {
  if (center_gens.empty()) throw std::invalid_argument("build_blowup: empty center");
  if (chart_index_gens.empty()) throw std::invalid_argument("build_blowup: no chart generators");
  if (power == 0) throw std::invalid_argument("build_blowup: power must be positive");
  BlowupModel M;
  M.base = base;
  for (const auto& g : center_gens) M.center_gens.push_back(base->reduce(g));
  for (const auto& f : chart_index_gens) M.chart_index_gens.push_back(base->reduce(f));
  M.power = power;
  const std::size_t n = M.chart_index_gens.size(), m = M.center_gens.size();
  const auto& f = M.chart_index_gens;

  // Lifts of f_b^p and f_b f_a^{p-1} through the center generators.
  ModuleSolver lifter(ModuleMatrix(base, 1, m, M.center_gens));
  std::vector<std::vector<Poly>> lift_q(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto c = lifter.solve({base->pow(f[b], power)});
    if (!c)
      throw std::invalid_argument("build_blowup: chart generator " + f[b].to_string() + "^" + std::to_string(power) +
                                  " is not in the center");
    lift_q[b] = std::move(*c);
  }
  std::vector<std::vector<std::optional<std::vector<Poly>>>> lift_ratio(n, std::vector<std::optional<std::vector<Poly>>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      lift_ratio[a][b] = lifter.solve({base->mul(f[b], base->pow(f[a], power - 1))});

  std::vector<std::string> vars = base->vars();
  const std::string u = fresh_stem(vars, "u");
  for (std::size_t l = 0; l < m; ++l) vars.push_back(u + std::to_string(l + 1));
  RingPtr P = make_ring(base->field(), vars);
  Presentation Ppoly = polynomial_ring(P);

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Poly> gens = embed_all(base->relations(), P);
    Poly fa = embed_by_name(f[a], P);
    Poly fap = fa.pow(power);
    for (std::size_t l = 0; l < m; ++l)
      gens.push_back(fap * Poly::variable(P, base->nvars() + l) - embed_by_name(M.center_gens[l], P));
    Ideal sat = saturate(Ideal(Ppoly, std::move(gens)), fa);
    Presentation ring = ring_quotient(Ppoly, sat.gens());
    RingMap from_base = variable_embedding(base, ring);
    BlowupChart C{a, ring, from_base, from_base(f[a]), {}, {}, std::nullopt};
    for (std::size_t l = 0; l < m; ++l) C.center_images.push_back(C.ring->var(base->nvars() + l));
    for (std::size_t b = 0; b < n; ++b) C.q.push_back(combine(lift_q[b], C));
    bool have_ratio = true;
    std::vector<Poly> ratio;
    for (std::size_t b = 0; b < n && have_ratio; ++b) {
      if (!lift_ratio[a][b]) {
        have_ratio = false;
        break;
      }
      ratio.push_back(combine(*lift_ratio[a][b], C));
    }
    if (have_ratio) C.ratio = std::move(ratio);
    M.charts.push_back(std::move(C));
  }

  // Cells of the cover.
  const std::size_t levels = opts.overlaps ? n : 1;
  M.cover.ncharts = n;
  M.cover.cells.resize(levels);
  const std::string wname = fresh_name(vars, "w");
  for (std::size_t size = 1; size <= levels; ++size) {
    std::vector<IndexSet> sets;
    IndexSet cur;
    index_sets(n, size, 0, cur, sets);
    for (const auto& gamma : sets) {
      const BlowupChart& A = M.charts[gamma.front()];
      Presentation ring;
      if (size == 1) {
        ring = A.ring;
      } else {
        std::vector<std::string> wvars = A.ring->vars();
        wvars.push_back(wname);
        RingPtr W = make_ring(base->field(), wvars);
        auto Wpres = std::make_shared<const RingPresentation>(W, embed_all(A.ring->relations(), W));
        Poly Q = Poly::constant(W, 1);
        for (std::size_t t = 1; t < gamma.size(); ++t) Q = Q * embed_by_name(A.q[gamma[t]], W);
        ring = ring_quotient(Wpres, std::vector<Poly>{Poly::variable(W, wvars.size() - 1) * Q - Poly::constant(W, 1)});
      }
      RingMap from_chart = variable_embedding(A.ring, ring);
      BlowupCell cell{gamma, ring, from_chart.compose_after(A.from_base), from_chart, from_chart(A.generator), {}, std::nullopt};
      for (const auto& q : A.q) cell.q.push_back(from_chart(q));
      if (A.ratio) {
        std::vector<Poly> r;
        for (const auto& x : *A.ratio) r.push_back(from_chart(x));
        cell.ratio = std::move(r);
      }
      M.cover.rings.emplace(gamma, ring);
      M.cover.cells[size - 1].push_back(gamma);
      M.cells.emplace(gamma, std::move(cell));
    }
  }

  // Restriction maps face -> cell.
  for (std::size_t size = 2; size <= levels; ++size)
    for (const auto& gamma : M.cover.cells[size - 1]) {
      const BlowupCell& G = M.cells.at(gamma);
      const auto& R = G.ring;
      const std::size_t a = gamma.front();
      const Poly w = R->var(wname);
      auto inv = [&](std::size_t b) {
        if (b == a) return R->one();
        Poly acc = w;
        for (std::size_t t = 1; t < gamma.size(); ++t)
          if (gamma[t] != b) acc = R->mul(acc, G.q[gamma[t]]);
        return acc;
      };
      for (std::size_t t = 0; t < gamma.size(); ++t) {
        IndexSet beta = drop(gamma, t);
        const BlowupCell& B = M.cells.at(beta);
        const std::size_t a2 = beta.front();
        const Poly inv_a2 = inv(a2);
        std::vector<Poly> images;
        for (std::size_t v = 0; v < base->nvars(); ++v) images.push_back(R->var(v));
        for (std::size_t l = 0; l < m; ++l) images.push_back(R->mul(R->var(base->nvars() + l), inv_a2));
        if (beta.size() >= 2) {
          Poly acc = R->one();
          for (std::size_t s = 1; s < beta.size(); ++s) acc = R->mul(acc, R->mul(G.q[a2], inv(beta[s])));
          images.push_back(acc);
        }
        M.cover.restrictions.emplace(std::make_pair(beta, gamma), RingMap(B.ring, R, std::move(images)));
      }
    }
  return M;
}

CechComplex cech_complex(const BlowupModel& model) {
  CechComplex C;
  C.cover = model.cover;
  C.delta_squared_zero = true;
  for (std::size_t p = 0; p + 2 < C.cover.cells.size(); ++p)
    for (const auto& cell : C.cover.cells[p]) {
      const auto& R = C.cover.rings.at(cell);
      for (std::size_t v = 0; v < R->nvars(); ++v) {
        Cochain c{{cell, {R->var(v)}}};
        Cochain dd = cech_differential(C.cover, p + 1, cech_differential(C.cover, p, c, 1), 1);
        for (const auto& [g, x] : dd)
          if (!x[0].is_zero()) C.delta_squared_zero = false;
      }
    }
  return C;
}

ModelCheck check_model(const BlowupModel& model) {
  ModelCheck chk;
  const auto& base = model.base;
  for (const auto& [key, map] : model.cover.restrictions) {
    if (!map.is_well_defined()) {
      chk.maps_well_defined = false;
      chk.problems.push_back("restriction " + index_set_string(key.first) + " -> " + index_set_string(key.second) +
                             " is not well defined");
    }
    // u_l of the face times f_{a'}^p must be g_l on the cell.
    const BlowupCell& G = model.cells.at(key.second);
    const std::size_t a2 = key.first.front();
    const Poly fp = G.ring->pow(G.from_base(model.chart_index_gens[a2]), model.power);
    for (std::size_t l = 0; l < model.center_gens.size(); ++l) {
      Poly img = map(map.source()->var(base->nvars() + l));
      if (!(G.ring->mul(img, fp) == G.from_base(model.center_gens[l]))) {
        chk.center_images_agree = false;
        chk.problems.push_back("center generator " + std::to_string(l + 1) + " disagrees on " +
                               index_set_string(key.second));
      }
    }
  }
  for (const auto& [gamma, cell] : model.cells) {
    if (!cell.from_base.is_well_defined() || !cell.from_chart.is_well_defined()) {
      chk.maps_well_defined = false;
      chk.problems.push_back("structure map into " + index_set_string(gamma) + " is not well defined");
    }
    if (gamma.size() < 3) continue;
    for (std::size_t s = 0; s < gamma.size(); ++s)
      for (std::size_t t = s + 1; t < gamma.size(); ++t) {
        IndexSet alpha;
        for (std::size_t i = 0; i < gamma.size(); ++i)
          if (i != s && i != t) alpha.push_back(gamma[i]);
        IndexSet via_s = drop(gamma, t), via_t = drop(gamma, s);
        RingMap p1 = model.cover.restriction(via_s, gamma).compose_after(model.cover.restriction(alpha, via_s));
        RingMap p2 = model.cover.restriction(via_t, gamma).compose_after(model.cover.restriction(alpha, via_t));
        if (!(p1.images() == p2.images())) {
          chk.squares_commute = false;
          chk.problems.push_back("restrictions do not commute on " + index_set_string(gamma));
        }
      }
  }
  for (const auto& C : model.charts) {
    const auto& R = C.ring;
    for (std::size_t b = 0; b < model.chart_index_gens.size(); ++b) {
      Poly fb = C.from_base(model.chart_index_gens[b]);
      if (!(R->mul(C.q[b], R->pow(C.generator, model.power)) == R->pow(fb, model.power))) chk.ratios_consistent = false;
      if (C.ratio && !(R->mul((*C.ratio)[b], C.generator) == fb)) chk.ratios_consistent = false;
    }
    if (!chk.ratios_consistent) chk.problems.push_back("chart " + std::to_string(C.index + 1) + " has bad ratios");
  }
  return chk;
}

std::vector<bool> exceptional_power_membership(const BlowupModel& model, const Poly& h, unsigned m) {
  std::vector<bool> out;
  for (const auto& C : model.charts) {
    ModuleMatrix M(C.ring, 1, 1, {C.ring->pow(C.generator, m)});
    out.push_back(module_solve(M, {C.from_base(h)}).has_value());
  }
  return out;
}

std::vector<bool> power_redundancy(const BlowupModel& model, const Poly& h, unsigned s) {
  std::vector<bool> out;
  for (const auto& C : model.charts) {
    ModuleMatrix M(C.ring, 1, 1, {C.ring->pow(C.generator, model.power * s)});
    out.push_back(module_solve(M, {C.ring->pow(C.from_base(h), s)}).has_value());
  }
  return out;
}

nlohmann::json presentation_json(const RingPresentation& R) {
  nlohmann::json j;
  if (R.field().is_rational())
    j["field"] = "Q";
  else
    j["field"] = {{"Fp", R.field().characteristic()}};
  j["vars"] = R.vars();
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : R.relations()) rel.push_back(r.to_string());
  j["relations"] = std::move(rel);
  return j;
}

nlohmann::json to_json(const BlowupModel& model) {
  auto strs = [](const std::vector<Poly>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
  };
  auto charts_of = [](const IndexSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (auto c : s) a.push_back(c + 1);
    return a;
  };
  nlohmann::json j;
  j["base"] = presentation_json(*model.base);
  j["center"] = strs(model.center_gens);
  j["chart_generators"] = strs(model.chart_index_gens);
  j["power"] = model.power;
  nlohmann::json charts = nlohmann::json::array();
  for (const auto& C : model.charts)
    charts.push_back({{"index", C.index + 1},
                      {"ring", presentation_json(*C.ring)},
                      {"generator", C.generator.to_string()},
                      {"center_images", strs(C.center_images)}});
  j["charts"] = std::move(charts);
  nlohmann::json overlaps = nlohmann::json::array();
  for (std::size_t p = 1; p < model.cover.cells.size(); ++p)
    for (const auto& g : model.cover.cells[p])
      overlaps.push_back({{"charts", charts_of(g)}, {"ring", presentation_json(*model.cover.rings.at(g))}});
  j["overlaps"] = std::move(overlaps);
  nlohmann::json res = nlohmann::json::array();
  for (const auto& [key, map] : model.cover.restrictions)
    res.push_back({{"from", charts_of(key.first)}, {"to", charts_of(key.second)}, {"images", strs(map.images())}});
  j["restrictions"] = std::move(res);
  return j;
}

}  // namespace skoda
