#include "skoda/complex.hpp"

#include <mutex>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace skoda {

struct SolverCache {
  std::mutex mutex;
  std::map<std::tuple<int, std::size_t, IndexSet>, std::shared_ptr<const ModuleSolver>> solvers;

  // The factory runs outside the lock; a duplicate build is harmless.
  template <class Make>
  std::shared_ptr<const ModuleSolver> get(int tag, std::size_t i, const IndexSet& cell, Make make) {
    auto key = std::make_tuple(tag, i, cell);
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = solvers.find(key);
      if (it != solvers.end()) return it->second;
    }
    auto s = std::make_shared<const ModuleSolver>(make());
    std::lock_guard<std::mutex> lock(mutex);
    return solvers.emplace(key, std::move(s)).first->second;
  }
};

void FreeComplex::validate() const {
  if (ranks.size() != d.size() + 1) throw std::logic_error("complex: rank list and differentials disagree");
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const auto& M = d[i - 1];
    if (M.rows() != ranks[i - 1] || M.cols() != ranks[i])
      throw std::logic_error("complex: differential " + std::to_string(i) + " has the wrong shape");
  }
}

bool check_d_squared(const FreeComplex& C) {
  C.validate();
  for (std::size_t i = 1; i < C.length(); ++i)
    if (!(C.differential(i) * C.differential(i + 1)).is_zero()) return false;
  return true;
}

bool homology_is_zero_at(const FreeComplex& C, std::size_t i) {
  if (i == 0) throw std::invalid_argument("homology_is_zero_at: degree must be at least 1");
  if (i > C.length()) return true;
  ModuleMatrix K = syzygies(C.differential(i));
  if (K.cols() == 0) return true;
  if (i == C.length()) return false;
  ModuleSolver next(C.differential(i + 1));
  for (std::size_t c = 0; c < K.cols(); ++c)
    if (!next.solve(K.column(c))) return false;
  return true;
}

FreeComplex base_change(const FreeComplex& C, const RingMap& map) {
  FreeComplex out;
  out.ring = map.target();
  out.ranks = C.ranks;
  out.labels = C.labels;
  for (const auto& M : C.d) out.d.push_back(M.mapped(map));
  return out;
}

nlohmann::json to_json(const ModuleMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const FreeComplex& C) {
  nlohmann::json j;
  j["vars"] = C.ring->vars();
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : C.ring->relations()) rel.push_back(r.to_string());
  j["relations"] = std::move(rel);
  j["ranks"] = C.ranks;
  nlohmann::json ds = nlohmann::json::array();
  for (const auto& M : C.d) ds.push_back(to_json(M));
  j["differentials"] = std::move(ds);
  j["labels"] = C.labels;
  return j;
}

std::string index_set_string(const IndexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + 1;
  out << '}';
  return out.str();
}

const RingMap& CechCover::restriction(const IndexSet& face, const IndexSet& cell) const {
  auto it = restrictions.find({face, cell});
  if (it == restrictions.end())
    throw std::out_of_range("no restriction " + index_set_string(face) + " -> " + index_set_string(cell));
  return it->second;
}

namespace {

IndexSet drop(const IndexSet& s, std::size_t t) {
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != t) out.push_back(s[i]);
  return out;
}

std::vector<Poly> zeros(const Presentation& R, std::size_t n) { return std::vector<Poly>(n, R->zero()); }

std::size_t rank_at(const FreeComplex& L, std::size_t i) { return i < L.ranks.size() ? L.ranks[i] : 0; }

bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> scaled(const Presentation& R, std::vector<Poly> v, const Poly& s) {
  for (auto& x : v) x = R->mul(x, s);
  return v;
}

}  // namespace

Cochain cech_differential(const CechCover& cover, std::size_t p, const Cochain& c, std::size_t width) {
  Cochain out;
  if (p + 1 >= cover.cells.size()) return out;
  for (const auto& cell : cover.cells[p + 1]) {
    const Presentation& R = cover.rings.at(cell);
    std::vector<Poly> acc = zeros(R, width);
    for (std::size_t t = 0; t < cell.size(); ++t) {
      IndexSet face = drop(cell, t);
      auto it = c.find(face);
      if (it == c.end()) continue;
      const RingMap& res = cover.restriction(face, cell);
      for (std::size_t j = 0; j < width; ++j) {
        if (it->second[j].is_zero()) continue;
        Poly v = res(it->second[j]);
        acc[j] = t % 2 ? R->sub(acc[j], v) : R->add(acc[j], v);
      }
    }
    out.emplace(cell, std::move(acc));
  }
  return out;
}

TotalComplexSystem assemble_total_system(FreeComplex L, unsigned k, std::size_t n, CechCover cover,
                                         std::map<IndexSet, RingMap> base_to_cell,
                                         std::optional<std::map<IndexSet, CellTwist>> twist) {
  L.validate();
  TotalComplexSystem S;
  S.k = k;
  S.n = n;
  for (const auto& level : cover.cells)
    for (const auto& cell : level) {
      auto it = base_to_cell.find(cell);
      if (it == base_to_cell.end()) throw std::invalid_argument("missing base map for cell " + index_set_string(cell));
      S.L_on_cell.emplace(cell, base_change(L, it->second));
    }
  if (twist) {
    if (cover.ncharts != n) throw std::invalid_argument("twisted system needs one chart per generator");
    for (const auto& level : cover.cells)
      for (const auto& cell : level) {
        const auto& tw = twist->at(cell);
        const FreeComplex& base = S.L_on_cell.at(cell);
        if (tw.unit.length() != base.length()) throw std::invalid_argument("twist complex has the wrong length");
        // d_1 = f_a^k d^u_1 and d_i = f_a d^u_i for i >= 2.
        for (std::size_t i = 1; i <= base.length(); ++i) {
          Poly s = i == 1 ? cover.rings.at(cell)->pow(tw.f_min, k) : tw.f_min;
          if (!(tw.unit.differential(i).scaled(s) == base.differential(i)))
            throw std::logic_error("twist data inconsistent with the base complex on " + index_set_string(cell));
        }
      }
  }
  S.L = std::move(L);
  S.cover = std::move(cover);
  S.base_to_cell = std::move(base_to_cell);
  S.twist = std::move(twist);
  S.solvers = std::make_shared<SolverCache>();
  return S;
}

bool verify_witness(const TotalComplexSystem& S, const Poly& h, const Witness& w) {
  const std::size_t top = S.top_degree();
  if (w.z.size() != top + 1) return false;
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t width = rank_at(S.L, i + 1);
    for (const auto& cell : S.cover.cells[i]) {
      auto it = w.z[i].find(cell);
      if (it == w.z[i].end() || it->second.size() != width) return false;
    }
  }
  // Stage 0: d_1(z_0) = h on every chart.
  for (const auto& cell : S.cover.cells[0]) {
    const auto& Lc = S.L_on_cell.at(cell);
    const Poly hc = S.base_to_cell.at(cell)(h);
    if (Lc.length() == 0) return false;
    if (!(Lc.differential(1).apply(w.z[0].at(cell))[0] == hc)) return false;
  }
  for (std::size_t i = 1; i <= top + 1; ++i) {
    const std::size_t width = rank_at(S.L, i);
    Cochain dz = cech_differential(S.cover, i - 1, w.z[i - 1], width);
    if (i > top) {
      for (const auto& [cell, v] : dz)
        if (!all_zero(v)) return false;
      break;
    }
    for (const auto& cell : S.cover.cells[i]) {
      const auto& R = S.cover.rings.at(cell);
      std::vector<Poly> rhs = dz.at(cell);
      if (i % 2 == 0)
        for (auto& x : rhs) x = -x;
      std::vector<Poly> lhs = i + 1 <= S.L.length() ? S.L_on_cell.at(cell).differential(i + 1).apply(w.z[i].at(cell))
                                                    : zeros(R, width);
      for (std::size_t j = 0; j < width; ++j)
        if (!(R->reduce(lhs[j]) == R->reduce(rhs[j]))) return false;
    }
  }
  return true;
}

namespace {

VanishingResult direct_lift(const TotalComplexSystem& S, const Poly& h) {
  VanishingResult res;
  res.method = LiftMethod::Direct;
  Witness w;
  const std::size_t top = S.top_degree();
  w.z.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t width = rank_at(S.L, i + 1);
    Cochain rhs_all;
    if (i == 0) {
      for (const auto& cell : S.cover.cells[0]) rhs_all[cell] = {S.base_to_cell.at(cell)(h)};
    } else {
      rhs_all = cech_differential(S.cover, i - 1, w.z[i - 1], rank_at(S.L, i));
      if (i % 2 == 0)
        for (auto& [cell, v] : rhs_all)
          for (auto& x : v) x = -x;
    }
    for (const auto& cell : S.cover.cells[i]) {
      const auto& rhs = rhs_all.at(cell);
      std::optional<std::vector<Poly>> z;
      if (width == 0) {
        if (all_zero(rhs)) z = std::vector<Poly>{};
      } else {
        auto solver = S.solvers->get(0, i + 1, cell, [&] { return ModuleSolver(S.L_on_cell.at(cell).differential(i + 1)); });
        z = solver->solve(rhs);
      }
      if (!z) {
        res.failed_stage = i;
        res.failed_cell = cell;
        res.note = "no lift at stage " + std::to_string(i) + " on " + index_set_string(cell);
        return res;
      }
      w.z[i][cell] = std::move(*z);
    }
  }
  // The class must also be a cycle past the top Cech degree.
  if (!verify_witness(S, h, w)) {
    res.failed_stage = top + 1;
    res.note = "lift does not close up past the top Cech degree";
    return res;
  }
  res.witness = std::move(w);
  return res;
}

VanishingResult twisted_lift(const TotalComplexSystem& S, const Poly& h) {
  VanishingResult res;
  res.method = LiftMethod::Twisted;
  const auto& tw = *S.twist;
  const std::size_t n = S.n, top = S.top_degree();
  const unsigned p = static_cast<unsigned>(n) + S.k - 1;
  std::vector<Cochain> wu(top + 1);  // untwisted solutions
  Witness w;
  w.z.resize(top + 1);

  for (std::size_t i = 0; i <= top; ++i) {
    for (const auto& cell : S.cover.cells[i]) {
      const auto& R = S.cover.rings.at(cell);
      const CellTwist& t = tw.at(cell);
      std::vector<Poly> rhs;
      if (i == 0) {
        // h / f_a^p on chart a.
        ModuleMatrix fp(R, 1, 1, {R->pow(t.f_min, p)});
        auto q = module_solve(fp, {S.base_to_cell.at(cell)(h)});
        if (!q) {
          res.failed_stage = 0;
          res.failed_cell = cell;
          res.note = "h is not divisible by f^" + std::to_string(p) + " on chart " + index_set_string(cell);
          return res;
        }
        rhs = {(*q)[0]};
      } else {
        const std::size_t width = rank_at(S.L, i);
        rhs = zeros(R, width);
        for (std::size_t s = 0; s < cell.size(); ++s) {
          IndexSet face = drop(cell, s);
          const RingMap& r = S.cover.restriction(face, cell);
          Poly factor = R->pow(t.ratio[face.front()], static_cast<unsigned>(n - i));
          if (s % 2) factor = -factor;
          for (std::size_t j = 0; j < width; ++j) {
            const Poly& v = wu[i - 1].at(face)[j];
            if (!v.is_zero()) rhs[j] = R->add(rhs[j], R->mul(factor, r(v)));
          }
        }
        if (i % 2 == 0)
          for (auto& x : rhs) x = -x;
      }
      auto solver = S.solvers->get(1, i + 1, cell, [&] { return ModuleSolver(t.unit.differential(i + 1)); });
      auto u = solver->solve(rhs);
      if (!u) {
        res.failed_stage = i;
        res.failed_cell = cell;
        res.note = "unit complex does not lift at stage " + std::to_string(i) + " on " + index_set_string(cell);
        return res;
      }
      w.z[i][cell] = scaled(R, *u, R->pow(t.f_min, static_cast<unsigned>(n - i - 1)));
      wu[i][cell] = std::move(*u);
    }
  }
  if (!verify_witness(S, h, w)) {
    res.failed_stage = top + 1;
    res.note = "twisted lift failed re-verification";
    return res;
  }
  res.witness = std::move(w);
  return res;
}

}  // namespace

VanishingResult class_vanishes_in_H0(const TotalComplexSystem& S, const Poly& h) {
  if (S.twist) return twisted_lift(S, h);
  return direct_lift(S, h);
}

VanishingResult class_vanishes_direct(const TotalComplexSystem& S, const Poly& h) { return direct_lift(S, h); }

bool total_differential_squares_to_zero(const TotalComplexSystem& S, std::size_t j, std::size_t p, const Cochain& x) {
  // D = d + (-1)^deg delta. Components of D(D(x)):
  //   L_{j-2} C^p   : d d x
  //   L_{j-1} C^{p+1}: (-1)^{j-1} delta d x + (-1)^j d delta x
  //   L_j C^{p+2}   : delta delta x
  auto apply_d = [&](const Cochain& c, std::size_t deg) {
    Cochain out;
    for (const auto& [cell, v] : c) out[cell] = S.L_on_cell.at(cell).differential(deg).apply(v);
    return out;
  };
  const std::size_t wj = rank_at(S.L, j);
  if (j >= 2) {
    Cochain dd = apply_d(apply_d(x, j), j - 1);
    for (const auto& [cell, v] : dd)
      if (!all_zero(v)) return false;
  }
  Cochain dx = cech_differential(S.cover, p, x, wj);
  Cochain ddx = cech_differential(S.cover, p + 1, dx, wj);
  for (const auto& [cell, v] : ddx)
    if (!all_zero(v)) return false;
  if (j >= 1) {
    Cochain a = cech_differential(S.cover, p, apply_d(x, j), rank_at(S.L, j - 1));
    Cochain b = apply_d(dx, j);
    for (const auto& [cell, v] : a) {
      const auto& R = S.cover.rings.at(cell);
      const auto& bv = b.at(cell);
      for (std::size_t q = 0; q < v.size(); ++q) {
        // (-1)^{j-1} a + (-1)^j b = 0  <=>  a == b
        if (!(R->reduce(v[q]) == R->reduce(bv[q]))) return false;
      }
    }
  }
  return true;
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json stages = nlohmann::json::array();
  for (std::size_t i = 0; i < w.z.size(); ++i) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [cell, v] : w.z[i]) {
      nlohmann::json charts = nlohmann::json::array();
      for (auto c : cell) charts.push_back(c + 1);
      nlohmann::json vec = nlohmann::json::array();
      for (const auto& x : v) vec.push_back(x.to_string());
      cells.push_back({{"charts", std::move(charts)}, {"vector", std::move(vec)}});
    }
    stages.push_back({{"degree", i}, {"cells", std::move(cells)}});
  }
  return {{"stages", std::move(stages)}};
}

}  // namespace skoda
