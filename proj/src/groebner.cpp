#include "skoda/groebner.hpp"

#include <algorithm>
#include <deque>

namespace skoda {

namespace {

thread_local GbLimits tl_limits{};

// Replaces terms[start..] by terms[start..] - c*m*g. The first affected term cancels.
void reduce_tail_step(std::vector<Term>& terms, std::size_t start, const Coeff& c, const Monomial& m,
                      const Poly& g, const PolyRing& R) {
  const auto& ord = R.order();
  const auto& F = R.field();
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(terms.size() - start + gt.size());
  std::size_t i = start, j = 0;
  Monomial gm;
  bool have_g = false;
  auto load = [&] {
    have_g = j < gt.size();
    if (have_g) gm = gt[j].mono * m;
  };
  load();
  while (i < terms.size() && have_g) {
    int cmp = ord.compare(terms[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, F.neg(F.mul(c, gt[j].coeff))});
      ++j;
      load();
    } else {
      Coeff s = F.sub(terms[i].coeff, F.mul(c, gt[j].coeff));
      if (!Field::is_zero(s)) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
      load();
    }
  }
  for (; i < terms.size(); ++i) out.push_back(std::move(terms[i]));
  while (have_g) {
    out.push_back({gm, F.neg(F.mul(c, gt[j].coeff))});
    ++j;
    load();
  }
  terms.resize(start);
  for (auto& t : out) terms.push_back(std::move(t));
}

// Full reduction of p by basis, optionally ignoring the element at index skip.
Poly full_reduce(Poly p, const std::vector<const Poly*>& basis, std::size_t skip = SIZE_MAX) {
  if (p.is_zero()) return p;
  const PolyRing& R = *p.ring();
  const auto& F = R.field();
  auto& terms = p.mutable_terms();
  std::size_t pos = 0;
  while (pos < terms.size()) {
    const Monomial& lm = terms[pos].mono;
    const Poly* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const Monomial& gl = basis[k]->lead_monomial();
      if (gl.divides(lm)) {
        div = basis[k];
        break;
      }
    }
    if (!div) {
      ++pos;
      continue;
    }
    Coeff c = F.div(terms[pos].coeff, div->lead_coeff());
    Monomial q = div->lead_monomial().quotient_of(lm);
    reduce_tail_step(terms, pos, c, q, *div, R);
  }
  return p;
}

struct Element {
  Poly poly;
  unsigned sugar = 0;
  bool redundant = false;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Engine {
public:
  Engine(const RingPtr& ring, const GbLimits& limits, bool module_mode, unsigned degree_floor)
      : ring_(ring), limits_(limits), module_mode_(module_mode),
        degree_cap_(std::max(limits.max_degree, degree_floor)) {}

  void add_known(Poly p) {
    Element e;
    e.sugar = p.degree();
    e.poly = p.monic();
    elems_.push_back(std::move(e));
    reducers_.push_back(&elems_.back().poly);
  }

  void add_generator(Poly p) {
    unsigned sugar = p.degree();
    p = full_reduce(std::move(p), reducers_);
    if (p.is_zero()) return;
    insert(std::move(p), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      if (++processed_ > limits_.max_pairs)
        throw ResourceCapExceeded(ResourceCapExceeded::Kind::Pairs,
                                  "Groebner basis exceeded the S-pair cap of " +
                                      std::to_string(limits_.max_pairs));
      if (pr.sugar > degree_cap_)
        throw ResourceCapExceeded(ResourceCapExceeded::Kind::Degree,
                                  "Groebner basis exceeded the degree cap of " +
                                      std::to_string(degree_cap_));

      Poly s = s_polynomial(elems_[pr.i].poly, elems_[pr.j].poly);
      s = full_reduce(std::move(s), reducers_);
      if (s.is_zero()) continue;
      insert(std::move(s), pr.sugar);
    }
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<const Poly*> active;
    for (const auto& e : elems_)
      if (!e.redundant) active.push_back(&e.poly);
    std::vector<Poly> out;
    out.reserve(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      const Poly& p = *active[k];
      Poly tail(p.ring(), std::vector<Term>(p.terms().begin() + 1, p.terms().end()));
      tail = full_reduce(std::move(tail), active, k);
      Poly r = Poly::term(p.ring(), p.lead_monomial(), p.lead_coeff()) + tail;
      out.push_back(r.monic());
    }
    const auto& ord = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return ord.compare(a.lead_monomial(), b.lead_monomial()) > 0;
    });
    return out;
  }

private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring_->order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  bool disjoint(std::size_t a, std::size_t b) const {
    if (module_mode_) return false;
    return elems_[a].poly.lead_monomial().coprime(elems_[b].poly.lead_monomial());
  }

  void rebuild_reducers() {
    reducers_.clear();
    for (const auto& e : elems_) reducers_.push_back(&e.poly);
  }

  // Gebauer-Moeller installation of a new, fully reduced element.
  void insert(Poly p, unsigned sugar) {
    Element e;
    e.poly = p.monic();
    e.sugar = std::max(sugar, e.poly.degree());
    elems_.push_back(std::move(e));
    rebuild_reducers();
    const std::size_t h = elems_.size() - 1;
    const Monomial& lh = elems_[h].poly.lead_monomial();

    std::vector<Pair> C;
    for (std::size_t g = 0; g < h; ++g) {
      if (elems_[g].redundant) continue;
      const Monomial& lg = elems_[g].poly.lead_monomial();
      if (lg.component() != lh.component()) continue;
      Monomial l = lg.lcm(lh);
      unsigned s = std::max(elems_[g].sugar + (l.degree() - lg.degree()),
                            elems_[h].sugar + (l.degree() - lh.degree()));
      C.push_back({g, h, l, s});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = disjoint(p.i, p.j);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + D.size());
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(elems_[p.i].poly.lead_monomial().lcm(lh) == p.lcm) &&
                  !(elems_[p.j].poly.lead_monomial().lcm(lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (const auto& p : D)
      if (!disjoint(p.i, p.j)) kept.push_back(p);
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < h; ++g)
      if (!elems_[g].redundant && lh.divides(elems_[g].poly.lead_monomial())) elems_[g].redundant = true;
  }

  RingPtr ring_;
  GbLimits limits_;
  bool module_mode_;
  unsigned degree_cap_;
  std::deque<Element> elems_;
  std::vector<const Poly*> reducers_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

std::vector<Poly> minimal_monomial_basis(std::vector<Poly> gens) {
  const RingPtr& R = gens.front().ring();
  const auto& ord = R->order();
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    if (a.lead_monomial().degree() != b.lead_monomial().degree())
      return a.lead_monomial().degree() < b.lead_monomial().degree();
    return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  std::vector<Poly> kept;
  for (auto& g : gens) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.lead_monomial().divides(g.lead_monomial())) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(Poly::term(R, g.lead_monomial(), Coeff(1)));
  }
  std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return kept;
}

}  // namespace

const GbLimits& active_limits() { return tl_limits; }

LimitScope::LimitScope(const GbLimits& limits) : saved_(tl_limits) { tl_limits = limits; }
LimitScope::~LimitScope() { tl_limits = saved_; }

Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto& F = f.ring()->field();
  Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  Poly a = f.times_term(f.lead_monomial().quotient_of(l), F.inv(f.lead_coeff()));
  return sub_scaled(a, F.inv(g.lead_coeff()), g.lead_monomial().quotient_of(l), g);
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens, std::size_t known_gb, const GbLimits& limits) {
  std::size_t known = 0;
  std::vector<Poly> nonzero;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    if (k < known_gb) ++known;
    nonzero.push_back(std::move(gens[k]));
  }
  if (nonzero.empty()) return {};
  const RingPtr ring = nonzero.front().ring();

  bool module_mode = false, all_monomial = true;
  unsigned max_deg = 0;
  for (const auto& g : nonzero) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("groebner_basis: generators from different rings");
    for (const auto& t : g.terms())
      if (t.mono.component() != 0) module_mode = true;
    if (!g.is_monomial()) all_monomial = false;
    max_deg = std::max(max_deg, g.degree());
  }
  if (all_monomial) return minimal_monomial_basis(std::move(nonzero));

  Engine engine(ring, limits, module_mode, max_deg);
  for (std::size_t k = 0; k < known; ++k) engine.add_known(nonzero[k]);
  // Lower-degree generators first keeps early reductions cheap.
  std::stable_sort(nonzero.begin() + static_cast<std::ptrdiff_t>(known), nonzero.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  for (std::size_t k = known; k < nonzero.size(); ++k) engine.add_generator(std::move(nonzero[k]));
  engine.run();
  return engine.reduced_basis();
}

Reducer::Reducer(std::vector<Poly> basis) : basis_(std::move(basis)) {}

Poly Reducer::normal_form(const Poly& p) const {
  if (basis_.empty() || p.is_zero()) return p;
  std::vector<const Poly*> ptrs;
  ptrs.reserve(basis_.size());
  for (const auto& b : basis_) ptrs.push_back(&b);
  return full_reduce(p, ptrs);
}

}  // namespace skoda
