#include "skoda/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skoda/parse.hpp"

namespace skoda {

namespace {

std::string fresh_name(const PolyRing& R, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; R.index_of(name) >= 0; ++k) name = stem + std::to_string(k);
  return name;
}

// Groebner basis of gens in an ambient where elim variables form a dominating block;
// returns the basis elements free of elim variables, re-embedded into target.
std::vector<Poly> eliminate_vars(const std::vector<Poly>& gens, const std::vector<std::string>& elim,
                                 const RingPtr& source, const RingPtr& target) {
  std::vector<std::string> order_vars = elim;
  std::vector<std::string> rest;
  for (const auto& v : source->vars())
    if (std::find(elim.begin(), elim.end(), v) == elim.end()) rest.push_back(v);
  for (const auto& v : rest) order_vars.push_back(v);
  RingPtr work = make_ring(source->field(), order_vars, MonomialOrder::block({elim.size(), rest.size()}));

  std::vector<Poly> wgens;
  for (const auto& g : gens) wgens.push_back(embed_by_name(g, work));
  std::vector<Poly> gb = groebner_basis(std::move(wgens));

  std::vector<Poly> out;
  for (const auto& g : gb) {
    bool clean = true;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < elim.size() && clean; ++v)
        if (t.mono[v]) clean = false;
    if (clean) out.push_back(embed_by_name(g, target));
  }
  return out;
}

}  // namespace

Ideal::Ideal(Presentation ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.ring() && !g.ring()->same_as(*ring_->ambient()))
      throw std::invalid_argument("ideal generator from a different ring");
    Poly r = ring_->reduce(g);
    if (!r.is_zero()) gens_.push_back(std::move(r));
  }
}

Ideal::Ideal(Presentation ring, const std::vector<std::string>& exprs) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (const auto& e : exprs) {
    Poly r = ring_->parse(e);
    if (!r.is_zero()) gens_.push_back(std::move(r));
  }
}

const Reducer& Ideal::reducer() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->gb) {
    std::vector<Poly> all = ring_->relations();
    const std::size_t known = all.size();
    for (const auto& g : gens_) all.push_back(g);
    cache_->gb = std::make_shared<const Reducer>(skoda::groebner_basis(std::move(all), known));
  }
  return *cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) out << (i ? ", " : "") << gens_[i].to_string();
  out << ')';
  return out.str();
}

bool same_ring(const RingPresentation& a, const RingPresentation& b) {
  if (&a == &b) return true;
  if (!a.ambient()->same_as(*b.ambient())) return false;
  return a.relations() == b.relations();
}

std::vector<Poly> groebner_basis(const Ideal& I) { return I.groebner_basis(); }

bool ideal_member(const Poly& h, const Ideal& I) { return I.contains(h); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ring(*I.ring(), *J.ring())) throw std::invalid_argument("ideal_equal: ideals live in different rings");
  return I.groebner_basis() == J.groebner_basis();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.gens())
    if (!big.contains(g)) return false;
  return true;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep) {
  const RingPtr& R = I.ring()->ambient();
  std::vector<std::string> elim, kept;
  for (const auto& v : R->vars()) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end())
      elim.push_back(v);
    else
      kept.push_back(v);
  }
  for (const auto& k : keep)
    if (R->index_of(k) < 0) throw std::invalid_argument("eliminate: unknown variable '" + k + "'");
  MonomialOrder sub_order =
      R->order().kind() == MonomialOrder::Kind::Lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  RingPtr target = make_ring(R->field(), kept, sub_order);
  std::vector<Poly> gens = I.ring()->relations();
  for (const auto& g : I.gens()) gens.push_back(g);
  if (elim.empty()) {
    std::vector<Poly> moved;
    for (const auto& g : gens) moved.push_back(embed_by_name(g, target));
    return Ideal(polynomial_ring(target), std::move(moved));
  }
  return Ideal(polynomial_ring(target), eliminate_vars(gens, elim, R, target));
}

Ideal saturate(const Ideal& I, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("saturate: g must be nonzero");
  const RingPtr& R = I.ring()->ambient();
  std::string w = fresh_name(*R, "_sat");
  std::vector<std::string> vars = R->vars();
  vars.push_back(w);
  RingPtr ext = make_ring(R->field(), vars, MonomialOrder::grevlex());
  std::vector<Poly> gens;
  for (const auto& r : I.ring()->relations()) gens.push_back(embed_by_name(r, ext));
  for (const auto& h : I.gens()) gens.push_back(embed_by_name(h, ext));
  Poly wv = Poly::variable(ext, vars.size() - 1);
  gens.push_back(wv * embed_by_name(g, ext) - Poly::constant(ext, 1));
  return Ideal(I.ring(), eliminate_vars(gens, {w}, ext, R));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const Presentation& P = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(P, std::vector<Poly>{});
  const std::size_t p = I.gens().size(), q = J.gens().size();
  ModuleMatrix row(P, 1, p + q);
  for (std::size_t i = 0; i < p; ++i) row.set(0, i, I.gens()[i]);
  for (std::size_t j = 0; j < q; ++j) row.set(0, p + j, -J.gens()[j]);
  ModuleMatrix K = syzygies(row);
  std::vector<Poly> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    Poly s = P->zero();
    for (std::size_t i = 0; i < p; ++i) s = s + K.at(i, c) * I.gens()[i];
    out.push_back(P->reduce(s));
  }
  return Ideal(P, std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  const Presentation& P = I.ring();
  if (!same_ring(*P, *J.ring())) throw std::invalid_argument("colon: ideals live in different rings");
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    ModuleMatrix row(P, 1, 1 + I.gens().size());
    row.set(0, 0, g);
    for (std::size_t i = 0; i < I.gens().size(); ++i) row.set(0, 1 + i, I.gens()[i]);
    ModuleMatrix K = syzygies(row);
    std::vector<Poly> firsts;
    for (std::size_t c = 0; c < K.cols(); ++c) firsts.push_back(K.at(0, c));
    Ideal part(P, std::move(firsts));
    acc = acc ? intersect(*acc, part) : part;
  }
  if (!acc) return Ideal(P, std::vector<Poly>{P->one()});
  // Present the result by its reduced basis for canonical output.
  std::vector<Poly> gens;
  for (const auto& g : acc->groebner_basis()) {
    Poly r = P->reduce(g);
    if (!r.is_zero()) gens.push_back(r);
  }
  return Ideal(P, std::move(gens));
}

ModuleMatrix::ModuleMatrix(Presentation ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_->ambient())) {}

ModuleMatrix::ModuleMatrix(Presentation ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("ModuleMatrix: entry count mismatch");
  for (auto& e : entries_) e = ring_->reduce(e.ring() ? e : Poly(ring_->ambient()));
}

std::vector<Poly> ModuleMatrix::column(std::size_t c) const {
  std::vector<Poly> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

bool ModuleMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<Poly> ModuleMatrix::apply(const std::vector<Poly>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("ModuleMatrix::apply: size mismatch");
  std::vector<Poly> out(rows_, ring_->zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    Poly s = ring_->zero();
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) s = s + at(r, c) * x[c];
    out[r] = ring_->reduce(s);
  }
  return out;
}

ModuleMatrix operator*(const ModuleMatrix& a, const ModuleMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ModuleMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      Poly s = a.ring_->zero();
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a.at(r, k).is_zero() && !b.at(k, c).is_zero()) s = s + a.at(r, k) * b.at(k, c);
      out.set(r, c, s);
    }
  return out;
}

ModuleMatrix ModuleMatrix::scaled(const Poly& s) const {
  ModuleMatrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!entries_[k].is_zero()) out.entries_[k] = ring_->reduce(entries_[k] * s);
  return out;
}

ModuleMatrix ModuleMatrix::mapped(const RingMap& map) const {
  ModuleMatrix out(map.target(), rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = map(entries_[k]);
  return out;
}

bool operator==(const ModuleMatrix& a, const ModuleMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<Poly> split_components(const Poly& v, std::size_t first, std::size_t count, const RingPtr& ring) {
  std::vector<std::vector<Term>> parts(count);
  for (const auto& t : v.terms()) {
    std::size_t c = t.mono.component();
    if (c < first || c >= first + count) continue;
    Monomial m = t.mono;
    m.set_component(0);
    parts[c - first].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(count);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

ModuleSolver::ModuleSolver(ModuleMatrix M) : M_(std::move(M)) {
  const Presentation& P = M_.ring();
  const RingPtr& R = P->ambient();
  const std::size_t r = M_.rows(), c = M_.cols();
  std::vector<Poly> gens;
  // Relation multiples in every coordinate form a Groebner basis on their own.
  for (std::size_t comp = 1; comp <= r + c; ++comp)
    for (const auto& rel : P->relations()) gens.push_back(rel.with_component(static_cast<std::uint32_t>(comp)));
  const std::size_t known = gens.size();
  for (std::size_t j = 0; j < c; ++j) {
    Poly v(R);
    for (std::size_t i = 0; i < r; ++i)
      if (!M_.at(i, j).is_zero()) v = v + M_.at(i, j).with_component(static_cast<std::uint32_t>(1 + i));
    v = v + Poly::constant(R, 1).with_component(static_cast<std::uint32_t>(1 + r + j));
    gens.push_back(std::move(v));
  }
  gb_ = groebner_basis(std::move(gens), known);
  reducer_ = Reducer(gb_);
}

std::optional<std::vector<Poly>> ModuleSolver::solve(const std::vector<Poly>& b) const {
  const Presentation& P = M_.ring();
  const RingPtr& R = P->ambient();
  const std::size_t r = M_.rows(), c = M_.cols();
  if (b.size() != r) throw std::invalid_argument("module_solve: right-hand side has wrong length");
  Poly v(R);
  for (std::size_t i = 0; i < r; ++i) v = v + P->reduce(b[i]).with_component(static_cast<std::uint32_t>(1 + i));
  Poly rem = reducer_.normal_form(v);
  for (const auto& t : rem.terms())
    if (t.mono.component() <= r) return std::nullopt;
  std::vector<Poly> x = split_components(rem, 1 + r, c, R);
  for (auto& xi : x) xi = P->reduce(-xi);
  // Soundness: the solution must satisfy the system exactly.
  std::vector<Poly> check = M_.apply(x);
  for (std::size_t i = 0; i < r; ++i)
    if (!(check[i] == P->reduce(b[i]))) throw std::logic_error("module_solve produced an invalid solution");
  return x;
}

ModuleMatrix ModuleSolver::kernel() const {
  const Presentation& P = M_.ring();
  const RingPtr& R = P->ambient();
  const std::size_t r = M_.rows(), c = M_.cols();
  std::vector<std::vector<Poly>> cols;
  for (const auto& g : gb_) {
    if (g.lead_monomial().component() <= r) continue;
    std::vector<Poly> parts = split_components(g, 1 + r, c, R);
    bool nonzero = false;
    for (auto& p : parts) {
      p = P->reduce(p);
      if (!p.is_zero()) nonzero = true;
    }
    if (nonzero) cols.push_back(std::move(parts));
  }
  ModuleMatrix K(P, c, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < c; ++i) K.set(i, j, cols[j][i]);
  return K;
}

std::optional<std::vector<Poly>> module_solve(const ModuleMatrix& M, const std::vector<Poly>& b) {
  return ModuleSolver(M).solve(b);
}

ModuleMatrix syzygies(const ModuleMatrix& M) { return ModuleSolver(M).kernel(); }

std::optional<std::vector<Poly>> lift(const Poly& h, const Ideal& I) {
  const Presentation& P = I.ring();
  if (I.gens().empty()) {
    if (P->reduce(h).is_zero()) return std::vector<Poly>{};
    return std::nullopt;
  }
  ModuleMatrix row(P, 1, I.gens().size(), I.gens());
  return module_solve(row, {h});
}

}  // namespace skoda
