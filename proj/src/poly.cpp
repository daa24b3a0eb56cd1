#include "skoda/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skoda {

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.size() > kMaxVars)
    throw std::length_error("too many variables: " + std::to_string(vars_.size()));
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable name '" + vars_[i] + "'");
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(Field field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(vars), std::move(order));
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  const auto& F = ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
      if (Field::is_zero(terms_.back().coeff)) terms_.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  Poly p(ring);
  Coeff v = ring->field().normalize(c);
  if (!Field::is_zero(v)) p.terms_.push_back({Monomial(ring->nvars()), v});
  return p;
}

Poly Poly::constant(RingPtr ring, long c) { return constant(ring, Coeff(c)); }

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return term(ring, m, Coeff(1));
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Coeff& c) {
  Poly p(std::move(ring));
  if (!Field::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].mono.component() == 0 &&
         Field::is_one(terms_[0].coeff);
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
  return r;
}

namespace {

const RingPtr& pick_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  return a.ring();
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const RingPtr& R = pick_ring(a, b);
  if (!R) return Poly();
  const auto& ord = R->order();
  const auto& F = R->field();
  Poly r(R);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Coeff s = F.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (!Field::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const RingPtr& R = pick_ring(a, b);
  if (!R || a.is_zero() || b.is_zero()) return Poly(R);
  const auto& F = R->field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({ta.mono * tb.mono, F.mul(ta.coeff, tb.coeff)});
  return Poly(R, std::move(prod));
}

Poly Poly::scaled(const Coeff& c) const {
  const auto& F = ring_->field();
  if (Field::is_zero(c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
  return r;
}

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  const auto& F = ring_->field();
  if (Field::is_zero(c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || Field::is_one(lead_coeff())) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Poly Poly::with_component(std::uint32_t c) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono.set_component(c);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly sub_scaled(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b) {
  const RingPtr& R = a.ring();
  const auto& ord = R->order();
  const auto& F = R->field();
  Poly r(R);
  auto& out = r.mutable_terms();
  const auto& at = a.terms();
  const auto& bt = b.terms();
  out.reserve(at.size() + bt.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    have_b = j < bt.size();
    if (have_b) bm = bt[j].mono * m;
  };
  load_b();
  while (i < at.size() && have_b) {
    int cmp = ord.compare(at[i].mono, bm);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, F.neg(F.mul(c, bt[j].coeff))});
      ++j;
      load_b();
    } else {
      Coeff s = F.sub(at[i].coeff, F.mul(c, bt[j].coeff));
      if (!Field::is_zero(s)) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < at.size(); ++i) out.push_back(at[i]);
  while (have_b) {
    out.push_back({bm, F.neg(F.mul(c, bt[j].coeff))});
    ++j;
    load_b();
  }
  return r;
}

Poly substitute(const Poly& p, std::span<const Poly> images, const RingPtr& target) {
  if (p.ring() && images.size() != p.ring()->nvars())
    throw std::invalid_argument("substitute: image count does not match variable count");
  Poly result(target);
  // Cache powers per variable; desk-scale exponents stay small.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono[v]) acc = acc * power(v, t.mono[v]);
    if (t.mono.component()) acc = acc.with_component(t.mono.component());
    result += acc;
  }
  return result;
}

Poly embed_by_name(const Poly& p, const RingPtr& target) {
  const auto& src = *p.ring();
  std::vector<std::size_t> map(src.nvars());
  std::vector<bool> used(src.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < src.nvars(); ++v)
      if (t.mono[v]) used[v] = true;
  for (std::size_t v = 0; v < src.nvars(); ++v) {
    int k = target->index_of(src.vars()[v]);
    if (k < 0) {
      if (used[v]) throw std::invalid_argument("variable '" + src.vars()[v] + "' missing in target ring");
      continue;
    }
    map[v] = static_cast<std::size_t>(k);
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < src.nvars(); ++v)
      if (t.mono[v]) m.set(map[v], t.mono[v]);
    m.set_component(t.mono.component());
    terms.push_back({m, target->field().normalize(t.coeff)});
  }
  return Poly(target, std::move(terms));
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    if (!m[v]) continue;
    if (!s.empty()) s += '*';
    s += ring.vars()[v];
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  if (m.component()) {
    if (!s.empty()) s += '*';
    s += "<" + std::to_string(m.component()) + ">";
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = ring_->field().is_rational() && sgn(c) < 0;
    if (negative) c = -c;
    std::string mono = monomial_to_string(t.mono, *ring_);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << '*';
      out << mono;
    }
  }
  return out.str();
}

}  // namespace skoda
