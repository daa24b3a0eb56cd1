#include "skoda/ideal_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skoda {

namespace {

void push_unique(std::vector<Poly>& gens, Poly p) {
  if (p.is_zero()) return;
  Poly m = p.monic();
  for (const auto& g : gens)
    if (g.monic() == m) return;
  gens.push_back(std::move(p));
}

void multisets(std::size_t n, unsigned k, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, k, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Poly> gens = I.gens();
  for (const auto& g : J.gens()) push_unique(gens, g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Poly> gens;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) push_unique(gens, I.ring()->mul(a, b));
  return Ideal(I.ring(), std::move(gens));
}

std::size_t power_product_count(std::size_t ngens, unsigned k) {
  // C(ngens + k - 1, k)
  std::size_t num = 1;
  for (unsigned i = 1; i <= k; ++i) num = num * (ngens + i - 1) / i;
  return num;
}

Ideal ideal_power(const Ideal& I, unsigned k) {
  if (k == 0) throw std::invalid_argument("ideal_power: k must be positive");
  const auto& P = I.ring();
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> cur;
  multisets(I.gens().size(), k, 0, cur, sets);
  std::vector<Poly> gens;
  for (const auto& s : sets) {
    Poly p = P->one();
    for (auto i : s) p = P->mul(p, I.gens()[i]);
    push_unique(gens, std::move(p));
  }
  return Ideal(P, std::move(gens));
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_of(const Poly& monomial) {
  if (!monomial.is_monomial()) throw std::invalid_argument("not a monomial: " + monomial.to_string());
  Exponent e(monomial.ring()->nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = monomial.lead_monomial()[i];
  return e;
}

MonomialIdeal::MonomialIdeal(Presentation ring, std::vector<Exponent> exps) : ring_(std::move(ring)) {
  if (ring_->has_relations()) throw std::invalid_argument("monomial ideals live in polynomial rings");
  for (const auto& e : exps)
    if (e.size() != ring_->nvars()) throw std::invalid_argument("exponent length differs from variable count");
  std::sort(exps.begin(), exps.end(), [](const Exponent& a, const Exponent& b) {
    auto da = std::accumulate(a.begin(), a.end(), 0u), db = std::accumulate(b.begin(), b.end(), 0u);
    return da != db ? da < db : a > b;
  });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (auto& e : exps) {
    bool dominated = std::any_of(exps_.begin(), exps_.end(), [&](const Exponent& k) { return divides(k, e); });
    if (!dominated) exps_.push_back(std::move(e));
  }
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& I) {
  std::vector<Exponent> exps;
  for (const auto& g : I.gens()) exps.push_back(exponent_of(g));
  return MonomialIdeal(I.ring(), std::move(exps));
}

bool MonomialIdeal::contains(const Exponent& e) const {
  return std::any_of(exps_.begin(), exps_.end(), [&](const Exponent& g) { return divides(g, e); });
}

MonomialIdeal MonomialIdeal::power(unsigned m) const {
  std::vector<Exponent> acc{Exponent(nvars(), 0)};
  for (unsigned step = 0; step < m; ++step) {
    std::vector<Exponent> next;
    for (const auto& a : acc)
      for (const auto& g : exps_) {
        Exponent s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
        next.push_back(std::move(s));
      }
    acc = MonomialIdeal(ring_, std::move(next)).exps_;
  }
  return MonomialIdeal(ring_, std::move(acc));
}

Poly MonomialIdeal::monomial(const Exponent& e) const { return Poly::term(ring_->ambient(), Monomial(e), Coeff(1)); }

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Poly> gens;
  for (const auto& e : exps_) gens.push_back(monomial(e));
  return Ideal(ring_, std::move(gens));
}

std::optional<std::vector<Coeff>> newton_hull_weights(const Exponent& e, const MonomialIdeal& I) {
  const auto& V = I.exponents();
  const std::size_t n = e.size(), m = V.size();
  if (m == 0) return std::nullopt;
  for (std::size_t j = 0; j < m; ++j)
    if (divides(V[j], e)) {
      std::vector<Coeff> w(m, Coeff(0));
      w[j] = 1;
      return w;
    }
  for (std::size_t i = 0; i < n; ++i) {
    unsigned lo = V[0][i];
    for (const auto& v : V) lo = std::min(lo, v[i]);
    if (e[i] < lo) return std::nullopt;
  }

  // Phase one on: sum_j v_ji w_j + s_i = e_i (i < n), sum_j w_j = 1, w, s >= 0.
  // Columns: w (m), s (n), artificials (n + 1).
  const std::size_t rows = n + 1, cols = m + n + rows;
  std::vector<std::vector<Coeff>> T(rows, std::vector<Coeff>(cols, Coeff(0)));
  std::vector<Coeff> b(rows);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) T[i][j] = V[j][i];
    T[i][m + i] = 1;
    b[i] = e[i];
  }
  for (std::size_t j = 0; j < m; ++j) T[n][j] = 1;
  b[n] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    T[r][m + n + r] = 1;
    basis[r] = m + n + r;
  }
  std::vector<Coeff> obj(cols, Coeff(0));
  Coeff obj_rhs = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m + n; ++c) obj[c] += T[r][c];
    obj_rhs += b[r];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(obj[c]) > 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Coeff best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(T[r][enter]) <= 0) continue;
      Coeff ratio = b[r] / T[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one
    Coeff piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    b[leave] /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || sgn(T[r][enter]) == 0) continue;
      Coeff f = T[r][enter];
      for (std::size_t c = 0; c < cols; ++c) T[r][c] -= f * T[leave][c];
      b[r] -= f * b[leave];
    }
    Coeff f = obj[enter];
    for (std::size_t c = 0; c < cols; ++c) obj[c] -= f * T[leave][c];
    obj_rhs -= f * b[leave];
    basis[leave] = enter;
  }
  if (sgn(obj_rhs) != 0) return std::nullopt;
  std::vector<Coeff> w(m, Coeff(0));
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < m) w[basis[r]] = b[r];
  return w;
}

bool newton_hull_member(const Exponent& e, const MonomialIdeal& I) { return newton_hull_weights(e, I).has_value(); }

MonomialIdeal monomial_integral_closure(const MonomialIdeal& I, unsigned m) {
  if (I.exponents().empty()) throw std::invalid_argument("monomial_integral_closure: zero ideal");
  if (m == 0) throw std::invalid_argument("monomial_integral_closure: m must be positive");
  const std::size_t n = I.nvars();
  std::vector<Exponent> scaled;
  Exponent hi(n, 0);
  for (const auto& v : I.exponents()) {
    Exponent s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = v[i] * m;
      hi[i] = std::max(hi[i], s[i]);
    }
    scaled.push_back(std::move(s));
  }
  MonomialIdeal hull(I.ring(), scaled);

  // Box points in increasing degree, skipping multiples of members already found.
  std::vector<Exponent> box;
  Exponent cur(n, 0);
  for (;;) {
    box.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  std::stable_sort(box.begin(), box.end(), [](const Exponent& a, const Exponent& b) {
    return std::accumulate(a.begin(), a.end(), 0u) < std::accumulate(b.begin(), b.end(), 0u);
  });
  std::vector<Exponent> found;
  for (const auto& e : box) {
    if (std::any_of(found.begin(), found.end(), [&](const Exponent& f) { return divides(f, e); })) continue;
    if (newton_hull_member(e, hull)) found.push_back(e);
  }
  return MonomialIdeal(I.ring(), std::move(found));
}

}  // namespace skoda
