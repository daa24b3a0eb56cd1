#include "skoda/bs.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skoda {

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> subsets(std::size_t n, std::size_t s) {
  std::vector<Subset> out;
  if (s > n) return out;
  Subset cur(s);
  for (std::size_t i = 0; i < s; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = s;
    while (i > 0 && cur[i - 1] == n - s + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class T>
std::map<T, std::size_t> index_of(const std::vector<T>& v) {
  std::map<T, std::size_t> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
  return m;
}

Subset without(const Subset& s, std::size_t pos) {
  Subset out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != pos) out.push_back(s[i]);
  return out;
}

std::string subset_label(const Subset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + 1;
  out << '}';
  return out.str();
}

std::string exponent_label(const Exponent& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

std::string monomial_label(const Exponent& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) out << '*';
    first = false;
    out << 'f' << i + 1;
    if (e[i] > 1) out << '^' << e[i];
  }
  return first ? "1" : out.str();
}

void exponents_rec(std::size_t n, unsigned d, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[pos] = e;
    exponents_rec(n, d - e, pos + 1, cur, out);
  }
}

Poly determinant(std::vector<std::vector<Poly>> M) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Poly acc(M[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(M[r][j]);
      minor.push_back(std::move(row));
    }
    Poly t = M[0][c] * determinant(std::move(minor));
    acc = c % 2 ? acc - t : acc + t;
  }
  return acc;
}

Coeff rational_det(std::vector<std::vector<Coeff>> A) {
  const std::size_t n = A.size();
  Coeff det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(A[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(A[r][c]) == 0) continue;
      Coeff f = A[r][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
    }
  }
  return det;
}

struct Expansion {
  std::vector<std::vector<long>> C;
  Coeff det;
};

const Expansion& expansion(std::size_t n, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, Expansion> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("F" + std::to_string(i + 1));
  auto G = polynomial_ring(names);
  std::vector<Poly> F;
  for (std::size_t i = 0; i < n; ++i) F.push_back(G->var(i));
  const std::size_t N = n + k - 1;
  auto mus = degree_k_exponents(n, k);
  auto mu_index = index_of(mus);
  auto S = subsets(N, k);
  if (S.size() != mus.size()) throw std::logic_error("minor count differs from monomial count");

  Expansion e;
  e.C.assign(S.size(), std::vector<long>(mus.size(), 0));
  for (std::size_t s = 0; s < S.size(); ++s) {
    std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, G->zero()));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t t = S[s][c];
        if (t >= r && t - r < n) M[r][c] = F[t - r];
      }
    Poly m = determinant(std::move(M));
    for (const auto& term : m.terms()) {
      Exponent ex(n);
      for (std::size_t i = 0; i < n; ++i) ex[i] = term.mono[i];
      if (term.coeff.get_den() != 1 || !term.coeff.get_num().fits_slong_p())
        throw std::logic_error("unexpected minor coefficient");
      e.C[s][mu_index.at(ex)] = term.coeff.get_num().get_si();
    }
  }
  std::vector<std::vector<Coeff>> A(S.size(), std::vector<Coeff>(mus.size()));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < mus.size(); ++j) A[i][j] = e.C[i][j];
  e.det = rational_det(std::move(A));
  return cache.emplace(std::make_pair(n, k), std::move(e)).first->second;
}

}  // namespace

std::vector<Exponent> degree_k_exponents(std::size_t n, unsigned k) {
  std::vector<Exponent> out;
  if (n == 0) return out;
  Exponent cur(n, 0);
  exponents_rec(n, k, 0, cur, out);
  return out;
}

const std::vector<std::vector<long>>& minor_expansion(std::size_t n, unsigned k) { return expansion(n, k).C; }

FreeComplex koszul(const Presentation& R, const std::vector<Poly>& f) {
  const std::size_t n = f.size();
  if (n == 0) throw std::invalid_argument("koszul: need at least one element");
  FreeComplex C;
  C.ring = R;
  std::vector<std::vector<Subset>> basis(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    basis[i] = subsets(n, i);
    C.ranks.push_back(basis[i].size());
    std::vector<std::string> labels;
    for (const auto& s : basis[i]) labels.push_back(subset_label(s));
    C.labels.push_back(std::move(labels));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    auto target = index_of(basis[i - 1]);
    ModuleMatrix M(R, basis[i - 1].size(), basis[i].size());
    for (std::size_t c = 0; c < basis[i].size(); ++c)
      for (std::size_t p = 0; p < i; ++p) {
        const Poly& g = f[basis[i][c][p]];
        M.set(target.at(without(basis[i][c], p)), c, p % 2 ? -g : g);
      }
    C.d.push_back(std::move(M));
  }
  return C;
}

ModuleMatrix bs_matrix(const Presentation& R, const std::vector<Poly>& f, unsigned k) {
  const std::size_t n = f.size();
  if (n == 0 || k == 0) throw std::invalid_argument("bs_matrix: need n >= 1 and k >= 1");
  ModuleMatrix A(R, k, n + k - 1);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < n; ++i) A.set(r, r + i, f[i]);
  return A;
}

FreeComplex l_complex(const Presentation& R, const std::vector<Poly>& f, unsigned k) {
  const std::size_t n = f.size();
  ModuleMatrix A = bs_matrix(R, f, k);
  const std::size_t N = n + k - 1;
  const Expansion& ex = expansion(n, k);
  if (sgn(ex.det) == 0) throw std::logic_error("minor expansion is singular");
  if (!R->field().is_rational()) {
    Coeff d = R->field().normalize(ex.det);
    if (sgn(d) == 0) throw std::domain_error("minor expansion is singular in this characteristic");
  }

  // Basis of EN_i for i >= 1: (subset of size k+i-1, exponent of weight i-1).
  std::vector<std::vector<std::pair<Subset, Exponent>>> basis(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (const auto& s : subsets(N, k + i - 1))
      for (const auto& a : degree_k_exponents(k, static_cast<unsigned>(i - 1))) basis[i].push_back({s, a});

  FreeComplex C;
  C.ring = R;
  auto mus = degree_k_exponents(n, k);
  C.ranks.push_back(1);
  C.labels.push_back({"1"});
  C.ranks.push_back(mus.size());
  {
    std::vector<std::string> labels;
    for (const auto& m : mus) labels.push_back(monomial_label(m));
    C.labels.push_back(std::move(labels));
  }
  for (std::size_t i = 2; i <= n; ++i) {
    C.ranks.push_back(basis[i].size());
    std::vector<std::string> labels;
    for (const auto& [s, a] : basis[i]) labels.push_back(subset_label(s) + "|" + exponent_label(a));
    C.labels.push_back(std::move(labels));
  }

  // d_1: the monomial row.
  ModuleMatrix d1(R, 1, mus.size());
  for (std::size_t j = 0; j < mus.size(); ++j) {
    Poly m = R->one();
    for (std::size_t i = 0; i < n; ++i) m = R->mul(m, R->pow(f[i], mus[j][i]));
    d1.set(0, j, m);
  }
  C.d.push_back(std::move(d1));

  // Contraction differentials d_i : EN_i -> EN_{i-1}, i >= 2.
  for (std::size_t i = 2; i <= n; ++i) {
    auto target = index_of(basis[i - 1]);
    ModuleMatrix M(R, basis[i - 1].size(), basis[i].size());
    for (std::size_t c = 0; c < basis[i].size(); ++c) {
      const auto& [S, a] = basis[i][c];
      for (std::size_t r = 0; r < k; ++r) {
        if (a[r] == 0) continue;
        Exponent b = a;
        --b[r];
        for (std::size_t pos = 0; pos < S.size(); ++pos) {
          const Poly& e = A.at(r, S[pos]);
          if (e.is_zero()) continue;
          std::size_t row = target.at({without(S, pos), b});
          M.set(row, c, pos % 2 ? R->sub(M.at(row, c), e) : R->add(M.at(row, c), e));
        }
      }
    }
    if (i == 2) {
      // Rebase F_1: new d_2 = C^T d_2 (see header).
      ModuleMatrix M2(R, mus.size(), basis[2].size());
      for (std::size_t mu = 0; mu < mus.size(); ++mu)
        for (std::size_t c = 0; c < basis[2].size(); ++c) {
          Poly acc = R->zero();
          for (std::size_t s = 0; s < basis[1].size(); ++s) {
            long coef = ex.C[s][mu];
            if (coef == 0 || M.at(s, c).is_zero()) continue;
            acc = acc + M.at(s, c).scaled(R->field().from_int(coef));
          }
          M2.set(mu, c, acc);
        }
      M = std::move(M2);
    }
    C.d.push_back(std::move(M));
  }
  C.validate();
  return C;
}

TwistedChartComplex twisted_chart_complex(const std::vector<Poly>& ratios, unsigned k, std::size_t chart,
                                          const Presentation& chart_ring) {
  const std::size_t n = ratios.size();
  if (chart >= n) throw std::invalid_argument("twisted_chart_complex: chart index out of range");
  if (!(chart_ring->reduce(ratios[chart]) == chart_ring->one()))
    throw std::invalid_argument("twisted_chart_complex: the chart's own ratio must be 1");
  TwistedChartComplex T;
  T.complex = l_complex(chart_ring, ratios, k);
  T.chart = chart;
  T.twist.push_back(static_cast<unsigned>(n + k - 1));
  for (std::size_t i = 1; i <= n; ++i) T.twist.push_back(static_cast<unsigned>(n - i));
  return T;
}

}  // namespace skoda
