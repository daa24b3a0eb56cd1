#include "skoda/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skoda {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars)
    throw std::length_error("too many variables: " + std::to_string(nvars) + " (limit " +
                            std::to_string(kMaxVars) + ")");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw std::overflow_error("exponent overflow");
    exp_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  refresh();
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  exp_[i] = static_cast<std::uint8_t>(e);
  refresh();
}

void Monomial::refresh() {
  unsigned d = 0;
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    d += exp_[i];
    if (exp_[i]) m |= 1ULL << i;
  }
  deg_ = static_cast<std::uint16_t>(d);
  mask_ = m;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  r.mask_ = a.mask_ | b.mask_;
  r.comp_ = a.comp_ ? a.comp_ : b.comp_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (comp_ != o.comp_ || deg_ > o.deg_ || (mask_ & ~o.mask_)) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<std::uint8_t>(o.exp_[i] - exp_[i]);
  r.refresh();
  r.comp_ = 0;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = std::max(exp_[i], o.exp_[i]);
  r.refresh();
  r.comp_ = comp_;
  return r;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("block order needs at least one block");
  return MonomialOrder(Kind::Block, std::move(sizes));
}

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.component() != b.component()) return a.component() < b.component() ? 1 : -1;
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case Kind::Block: {
      std::size_t lo = 0;
      for (std::size_t sz : blocks_) {
        std::size_t hi = std::min(n, lo + sz);
        if (int c = grevlex_range(a, b, lo, hi)) return c;
        lo = hi;
      }
      if (lo < n) return grevlex_range(a, b, lo, n);
      return 0;
    }
  }
  return 0;
}

}  // namespace skoda
