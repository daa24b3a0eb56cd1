#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace skoda {

inline constexpr std::size_t kMaxVars = 48;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector plus a free-module component index (zero for ring elements).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const unsigned> exponents);

  std::size_t nvars() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return deg_; }
  std::uint32_t component() const { return comp_; }
  void set_component(std::uint32_t c) { comp_ = c; }

  /// Throws std::overflow_error past kMaxExponent.
  void set(std::size_t i, unsigned e);

  bool is_one() const { return deg_ == 0; }
  std::uint64_t support_mask() const { return mask_; }
  std::vector<unsigned> exponents() const;

  /// Componentwise product; components must agree unless one side is a ring monomial.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  /// Requires divides(other); the quotient is a ring monomial (component 0).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.comp_ == b.comp_ && a.deg_ == b.deg_ && a.exp_ == b.exp_;
  }

private:
  void refresh();

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint64_t mask_ = 0;
  std::uint16_t deg_ = 0;
  std::uint8_t nvars_ = 0;
  std::uint32_t comp_ = 0;
};

/// lex, grevlex, or a product of grevlex blocks (an elimination order for the first block).
class MonomialOrder {
public:
  enum class Kind { Lex, GRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, {}); }
  /// block_sizes partition the variables in order; the first block dominates.
  static MonomialOrder block(std::vector<std::size_t> block_sizes);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }

  /// Three-way term comparison (position over term: lower component index is larger).
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

private:
  MonomialOrder(Kind k, std::vector<std::size_t> blocks) : kind_(k), blocks_(std::move(blocks)) {}

  Kind kind_;
  std::vector<std::size_t> blocks_;
};

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi);

}  // namespace skoda
