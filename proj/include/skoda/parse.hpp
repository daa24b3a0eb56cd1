#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skoda/poly.hpp"

namespace skoda {

/// Syntax error or unknown identifier, with the 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses integer/rational literals, declared variables, + - * / ^ and parentheses.
/// Division is only allowed by nonzero constants; exponents are non-negative integers.
Poly parse_ambient_poly(std::string_view text, const RingPtr& ring);

}  // namespace skoda
