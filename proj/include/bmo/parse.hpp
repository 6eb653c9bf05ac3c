#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bmo/poly.hpp"

namespace bmo {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  /// Zero-based offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*
///   factor  := primary ['^' digits]
///   primary := number ['/' number] | 'x' | 'y' | 'z' | '(' expr ')'
MPoly parse_polynomial(std::string_view text);

}  // namespace bmo
