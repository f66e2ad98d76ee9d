#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pblring/ring_spec.hpp"

namespace pblring::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the textual ring spec grammar (see docs/ring_spec.ebnf).
/// `tables(PATH)` reads the file immediately; file problems are ConstructionErrors.
RingSpec parse_spec(std::string_view text);

}  // namespace pblring::cli
