#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slnkit/fol.hpp"
#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

/// Raised on malformed input. Line and column are 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

pa::Formula parse_pa(std::string_view text);
pa::Term parse_pa_term(std::string_view text);
sln::Formula parse_sln(std::string_view text);
sln::Term parse_sln_term(std::string_view text);
fol::Formula parse_fol(std::string_view text);

}  // namespace slnkit
