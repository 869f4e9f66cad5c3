#pragma once

// Concrete syntax output. render() is a right inverse of the parsers:
// parsing a rendered formula yields a structurally identical AST (truth
// constants excepted, which print as 0 = 0 and !(0 = 0)).

#include <string>

#include "slnkit/fol.hpp"
#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

std::string render(const pa::Term& t);
std::string render(const pa::Formula& f);
std::string render(const sln::Term& t);
std::string render(const sln::Formula& f);
std::string render(const fol::Formula& f);

}  // namespace slnkit
