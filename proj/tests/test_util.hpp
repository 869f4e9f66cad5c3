#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "slnkit/assignment.hpp"

namespace testutil {

inline oracle::Env env_of(const slnkit::VarAssignment& sigma) { return sigma.support(); }

/// Every assignment of 0..max to vars.
inline std::vector<slnkit::VarAssignment> all_assignments(const std::vector<std::string>& vars, slnkit::Nat max) {
  std::vector<slnkit::VarAssignment> out{slnkit::VarAssignment{}};
  for (const std::string& x : vars) {
    std::vector<slnkit::VarAssignment> next;
    for (const auto& sigma : out) {
      for (slnkit::Nat k = 0; k <= max; ++k) next.push_back(sigma.with(x, k));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace testutil
