#pragma once

#include <map>
#include <string>
#include <string_view>

#include "slnkit/nat.hpp"

namespace slnkit {

/// Total variable assignment with finite support; unmentioned variables map to 0.
class VarAssignment {
 public:
  VarAssignment() = default;
  explicit VarAssignment(std::map<std::string, Nat> support);

  Nat operator()(const std::string& x) const;
  /// sigma[x := n]; leaves *this untouched.
  VarAssignment with(const std::string& x, Nat n) const;

  const std::map<std::string, Nat>& support() const { return support_; }
  /// Largest value in the support (0 when empty).
  Nat max_value() const;

  /// "x=2,y=0" format; empty text yields the all-zero assignment.
  static VarAssignment parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const VarAssignment&, const VarAssignment&) = default;

 private:
  std::map<std::string, Nat> support_;
};

}  // namespace slnkit
