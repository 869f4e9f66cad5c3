#include "slnkit/assignment.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace slnkit {

VarAssignment::VarAssignment(std::map<std::string, Nat> support) : support_(std::move(support)) {}

Nat VarAssignment::operator()(const std::string& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? 0 : it->second;
}

VarAssignment VarAssignment::with(const std::string& x, Nat n) const {
  VarAssignment copy = *this;
  copy.support_[x] = n;
  return copy;
}

Nat VarAssignment::max_value() const {
  Nat m = 0;
  for (const auto& [name, v] : support_) m = std::max(m, v);
  return m;
}

namespace {
std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}
}  // namespace

VarAssignment VarAssignment::parse(std::string_view text) {
  std::map<std::string, Nat> support;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("assignment item '" + item + "' lacks '='");
      const std::string name = trim(std::string_view(item).substr(0, eq));
      const std::string value = trim(std::string_view(item).substr(eq + 1));
      if (name.empty()) throw std::invalid_argument("assignment item '" + item + "' lacks a variable name");
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("assignment value for '" + name + "' is not a natural number");
      }
      if (!support.emplace(name, std::stoull(value)).second) {
        throw std::invalid_argument("variable '" + name + "' assigned twice");
      }
    }
    start = end + 1;
  }
  return VarAssignment(std::move(support));
}

std::string VarAssignment::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, v] : support_) {
    if (!first) out << ',';
    out << name << '=' << v;
    first = false;
  }
  return out.str();
}

}  // namespace slnkit
