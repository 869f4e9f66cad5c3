#pragma once

// Finite heaps (partial maps from addresses to values) and the simple table
// heap h_n holding addition, multiplication and inequality rows.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slnkit/nat.hpp"

namespace slnkit {

class Heap {
 public:
  Heap() = default;
  explicit Heap(std::map<Nat, Nat> cells) : cells_(std::move(cells)) {}

  /// Value stored at addr, or nullopt when addr is outside the domain.
  std::optional<Nat> lookup(Nat addr) const {
    auto it = cells_.find(addr);
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(Nat addr) const { return cells_.count(addr) != 0; }
  bool points_to(Nat addr, Nat value) const {
    auto it = cells_.find(addr);
    return it != cells_.end() && it->second == value;
  }

  Heap with(Nat addr, Nat value) const;
  Heap without(Nat addr) const;

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::map<Nat, Nat>& cells() const { return cells_; }

  /// max Dom(h); nullopt for the empty heap.
  std::optional<Nat> max_address() const;
  /// max { h(a) | a in Dom(h) }; nullopt for the empty heap.
  std::optional<Nat> max_value() const;

  /// One "ADDR VALUE" pair per line; '#' starts a comment.
  static Heap load(std::string_view text);
  std::string save() const;

  friend bool operator==(const Heap&, const Heap&) = default;

 private:
  std::map<Nat, Nat> cells_;
};

class HeapFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TableBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

/// Cell layout of h_n.
struct TableLayout {
  Nat n;
  Nat add_rows;   // (n^2+1)^2 rows of 4 cells from address 0
  Nat mult_base;  // c1 = 4 (n^2+1)^2
  Nat mult_rows;  // (n+1)^2 rows of 4 cells
  Nat ineq_base;  // c2 = c1 + 4 (n+1)^2
  Nat ineq_rows;  // (n+1)^2 rows of 3 cells
  Nat size;       // c2 + 3 (n+1)^2

  static TableLayout of(Nat n);
};

/// Row tags.
inline constexpr Nat kAddTag = 0;
inline constexpr Nat kMultTag = 1;
inline constexpr Nat kIneqTag = 2;
/// Stored operands and results are shifted by this amount.
inline constexpr Nat kTableOffset = 3;

/// h_n: addition rows for arguments up to n^2, multiplication and inequality
/// rows for arguments up to n. Throws TableBudgetExceeded when the table
/// would exceed `cell_budget` cells.
Heap simple_table_heap(Nat n, std::size_t cell_budget = kDefaultCellBudget);

}  // namespace slnkit
