#include "slnkit/heap.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slnkit {

Heap Heap::with(Nat addr, Nat value) const {
  Heap copy = *this;
  copy.cells_[addr] = value;
  return copy;
}

Heap Heap::without(Nat addr) const {
  Heap copy = *this;
  copy.cells_.erase(addr);
  return copy;
}

std::optional<Nat> Heap::max_address() const {
  if (cells_.empty()) return std::nullopt;
  return cells_.rbegin()->first;
}

std::optional<Nat> Heap::max_value() const {
  if (cells_.empty()) return std::nullopt;
  Nat m = 0;
  for (const auto& [addr, value] : cells_) m = std::max(m, value);
  return m;
}

namespace {

Nat parse_nat(const std::string& token, std::size_t line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  if (!token.empty() && token[0] == '-') throw HeapFormatError(where + "negative number '" + token + "'");
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw HeapFormatError(where + "non-numeric token '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw HeapFormatError(where + "number out of range '" + token + "'");
  }
}

}  // namespace

Heap Heap::load(std::string_view text) {
  std::map<Nat, Nat> cells;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string addr, value, extra;
    if (!(fields >> addr)) continue;
    if (!(fields >> value)) {
      throw HeapFormatError("line " + std::to_string(line_no) + ": expected 'ADDR VALUE'");
    }
    if (fields >> extra) {
      throw HeapFormatError("line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
    }
    const Nat a = parse_nat(addr, line_no);
    const Nat v = parse_nat(value, line_no);
    if (!cells.emplace(a, v).second) {
      throw HeapFormatError("line " + std::to_string(line_no) + ": duplicate address " + addr);
    }
  }
  return Heap(std::move(cells));
}

std::string Heap::save() const {
  std::ostringstream out;
  for (const auto& [addr, value] : cells_) out << addr << ' ' << value << '\n';
  return out.str();
}

TableLayout TableLayout::of(Nat n) {
  TableLayout l{};
  l.n = n;
  const Nat sq = checked_add(checked_mul(n, n), 1);
  l.add_rows = checked_mul(sq, sq);
  l.mult_base = checked_mul(4, l.add_rows);
  l.mult_rows = checked_mul(n + 1, n + 1);
  l.ineq_base = checked_add(l.mult_base, checked_mul(4, l.mult_rows));
  l.ineq_rows = l.mult_rows;
  l.size = checked_add(l.ineq_base, checked_mul(3, l.ineq_rows));
  return l;
}

Heap simple_table_heap(Nat n, std::size_t cell_budget) {
  TableLayout layout;
  try {
    layout = TableLayout::of(n);
  } catch (const std::overflow_error&) {
    throw TableBudgetExceeded("table heap h_" + std::to_string(n) + " is too large to index");
  }
  if (layout.size > cell_budget) {
    throw TableBudgetExceeded("table heap h_" + std::to_string(n) + " needs " + std::to_string(layout.size) +
                              " cells, budget is " + std::to_string(cell_budget));
  }
  std::map<Nat, Nat> cells;
  auto put = [&](Nat addr, Nat value) { cells.emplace_hint(cells.end(), addr, value); };

  const Nat width = n * n + 1;
  for (Nat i = 0; i < layout.add_rows; ++i) {
    const Nat x = i % width, y = i / width;
    put(4 * i, kAddTag);
    put(4 * i + 1, x + kTableOffset);
    put(4 * i + 2, y + kTableOffset);
    put(4 * i + 3, x + y + kTableOffset);
  }
  for (Nat i = 0; i < layout.mult_rows; ++i) {
    const Nat x = i % (n + 1), y = i / (n + 1);
    const Nat base = layout.mult_base + 4 * i;
    put(base, kMultTag);
    put(base + 1, x + kTableOffset);
    put(base + 2, y + kTableOffset);
    put(base + 3, x * y + kTableOffset);
  }
  for (Nat i = 0; i < layout.ineq_rows; ++i) {
    const Nat x = i % (n + 1), y = i / (n + 1);
    const Nat base = layout.ineq_base + 3 * i;
    put(base, kIneqTag);
    put(base + 1, x + kTableOffset);
    // A row that would state a false x <= y stores x <= n instead.
    put(base + 2, (y < x ? n : y) + kTableOffset);
  }
  return Heap(std::move(cells));
}

}  // namespace slnkit
