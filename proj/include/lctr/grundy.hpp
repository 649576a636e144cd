#pragma once

// Sprague-Grundy evaluation for LCTR.
//
// Three evaluators that must always agree:
//   sg_naive  - plain recursion over the game tree (small inputs only)
//   sg_memo   - key-based memoized recursion over reachable positions
//   sg_grid   - cell DP over the Young diagram, linear in the cell count
//
// Cell (row j, column i) of a diagram stands for the position left after i
// left-column and j top-row removals. Its followers are the cell to the right
// and the cell below; a missing neighbour is the empty partition (value 0).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "partition.hpp"

namespace lctr {

class GrundyValue {
public:
  constexpr GrundyValue() = default;
  constexpr explicit GrundyValue(unsigned value) : value_(value) {}

  constexpr unsigned value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr auto operator<=>(GrundyValue, GrundyValue) = default;
  friend std::ostream& operator<<(std::ostream& os, GrundyValue g) { return os << g.value_; }

private:
  unsigned value_ = 0;
};

enum class Outcome { NextPlayerWins, PreviousPlayerWins };

inline constexpr std::string_view outcome_letter(Outcome o) {
  return o == Outcome::NextPlayerWins ? "N" : "P";
}

// Least natural number not in `values`.
inline unsigned mex(std::initializer_list<unsigned> values) {
  std::vector<unsigned> v(values);
  std::sort(v.begin(), v.end());
  unsigned candidate = 0;
  for (unsigned x : v) {
    if (x == candidate) ++candidate;
    else if (x > candidate) break;
  }
  return candidate;
}

inline unsigned mex(const std::set<unsigned>& values) {
  unsigned candidate = 0;
  while (values.count(candidate)) ++candidate;
  return candidate;
}

namespace detail {

// mex of exactly two values from {0, 1, 2}; the hot path of the grid DP.
constexpr std::uint8_t mex2(std::uint8_t a, std::uint8_t b) noexcept {
  if (a != 0 && b != 0) return 0;
  if (a != 1 && b != 1) return 1;
  return 2;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Naive recursion

inline constexpr std::uint64_t kNaiveMaxSize = 30;

namespace detail {

inline unsigned sg_naive_unchecked(const Partition& p) {
  if (p.empty()) return 0;
  return mex({sg_naive_unchecked(remove_left_column(p)),
              sg_naive_unchecked(remove_top_row(p))});
}

}  // namespace detail

inline GrundyValue sg_naive(const Partition& p) {
  if (p.size() > kNaiveMaxSize)
    throw DomainError("naive evaluation is limited to partitions of size <= " +
                      std::to_string(kNaiveMaxSize));
  return GrundyValue(detail::sg_naive_unchecked(p));
}

// ---------------------------------------------------------------------------
// Memoized recursion

namespace detail {

// Exponent form, largest value first. Both moves touch O(#runs) entries.
using RunList = std::vector<std::pair<part_t, std::size_t>>;

inline void put_word(std::string& key, std::uint32_t word) {
  for (int shift = 0; shift < 32; shift += 8) key.push_back(static_cast<char>(word >> shift));
}

inline std::string key_of(const RunList& runs) {
  std::string key;
  key.reserve(runs.size() * 8);
  for (auto [value, count] : runs) {
    put_word(key, value);
    put_word(key, static_cast<std::uint32_t>(count));
  }
  return key;
}

inline RunList runs_without_top_row(const RunList& runs) {
  RunList out(runs);
  if (--out.front().second == 0) out.erase(out.begin());
  return out;
}

inline RunList runs_without_left_column(const RunList& runs) {
  RunList out(runs);
  if (out.back().first == 1) out.pop_back();
  for (auto& run : out) --run.first;
  return out;
}

}  // namespace detail

// Exponent-form key: one (value, multiplicity) pair of 32-bit words per run.
inline std::string memo_key(const Partition& p) { return detail::key_of(runs(p)); }

// Dictionary from positions to their values, seeded with () -> 0.
// Not synchronized; confine a table to one thread at a time.
class MemoTable {
public:
  MemoTable() { insert(std::string{}, 0); }

  const GrundyValue* find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

  void insert(std::string key, unsigned value) {
    if (values_.emplace(std::move(key), GrundyValue(value)).second) ++insertions_;
  }

  std::size_t size() const noexcept { return values_.size(); }
  // Distinct keys ever inserted, counting the seed entry.
  std::size_t insertions() const noexcept { return insertions_; }
  bool contains(const Partition& p) const { return values_.count(memo_key(p)) != 0; }

private:
  std::unordered_map<std::string, GrundyValue> values_;
  std::size_t insertions_ = 0;
};

// ComputeSG(p): if p is not in the table, store mex(ComputeSG(T p), ComputeSG(L p)).
// The recursion is unrolled onto an explicit stack so one-row inputs of any
// length do not exhaust the call stack. Positions are held in exponent form,
// so a frame costs O(#runs) rather than O(length).
inline GrundyValue sg_memo(const Partition& p, MemoTable& table) {
  struct Frame {
    detail::RunList position;
    std::string key;
  };
  detail::RunList root = runs(p);
  std::string root_key = detail::key_of(root);
  if (const auto* hit = table.find(root_key)) return *hit;

  std::vector<Frame> stack;
  stack.push_back({std::move(root), root_key});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (table.find(top.key)) {
      stack.pop_back();
      continue;
    }
    detail::RunList after_top = detail::runs_without_top_row(top.position);
    detail::RunList after_left = detail::runs_without_left_column(top.position);
    std::string top_key = detail::key_of(after_top);
    std::string left_key = detail::key_of(after_left);
    const auto* top_value = table.find(top_key);
    const auto* left_value = table.find(left_key);
    if (top_value && left_value) {
      table.insert(std::move(top.key), mex({top_value->value(), left_value->value()}));
      stack.pop_back();
      continue;
    }
    // `top` is invalidated by push_back below.
    if (!left_value) stack.push_back({std::move(after_left), std::move(left_key)});
    if (!top_value) stack.push_back({std::move(after_top), std::move(top_key)});
  }
  return *table.find(root_key);
}

inline GrundyValue sg_memo(const Partition& p) {
  MemoTable table;
  return sg_memo(p, table);
}

// ---------------------------------------------------------------------------
// Grid DP

// Value of every cell of the diagram: rows[j][i] = SG(subdiagram(p, i, j)).
struct GridTable {
  std::vector<std::vector<std::uint8_t>> rows;

  GrundyValue at(std::size_t row, std::size_t col) const { return GrundyValue(rows[row][col]); }
  std::size_t cell_count() const {
    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    return total;
  }
};

inline GridTable grid_table(const Partition& p) {
  GridTable table;
  table.rows.resize(p.length());
  for (std::size_t j = p.length(); j-- > 0;) {
    const std::size_t width = p[j];
    auto& row = table.rows[j];
    row.assign(width, 0);
    const auto* below = j + 1 < p.length() ? &table.rows[j + 1] : nullptr;
    for (std::size_t i = width; i-- > 0;) {
      std::uint8_t right = i + 1 < width ? row[i + 1] : 0;
      std::uint8_t down = below && i < below->size() ? (*below)[i] : 0;
      row[i] = detail::mex2(right, down);
    }
  }
  return table;
}

// Same fill order as grid_table, keeping only two row buffers.
inline GrundyValue sg_grid(const Partition& p) {
  if (p.empty()) return GrundyValue(0);
  const auto& parts = p.parts();
  std::vector<std::uint8_t> below(parts.front(), 0);
  std::vector<std::uint8_t> current(parts.front(), 0);
  std::size_t below_width = 0;
  for (std::size_t j = parts.size(); j-- > 0;) {
    const std::size_t width = parts[j];
    std::uint8_t right = 0;
    for (std::size_t i = width; i-- > 0;) {
      std::uint8_t down = i < below_width ? below[i] : 0;
      right = detail::mex2(right, down);
      current[i] = right;
    }
    std::swap(below, current);
    below_width = width;
  }
  return GrundyValue(below[0]);
}

enum class Engine { Grid, Memo, Naive };

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Grid: return "grid";
    case Engine::Memo: return "memo";
    case Engine::Naive: return "naive";
  }
  return "?";
}

inline Engine parse_engine(std::string_view name) {
  if (name == "grid") return Engine::Grid;
  if (name == "memo") return Engine::Memo;
  if (name == "naive") return Engine::Naive;
  throw ParseError("unknown engine '" + std::string(name) + "' (expected grid, memo or naive)");
}

inline GrundyValue sg(const Partition& p, Engine engine = Engine::Grid) {
  switch (engine) {
    case Engine::Memo: return sg_memo(p);
    case Engine::Naive: return sg_naive(p);
    case Engine::Grid: break;
  }
  return sg_grid(p);
}

// ---------------------------------------------------------------------------
// Outcomes and moves

inline Outcome outcome(const Partition& p) {
  return sg_grid(p).is_zero() ? Outcome::PreviousPlayerWins : Outcome::NextPlayerWins;
}

struct Follower {
  Partition position;
  GrundyValue value;
};

struct Followers {
  Follower left;  // L
  Follower top;   // T

  const Follower& at(MoveKind kind) const { return kind == MoveKind::LeftColumn ? left : top; }
};

inline Followers follower_values(const Partition& p) {
  if (p.empty()) throw DomainError("the empty partition has no followers");
  Partition l = remove_left_column(p);
  Partition t = remove_top_row(p);
  GrundyValue lv = sg_grid(l);
  GrundyValue tv = sg_grid(t);
  return {{std::move(l), lv}, {std::move(t), tv}};
}

struct Move {
  MoveKind kind;
  Partition result;
};

// A move to a P-position when one exists, TopRow first; TopRow otherwise.
inline Move best_move(const Partition& p) {
  if (p.empty()) throw DomainError("no move from the empty partition");
  Partition t = remove_top_row(p);
  if (sg_grid(t).is_zero()) return {MoveKind::TopRow, std::move(t)};
  Partition l = remove_left_column(p);
  if (sg_grid(l).is_zero()) return {MoveKind::LeftColumn, std::move(l)};
  return {MoveKind::TopRow, std::move(t)};
}

// ---------------------------------------------------------------------------
// Reachability and play counting

// Every position reachable by one or more moves: the subdiagram rooted at each
// cell other than the top-left one, plus () for a nonempty start.
inline std::set<Partition> reachable_positions(const Partition& p) {
  std::set<Partition> out;
  if (p.empty()) return out;
  out.insert(Partition{});
  for (std::size_t j = 0; j < p.length(); ++j)
    for (std::size_t i = 0; i < p[j]; ++i)
      if (i != 0 || j != 0) out.insert(subdiagram(p, i, j));
  return out;
}

using BigCount = boost::multiprecision::cpp_int;

// Number of distinct labelled move sequences from p to ().
// plays(()) = 1, plays(p) = plays(L p) + plays(T p), tabulated per cell.
inline BigCount count_plays(const Partition& p) {
  if (p.empty()) return 1;
  const auto& parts = p.parts();
  std::vector<BigCount> below(parts.front(), 1);
  std::vector<BigCount> current(parts.front(), 1);
  std::size_t below_width = 0;
  for (std::size_t j = parts.size(); j-- > 0;) {
    const std::size_t width = parts[j];
    for (std::size_t i = width; i-- > 0;) {
      const BigCount& right = i + 1 < width ? current[i + 1] : BigCount(1);
      const BigCount& down = i < below_width ? below[i] : BigCount(1);
      BigCount sum = right + down;
      current[i] = std::move(sum);
    }
    std::swap(below, current);
    below_width = width;
  }
  return below[0];
}

}  // namespace lctr
