#pragma once

// Integer partitions as LCTR positions.
//
// A Partition is an immutable, weakly decreasing sequence of positive parts.
// Row i of its Young diagram holds parts()[i] cells. The two game moves remove
// the top row (T) or the left column (L); the empty partition is the unique
// terminal position.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lctr {

using part_t = std::uint32_t;

// Raised for malformed partition text.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is applied outside its domain
// (moves from the empty partition, nonpositive parts, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

enum class MoveKind : std::uint8_t { LeftColumn, TopRow };

inline constexpr std::string_view move_token(MoveKind kind) {
  return kind == MoveKind::LeftColumn ? "L" : "T";
}

inline MoveKind parse_move_token(std::string_view token) {
  if (token == "L") return MoveKind::LeftColumn;
  if (token == "T") return MoveKind::TopRow;
  throw ParseError("invalid move token '" + std::string(token) + "' (expected L or T)");
}

class Partition {
public:
  Partition() = default;

  // Validates that every part is positive and the sequence weakly decreases.
  explicit Partition(std::vector<part_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<part_t> parts)
      : Partition(std::vector<part_t>(parts)) {}

  // (value^count)
  static Partition rectangle(part_t width, std::size_t height) {
    if (width == 0 || height == 0) return {};
    return Partition(std::vector<part_t>(height, width));
  }

  // s_n = (n, n-1, ..., 1)
  static Partition staircase(part_t n) {
    std::vector<part_t> parts(n);
    for (part_t i = 0; i < n; ++i) parts[i] = n - i;
    return Partition(std::move(parts));
  }

  const std::vector<part_t>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t length() const noexcept { return parts_.size(); }
  part_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  part_t operator[](std::size_t i) const noexcept { return parts_[i]; }

  std::uint64_t size() const noexcept {
    std::uint64_t total = 0;
    for (part_t v : parts_) total += v;
    return total;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  struct Trusted {};
  Partition(Trusted, std::vector<part_t> parts) noexcept : parts_(std::move(parts)) {}

  friend Partition remove_top_row(const Partition&);
  friend Partition remove_left_column(const Partition&);
  friend Partition conjugate(const Partition&);
  friend Partition subdiagram(const Partition&, std::size_t, std::size_t);

  std::vector<part_t> parts_;
};

// T(p) = (p_2, ..., p_k)
inline Partition remove_top_row(const Partition& p) {
  if (p.empty()) throw DomainError("no move from the empty partition");
  return Partition(Partition::Trusted{},
                   std::vector<part_t>(p.parts_.begin() + 1, p.parts_.end()));
}

// L(p) = (p_1 - 1, p_2 - 1, ...) with zero parts dropped.
inline Partition remove_left_column(const Partition& p) {
  if (p.empty()) throw DomainError("no move from the empty partition");
  std::vector<part_t> parts;
  parts.reserve(p.parts_.size());
  for (part_t v : p.parts_) {
    if (v <= 1) break;
    parts.push_back(v - 1);
  }
  return Partition(Partition::Trusted{}, std::move(parts));
}

inline Partition apply_move(const Partition& p, MoveKind kind) {
  return kind == MoveKind::TopRow ? remove_top_row(p) : remove_left_column(p);
}

// p'_j = #{ parts >= j }
inline Partition conjugate(const Partition& p) {
  std::vector<part_t> parts(p.largest(), 0);
  std::size_t row = p.parts_.size();
  for (part_t j = 1; j <= p.largest(); ++j) {
    while (row > 0 && p.parts_[row - 1] < j) --row;
    parts[j - 1] = static_cast<part_t>(row);
  }
  return Partition(Partition::Trusted{}, std::move(parts));
}

// Position reached after cols_removed L-moves and rows_removed T-moves, in any
// order. Over-removal saturates to the empty partition.
inline Partition subdiagram(const Partition& p, std::size_t cols_removed,
                            std::size_t rows_removed) {
  std::vector<part_t> parts;
  for (std::size_t m = rows_removed; m < p.parts_.size(); ++m) {
    if (p.parts_[m] <= cols_removed) break;
    parts.push_back(static_cast<part_t>(p.parts_[m] - cols_removed));
  }
  return Partition(Partition::Trusted{}, std::move(parts));
}

// Runs of equal parts: (value, multiplicity), largest value first.
inline std::vector<std::pair<part_t, std::size_t>> runs(const Partition& p) {
  std::vector<std::pair<part_t, std::size_t>> out;
  for (part_t v : p.parts()) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

enum class PartitionStyle { Expanded, Exponent };

inline std::string format_partition(const Partition& p,
                                    PartitionStyle style = PartitionStyle::Exponent) {
  if (p.empty()) return "()";
  std::string out;
  auto append = [&out](std::string_view piece) {
    if (!out.empty()) out += ',';
    out += piece;
  };
  if (style == PartitionStyle::Expanded) {
    for (part_t v : p.parts()) append(std::to_string(v));
    return out;
  }
  for (auto [value, count] : runs(p)) {
    std::string item = std::to_string(value);
    if (count > 1) item += "^" + std::to_string(count);
    append(item);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << (p.empty() ? "" : format_partition(p)) << ')';
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Signed so that "-3" is reported as a domain error rather than a syntax error.
inline long long parse_integer(std::string_view token, std::string_view context) {
  token = trim(token);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("cannot parse '" + std::string(token) + "' in '" +
                     std::string(context) + "'");
  return value;
}

}  // namespace detail

// Accepts "5,3^2,2,1^2", "(5, 3^2, 2, 1^2)", "" and "()".
inline Partition parse_partition(std::string_view text) {
  const std::string_view original = text;
  text = detail::trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(original) + "'");
    text = detail::trim(text.substr(1, text.size() - 2));
  }
  std::vector<part_t> parts;
  if (text.empty()) return {};

  constexpr long long kMaxPart = 0xFFFFFFFFLL;
  constexpr long long kMaxCells = 1LL << 31;
  long long cells = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = detail::trim(text.substr(start, comma - start));
    if (item.empty()) throw ParseError("empty item in '" + std::string(original) + "'");

    long long value = 0;
    long long exponent = 1;
    if (auto caret = item.find('^'); caret != std::string_view::npos) {
      value = detail::parse_integer(item.substr(0, caret), original);
      exponent = detail::parse_integer(item.substr(caret + 1), original);
    } else {
      value = detail::parse_integer(item, original);
    }
    if (value < 1) throw DomainError("parts must be at least 1: '" + std::string(item) + "'");
    if (exponent < 1) throw DomainError("exponents must be at least 1: '" + std::string(item) + "'");
    if (value > kMaxPart || exponent > kMaxCells || (cells += value * exponent) > kMaxCells)
      throw DomainError("partition too large: '" + std::string(original) + "'");
    if (!parts.empty() && static_cast<part_t>(value) > parts.back())
      throw DomainError("parts are not weakly decreasing in '" + std::string(original) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(exponent), static_cast<part_t>(value));
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace lctr

template <>
struct std::hash<lctr::Partition> {
  std::size_t operator()(const lctr::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (lctr::part_t v : p.parts()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
