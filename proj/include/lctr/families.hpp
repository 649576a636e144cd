#pragma once

// Closed-form Sprague-Grundy values for the structured families of LCTR
// positions, a classifier that extracts family parameters from a partition,
// and a harness that checks every closed form against the grid DP.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "grundy.hpp"
#include "partition.hpp"

namespace lctr {

namespace family {

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

// (n^m)
struct Rectangle {
  std::size_t n = 0;  // width
  std::size_t m = 0;  // height
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// s_n = (n, n-1, ..., 1)
struct Staircase {
  std::size_t n = 0;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

// (n, 1^s), n > 1, s > 0
struct Gamma {
  std::size_t n = 0;
  std::size_t s = 0;
  friend bool operator==(const Gamma&, const Gamma&) = default;
};

// (n^r, r^s), n > r
struct Diagonal {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

// (n^m, r^s), n > r, s > 0, m != r
struct ThickGamma {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  friend bool operator==(const ThickGamma&, const ThickGamma&) = default;
};

// One block (2n)^(2m) of a quadrated partition.
struct QuadratedBlock {
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const QuadratedBlock&, const QuadratedBlock&) = default;
};

// ((2n_1)^(2m_1), ..., (2n_k)^(2m_k)), n_1 > n_2 > ... > n_k
struct Quadrated {
  std::vector<QuadratedBlock> blocks;
  friend bool operator==(const Quadrated&, const Quadrated&) = default;
};

struct General {
  friend bool operator==(const General&, const General&) = default;
};

}  // namespace family

using FamilyClass = std::variant<family::Empty, family::Rectangle, family::Staircase,
                                 family::Gamma, family::Diagonal, family::ThickGamma,
                                 family::Quadrated, family::General>;

enum class FamilyKind { Rectangle, Staircase, Gamma, Diagonal, ThickGamma, Quadrated };

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::Rectangle, FamilyKind::Staircase,
                                              FamilyKind::Gamma,     FamilyKind::Diagonal,
                                              FamilyKind::ThickGamma, FamilyKind::Quadrated};

inline std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Rectangle: return "rectangle";
    case FamilyKind::Staircase: return "staircase";
    case FamilyKind::Gamma: return "gamma";
    case FamilyKind::Diagonal: return "diagonal";
    case FamilyKind::ThickGamma: return "thick-gamma";
    case FamilyKind::Quadrated: return "quadrated";
  }
  return "?";
}

inline FamilyKind parse_family(std::string_view name) {
  for (FamilyKind kind : kAllFamilies)
    if (family_name(kind) == name) return kind;
  throw ParseError("unknown family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Classification

// Precedence: Empty > Rectangle > Staircase > Gamma > Diagonal > ThickGamma
// > Quadrated > General.
inline FamilyClass classify(const Partition& p) {
  if (p.empty()) return family::Empty{};
  const auto blocks = runs(p);
  if (blocks.size() == 1) return family::Rectangle{blocks[0].first, blocks[0].second};

  bool staircase = true;
  for (std::size_t i = 0; i < p.length() && staircase; ++i)
    staircase = p[i] == p.length() - i;
  if (staircase) return family::Staircase{p.length()};

  if (blocks.size() == 2) {
    const auto [n, m] = blocks[0];
    const auto [r, s] = blocks[1];
    if (m == 1 && r == 1) return family::Gamma{n, s};
    if (m == r) return family::Diagonal{n, r, s};
    return family::ThickGamma{n, m, r, s};
  }

  family::Quadrated quad;
  for (auto [value, count] : blocks) {
    if (value % 2 != 0 || count % 2 != 0) return family::General{};
    quad.blocks.push_back({value / 2, count / 2});
  }
  return quad;
}

// Inverse of classify for every class except General.
inline std::optional<Partition> reconstruct(const FamilyClass& fc) {
  return std::visit(
      [](const auto& c) -> std::optional<Partition> {
        using T = std::decay_t<decltype(c)>;
        auto block = [](std::vector<part_t>& out, std::size_t value, std::size_t count) {
          out.insert(out.end(), count, static_cast<part_t>(value));
        };
        std::vector<part_t> parts;
        if constexpr (std::is_same_v<T, family::Empty>) {
          return Partition{};
        } else if constexpr (std::is_same_v<T, family::Rectangle>) {
          block(parts, c.n, c.m);
        } else if constexpr (std::is_same_v<T, family::Staircase>) {
          return Partition::staircase(static_cast<part_t>(c.n));
        } else if constexpr (std::is_same_v<T, family::Gamma>) {
          block(parts, c.n, 1);
          block(parts, 1, c.s);
        } else if constexpr (std::is_same_v<T, family::Diagonal>) {
          block(parts, c.n, c.r);
          block(parts, c.r, c.s);
        } else if constexpr (std::is_same_v<T, family::ThickGamma>) {
          block(parts, c.n, c.m);
          block(parts, c.r, c.s);
        } else if constexpr (std::is_same_v<T, family::Quadrated>) {
          for (const auto& b : c.blocks) block(parts, 2 * b.n, 2 * b.m);
        } else {
          return std::nullopt;
        }
        return Partition(std::move(parts));
      },
      fc);
}

// ---------------------------------------------------------------------------
// Closed forms

inline GrundyValue sg_rectangle(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw DomainError("rectangle dimensions must be positive");
  const std::size_t lo = std::min(n, m);
  const std::size_t hi = std::max(n, m);
  const bool odd = hi % 2 == 1;
  if (lo == 1) return GrundyValue(odd ? 1 : 2);  // single row or column
  if (lo == 2) return GrundyValue(odd ? 2 : 0);
  return GrundyValue((n + m) % 2 == 0 ? 0 : 1);  // lo == 3 agrees with the general rule
}

inline GrundyValue sg_staircase(std::size_t n) {
  if (n < 1) throw DomainError("staircase needs n >= 1");
  return GrundyValue(n % 2);
}

inline GrundyValue sg_gamma(std::size_t n, std::size_t s) {
  if (n <= 1 || s == 0) throw DomainError("gamma partition needs n > 1 and s > 0");
  return GrundyValue(0);
}

inline GrundyValue sg_diagonal(std::size_t n, std::size_t r, std::size_t s) {
  if (r < 1 || n <= r || s < 1) throw DomainError("diagonal partition needs n > r >= 1 and s >= 1");
  return GrundyValue(0);
}

// (n^m, r^s) with m > r. The m = r boundary is sg_diagonal; m < r is the
// conjugate ((m+s)^r, m^(n-r)).
inline GrundyValue sg_thick_gamma(std::size_t n, std::size_t m, std::size_t r, std::size_t s) {
  if (r < 1 || n <= r || m <= r || s < 1)
    throw DomainError("thick gamma partition needs n > r >= 1, m > r and s >= 1");
  const std::size_t width_gap = n - r;
  if (width_gap <= 2 || width_gap % 2 == 0) return GrundyValue((r + m) % 2 == 0 ? 0 : 1);
  const std::size_t height_gap = m - r;
  if (height_gap == 1) return GrundyValue(1);
  if (height_gap == 2) return GrundyValue(2);
  return GrundyValue(height_gap % 2 == 1 ? 0 : 1);
}

namespace detail {

inline void check_quadrated(const std::vector<family::QuadratedBlock>& blocks) {
  if (blocks.empty()) throw DomainError("quadrated partition needs at least one block");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].n < 1 || blocks[i].m < 1)
      throw DomainError("quadrated block parameters must be positive");
    if (i > 0 && blocks[i].n >= blocks[i - 1].n)
      throw DomainError("quadrated block widths must strictly decrease");
  }
}

}  // namespace detail

inline GrundyValue sg_quadrated(const std::vector<family::QuadratedBlock>& blocks) {
  detail::check_quadrated(blocks);
  return GrundyValue(0);
}

// Value of L(p) or T(p) for a quadrated p.
inline GrundyValue sg_quadrated_follower(const std::vector<family::QuadratedBlock>& blocks,
                                         MoveKind move) {
  detail::check_quadrated(blocks);
  const auto& first = blocks.front();
  if (first.n > 1 && (first.m > 1 || blocks.size() > 1)) return GrundyValue(1);
  // Remaining shapes are (2^(2m)) and ((2n)^2); both followers are rectangles.
  const std::size_t width = 2 * first.n;
  const std::size_t height = 2 * first.m;
  return move == MoveKind::LeftColumn ? sg_rectangle(width - 1, height)
                                      : sg_rectangle(width, height - 1);
}

namespace detail {

inline std::optional<GrundyValue> closed_form_of(const FamilyClass& fc) {
  return std::visit(
      [](const auto& c) -> std::optional<GrundyValue> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, family::Empty>) {
          return GrundyValue(0);
        } else if constexpr (std::is_same_v<T, family::Rectangle>) {
          return sg_rectangle(c.n, c.m);
        } else if constexpr (std::is_same_v<T, family::Staircase>) {
          return sg_staircase(c.n);
        } else if constexpr (std::is_same_v<T, family::Gamma>) {
          return sg_gamma(c.n, c.s);
        } else if constexpr (std::is_same_v<T, family::Diagonal>) {
          return sg_diagonal(c.n, c.r, c.s);
        } else if constexpr (std::is_same_v<T, family::ThickGamma>) {
          if (c.m > c.r) return sg_thick_gamma(c.n, c.m, c.r, c.s);
          // conjugate of (n^m, r^s) is ((m+s)^r, m^(n-r))
          return sg_thick_gamma(c.m + c.s, c.r, c.m, c.n - c.r);
        } else if constexpr (std::is_same_v<T, family::Quadrated>) {
          return sg_quadrated(c.blocks);
        } else {
          return std::nullopt;
        }
      },
      fc);
}

}  // namespace detail

// Closed-form value if p, or failing that its conjugate, lies in a known family.
inline std::optional<GrundyValue> closed_form_sg(const Partition& p) {
  if (auto value = detail::closed_form_of(classify(p))) return value;
  return detail::closed_form_of(classify(conjugate(p)));
}

inline std::string describe(const FamilyClass& fc) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, family::Empty>) {
          os << "empty";
        } else if constexpr (std::is_same_v<T, family::Rectangle>) {
          os << "rectangle n=" << c.n << " m=" << c.m;
        } else if constexpr (std::is_same_v<T, family::Staircase>) {
          os << "staircase n=" << c.n;
        } else if constexpr (std::is_same_v<T, family::Gamma>) {
          os << "gamma n=" << c.n << " s=" << c.s;
        } else if constexpr (std::is_same_v<T, family::Diagonal>) {
          os << "diagonal n=" << c.n << " r=" << c.r << " s=" << c.s;
        } else if constexpr (std::is_same_v<T, family::ThickGamma>) {
          os << "thick-gamma n=" << c.n << " m=" << c.m << " r=" << c.r << " s=" << c.s;
        } else if constexpr (std::is_same_v<T, family::Quadrated>) {
          os << "quadrated";
          for (const auto& b : c.blocks) os << " (" << b.n << "," << b.m << ")";
        } else {
          os << "general";
        }
        return os.str();
      },
      fc);
}

// ---------------------------------------------------------------------------
// Verification harness

struct ParamRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

// Interpretation per family:
//   rectangle   n = width, m = height
//   staircase   n
//   gamma       n, s
//   diagonal    n, r (also capped at n-1), s
//   thick-gamma n, m, r (also capped at min(n,m)-1), s
//   quadrated   k = block count, n = block half-widths, m = block half-heights
struct VerifyBounds {
  ParamRange n, m, r, s, k;

  static VerifyBounds defaults(FamilyKind kind) {
    switch (kind) {
      case FamilyKind::Rectangle: return {{1, 40}, {1, 40}, {}, {}, {}};
      case FamilyKind::Staircase: return {{1, 40}, {}, {}, {}, {}};
      case FamilyKind::Gamma: return {{2, 40}, {}, {}, {1, 40}, {}};
      case FamilyKind::Diagonal: return {{2, 30}, {}, {1, 29}, {1, 10}, {}};
      case FamilyKind::ThickGamma: return {{2, 25}, {2, 25}, {1, 24}, {1, 5}, {}};
      case FamilyKind::Quadrated: return {{1, 8}, {1, 4}, {}, {}, {1, 3}};
    }
    return {};
  }
};

inline constexpr std::uint64_t kVerifyMaxCells = 1'000'000;

struct Mismatch {
  std::string params;
  std::string partition;
  unsigned closed_form = 0;
  unsigned dp = 0;
};

struct VerifyReport {
  FamilyKind family{};
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Mismatch> mismatches;  // first 20

  bool ok() const noexcept { return failed == 0; }
};

namespace detail {

class ReportBuilder {
public:
  explicit ReportBuilder(FamilyKind kind) { report_.family = kind; }

  void compare(const std::string& params, const Partition& p, GrundyValue closed, GrundyValue dp) {
    ++report_.total;
    if (closed == dp) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (report_.mismatches.size() < 20)
      report_.mismatches.push_back({params, format_partition(p), closed.value(), dp.value()});
  }

  VerifyReport take() { return std::move(report_); }

private:
  VerifyReport report_;
};

inline void require_cells(std::uint64_t cells) {
  if (cells > kVerifyMaxCells)
    throw DomainError("verification bounds produce partitions over " +
                      std::to_string(kVerifyMaxCells) + " cells");
}

inline std::string params_string(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, v] : kv) {
    os << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

inline void enumerate_quadrated(const VerifyBounds& b, std::vector<family::QuadratedBlock>& prefix,
                                std::size_t target_k,
                                const std::function<void(const std::vector<family::QuadratedBlock>&)>& visit) {
  if (prefix.size() == target_k) {
    visit(prefix);
    return;
  }
  const std::size_t upper = prefix.empty() ? b.n.hi : prefix.back().n - 1;
  for (std::size_t n = std::min(upper, b.n.hi); n >= b.n.lo && n >= 1; --n) {
    for (std::size_t m = b.m.lo; m <= b.m.hi; ++m) {
      prefix.push_back({n, m});
      enumerate_quadrated(b, prefix, target_k, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace detail

inline VerifyReport verify_family_range(FamilyKind kind, const VerifyBounds& b) {
  detail::ReportBuilder report(kind);
  using detail::params_string;
  switch (kind) {
    case FamilyKind::Rectangle:
      detail::require_cells(std::uint64_t(b.n.hi) * b.m.hi);
      for (std::size_t n = b.n.lo; n <= b.n.hi; ++n)
        for (std::size_t m = b.m.lo; m <= b.m.hi; ++m) {
          auto p = Partition::rectangle(static_cast<part_t>(n), m);
          report.compare(params_string({{"n", n}, {"m", m}}), p, sg_rectangle(n, m), sg_grid(p));
        }
      break;
    case FamilyKind::Staircase:
      detail::require_cells(std::uint64_t(b.n.hi) * (b.n.hi + 1) / 2);
      for (std::size_t n = b.n.lo; n <= b.n.hi; ++n) {
        auto p = Partition::staircase(static_cast<part_t>(n));
        report.compare(params_string({{"n", n}}), p, sg_staircase(n), sg_grid(p));
      }
      break;
    case FamilyKind::Gamma:
      detail::require_cells(std::uint64_t(b.n.hi) + b.s.hi);
      for (std::size_t n = std::max<std::size_t>(b.n.lo, 2); n <= b.n.hi; ++n)
        for (std::size_t s = std::max<std::size_t>(b.s.lo, 1); s <= b.s.hi; ++s) {
          auto p = *reconstruct(family::Gamma{n, s});
          report.compare(params_string({{"n", n}, {"s", s}}), p, sg_gamma(n, s), sg_grid(p));
        }
      break;
    case FamilyKind::Diagonal:
      detail::require_cells(std::uint64_t(b.n.hi) * b.r.hi + std::uint64_t(b.r.hi) * b.s.hi);
      for (std::size_t n = std::max<std::size_t>(b.n.lo, 2); n <= b.n.hi; ++n)
        for (std::size_t r = std::max<std::size_t>(b.r.lo, 1); r <= std::min(b.r.hi, n - 1); ++r)
          for (std::size_t s = std::max<std::size_t>(b.s.lo, 1); s <= b.s.hi; ++s) {
            auto p = *reconstruct(family::Diagonal{n, r, s});
            report.compare(params_string({{"n", n}, {"r", r}, {"s", s}}), p,
                           sg_diagonal(n, r, s), sg_grid(p));
          }
      break;
    case FamilyKind::ThickGamma:
      detail::require_cells(std::uint64_t(b.n.hi) * b.m.hi + std::uint64_t(b.r.hi) * b.s.hi);
      for (std::size_t n = std::max<std::size_t>(b.n.lo, 2); n <= b.n.hi; ++n)
        for (std::size_t m = std::max<std::size_t>(b.m.lo, 2); m <= b.m.hi; ++m)
          for (std::size_t r = std::max<std::size_t>(b.r.lo, 1);
               r <= std::min({b.r.hi, n - 1, m - 1}); ++r)
            for (std::size_t s = std::max<std::size_t>(b.s.lo, 1); s <= b.s.hi; ++s) {
              auto p = *reconstruct(family::ThickGamma{n, m, r, s});
              report.compare(params_string({{"n", n}, {"m", m}, {"r", r}, {"s", s}}), p,
                             sg_thick_gamma(n, m, r, s), sg_grid(p));
            }
      break;
    case FamilyKind::Quadrated: {
      detail::require_cells(4 * std::uint64_t(b.n.hi) * b.m.hi * std::max<std::size_t>(b.k.hi, 1));
      std::vector<family::QuadratedBlock> prefix;
      for (std::size_t k = std::max<std::size_t>(b.k.lo, 1); k <= b.k.hi; ++k) {
        detail::enumerate_quadrated(b, prefix, k, [&](const std::vector<family::QuadratedBlock>& blocks) {
          auto p = *reconstruct(family::Quadrated{blocks});
          std::ostringstream params;
          params << "blocks=";
          for (const auto& blk : blocks) params << '(' << blk.n << ',' << blk.m << ')';
          report.compare(params.str(), p, sg_quadrated(blocks), sg_grid(p));
          for (MoveKind move : {MoveKind::LeftColumn, MoveKind::TopRow}) {
            auto follower = apply_move(p, move);
            report.compare(params.str() + " move=" + std::string(move_token(move)), follower,
                           sg_quadrated_follower(blocks, move), sg_grid(follower));
          }
        });
      }
      break;
    }
  }
  return report.take();
}

inline VerifyReport verify_family_range(FamilyKind kind) {
  return verify_family_range(kind, VerifyBounds::defaults(kind));
}

}  // namespace lctr
