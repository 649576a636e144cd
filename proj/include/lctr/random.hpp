#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace lctr {

// k independent parts, each uniform in [1, max(1, target / k)], sorted descending.
template <typename Rng>
Partition random_partition_k_parts(std::uint64_t target, std::size_t k, Rng& rng) {
  if (k == 0) throw DomainError("need at least one part");
  const auto upper = static_cast<part_t>(std::max<std::uint64_t>(1, target / k));
  std::uniform_int_distribution<part_t> dist(1, upper);
  std::vector<part_t> parts(k);
  for (auto& v : parts) v = dist(rng);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// Default part count for the random benchmark shape: round(cbrt(target)).
inline std::size_t default_part_count(std::uint64_t target) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(std::cbrt(double(target)))));
}

// A partition of exactly `size`: parts drawn uniformly from [1, remaining].
template <typename Rng>
Partition random_partition_of_size(std::uint64_t size, Rng& rng) {
  std::vector<part_t> parts;
  while (size > 0) {
    std::uniform_int_distribution<std::uint64_t> dist(1, size);
    auto v = dist(rng);
    parts.push_back(static_cast<part_t>(v));
    size -= v;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// Size uniform in [0, max_size], then random_partition_of_size.
template <typename Rng>
Partition random_partition_up_to(std::uint64_t max_size, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max_size);
  return random_partition_of_size(dist(rng), rng);
}

enum class Shape { Staircase, Rectangle, Random };

inline std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::Staircase: return "staircase";
    case Shape::Rectangle: return "rectangle";
    case Shape::Random: return "random";
  }
  return "?";
}

inline Shape parse_shape(std::string_view name) {
  if (name == "staircase") return Shape::Staircase;
  if (name == "rectangle") return Shape::Rectangle;
  if (name == "random") return Shape::Random;
  throw ParseError("unknown shape '" + std::string(name) + "' (expected staircase, rectangle or random)");
}

// Benchmark input of roughly `target` cells:
//   staircase  smallest s_n with at least target cells
//   rectangle  near-square (a^b) with a*b >= target
//   random     random_partition_k_parts(target, parts or default_part_count)
template <typename Rng>
Partition shaped_partition(Shape shape, std::uint64_t target, Rng& rng, std::size_t parts = 0) {
  switch (shape) {
    case Shape::Staircase: {
      part_t n = 0;
      while (std::uint64_t(n) * (n + 1) / 2 < target) ++n;
      return Partition::staircase(n);
    }
    case Shape::Rectangle: {
      auto width = static_cast<part_t>(std::ceil(std::sqrt(double(target))));
      if (width == 0) return {};
      return Partition::rectangle(width, (target + width - 1) / width);
    }
    case Shape::Random:
      return random_partition_k_parts(target, parts ? parts : default_part_count(target), rng);
  }
  return {};
}

}  // namespace lctr
