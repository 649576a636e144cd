#pragma once

// JSON forms of partitions and engine results. A partition is an array of
// positive integers in weakly decreasing order; [] is the empty partition.

#include <json.hpp>

#include "grundy.hpp"
#include "partition.hpp"

namespace lctr {

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

inline void from_json(const nlohmann::json& j, Partition& p) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<part_t> parts;
  parts.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("partition parts must be integers");
    auto value = v.get<long long>();
    if (value < 1 || value > 0xFFFFFFFFLL) throw DomainError("partition parts must be positive");
    parts.push_back(static_cast<part_t>(value));
  }
  p = Partition(std::move(parts));
}

inline nlohmann::json followers_json(const Followers& f) {
  return {{"L", {{"partition", f.left.position}, {"sg", f.left.value.value()}}},
          {"T", {{"partition", f.top.position}, {"sg", f.top.value.value()}}}};
}

}  // namespace lctr
