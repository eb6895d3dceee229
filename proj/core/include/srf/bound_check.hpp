#pragma once

#include "srf/hp_real.hpp"

#include <string>
#include <vector>

namespace srf {

/// One inequality lhs <= rhs, with slack = rhs - lhs.
struct BoundCheck {
  std::string name;
  HPReal lhs;
  HPReal rhs;
  HPReal slack;
  bool satisfied = false;

  static BoundCheck less_equal(std::string name, const HPReal& lhs, const HPReal& rhs) {
    BoundCheck b{std::move(name), lhs, rhs, rhs - lhs, false};
    b.satisfied = b.slack >= 0.0;
    return b;
  }
};

inline bool all_satisfied(const std::vector<BoundCheck>& checks) {
  for (const auto& c : checks)
    if (!c.satisfied) return false;
  return true;
}

}  // namespace srf
