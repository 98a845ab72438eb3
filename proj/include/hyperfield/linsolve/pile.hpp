#pragma once

#include <optional>
#include <vector>

#include "hyperfield/linsolve/system.hpp"

namespace hyperfield {

/// A subsystem with at least as many equations as variables. Equation entries
/// are positions into the system's equation list; variables are ids.
struct Pile {
  std::vector<int> equations;
  std::vector<int> variables;
};

/// Finds a pile if one exists. An equation-saturating matching must exist in
/// a pilefree system, and stays intact under duplicating any single
/// equation's variable incidence; the first equation whose duplicate cannot
/// be matched yields the pile via alternating-path reachability.
std::optional<Pile> find_pile(const LinearSystem& s);

}  // namespace hyperfield
