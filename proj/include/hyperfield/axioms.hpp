#pragma once

#include <string>
#include <vector>

#include "hyperfield/table.hpp"

namespace hyperfield {

/// Result of one axiom check. A failing check carries the first (minimal)
/// witness found in lexicographic scan order, plus the total violation count.
struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string witness;
  long long violations = 0;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& axiom) const;
  std::string to_string() const;
};

/// Exhaustively checks the hyperfield axioms over the whole carrier:
/// nonempty and commutative addition, associativity as a set identity,
/// zero identity and its uniqueness, unique negatives, reversibility,
/// an abelian multiplicative group on the nonzero elements with absorbing
/// zero, and distributivity. All failures are reported, none thrown.
AxiomReport verify_axioms(const FiniteHyperfield& F);

}  // namespace hyperfield
