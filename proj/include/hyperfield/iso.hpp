#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperfield/table.hpp"

namespace hyperfield {

/// A hyperfield isomorphism as an explicit carrier bijection (A index to
/// B index). Witnesses returned by iso_search preserve 0, 1, multiplication
/// and addition (as set images); validate_iso re-checks that exhaustively.
struct IsoWitness {
  std::vector<elem_t> map;

  IsoWitness inverted() const;
  std::string to_string(const FiniteHyperfield& A, const FiniteHyperfield& B) const;
};

bool validate_iso(const FiniteHyperfield& A, const FiniteHyperfield& B, const IsoWitness& w);

/// Deterministic search for an isomorphism: enumerates multiplicative-group
/// isomorphisms by generator images (pruned by element orders) and filters by
/// addition-table equality. Both inputs must have group structure on their
/// nonzero elements.
std::optional<IsoWitness> iso_search(const FiniteHyperfield& A, const FiniteHyperfield& B);

struct QuotientScanReport {
  int qmax = 0;
  int carrier_size = 0;
  /// Size-matching (q, d) candidates in ascending order, with hit flags.
  struct Candidate {
    int q;
    int d;
    bool hit;
  };
  std::vector<Candidate> candidates;

  bool any_hit() const;
  std::string to_string() const;
};

/// Probes every prime power q <= qmax and divisor d | q-1 whose quotient
/// carrier matches |H|, searching for an isomorphism with H. Evidence only:
/// a clean scan does not prove H non-quotient.
QuotientScanReport quotient_scan(const FiniteHyperfield& H, int qmax);

}  // namespace hyperfield
