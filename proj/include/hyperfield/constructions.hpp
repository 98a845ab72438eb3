#pragma once

#include <string>
#include <vector>

#include "hyperfield/abelian_group.hpp"
#include "hyperfield/report.hpp"
#include "hyperfield/table.hpp"

namespace hyperfield {

/// Image map of a multiplicative homomorphism on the nonzero carrier.
/// Image indices are dense, 0..image_size-1, relabeled by first appearance.
struct PhiMap {
  std::vector<int> image;  // per element index; image[0] is -1
  int image_size = 0;

  PhiMap() = default;
  /// Normalizes raw per-element image labels (index 0 ignored) to dense ids.
  explicit PhiMap(std::vector<int> raw_labels);

  int of(elem_t x) const;
  /// All elements with the given image, as a set over the carrier.
  ESet fiber(int image_id) const;
};

/// A hyperfield together with the homomorphism the Massouros conditions
/// quantify over. Builders return verified instances; loaded pairs should be
/// run through verify_massouros before structured solving.
struct MassourosField {
  FiniteHyperfield field;
  PhiMap phi;
};

/// The 2-element hyperfield with 1 + 1 = {0, 1}.
FiniteHyperfield build_krasner();

/// The 3-element hyperfield of signs with 1 + (-1) = {-1, 0, 1}.
FiniteHyperfield build_sign();

/// G adjoined with 0, where x + x = F - {x} and distinct nonzero x + y = {x, y}.
/// phi is the identity on G; requires |G| >= 3.
MassourosField build_FG(const AbelianGroup& G);

/// The direct-product construction on K x {1,-1} adjoined with 0, phi the
/// projection onto K; requires |K| >= 3. K = Z3 yields the 7-element example.
MassourosField build_massouros_original(const AbelianGroup& K);

/// G adjoined with 0, where distinct nonzero x + y = F - {0, x, y} and
/// x + x = {0, x}; requires |G| > 3.
FiniteHyperfield build_nakassis(const AbelianGroup& G);

/// The quotient of F_q by its multiplicative subgroup of order d (d | q-1):
/// carrier of 1 + (q-1)/d orbit classes, class addition over representatives.
FiniteHyperfield build_quotient(int q, int d);

/// Checks that phi is a total multiplicative map with image of size >= 3,
/// that phi(-x) = phi(x), and the two containment conditions on sums of
/// equal-image and distinct-image pairs. All checks exhaustive; witnesses on
/// failure.
CheckReport verify_massouros(const FiniteHyperfield& F, const PhiMap& phi);

/// Checks x + y + z = F for every nonzero triple with phi(x) = phi(y) != phi(z).
CheckReport verify_large_sums(const MassourosField& M);

struct NakassisTriplesReport {
  bool applicable = false;  // carrier size >= 6
  bool passed = false;
  std::string witness;
  std::vector<std::string> observed_sums;  // filled when not applicable
  std::string to_string() const;
};

/// For |F| >= 6 checks that every distinct nonzero triple sums to the whole
/// carrier; |F| = 5 is reported not-applicable with the observed sums.
NakassisTriplesReport verify_nakassis_triples(const FiniteHyperfield& F);

}  // namespace hyperfield
