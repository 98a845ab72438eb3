#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfield/eset.hpp"

namespace hyperfield {

/// A finite hyperfield given by explicit tables: single-valued multiplication
/// and multi-valued addition over a carrier of named elements.
///
/// Index 0 is the additive zero by convention. Construction validates shapes
/// and index ranges only; everything else (commutativity, associativity,
/// unique negatives, ...) is the verifier's job, so that broken hand-authored
/// tables can still be loaded and diagnosed. Negatives and multiplicative
/// inverses are derived from the tables at construction; accessing one that
/// does not exist (or is ambiguous) throws.
///
/// Values are immutable after construction and safe to share across threads.
class FiniteHyperfield {
 public:
  FiniteHyperfield(std::string name, std::vector<std::string> element_names, elem_t one,
                   std::vector<std::vector<elem_t>> mul_table, std::vector<std::vector<ESet>> add_table);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name() const { return name_; }

  elem_t zero() const { return 0; }
  elem_t one() const { return one_; }

  const std::string& elem_name(elem_t e) const;
  /// Resolves a display name to its index; throws on unknown names.
  elem_t elem_by_name(const std::string& n) const;
  std::optional<elem_t> try_elem_by_name(const std::string& n) const;

  /// Hyperaddition a + b, straight from the table.
  ESet hadd(elem_t a, elem_t b) const;
  elem_t mul(elem_t a, elem_t b) const;

  /// The unique y with 0 in x + y; throws if the table defines none or several.
  elem_t neg(elem_t a) const;
  bool has_neg(elem_t a) const;

  /// Multiplicative inverse of a nonzero element; inv(0) is a division by zero.
  elem_t inv(elem_t a) const;
  bool has_inv(elem_t a) const;

  /// Elementwise multiplication of a set by a.
  ESet scale_set(elem_t a, const ESet& s) const;

  /// Set sum A + B: the union of a + b over all pairs.
  ESet set_add(const ESet& a, const ESet& b) const;

  /// Left fold of set sums. hsum({}) = {0}, hsum({S}) = S.
  ESet hsum(std::span<const ESet> terms) const;
  ESet hsum(std::initializer_list<ESet> terms) const;

  /// The whole carrier as a set.
  ESet carrier() const { return ESet::full(size()); }

  const std::vector<std::vector<elem_t>>& mul_table() const { return mul_; }
  const std::vector<std::vector<ESet>>& add_table() const { return add_; }

  /// Multiplicative order of a nonzero element.
  int order(elem_t a) const;

  void check_elem(elem_t e) const;

  std::string set_to_string(const ESet& s) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  elem_t one_;
  std::vector<std::vector<elem_t>> mul_;
  std::vector<std::vector<ESet>> add_;
  std::vector<elem_t> neg_;  // -1 when no unique negative exists
  std::vector<elem_t> inv_;  // -1 when no unique inverse exists
};

}  // namespace hyperfield
