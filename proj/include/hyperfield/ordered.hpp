#pragma once

#include <optional>
#include <set>
#include <string>

#include "hyperfield/report.hpp"

namespace hyperfield {

enum class OrderedMode { open, closed };

/// An element of the value-group-Z ordered hyperfields: the adjoined least
/// element (the additive zero) or an integer level. Multiplication is level
/// addition with Bottom absorbing.
struct OrderedElem {
  bool is_bottom = true;
  long long level = 0;

  static OrderedElem bottom() { return {}; }
  static OrderedElem at(long long level) { return {false, level}; }

  friend bool operator==(const OrderedElem&, const OrderedElem&) = default;

  std::string to_string() const;
};

/// A subset of the ordered carrier in symbolic normal form: an optional
/// Bottom, a finite set of levels, and an optional down-set holding every
/// level at or below an inclusive threshold. The normal form keeps the finite
/// part disjoint from the down-set and absorbs adjacent levels into it, so
/// equality is exact even though down-sets are infinite.
class OrderedSet {
 public:
  OrderedSet() = default;

  static OrderedSet single(OrderedElem e);
  /// All levels strictly below `level` (open) or at most `level` (closed),
  /// with Bottom included: the shape of x + x.
  static OrderedSet down_set(long long level, OrderedMode mode);

  void insert_bottom() { bottom_ = true; }
  void insert_level(long long level);
  void insert_down(long long inclusive_threshold);

  bool contains(const OrderedElem& e) const;
  bool has_bottom() const { return bottom_; }
  bool has_down() const { return down_.has_value(); }
  std::optional<long long> down_threshold() const { return down_; }
  const std::set<long long>& finite_part() const { return finite_; }
  bool empty() const { return !bottom_ && !down_ && finite_.empty(); }

  OrderedSet& operator|=(const OrderedSet& o);

  friend bool operator==(const OrderedSet&, const OrderedSet&) = default;

  std::string to_string() const;

 private:
  void normalize();

  bool bottom_ = false;
  std::set<long long> finite_;
  std::optional<long long> down_;  // all levels <= *down_
};

/// Hyperaddition: max of distinct elements, the mode's down-set for equal
/// nonzero elements, and Bottom the additive identity.
OrderedSet oadd(OrderedMode mode, const OrderedElem& x, const OrderedElem& y);

/// Set sum extending oadd to symbolic sets (unions of elementwise sums).
OrderedSet ordered_set_add(OrderedMode mode, const OrderedSet& a, const OrderedSet& b);

/// Checks commutativity, the Bottom identity, unique self-negatives,
/// reversibility and associativity (as exact symbolic set identities) for all
/// elements and triples with levels in [lo, hi].
CheckReport overify_window(OrderedMode mode, long long lo, long long hi);

}  // namespace hyperfield
