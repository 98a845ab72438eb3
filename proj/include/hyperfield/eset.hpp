#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyperfield {

/// Index of an element in a fixed carrier. Index 0 is always the additive zero.
using elem_t = int;

/// Largest carrier supported by the bitset representation of ESet.
inline constexpr int kMaxCarrier = 64;

/// A subset of a hyperfield carrier, the result type of every hyperaddition.
/// Stored as a 64-bit mask; iteration is in ascending element index.
class ESet {
 public:
  ESet() = default;

  static ESet single(elem_t e) {
    ESet s;
    s.insert(e);
    return s;
  }

  static ESet full(int carrier_size) {
    check_index(carrier_size - 1);
    ESet s;
    s.bits_ = (carrier_size == kMaxCarrier) ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << carrier_size) - 1);
    return s;
  }

  static ESet from_mask(std::uint64_t mask) {
    ESet s;
    s.bits_ = mask;
    return s;
  }

  void insert(elem_t e) {
    check_index(e);
    bits_ |= std::uint64_t{1} << e;
  }

  void erase(elem_t e) {
    check_index(e);
    bits_ &= ~(std::uint64_t{1} << e);
  }

  bool contains(elem_t e) const {
    return e >= 0 && e < kMaxCarrier && (bits_ >> e) & 1u;
  }

  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  std::uint64_t mask() const { return bits_; }

  /// Least element index; requires a nonempty set.
  elem_t min() const {
    if (empty()) throw std::logic_error("ESet::min on empty set");
    return __builtin_ctzll(bits_);
  }

  ESet& operator|=(const ESet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ESet operator|(ESet a, const ESet& b) { return a |= b; }

  bool contains_all(const ESet& o) const { return (o.bits_ & ~bits_) == 0; }

  friend bool operator==(const ESet&, const ESet&) = default;

  std::vector<elem_t> elements() const {
    std::vector<elem_t> out;
    out.reserve(size());
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m));
    return out;
  }

 private:
  static void check_index(elem_t e) {
    if (e < 0 || e >= kMaxCarrier) throw std::out_of_range("ESet element index out of range");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace hyperfield
