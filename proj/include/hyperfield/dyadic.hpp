#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hyperfield/ordered.hpp"
#include "hyperfield/report.hpp"

namespace hyperfield {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// The class of a rational under the subgroup of odd/odd fractions: zero, or
/// the 2-adic valuation of any representative. The matching ordered level is
/// the negated valuation, so that the class of 2 sits below the class of 1.
struct DyadicClass {
  bool is_zero = true;
  long long valuation = 0;

  static DyadicClass zero() { return {}; }
  static DyadicClass at(long long v) { return {false, v}; }

  OrderedElem to_ordered() const {
    return is_zero ? OrderedElem::bottom() : OrderedElem::at(-valuation);
  }

  friend bool operator==(const DyadicClass&, const DyadicClass&) = default;

  std::string to_string() const;
};

/// 2-adic valuation of a nonzero integer.
long long v2(const BigInt& n);

/// Class of an exact rational; 0 maps to the zero class.
DyadicClass dyadic_class(const Rational& r);

struct DyadicSumReport {
  int m = 0, n = 0;
  OrderedSet predicted;  // in ordered levels
  bool sound = true;
  bool complete = true;
  std::string witness;

  /// Explicit representative pairs realizing each predicted class in the window.
  std::vector<std::string> witnesses;
  bool zero_class_included = false;

  std::string to_string() const;
};

/// Two-sided check that class addition of 2^m P and 2^n P matches the open
/// ordered addition under level = -valuation. Soundness samples all
/// representatives 2^v * (a/b) with odd |a|, b <= sample_bound; completeness
/// constructs an explicit pair for every predicted class with level in
/// [window_lo, window_hi].
DyadicSumReport dyadic_sum_check(int m, int n, long long window_lo, long long window_hi, int sample_bound);

}  // namespace hyperfield
