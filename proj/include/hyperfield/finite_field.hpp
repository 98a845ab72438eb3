#pragma once

#include <string>
#include <vector>

namespace hyperfield {

/// Exact arithmetic context for the finite field F_q, q = p^m <= 64.
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of a polynomial over F_p; for m > 1 arithmetic is modulo a
/// monic irreducible polynomial found by exhaustive search.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return m_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;

  /// A fixed generator of the multiplicative group.
  int generator() const { return generator_; }

  /// Multiplicative order of a nonzero element.
  int order(int a) const;

  /// Coefficients (ascending degree) of the modulus polynomial; empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  std::string elem_name(int a) const { return std::to_string(a); }

 private:
  void check(int a) const;

  int q_, p_, m_;
  std::vector<int> modulus_;
  std::vector<std::vector<int>> mul_table_;
  std::vector<int> inv_table_;
  int generator_ = 0;
};

/// True when n = p^m for a prime p; outputs p and m.
bool is_prime_power(int n, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace hyperfield
