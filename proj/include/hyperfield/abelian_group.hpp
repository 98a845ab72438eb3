#pragma once

#include <string>
#include <vector>

namespace hyperfield {

/// A finite abelian group given as a product of cyclic factors, written
/// multiplicatively. Elements are indices 0..order-1 decoding to mixed-radix
/// exponent tuples; index 0 is the identity.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> cyclic_factors);

  int order() const { return order_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  const std::vector<int>& factors() const { return factors_; }

  int op(int a, int b) const;
  int inverse(int a) const;
  int identity() const { return 0; }

  std::vector<int> exponents(int a) const;
  int from_exponents(const std::vector<int>& exps) const;

  /// Index of the i-th canonical generator (exponent 1 in factor i).
  int generator(int i) const;

  /// Multiplicative display name: "1", "g", "g^2", or "g1^2*g3" for products.
  /// The letter defaults to 'g'.
  std::string elem_name(int a, char letter = 'g') const;

 private:
  std::vector<int> factors_;
  int order_;
};

/// A homomorphism between finite abelian groups, given by the images of the
/// source's canonical generators. Well-definedness requires the image order
/// of each generator to divide that generator's factor order.
struct GroupHom {
  GroupHom(const AbelianGroup& source, const AbelianGroup& target, std::vector<int> generator_images);

  const AbelianGroup& source;
  const AbelianGroup& target;
  std::vector<int> generator_images;

  int apply(int a) const;

  /// Checks apply(a*b) == apply(a)*apply(b) over all pairs.
  bool check_on_all_pairs() const;
};

}  // namespace hyperfield
