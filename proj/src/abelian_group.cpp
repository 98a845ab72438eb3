#include "hyperfield/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperfield {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_factors) : factors_(std::move(cyclic_factors)) {
  if (factors_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
  long long ord = 1;
  for (int f : factors_) {
    if (f < 2) throw std::invalid_argument("cyclic factor orders must be at least 2");
    ord *= f;
    if (ord > 1'000'000) throw std::invalid_argument("group order too large");
  }
  order_ = static_cast<int>(ord);
}

std::vector<int> AbelianGroup::exponents(int a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("group element out of range");
  std::vector<int> exps(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    exps[i] = a % factors_[i];
    a /= factors_[i];
  }
  return exps;
}

int AbelianGroup::from_exponents(const std::vector<int>& exps) const {
  if (exps.size() != factors_.size()) throw std::invalid_argument("exponent tuple arity mismatch");
  int a = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    int e = exps[i] % factors_[i];
    if (e < 0) e += factors_[i];
    a = a * factors_[i] + e;
  }
  return a;
}

int AbelianGroup::op(int a, int b) const {
  auto ea = exponents(a), eb = exponents(b);
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] += eb[i];
  return from_exponents(ea);
}

int AbelianGroup::inverse(int a) const {
  auto ea = exponents(a);
  for (int& e : ea) e = -e;
  return from_exponents(ea);
}

int AbelianGroup::generator(int i) const {
  std::vector<int> exps(factors_.size(), 0);
  exps.at(i) = 1;
  return from_exponents(exps);
}

std::string AbelianGroup::elem_name(int a, char letter) const {
  const auto exps = exponents(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << letter;
    if (factors_.size() > 1) os << (i + 1);
    if (exps[i] > 1) os << '^' << exps[i];
  }
  if (first) return "1";
  return os.str();
}

GroupHom::GroupHom(const AbelianGroup& source_group, const AbelianGroup& target_group,
                   std::vector<int> images)
    : source(source_group), target(target_group), generator_images(std::move(images)) {
  if (static_cast<int>(generator_images.size()) != source.num_factors())
    throw std::invalid_argument("one generator image required per cyclic factor");
  for (int i = 0; i < source.num_factors(); ++i) {
    // img^order(factor) must be the identity, i.e. the image order divides the factor order.
    int acc = target.identity();
    for (int k = 0; k < source.factors()[i]; ++k) acc = target.op(acc, generator_images[i]);
    if (acc != target.identity())
      throw std::invalid_argument("generator image order does not divide the factor order");
  }
}

int GroupHom::apply(int a) const {
  const auto exps = source.exponents(a);
  int out = target.identity();
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < exps[i]; ++k) out = target.op(out, generator_images[i]);
  return out;
}

bool GroupHom::check_on_all_pairs() const {
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (apply(source.op(a, b)) != target.op(apply(a), apply(b))) return false;
  return true;
}

}  // namespace hyperfield
