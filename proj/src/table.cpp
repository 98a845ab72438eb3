#include "hyperfield/table.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace hyperfield {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

FiniteHyperfield::FiniteHyperfield(std::string name, std::vector<std::string> element_names, elem_t one,
                                   std::vector<std::vector<elem_t>> mul_table,
                                   std::vector<std::vector<ESet>> add_table)
    : name_(std::move(name)),
      names_(std::move(element_names)),
      one_(one),
      mul_(std::move(mul_table)),
      add_(std::move(add_table)) {
  const int n = static_cast<int>(names_.size());
  if (n < 2) fail("hyperfield needs at least the elements 0 and 1");
  if (n > kMaxCarrier) fail("carrier larger than " + std::to_string(kMaxCarrier) + " elements");
  if (one_ <= 0 || one_ >= n) fail("multiplicative identity index out of range");
  {
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      if (names_[i].empty()) fail("empty element name");
      if (!seen.emplace(names_[i], i).second) fail("duplicate element name '" + names_[i] + "'");
    }
  }
  if (static_cast<int>(mul_.size()) != n || static_cast<int>(add_.size()) != n)
    fail("table row count does not match carrier size");
  const std::uint64_t carrier_mask = carrier().mask();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul_[i].size()) != n || static_cast<int>(add_[i].size()) != n)
      fail("table column count does not match carrier size");
    for (int j = 0; j < n; ++j) {
      if (mul_[i][j] < 0 || mul_[i][j] >= n) fail("mul table entry out of range");
      if ((add_[i][j].mask() & ~carrier_mask) != 0) fail("add table entry out of range");
    }
  }

  neg_.assign(n, -1);
  for (elem_t x = 0; x < n; ++x) {
    int count = 0;
    for (elem_t y = 0; y < n; ++y) {
      if (add_[x][y].contains(0)) {
        ++count;
        if (count == 1) neg_[x] = y;
      }
    }
    if (count != 1) neg_[x] = -1;
  }

  inv_.assign(n, -1);
  for (elem_t x = 1; x < n; ++x) {
    int count = 0;
    for (elem_t y = 1; y < n; ++y) {
      if (mul_[x][y] == one_) {
        ++count;
        if (count == 1) inv_[x] = y;
      }
    }
    if (count != 1) inv_[x] = -1;
  }
}

void FiniteHyperfield::check_elem(elem_t e) const {
  if (e < 0 || e >= size())
    throw std::out_of_range("invalid element index " + std::to_string(e) + " for hyperfield " + name_);
}

const std::string& FiniteHyperfield::elem_name(elem_t e) const {
  check_elem(e);
  return names_[e];
}

elem_t FiniteHyperfield::elem_by_name(const std::string& n) const {
  if (auto e = try_elem_by_name(n)) return *e;
  throw std::invalid_argument("unknown element '" + n + "' in hyperfield " + name_);
}

std::optional<elem_t> FiniteHyperfield::try_elem_by_name(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == n) return i;
  return std::nullopt;
}

ESet FiniteHyperfield::hadd(elem_t a, elem_t b) const {
  check_elem(a);
  check_elem(b);
  return add_[a][b];
}

elem_t FiniteHyperfield::mul(elem_t a, elem_t b) const {
  check_elem(a);
  check_elem(b);
  return mul_[a][b];
}

bool FiniteHyperfield::has_neg(elem_t a) const {
  check_elem(a);
  return neg_[a] >= 0;
}

elem_t FiniteHyperfield::neg(elem_t a) const {
  check_elem(a);
  if (neg_[a] < 0)
    throw std::domain_error("element '" + names_[a] + "' has no unique negative; table is not a hypergroup");
  return neg_[a];
}

bool FiniteHyperfield::has_inv(elem_t a) const {
  check_elem(a);
  return a != 0 && inv_[a] >= 0;
}

elem_t FiniteHyperfield::inv(elem_t a) const {
  check_elem(a);
  if (a == 0) throw std::domain_error("division by zero: inv(0)");
  if (inv_[a] < 0)
    throw std::domain_error("element '" + names_[a] + "' has no unique multiplicative inverse");
  return inv_[a];
}

ESet FiniteHyperfield::scale_set(elem_t a, const ESet& s) const {
  check_elem(a);
  ESet out;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) out.insert(mul_[a][__builtin_ctzll(m)]);
  return out;
}

ESet FiniteHyperfield::set_add(const ESet& a, const ESet& b) const {
  ESet out;
  for (std::uint64_t ma = a.mask(); ma != 0; ma &= ma - 1) {
    const elem_t x = __builtin_ctzll(ma);
    for (std::uint64_t mb = b.mask(); mb != 0; mb &= mb - 1) out |= add_[x][__builtin_ctzll(mb)];
  }
  return out;
}

ESet FiniteHyperfield::hsum(std::span<const ESet> terms) const {
  if (terms.empty()) return ESet::single(0);
  ESet acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = set_add(acc, terms[i]);
  return acc;
}

ESet FiniteHyperfield::hsum(std::initializer_list<ESet> terms) const {
  return hsum(std::span<const ESet>(terms.begin(), terms.size()));
}

int FiniteHyperfield::order(elem_t a) const {
  check_elem(a);
  if (a == 0) throw std::domain_error("order of zero is undefined");
  elem_t acc = a;
  int k = 1;
  while (acc != one_) {
    acc = mul_[acc][a];
    ++k;
    if (k > size()) throw std::domain_error("element '" + names_[a] + "' generates no finite cycle through 1");
  }
  return k;
}

std::string FiniteHyperfield::set_to_string(const ESet& s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
    if (!first) os << ',';
    first = false;
    os << names_[__builtin_ctzll(m)];
  }
  os << '}';
  return os.str();
}

}  // namespace hyperfield
