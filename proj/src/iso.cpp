#include "hyperfield/iso.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hyperfield/constructions.hpp"
#include "hyperfield/finite_field.hpp"

namespace hyperfield {

IsoWitness IsoWitness::inverted() const {
  IsoWitness out;
  out.map.assign(map.size(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) out.map[map[i]] = static_cast<elem_t>(i);
  return out;
}

std::string IsoWitness::to_string(const FiniteHyperfield& A, const FiniteHyperfield& B) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < map.size(); ++i)
    os << A.elem_name(static_cast<elem_t>(i)) << " -> " << B.elem_name(map[i]) << '\n';
  return os.str();
}

bool validate_iso(const FiniteHyperfield& A, const FiniteHyperfield& B, const IsoWitness& w) {
  const int n = A.size();
  if (B.size() != n || static_cast<int>(w.map.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (elem_t x = 0; x < n; ++x) {
    if (w.map[x] < 0 || w.map[x] >= n || seen[w.map[x]]) return false;
    seen[w.map[x]] = true;
  }
  if (w.map[0] != 0 || w.map[A.one()] != B.one()) return false;
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y) {
      if (w.map[A.mul(x, y)] != B.mul(w.map[x], w.map[y])) return false;
      ESet image;
      for (std::uint64_t m = A.hadd(x, y).mask(); m != 0; m &= m - 1)
        image.insert(w.map[__builtin_ctzll(m)]);
      if (image != B.hadd(w.map[x], w.map[y])) return false;
    }
  return true;
}

namespace {

struct IsoSearcher {
  const FiniteHyperfield& A;
  const FiniteHyperfield& B;
  std::vector<int> order_a, order_b;
  std::vector<elem_t> map;        // A -> B, -1 = unset
  std::vector<bool> used;         // B images taken
  std::vector<elem_t> assigned;   // A elements currently mapped, for rollback

  IsoSearcher(const FiniteHyperfield& a, const FiniteHyperfield& b) : A(a), B(b) {}

  bool addition_matches() const {
    const int n = A.size();
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = x; y < n; ++y) {
        ESet image;
        for (std::uint64_t m = A.hadd(x, y).mask(); m != 0; m &= m - 1)
          image.insert(map[__builtin_ctzll(m)]);
        if (image != B.hadd(map[x], map[y])) return false;
      }
    return true;
  }

  // Closes the partial multiplicative map under pairwise products; returns
  // false (and rolls back to `checkpoint`) on any conflict. `assigned` grows
  // while iterating, so newly derived elements get paired up too.
  bool close_over(std::size_t checkpoint) {
    for (std::size_t i = 0; i < assigned.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (auto [x, y] : {std::pair{assigned[i], assigned[j]}, std::pair{assigned[j], assigned[i]}}) {
          const elem_t xa = A.mul(x, y);
          const elem_t xb = B.mul(map[x], map[y]);
          if (map[xa] != -1) {
            if (map[xa] != xb) return rollback(checkpoint);
          } else {
            if (used[xb]) return rollback(checkpoint);
            map[xa] = xb;
            used[xb] = true;
            assigned.push_back(xa);
          }
        }
    return true;
  }

  bool rollback(std::size_t checkpoint) {
    while (assigned.size() > checkpoint) {
      const elem_t x = assigned.back();
      assigned.pop_back();
      used[map[x]] = false;
      map[x] = -1;
    }
    return false;
  }

  bool search() {
    const int n = A.size();
    if (static_cast<int>(assigned.size()) == n - 1) return addition_matches();  // all nonzero mapped
    // Least unmapped element as the next generator.
    elem_t g = -1;
    for (elem_t x = 1; x < n; ++x)
      if (map[x] == -1) {
        g = x;
        break;
      }
    const std::size_t checkpoint = assigned.size();
    for (elem_t c = 1; c < n; ++c) {
      if (used[c] || order_b[c] != order_a[g]) continue;
      map[g] = c;
      used[c] = true;
      assigned.push_back(g);
      if (close_over(checkpoint)) {
        if (search()) return true;
        rollback(checkpoint);
      }
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> iso_search(const FiniteHyperfield& A, const FiniteHyperfield& B) {
  const int n = A.size();
  if (B.size() != n) return std::nullopt;

  IsoSearcher s(A, B);
  s.order_a.assign(n, 0);
  s.order_b.assign(n, 0);
  for (elem_t x = 1; x < n; ++x) {
    s.order_a[x] = A.order(x);  // throws if the nonzero part is not a group
    s.order_b[x] = B.order(x);
  }
  {
    auto oa = s.order_a, ob = s.order_b;
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
  }

  s.map.assign(n, -1);
  s.used.assign(n, false);
  s.map[0] = 0;
  s.used[0] = true;
  s.map[A.one()] = B.one();
  s.used[B.one()] = true;
  s.assigned.push_back(A.one());

  if (!s.search()) return std::nullopt;
  IsoWitness w{std::move(s.map)};
  if (!validate_iso(A, B, w)) throw std::logic_error("iso_search produced an invalid witness");
  return w;
}

bool QuotientScanReport::any_hit() const {
  for (const auto& c : candidates)
    if (c.hit) return true;
  return false;
}

std::string QuotientScanReport::to_string() const {
  std::ostringstream os;
  os << "quotient scan up to q = " << qmax << " for a carrier of " << carrier_size << " elements\n";
  if (candidates.empty()) os << "no size-matching (q, d) candidates\n";
  for (const auto& c : candidates) {
    os << "  q=" << c.q << " d=" << c.d << ": " << (c.hit ? "isomorphic" : "not isomorphic") << '\n';
  }
  os << (any_hit() ? "isomorphic quotient found\n" : "no isomorphic quotient found (evidence only, not a proof)\n");
  return os.str();
}

QuotientScanReport quotient_scan(const FiniteHyperfield& H, int qmax) {
  if (qmax < 2 || qmax > 64) throw std::invalid_argument("quotient scan bound must be in [2, 64]");
  QuotientScanReport report;
  report.qmax = qmax;
  report.carrier_size = H.size();
  for (int q = 2; q <= qmax; ++q) {
    if (!is_prime_power(q)) continue;
    for (int d = 1; d <= q - 1; ++d) {
      if ((q - 1) % d != 0) continue;
      if (1 + (q - 1) / d != H.size()) continue;
      const FiniteHyperfield Q = build_quotient(q, d);
      const bool hit = iso_search(H, Q).has_value();
      report.candidates.push_back({q, d, hit});
    }
  }
  return report;
}

}  // namespace hyperfield
