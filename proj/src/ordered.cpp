#include "hyperfield/ordered.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace hyperfield {

std::string OrderedElem::to_string() const { return is_bottom ? "0" : std::to_string(level); }

OrderedSet OrderedSet::single(OrderedElem e) {
  OrderedSet s;
  if (e.is_bottom)
    s.insert_bottom();
  else
    s.insert_level(e.level);
  return s;
}

OrderedSet OrderedSet::down_set(long long level, OrderedMode mode) {
  OrderedSet s;
  s.insert_bottom();
  s.insert_down(mode == OrderedMode::open ? level - 1 : level);
  return s;
}

void OrderedSet::insert_level(long long level) {
  if (down_ && level <= *down_) return;
  finite_.insert(level);
  normalize();
}

void OrderedSet::insert_down(long long inclusive_threshold) {
  if (!down_ || *down_ < inclusive_threshold) down_ = inclusive_threshold;
  normalize();
}

void OrderedSet::normalize() {
  if (!down_) return;
  while (!finite_.empty()) {
    auto it = finite_.begin();
    if (*it <= *down_) {
      finite_.erase(it);
    } else if (*it == *down_ + 1) {
      down_ = *it;
      finite_.erase(finite_.begin());
    } else {
      break;
    }
  }
}

bool OrderedSet::contains(const OrderedElem& e) const {
  if (e.is_bottom) return bottom_;
  if (down_ && e.level <= *down_) return true;
  return finite_.count(e.level) > 0;
}

OrderedSet& OrderedSet::operator|=(const OrderedSet& o) {
  bottom_ = bottom_ || o.bottom_;
  if (o.down_) down_ = down_ ? std::max(*down_, *o.down_) : *o.down_;
  finite_.insert(o.finite_.begin(), o.finite_.end());
  normalize();
  return *this;
}

std::string OrderedSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  if (bottom_) {
    os << '0';
    first = false;
  }
  if (down_) {
    if (!first) os << ", ";
    os << "levels <= " << *down_;
    first = false;
  }
  for (long long v : finite_) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

OrderedSet oadd(OrderedMode mode, const OrderedElem& x, const OrderedElem& y) {
  if (x.is_bottom) return OrderedSet::single(y);
  if (y.is_bottom) return OrderedSet::single(x);
  if (x.level != y.level) return OrderedSet::single(OrderedElem::at(std::max(x.level, y.level)));
  return OrderedSet::down_set(x.level, mode);
}

OrderedSet ordered_set_add(OrderedMode mode, const OrderedSet& a, const OrderedSet& b) {
  OrderedSet out;
  if (a.has_bottom()) out |= b;
  if (b.has_bottom()) out |= a;

  for (long long x : a.finite_part())
    for (long long y : b.finite_part()) out |= oadd(mode, OrderedElem::at(x), OrderedElem::at(y));

  // A single level against a whole down-set: below the threshold the level
  // dominates every member; at or under it the sums sweep out the full
  // down-set again (Bottom from the equal pair, each level from a max).
  auto level_vs_down = [&](long long x, long long threshold) {
    OrderedSet s;
    if (x > threshold) {
      s.insert_level(x);
    } else {
      s.insert_bottom();
      s.insert_down(threshold);
    }
    return s;
  };
  if (b.has_down())
    for (long long x : a.finite_part()) out |= level_vs_down(x, *b.down_threshold());
  if (a.has_down())
    for (long long y : b.finite_part()) out |= level_vs_down(y, *a.down_threshold());

  if (a.has_down() && b.has_down()) {
    OrderedSet s;
    s.insert_bottom();
    s.insert_down(std::max(*a.down_threshold(), *b.down_threshold()));
    out |= s;
  }
  return out;
}

CheckReport overify_window(OrderedMode mode, long long lo, long long hi) {
  CheckReport report;
  if (lo >= hi) throw std::invalid_argument("window must satisfy lo < hi");

  std::vector<OrderedElem> elems;
  elems.push_back(OrderedElem::bottom());
  for (long long v = lo; v <= hi; ++v) elems.push_back(OrderedElem::at(v));

  {
    bool ok = true;
    std::string witness;
    for (const auto& x : elems) {
      for (const auto& y : elems)
        if (oadd(mode, x, y) != oadd(mode, y, x)) {
          ok = false;
          witness = x.to_string() + " + " + y.to_string();
          break;
        }
      if (!ok) break;
    }
    report.add("commutativity", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (const auto& x : elems)
      if (oadd(mode, OrderedElem::bottom(), x) != OrderedSet::single(x)) {
        ok = false;
        witness = "0 + " + x.to_string();
        break;
      }
    report.add("identity", ok, witness);
  }
  {
    // Every element must be its own unique negative within the window.
    bool ok = true;
    std::string witness;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        const bool has_zero = oadd(mode, x, y).contains(OrderedElem::bottom());
        if (has_zero != (x == y)) {
          ok = false;
          witness = x.to_string() + " + " + y.to_string() + (has_zero ? " contains 0" : " misses 0");
          break;
        }
      }
      if (!ok) break;
    }
    report.add("unique-negatives", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          if (!oadd(mode, y, z).contains(x)) continue;
          if (!ordered_set_add(mode, OrderedSet::single(x), OrderedSet::single(y)).contains(z)) {
            ok = false;
            witness = x.to_string() + " in " + y.to_string() + " + " + z.to_string() + " but z not reachable back";
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    report.add("reversibility", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          const OrderedSet lhs = ordered_set_add(mode, oadd(mode, x, y), OrderedSet::single(z));
          const OrderedSet rhs = ordered_set_add(mode, OrderedSet::single(x), oadd(mode, y, z));
          if (lhs != rhs) {
            ok = false;
            witness = "(" + x.to_string() + " + " + y.to_string() + ") + " + z.to_string() + " = " +
                      lhs.to_string() + " vs " + rhs.to_string();
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    report.add("associativity", ok, witness);
  }
  return report;
}

}  // namespace hyperfield
