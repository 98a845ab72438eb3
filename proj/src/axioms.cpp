#include "hyperfield/axioms.hpp"

#include <sstream>

namespace hyperfield {

namespace {

class CheckBuilder {
 public:
  CheckBuilder(const FiniteHyperfield& F, std::string axiom) : F_(F) { check_.axiom = std::move(axiom); }

  void violation(std::initializer_list<elem_t> elems, const std::string& detail) {
    ++check_.violations;
    if (!check_.passed) return;
    check_.passed = false;
    std::ostringstream os;
    bool first = true;
    for (elem_t e : elems) {
      if (!first) os << ", ";
      first = false;
      os << F_.elem_name(e);
    }
    if (!detail.empty()) os << ": " << detail;
    check_.witness = os.str();
  }

  AxiomCheck take() { return std::move(check_); }

 private:
  const FiniteHyperfield& F_;
  AxiomCheck check_;
};

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.axiom << ": " << (c.passed ? "PASS" : "FAIL");
    if (!c.passed) os << "  [witness " << c.witness << "; " << c.violations << " violation(s)]";
    os << '\n';
  }
  return os.str();
}

AxiomReport verify_axioms(const FiniteHyperfield& F) {
  const int n = F.size();
  AxiomReport report;

  {
    CheckBuilder c(F, "add-nonempty");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        if (F.hadd(a, b).empty()) c.violation({a, b}, "empty sum");
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "add-commutative");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = a + 1; b < n; ++b)
        if (F.hadd(a, b) != F.hadd(b, a))
          c.violation({a, b}, F.set_to_string(F.hadd(a, b)) + " vs " + F.set_to_string(F.hadd(b, a)));
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "add-associative");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b) {
        const ESet ab = F.hadd(a, b);
        for (elem_t e = 0; e < n; ++e) {
          const ESet lhs = F.set_add(ab, ESet::single(e));
          const ESet rhs = F.set_add(ESet::single(a), F.hadd(b, e));
          if (lhs != rhs) c.violation({a, b, e}, F.set_to_string(lhs) + " vs " + F.set_to_string(rhs));
        }
      }
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "zero-identity");
    for (elem_t h = 0; h < n; ++h)
      if (F.hadd(0, h) != ESet::single(h)) c.violation({h}, "0 + h = " + F.set_to_string(F.hadd(0, h)));
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "zero-unique");
    for (elem_t e = 1; e < n; ++e) {
      bool identity = true;
      for (elem_t h = 0; h < n && identity; ++h)
        if (F.hadd(e, h) != ESet::single(h)) identity = false;
      if (identity) c.violation({e}, "second additive identity");
    }
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "unique-negatives");
    for (elem_t x = 0; x < n; ++x) {
      int count = 0;
      for (elem_t y = 0; y < n; ++y)
        if (F.hadd(x, y).contains(0)) ++count;
      if (count != 1) c.violation({x}, std::to_string(count) + " candidate negative(s)");
    }
    report.checks.push_back(c.take());
  }
  {
    // Evaluated where negatives exist; missing ones are already reported above.
    CheckBuilder c(F, "reversibility");
    for (elem_t y = 0; y < n; ++y) {
      if (!F.has_neg(y)) continue;
      const elem_t ny = F.neg(y);
      for (elem_t z = 0; z < n; ++z) {
        const ESet sum = F.hadd(y, z);
        for (std::uint64_t m = sum.mask(); m != 0; m &= m - 1) {
          const elem_t x = __builtin_ctzll(m);
          if (!F.hadd(x, ny).contains(z)) c.violation({x, y, z}, "z not in x + (-y)");
        }
      }
    }
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "mul-commutative");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = a + 1; b < n; ++b)
        if (F.mul(a, b) != F.mul(b, a)) c.violation({a, b}, "");
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "mul-associative");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        for (elem_t e = 0; e < n; ++e)
          if (F.mul(F.mul(a, b), e) != F.mul(a, F.mul(b, e))) c.violation({a, b, e}, "");
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "one-identity");
    for (elem_t a = 0; a < n; ++a)
      if (F.mul(F.one(), a) != a) c.violation({a}, "1 * a = " + F.elem_name(F.mul(F.one(), a)));
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "zero-absorbing");
    for (elem_t a = 0; a < n; ++a)
      if (F.mul(0, a) != 0) c.violation({a}, "0 * a = " + F.elem_name(F.mul(0, a)));
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "nonzero-closed");
    for (elem_t a = 1; a < n; ++a)
      for (elem_t b = 1; b < n; ++b)
        if (F.mul(a, b) == 0) c.violation({a, b}, "product is 0");
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "inverses");
    for (elem_t a = 1; a < n; ++a) {
      int count = 0;
      for (elem_t b = 1; b < n; ++b)
        if (F.mul(a, b) == F.one()) ++count;
      if (count != 1) c.violation({a}, std::to_string(count) + " candidate inverse(s)");
    }
    report.checks.push_back(c.take());
  }
  {
    CheckBuilder c(F, "distributive");
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        for (elem_t e = 0; e < n; ++e) {
          const ESet lhs = F.scale_set(a, F.hadd(b, e));
          const ESet rhs = F.hadd(F.mul(a, b), F.mul(a, e));
          if (lhs != rhs) c.violation({a, b, e}, F.set_to_string(lhs) + " vs " + F.set_to_string(rhs));
        }
    report.checks.push_back(c.take());
  }

  return report;
}

}  // namespace hyperfield
