#include "hyperfield/dyadic.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperfield {

namespace mp = boost::multiprecision;

std::string DyadicClass::to_string() const {
  if (is_zero) return "[0]";
  if (valuation == 0) return "P";
  if (valuation == 1) return "2P";
  if (valuation == -1) return "(1/2)P";
  if (valuation > 0) return "2^" + std::to_string(valuation) + "P";
  return "2^(" + std::to_string(valuation) + ")P";
}

long long v2(const BigInt& n) {
  if (n == 0) throw std::domain_error("v2 of zero is undefined");
  return static_cast<long long>(mp::lsb(BigInt(abs(n))));
}

DyadicClass dyadic_class(const Rational& r) {
  if (r == 0) return DyadicClass::zero();
  return DyadicClass::at(v2(mp::numerator(r)) - v2(mp::denominator(r)));
}

namespace {

Rational pow2(long long e) {
  BigInt num = 1;
  num <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(num) : Rational(1, num);
}

// All representatives 2^v * (a/b) with a odd in [-bound, bound], b odd positive.
std::vector<Rational> class_samples(int v, int bound) {
  std::vector<Rational> out;
  const Rational scale = pow2(v);
  for (int a = -bound; a <= bound; ++a) {
    if (a % 2 == 0) continue;
    for (int b = 1; b <= bound; b += 2) out.push_back(scale * Rational(a, b));
  }
  return out;
}

}  // namespace

std::string DyadicSumReport::to_string() const {
  std::ostringstream os;
  os << DyadicClass::at(m).to_string() << " + " << DyadicClass::at(n).to_string()
     << ": predicted " << predicted.to_string() << " (ordered levels); soundness "
     << (sound ? "PASS" : "FAIL") << ", completeness " << (complete ? "PASS" : "FAIL");
  if (!witness.empty()) os << "  [" << witness << "]";
  os << '\n';
  for (const auto& w : witnesses) os << "  " << w << '\n';
  return os.str();
}

DyadicSumReport dyadic_sum_check(int m, int n, long long window_lo, long long window_hi, int sample_bound) {
  if (window_lo > window_hi) throw std::invalid_argument("empty window");
  if (sample_bound < 1) throw std::invalid_argument("sample bound must be positive");

  DyadicSumReport report;
  report.m = m;
  report.n = n;
  report.predicted = oadd(OrderedMode::open, OrderedElem::at(-m), OrderedElem::at(-n));
  report.zero_class_included = report.predicted.has_bottom();

  // Soundness: every sampled representative sum lands in the predicted set.
  for (const Rational& r : class_samples(m, sample_bound)) {
    for (const Rational& s : class_samples(n, sample_bound)) {
      const Rational t = r + s;
      const DyadicClass c = dyadic_class(t);
      if (!report.predicted.contains(c.to_ordered())) {
        report.sound = false;
        std::ostringstream os;
        os << r << " + " << s << " lands in " << c.to_string() << " outside the prediction";
        report.witness = os.str();
        return report;
      }
    }
  }

  // Completeness: realize every predicted class whose level is in the window
  // by an explicit pair of representatives.
  auto record = [&](const Rational& r, const Rational& s, const std::string& target) -> bool {
    if (dyadic_class(r).valuation != m || dyadic_class(s).valuation != n || r == 0 || s == 0) {
      report.complete = false;
      report.witness = "witness pair for " + target + " has representatives in the wrong classes";
      return false;
    }
    const DyadicClass c = dyadic_class(r + s);
    if (!(c.to_string() == target)) {
      report.complete = false;
      std::ostringstream os;
      os << r << " + " << s << " lands in " << c.to_string() << ", wanted " << target;
      report.witness = os.str();
      return false;
    }
    std::ostringstream os;
    os << target << " realized by " << r << " + " << s;
    report.witnesses.push_back(os.str());
    return true;
  };

  if (report.predicted.has_bottom()) {
    const Rational r = pow2(m);
    const Rational s = -pow2(n);
    if (r + s != 0 || dyadic_class(r).valuation != m || dyadic_class(s).valuation != n) {
      report.complete = false;
      report.witness = "zero class not realized";
    } else {
      report.witnesses.push_back("[0] realized by " + r.str() + " + (" + s.str() + ")");
    }
  }
  for (long long level = window_lo; level <= window_hi && report.complete; ++level) {
    if (!report.predicted.contains(OrderedElem::at(level))) continue;
    const long long k = -level;  // target valuation
    if (m != n) {
      if (!record(pow2(m), pow2(n), DyadicClass::at(k).to_string())) break;
    } else {
      // k > m here: 2^k - 2^m = 2^m (2^(k-m) - 1) has odd cofactor.
      if (!record(pow2(m), pow2(k) - pow2(m), DyadicClass::at(k).to_string())) break;
    }
  }

  return report;
}

}  // namespace hyperfield
