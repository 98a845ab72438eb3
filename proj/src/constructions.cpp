#include "hyperfield/constructions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "hyperfield/finite_field.hpp"

namespace hyperfield {

PhiMap::PhiMap(std::vector<int> raw_labels) {
  image.assign(raw_labels.size(), -1);
  std::map<int, int> relabel;
  for (std::size_t x = 1; x < raw_labels.size(); ++x) {
    if (raw_labels[x] < 0) throw std::invalid_argument("phi must be total on nonzero elements");
    auto [it, fresh] = relabel.emplace(raw_labels[x], image_size);
    if (fresh) ++image_size;
    image[x] = it->second;
  }
}

int PhiMap::of(elem_t x) const {
  if (x <= 0 || x >= static_cast<int>(image.size()))
    throw std::out_of_range("phi is defined on nonzero elements only");
  return image[x];
}

ESet PhiMap::fiber(int image_id) const {
  ESet out;
  for (std::size_t x = 1; x < image.size(); ++x)
    if (image[x] == image_id) out.insert(static_cast<elem_t>(x));
  return out;
}

FiniteHyperfield build_krasner() {
  std::vector<std::vector<elem_t>> mul = {{0, 0}, {0, 1}};
  std::vector<std::vector<ESet>> add(2, std::vector<ESet>(2));
  add[0][0] = ESet::single(0);
  add[0][1] = add[1][0] = ESet::single(1);
  add[1][1] = ESet::from_mask(0b11);
  return FiniteHyperfield("krasner", {"0", "1"}, 1, std::move(mul), std::move(add));
}

FiniteHyperfield build_sign() {
  // index 1 = 1, index 2 = -1
  std::vector<std::vector<elem_t>> mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  std::vector<std::vector<ESet>> add(3, std::vector<ESet>(3));
  for (elem_t x = 0; x < 3; ++x) add[0][x] = add[x][0] = ESet::single(x);
  add[1][1] = ESet::single(1);
  add[2][2] = ESet::single(2);
  add[1][2] = add[2][1] = ESet::full(3);
  return FiniteHyperfield("sign", {"0", "1", "-1"}, 1, std::move(mul), std::move(add));
}

namespace {

std::string group_desc(const AbelianGroup& G) {
  std::string out;
  for (std::size_t i = 0; i < G.factors().size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(G.factors()[i]);
  }
  return out;
}

}  // namespace

MassourosField build_FG(const AbelianGroup& G) {
  if (G.order() < 3)
    throw std::invalid_argument("F_G construction needs |G| >= 3 so that |phi(G)| >= 3 is reachable");
  const int n = G.order() + 1;
  std::vector<std::string> names(n);
  names[0] = "0";
  for (int g = 0; g < G.order(); ++g) names[g + 1] = G.elem_name(g);

  std::vector<std::vector<elem_t>> mul(n, std::vector<elem_t>(n, 0));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) mul[a + 1][b + 1] = G.op(a, b) + 1;

  std::vector<std::vector<ESet>> add(n, std::vector<ESet>(n));
  for (elem_t x = 0; x < n; ++x) add[0][x] = add[x][0] = ESet::single(x);
  const ESet full = ESet::full(n);
  for (elem_t x = 1; x < n; ++x)
    for (elem_t y = 1; y < n; ++y) {
      if (x == y) {
        ESet s = full;
        s.erase(x);
        add[x][y] = s;
      } else {
        ESet s;
        s.insert(x);
        s.insert(y);
        add[x][y] = s;
      }
    }

  FiniteHyperfield F("fg(" + group_desc(G) + ")", std::move(names), G.identity() + 1, std::move(mul),
                     std::move(add));
  std::vector<int> labels(n, -1);
  for (elem_t x = 1; x < n; ++x) labels[x] = x - 1;  // identity homomorphism
  return {std::move(F), PhiMap(std::move(labels))};
}

MassourosField build_massouros_original(const AbelianGroup& K) {
  if (K.order() < 3) throw std::invalid_argument("the direct-product construction needs |K| >= 3");
  const int kn = K.order();
  const int n = 2 * kn + 1;
  // index of (k, s): 1 + 2k for s = +1, 2 + 2k for s = -1
  auto idx = [](int k, int s) { return 1 + 2 * k + (s < 0 ? 1 : 0); };

  std::vector<std::string> names(n);
  names[0] = "0";
  for (int k = 0; k < kn; ++k) {
    const std::string base = K.elem_name(k, 'a');
    names[idx(k, +1)] = base;
    names[idx(k, -1)] = "-" + base;
  }

  std::vector<std::vector<elem_t>> mul(n, std::vector<elem_t>(n, 0));
  for (int k = 0; k < kn; ++k)
    for (int s : {+1, -1})
      for (int k2 = 0; k2 < kn; ++k2)
        for (int s2 : {+1, -1}) mul[idx(k, s)][idx(k2, s2)] = idx(K.op(k, k2), s * s2);

  const ESet carrier = ESet::full(n);
  std::vector<std::vector<ESet>> add(n, std::vector<ESet>(n));
  for (elem_t x = 0; x < n; ++x) add[0][x] = add[x][0] = ESet::single(x);
  for (int k = 0; k < kn; ++k)
    for (int s : {+1, -1})
      for (int k2 = 0; k2 < kn; ++k2)
        for (int s2 : {+1, -1}) {
          const elem_t x = idx(k, s), y = idx(k2, s2);
          if (k == k2) {
            ESet s_out = carrier;  // L minus the pair, with 0 only for opposite signs
            s_out.erase(idx(k, +1));
            s_out.erase(idx(k, -1));
            if (s == s2) s_out.erase(0);
            add[x][y] = s_out;
          } else {
            ESet s_out;
            s_out.insert(idx(k, +1));
            s_out.insert(idx(k, -1));
            s_out.insert(idx(k2, +1));
            s_out.insert(idx(k2, -1));
            add[x][y] = s_out;
          }
        }

  const std::string fname = (kn == 3 && K.num_factors() == 1) ? "m7" : "massouros(" + group_desc(K) + ")";
  FiniteHyperfield F(fname, std::move(names), idx(K.identity(), +1), std::move(mul), std::move(add));
  std::vector<int> labels(n, -1);
  for (int k = 0; k < kn; ++k) {
    labels[idx(k, +1)] = k;  // projection onto K
    labels[idx(k, -1)] = k;
  }
  return {std::move(F), PhiMap(std::move(labels))};
}

FiniteHyperfield build_nakassis(const AbelianGroup& G) {
  if (G.order() <= 3) throw std::invalid_argument("the Nakassis construction needs a group with more than 3 elements");
  const int n = G.order() + 1;
  std::vector<std::string> names(n);
  names[0] = "0";
  for (int g = 0; g < G.order(); ++g) names[g + 1] = G.elem_name(g);

  std::vector<std::vector<elem_t>> mul(n, std::vector<elem_t>(n, 0));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) mul[a + 1][b + 1] = G.op(a, b) + 1;

  std::vector<std::vector<ESet>> add(n, std::vector<ESet>(n));
  for (elem_t x = 0; x < n; ++x) add[0][x] = add[x][0] = ESet::single(x);
  const ESet full = ESet::full(n);
  for (elem_t x = 1; x < n; ++x)
    for (elem_t y = 1; y < n; ++y) {
      if (x == y) {
        ESet s;
        s.insert(0);
        s.insert(x);
        add[x][y] = s;
      } else {
        ESet s = full;
        s.erase(0);
        s.erase(x);
        s.erase(y);
        add[x][y] = s;
      }
    }

  return FiniteHyperfield("nakassis(" + group_desc(G) + ")", std::move(names), G.identity() + 1,
                          std::move(mul), std::move(add));
}

FiniteHyperfield build_quotient(int q, int d) {
  const FiniteField F(q);
  if (d < 1 || (q - 1) % d != 0)
    throw std::invalid_argument("subgroup order " + std::to_string(d) + " does not divide " + std::to_string(q - 1));

  // The multiplicative group is cyclic, so the order-d subgroup is exactly
  // the solutions of x^d = 1.
  std::vector<int> subgroup;
  for (int x = 1; x < q; ++x) {
    int acc = 1;
    for (int i = 0; i < d; ++i) acc = F.mul(acc, x);
    if (acc == 1) subgroup.push_back(x);
  }
  if (static_cast<int>(subgroup.size()) != d) throw std::logic_error("subgroup extraction failed");

  // Orbit classes, labeled in order of least representative.
  std::vector<int> class_of(q, -1);
  std::vector<int> rep;  // class id -> least representative
  class_of[0] = 0;
  rep.push_back(0);
  for (int x = 1; x < q; ++x) {
    if (class_of[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int g : subgroup) class_of[F.mul(x, g)] = id;
  }
  const int n = static_cast<int>(rep.size());

  std::vector<std::string> names(n);
  for (int c = 0; c < n; ++c) names[c] = "[" + F.elem_name(rep[c]) + "]";

  std::vector<std::vector<elem_t>> mul(n, std::vector<elem_t>(n));
  std::vector<std::vector<ESet>> add(n, std::vector<ESet>(n));
  for (int ca = 0; ca < n; ++ca)
    for (int cb = 0; cb < n; ++cb) {
      mul[ca][cb] = class_of[F.mul(rep[ca], rep[cb])];
      ESet s;
      for (int g1 : subgroup)
        for (int g2 : subgroup) s.insert(class_of[F.add(F.mul(rep[ca], g1), F.mul(rep[cb], g2))]);
      add[ca][cb] = s;
    }

  return FiniteHyperfield("quotient(" + std::to_string(q) + "," + std::to_string(d) + ")", std::move(names),
                          class_of[1], std::move(mul), std::move(add));
}

CheckReport verify_massouros(const FiniteHyperfield& F, const PhiMap& phi) {
  CheckReport report;
  const int n = F.size();

  if (static_cast<int>(phi.image.size()) != n)
    throw std::invalid_argument("phi map does not match the carrier size");

  {
    // phi is multiplicative iff the fiber of phi(1) is a subgroup whose cosets
    // are exactly the fibers.
    bool ok = true;
    std::string witness;
    const int one_img = phi.of(F.one());
    const ESet kernel = phi.fiber(one_img);
    for (std::uint64_t m = kernel.mask(); m != 0 && ok; m &= m - 1) {
      const elem_t a = __builtin_ctzll(m);
      for (std::uint64_t m2 = kernel.mask(); m2 != 0; m2 &= m2 - 1) {
        const elem_t b = __builtin_ctzll(m2);
        if (!kernel.contains(F.mul(a, b))) {
          ok = false;
          witness = "fiber of phi(1) is not closed under multiplication at " + F.elem_name(a) + "*" + F.elem_name(b);
          break;
        }
      }
    }
    for (elem_t x = 1; x < n && ok; ++x) {
      const ESet coset = F.scale_set(x, kernel);
      if (coset != phi.fiber(phi.of(x))) {
        ok = false;
        witness = "fiber of phi(" + F.elem_name(x) + ") is not a coset of the phi(1)-fiber";
      }
    }
    report.add("phi-multiplicative", ok, witness);
  }

  report.add("image-size", phi.image_size >= 3,
             phi.image_size >= 3 ? "" : "|phi(G)| = " + std::to_string(phi.image_size));

  {
    bool ok = true;
    std::string witness;
    for (elem_t x = 1; x < n && ok; ++x) {
      if (!F.has_neg(x)) {
        ok = false;
        witness = F.elem_name(x) + " has no unique negative";
        break;
      }
      if (phi.of(F.neg(x)) != phi.of(x)) {
        ok = false;
        witness = "phi(-" + F.elem_name(x) + ") != phi(" + F.elem_name(x) + ")";
      }
    }
    report.add("phi-negation", ok, witness);
  }

  ESet nonzero = F.carrier();
  nonzero.erase(0);

  {
    bool ok = true;
    std::string witness;
    for (elem_t x = 1; x < n && ok; ++x)
      for (elem_t y = 1; y < n; ++y) {
        if (phi.of(x) != phi.of(y)) continue;
        ESet lower = nonzero;
        for (std::uint64_t m = phi.fiber(phi.of(x)).mask(); m != 0; m &= m - 1)
          lower.erase(__builtin_ctzll(m));
        if (!F.hadd(x, y).contains_all(lower)) {
          ok = false;
          witness = F.elem_name(x) + " + " + F.elem_name(y) + " = " + F.set_to_string(F.hadd(x, y)) +
                    " misses part of " + F.set_to_string(lower);
          break;
        }
      }
    report.add("equal-image-sums", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (elem_t x = 1; x < n && ok; ++x)
      for (elem_t y = 1; y < n; ++y) {
        if (phi.of(x) == phi.of(y)) continue;
        const ESet lower = phi.fiber(phi.of(x)) | phi.fiber(phi.of(y));
        if (!F.hadd(x, y).contains_all(lower)) {
          ok = false;
          witness = F.elem_name(x) + " + " + F.elem_name(y) + " = " + F.set_to_string(F.hadd(x, y)) +
                    " misses part of " + F.set_to_string(lower);
          break;
        }
      }
    report.add("distinct-image-sums", ok, witness);
  }

  return report;
}

CheckReport verify_large_sums(const MassourosField& M) {
  const FiniteHyperfield& F = M.field;
  const int n = F.size();
  CheckReport report;
  bool ok = true;
  std::string witness;
  const ESet carrier = F.carrier();
  for (elem_t x = 1; x < n && ok; ++x)
    for (elem_t y = 1; y < n && ok; ++y) {
      if (M.phi.of(x) != M.phi.of(y)) continue;
      const ESet xy = F.hadd(x, y);
      for (elem_t z = 1; z < n; ++z) {
        if (M.phi.of(z) == M.phi.of(x)) continue;
        if (F.set_add(xy, ESet::single(z)) != carrier) {
          ok = false;
          witness = F.elem_name(x) + " + " + F.elem_name(y) + " + " + F.elem_name(z) + " = " +
                    F.set_to_string(F.set_add(xy, ESet::single(z)));
          break;
        }
      }
    }
  report.add("large-sums", ok, witness);
  return report;
}

std::string NakassisTriplesReport::to_string() const {
  std::ostringstream os;
  if (!applicable) {
    os << "triple-sums: not applicable (needs carrier size >= 6)\n";
    for (const auto& line : observed_sums) os << "  observed " << line << '\n';
  } else {
    os << "triple-sums: " << (passed ? "PASS" : "FAIL");
    if (!passed) os << "  [" << witness << "]";
    os << '\n';
  }
  return os.str();
}

NakassisTriplesReport verify_nakassis_triples(const FiniteHyperfield& F) {
  NakassisTriplesReport report;
  const int n = F.size();
  report.applicable = n >= 6;
  if (!report.applicable) {
    for (elem_t x = 1; x < n; ++x)
      for (elem_t y = x + 1; y < n; ++y)
        for (elem_t z = y + 1; z < n; ++z) {
          const ESet sum = F.set_add(F.hadd(x, y), ESet::single(z));
          report.observed_sums.push_back(F.elem_name(x) + " + " + F.elem_name(y) + " + " + F.elem_name(z) +
                                         " = " + F.set_to_string(sum));
        }
    return report;
  }
  report.passed = true;
  const ESet carrier = F.carrier();
  for (elem_t x = 1; x < n && report.passed; ++x)
    for (elem_t y = x + 1; y < n && report.passed; ++y)
      for (elem_t z = y + 1; z < n; ++z) {
        const ESet sum = F.set_add(F.hadd(x, y), ESet::single(z));
        if (sum != carrier) {
          report.passed = false;
          report.witness = F.elem_name(x) + " + " + F.elem_name(y) + " + " + F.elem_name(z) + " = " +
                           F.set_to_string(sum);
          break;
        }
      }
  return report;
}

}  // namespace hyperfield
