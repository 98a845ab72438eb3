#include "hyperfield/finite_field.hpp"

#include <stdexcept>

namespace hyperfield {

namespace {

using Poly = std::vector<int>;  // coefficients ascending, over F_p

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  const Poly mm = trim(m);
  if (mm.empty()) throw std::logic_error("polynomial modulus is zero");
  while (a.size() >= mm.size()) {
    // mm is monic, so the leading quotient coefficient is just a.back().
    const int c = a.back();
    const std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) {
      int& t = a[i + shift];
      t = ((t - c * mm[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return trim(std::move(out));
}

Poly decode(int code, int p, int len) {
  Poly out(len);
  for (int i = 0; i < len; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return trim(std::move(out));
}

int encode(const Poly& a, int p) {
  int code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

bool divides(const Poly& d, const Poly& a, int p) { return poly_mod(a, d, p).empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
      Poly g = decode(code, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;  // monic
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly find_irreducible(int p, int m) {
  int total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    Poly f = decode(code, p, m);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no monic irreducible polynomial found");  // cannot happen
}

}  // namespace

bool is_prime_power(int n, int* p_out, int* m_out) {
  if (n < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;  // n itself is prime
  int m = 0, rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2 || q > 64) throw std::invalid_argument("finite field size must be in [2, 64]");
  if (!is_prime_power(q, &p_, &m_))
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");

  if (m_ > 1) modulus_ = find_irreducible(p_, m_);

  mul_table_.assign(q_, std::vector<int>(q_, 0));
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (m_ == 1) {
        mul_table_[a][b] = (a * b) % p_;
      } else {
        mul_table_[a][b] = encode(poly_mod(poly_mul(decode(a, p_, m_), decode(b, p_, m_), p_), modulus_, p_), p_);
      }
    }

  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_table_[a][b] == 1) {
        inv_table_[a] = b;
        break;
      }

  for (int g = 1; g < q_; ++g)
    if (order(g) == q_ - 1) {
      generator_ = g;
      break;
    }
}

void FiniteField::check(int a) const {
  if (a < 0 || a >= q_) throw std::out_of_range("field element out of range");
}

int FiniteField::add(int a, int b) const {
  check(a);
  check(b);
  if (m_ == 1) return (a + b) % p_;
  int out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::neg(int a) const {
  check(a);
  if (m_ == 1) return (p_ - a) % p_;
  int out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  check(a);
  check(b);
  return mul_table_[a][b];
}

int FiniteField::inv(int a) const {
  check(a);
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return inv_table_[a];
}

int FiniteField::order(int a) const {
  check(a);
  if (a == 0) throw std::domain_error("order of zero is undefined");
  int acc = a, k = 1;
  while (acc != 1) {
    acc = mul_table_[acc][a];
    ++k;
  }
  return k;
}

}  // namespace hyperfield
