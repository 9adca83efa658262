#include "ooc3d/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ooc3d {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// a has multiplicative order exactly `order` mod m; `factors` are the
// distinct primes of `order`.
bool has_order(std::uint64_t a, std::uint64_t order,
               const std::vector<std::uint64_t>& factors, std::uint64_t m) {
  if (powmod(a, order, m) != 1 % m) return false;
  for (std::uint64_t r : factors) {
    if (powmod(a, order / r, m) == 1 % m) return false;
  }
  return true;
}

// b^m, throwing if the result would exceed `cap`.
std::uint64_t checked_pow(std::uint64_t b, unsigned m, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (r > cap / b) {
      throw std::overflow_error("field cardinality " + std::to_string(b) +
                                "^" + std::to_string(m) +
                                " exceeds the table cap " +
                                std::to_string(cap));
    }
    r *= b;
  }
  return r;
}

using Poly = std::vector<Field::Elem>;  // coefficients over a ground field

// a*b mod f in GF(b)[x]/(f), f monic of degree m, operands of degree < m.
Poly polymul_mod(const Poly& a, const Poly& b, const Poly& f,
                 const Field& ground) {
  const std::size_t m = f.size() - 1;
  Poly prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = ground.add(prod[i + j], ground.mul(a[i], b[j]));
    }
  }
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    const Field::Elem t = prod[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      prod[i - m + j] = ground.sub(prod[i - m + j], ground.mul(t, f[j]));
    }
  }
  prod.resize(m);
  return prod;
}

Poly polypow_mod(Poly base, std::uint64_t e, const Poly& f,
                 const Field& ground) {
  const std::size_t m = f.size() - 1;
  Poly r(m, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = polymul_mod(r, base, f, ground);
    base = polymul_mod(base, base, f, ground);
    e >>= 1;
  }
  return r;
}

bool poly_is_one(const Poly& p) {
  if (p[0] != 1) return false;
  return std::all_of(p.begin() + 1, p.end(),
                     [](Field::Elem c) { return c == 0; });
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> PrimePower::factor(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, e, q};
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (p > kDefaultFieldCap) {
    throw std::overflow_error("prime field order " + std::to_string(p) +
                              " exceeds the table cap");
  }
  const std::uint64_t M = p - 1;
  const auto factors = prime_factors(M);
  // Least constant c with -c a generator; the modulus is x + c.
  std::uint64_t c = 0, g = 0;
  bool found = false;
  for (c = 0; c < p; ++c) {
    g = (p - c) % p;
    if (g == 0) continue;
    if (has_order(g, M, factors, p)) {
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no primitive root found");

  Field f;
  f.characteristic_ = p;
  f.degree_ = 1;
  f.degree_over_prime_ = 1;
  f.order_ = p;
  f.ground_order_ = p;
  f.modulus_ = {static_cast<Elem>(c), 1};
  f.exp_.resize(M);
  f.log_.assign(p, 0);
  std::uint64_t v = 1 % p;
  for (std::uint64_t i = 0; i < f.exp_.size(); ++i) {
    f.exp_[i] = static_cast<Elem>(v);
    f.log_[v] = static_cast<Elem>(i);
    v = v * g % p;
  }
  if (v != 1 % p) throw std::logic_error("primitive root cycle mismatch");
  return f;
}

Field Field::extension(std::shared_ptr<const Field> ground, unsigned m,
                       std::uint64_t cap) {
  if (!ground) throw std::invalid_argument("null ground field");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  const std::uint64_t b = ground->order();
  const std::uint64_t order = checked_pow(b, m, cap);
  const std::uint64_t M = order - 1;

  Field f;
  f.characteristic_ = ground->characteristic();
  f.degree_ = m;
  f.degree_over_prime_ = ground->degree_over_prime() * m;
  f.order_ = order;
  f.ground_order_ = b;
  f.ground_ = ground;
  f.modulus_ = find_primitive_polynomial(*ground, m, cap);

  // exp table by repeated multiplication by the modulus root x:
  // x * sum c_j x^j = sum c_{j-1} x^j - c_{m-1} * (f - x^m).
  f.exp_.resize(M);
  f.log_.assign(order, 0);
  std::vector<Elem> cur(m, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < M; ++i) {
    std::uint64_t code = 0, radix = 1;
    for (unsigned j = 0; j < m; ++j) {
      code += cur[j] * radix;
      radix *= b;
    }
    f.exp_[i] = static_cast<Elem>(code);
    f.log_[code] = static_cast<Elem>(i);
    const Elem carry = cur[m - 1];
    for (unsigned j = m - 1; j > 0; --j) {
      cur[j] = ground->sub(cur[j - 1], ground->mul(carry, f.modulus_[j]));
    }
    cur[0] = ground->neg(ground->mul(carry, f.modulus_[0]));
  }
  std::vector<Elem> unit(m, 0);
  unit[0] = 1;
  if (cur != unit) {
    throw std::logic_error("modulus root does not generate the unit group");
  }
  return f;
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0 || a >= order_) {
    throw std::domain_error("log of zero (or out-of-range element)");
  }
  return log_[a];
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (!ground_) {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % order_);
  }
  std::uint64_t ra = a, rb = b, code = 0, radix = 1;
  for (unsigned j = 0; j < degree_; ++j) {
    const Elem s = ground_->add(static_cast<Elem>(ra % ground_order_),
                                static_cast<Elem>(rb % ground_order_));
    code += s * radix;
    radix *= ground_order_;
    ra /= ground_order_;
    rb /= ground_order_;
  }
  return static_cast<Elem>(code);
}

Field::Elem Field::neg(Elem a) const {
  if (!ground_) return static_cast<Elem>((order_ - a) % order_);
  std::uint64_t ra = a, code = 0, radix = 1;
  for (unsigned j = 0; j < degree_; ++j) {
    code += ground_->neg(static_cast<Elem>(ra % ground_order_)) * radix;
    radix *= ground_order_;
    ra /= ground_order_;
  }
  return static_cast<Elem>(code);
}

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t M = group_order();
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % M];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  const std::uint64_t M = group_order();
  return exp_[(M - log_[a]) % M];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? one() : zero();
  const std::uint64_t M = group_order();
  const auto idx = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(log_[a]) * e % M);
  return exp_[idx];
}

std::vector<Field::Elem> Field::coeffs(Elem a) const {
  std::vector<Elem> out(degree_);
  std::uint64_t r = a;
  for (unsigned j = 0; j < degree_; ++j) {
    out[j] = static_cast<Elem>(r % ground_order_);
    r /= ground_order_;
  }
  return out;
}

Field::Elem Field::from_coeffs(const std::vector<Elem>& c) const {
  if (c.size() != degree_) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  std::uint64_t code = 0, radix = 1;
  for (unsigned j = 0; j < degree_; ++j) {
    if (c[j] >= ground_order_) {
      throw std::invalid_argument("coefficient out of range");
    }
    code += c[j] * radix;
    radix *= ground_order_;
  }
  return static_cast<Elem>(code);
}

Field make_field(std::uint64_t p, unsigned m, std::uint64_t cap) {
  if (m < 1) throw std::invalid_argument("field degree must be >= 1");
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (m == 1) return Field::prime(p);
  auto ground = std::make_shared<const Field>(Field::prime(p));
  return Field::extension(std::move(ground), m, cap);
}

std::vector<Field::Elem> find_primitive_polynomial(const Field& ground,
                                                   unsigned m,
                                                   std::uint64_t cap) {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  const std::uint64_t b = ground.order();
  const std::uint64_t order = checked_pow(b, m, cap);
  const std::uint64_t M = order - 1;
  const auto factors = prime_factors(M);

  // Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 ordered by the coefficient
  // word read from the highest-degree term down, so the constant term varies
  // fastest.  This is the usual "least primitive polynomial" convention.
  Poly c(m, 0);
  while (true) {
    if (c[0] != 0) {  // f(0) != 0 is necessary for x to be a unit
      Poly f = c;
      f.push_back(1);
      Poly x(m, 0);
      if (m == 1) {
        x[0] = ground.neg(c[0]);
      } else {
        x[1] = 1;
      }
      bool primitive = poly_is_one(polypow_mod(x, M, f, ground));
      for (std::uint64_t r : factors) {
        if (!primitive) break;
        if (poly_is_one(polypow_mod(x, M / r, f, ground))) primitive = false;
      }
      if (primitive) return f;
    }
    unsigned j = 0;
    while (true) {
      c[j] = static_cast<Field::Elem>((c[j] + 1) % b);
      if (c[j] != 0) break;
      ++j;
      if (j == m) {
        throw std::logic_error("no primitive polynomial of degree " +
                               std::to_string(m) + " over order " +
                               std::to_string(b));
      }
    }
  }
}

std::vector<Field::Elem> find_primitive_polynomial(std::uint64_t p, unsigned m,
                                                   std::uint64_t cap) {
  const Field ground = Field::prime(p);
  return find_primitive_polynomial(ground, m, cap);
}

}  // namespace ooc3d
