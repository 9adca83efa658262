// Exact arithmetic in small finite fields via exp/log tables.
//
// A Field is GF(b^m) where the coefficient field of order b is either the
// prime field GF(p) or another (already built) Field, so towers such as
// GF(4^4) over GF(4) work the same way as GF(2^4) over GF(2).  Elements are
// encoded as mixed-radix integers: the code of an element with coefficient
// vector (c_0, ..., c_{m-1}) over the ground field is sum c_i * b^i.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ooc3d {

bool is_prime(std::uint64_t n);

// q = p^e, p prime, e >= 1.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;

  // Empty when q is not a prime power (or q < 2).
  static std::optional<PrimePower> factor(std::uint64_t q);
};

// Cap on field cardinality; table construction is O(q) space and time.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

class Field {
public:
  using Elem = std::uint32_t;  // code in 0 .. order()-1; 0 is the zero element

  // GF(p) with the least modulus x + c whose root -c generates the
  // multiplicative group.
  static Field prime(std::uint64_t p);

  // GF(b^m) over `ground` of order b, with the least monic primitive
  // modulus of degree m (coefficient words compared highest degree first).
  static Field extension(std::shared_ptr<const Field> ground, unsigned m,
                         std::uint64_t cap = kDefaultFieldCap);

  std::uint64_t characteristic() const { return characteristic_; }
  // Degree over the coefficient field (1 for prime fields).
  unsigned degree() const { return degree_; }
  unsigned degree_over_prime() const { return degree_over_prime_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t group_order() const { return order_ - 1; }
  // Coefficient field; nullptr when this is a prime field.
  const Field* ground() const { return ground_.get(); }
  std::shared_ptr<const Field> ground_ptr() const { return ground_; }

  // Monic modulus over the coefficient field, constant term first,
  // length degree()+1.  The root of the modulus is generator().
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem generator() const { return exp_[1 % exp_.size()]; }

  Elem exp(std::uint64_t i) const { return exp_[i % group_order()]; }
  std::uint64_t log(Elem a) const;  // throws std::domain_error on zero

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem pow(Elem a, std::uint64_t e) const;

  // Coefficient vector over the ground field, length degree().
  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<Elem>& c) const;

private:
  Field() = default;

  std::uint64_t characteristic_ = 0;
  unsigned degree_ = 0;
  unsigned degree_over_prime_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t ground_order_ = 0;
  std::shared_ptr<const Field> ground_;  // null for prime fields
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;  // length order-1
  std::vector<Elem> log_;  // length order; log_[0] is a sentinel
};

// Spec'd entry point: GF(p^m) over the prime field.
Field make_field(std::uint64_t p, unsigned m,
                 std::uint64_t cap = kDefaultFieldCap);

// Least monic primitive polynomial of degree m over the ground field under
// the highest-degree-first coefficient order, returned constant term first
// (length m+1, leading coefficient one).
std::vector<Field::Elem> find_primitive_polynomial(
    const Field& ground, unsigned m, std::uint64_t cap = kDefaultFieldCap);
std::vector<Field::Elem> find_primitive_polynomial(
    std::uint64_t p, unsigned m, std::uint64_t cap = kDefaultFieldCap);

}  // namespace ooc3d
