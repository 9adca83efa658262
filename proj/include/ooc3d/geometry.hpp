// The Singer model of PG(k,q): points are residues mod theta(k,q), the
// cyclic Singer group acts by index shift, and flats are materialized as
// sorted index lists only where a construction needs them.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ooc3d/bigint.hpp"
#include "ooc3d/field.hpp"

namespace ooc3d {

// Sorted ascending, duplicate-free index list.
using PointSet = std::vector<std::uint64_t>;

// theta(k,q) = (q^{k+1} - 1)/(q - 1), the point count of PG(k,q).
// The uint64 version throws std::overflow_error if the sum overflows.
std::uint64_t theta(unsigned k, std::uint64_t q);
BigInt theta_big(unsigned k, const BigInt& q);

// Number of (j-1)-flats of PG(n-1,q): the q-binomial coefficient of n and j.
BigInt gaussian_coefficient(unsigned n, unsigned j, std::uint64_t q);

// Lines of PG(k,q) = theta(k)*theta(k-1)/(q+1); equals the q-binomial of
// (k+1, 2).
BigInt num_lines(unsigned k, std::uint64_t q);

struct Flat {
  unsigned dimension = 0;
  PointSet points;

  bool operator==(const Flat&) const = default;
};

struct Spread {
  unsigned flat_dimension = 0;
  std::vector<Flat> elements;
};

// Point-enumeration budget for exhaustive line listing (O(n^2) pairs).
inline constexpr std::uint64_t kDefaultMaxPoints = std::uint64_t{1} << 16;

class ProjectiveSpace {
public:
  // q any prime power; ambient field GF(q^{k+1}) is built over GF(q).
  ProjectiveSpace(std::uint64_t q, unsigned k,
                  std::uint64_t field_cap = kDefaultFieldCap);

  std::uint64_t q() const { return q_; }
  unsigned dim() const { return k_; }
  std::uint64_t num_points() const { return n_; }
  const Field& ambient() const { return ambient_; }
  const Field& ground() const { return *ground_; }

  // Singer index of the projective point spanned by a nonzero element.
  std::uint64_t point_of(Field::Elem a) const;
  Field::Elem element_of(std::uint64_t point) const;

  // Homogeneous coordinates over GF(q) in the polynomial basis, scaled so
  // the lowest nonzero position is 1; length k+1, entries are GF(q) codes.
  std::vector<std::uint64_t> point_coordinates(std::uint64_t point) const;
  std::uint64_t point_index(const std::vector<std::uint64_t>& coords) const;

  // The q+1 points through two distinct points, as a 1-flat.
  Flat line_through(std::uint64_t p, std::uint64_t r) const;

  // Smallest flat containing a nonempty point list.
  Flat span(const PointSet& points) const;

  // The classical d-spread from the Singer-subgroup orbit: cosets
  // {r + j*t : j < theta(d)} with t = theta(k)/theta(d).  Requires
  // (d+1) | (k+1); every element is re-verified to be a d-flat.
  Spread singer_spread(unsigned d) const;

  // All lines, each listed once, in lexicographic order of their sorted
  // point lists.  Throws if num_points() exceeds max_points.
  std::vector<PointSet> enumerate_lines(
      std::uint64_t max_points = kDefaultMaxPoints) const;

private:
  std::uint64_t q_ = 0;
  unsigned k_ = 0;
  std::uint64_t n_ = 0;
  std::shared_ptr<const Field> ground_;
  Field ambient_;
};

}  // namespace ooc3d
