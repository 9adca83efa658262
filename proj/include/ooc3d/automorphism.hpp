// Orbit machinery for the cyclic index actions: the Singer shift on
// PG(k,q) point indices, the affine shift on nonzero-point exponents of
// AG(k,q), and the order-T subgroups both constructions quotient by.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ooc3d/field.hpp"
#include "ooc3d/geometry.hpp"

namespace ooc3d {

// (x + s) mod modulus applied to every index, re-sorted.
PointSet shift(const PointSet& a, std::uint64_t s, std::uint64_t modulus);

struct Orbit {
  PointSet representative;  // lexicographically least image
  std::uint64_t length = 0;
};

// Orbit of a pointset under the order-T subgroup generated by the
// step-index shift.  Requires step * T = modulus.
Orbit h_orbit(const PointSet& a, std::uint64_t step, std::uint64_t T,
              std::uint64_t modulus);

// AG(k,q) with nonzero points identified with exponents of a fixed
// generator of GF(q^k)*; the origin is a separate sentinel with no
// exponent.  Parallel classes of lines correspond to the theta(k-1,q)
// points of the hyperplane at infinity.
class AffineSpace {
public:
  AffineSpace(std::uint64_t q, unsigned k,
              std::uint64_t field_cap = kDefaultFieldCap);

  std::uint64_t q() const { return q_; }
  unsigned dim() const { return k_; }
  const Field& field() const { return field_; }
  const Field& ground() const { return *ground_; }
  // N = q^k - 1, the modulus of the exponent action.
  std::uint64_t num_nonzero_points() const { return field_.group_order(); }
  std::uint64_t infinite_modulus() const { return inf_mod_; }

private:
  std::uint64_t q_ = 0;
  unsigned k_ = 0;
  std::uint64_t inf_mod_ = 0;
  std::shared_ptr<const Field> ground_;
  Field field_;
};

// A flat of the projective closure of AG(k,q), split into its affine
// exponents, an origin flag, and its points on the hyperplane at
// infinity (indices mod theta(k-1,q)).
struct AffineFlat {
  PointSet affine_exponents;
  bool contains_origin = false;
  PointSet infinite_points;

  bool operator==(const AffineFlat&) const = default;
};

// The q affine points {a + c*d : c in GF(q)} of the line through a with
// direction d != 0.  The result's infinite part is empty: the affine
// line itself contains no infinite point.
AffineFlat affine_points_of_line(const AffineSpace& space, Field::Elem a,
                                 Field::Elem d);

// Index of the parallel class of direction d on the hyperplane at
// infinity: log(d) mod theta(k-1,q).
std::uint64_t infinite_point_of_line(const AffineSpace& space, Field::Elem d);

enum class OrbitKind { kFull, kShort };

// Full orbit under the cyclic affine action iff the flat avoids the
// origin and is not contained in the hyperplane at infinity.
OrbitKind classify_affine_flat_orbit(const AffineFlat& flat);

// Every affine line of AG(k,q), each listed once, deterministically
// ordered by (parallel class, least member element code).  Throws if q^k
// exceeds max_points.
std::vector<AffineFlat> enumerate_affine_lines(
    const AffineSpace& space, std::uint64_t max_points = kDefaultMaxPoints);

}  // namespace ooc3d
