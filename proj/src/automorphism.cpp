#include "ooc3d/automorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ooc3d {

PointSet shift(const PointSet& a, std::uint64_t s, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  s %= modulus;
  PointSet out;
  out.reserve(a.size());
  for (const std::uint64_t x : a) {
    if (x >= modulus) throw std::invalid_argument("index exceeds the modulus");
    out.push_back(x + s < modulus ? x + s : x + s - modulus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Orbit h_orbit(const PointSet& a, std::uint64_t step, std::uint64_t T,
              std::uint64_t modulus) {
  if (step == 0 || T == 0 || modulus / step != T || modulus % step != 0) {
    throw std::invalid_argument("step * T must equal the modulus");
  }
  Orbit orbit;
  orbit.representative = a;
  orbit.length = T;
  for (std::uint64_t j = 1; j < T; ++j) {
    const auto s = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(j) * step % modulus);
    PointSet image = shift(a, s, modulus);
    if (image == a) {
      orbit.length = j;  // period of the stabilizer
      break;
    }
    if (image < orbit.representative) orbit.representative = std::move(image);
  }
  return orbit;
}

namespace {

std::uint64_t affine_infinite_modulus(unsigned k, std::uint64_t q) {
  if (k < 1) throw std::invalid_argument("affine dimension must be >= 1");
  return theta(k - 1, q);
}

}  // namespace

AffineSpace::AffineSpace(std::uint64_t q, unsigned k, std::uint64_t field_cap)
    : q_(q),
      k_(k),
      inf_mod_(affine_infinite_modulus(k, q)),
      ground_([&] {
        const auto pp = PrimePower::factor(q);
        if (!pp) {
          throw std::invalid_argument(std::to_string(q) +
                                      " is not a prime power");
        }
        return std::make_shared<const Field>(
            make_field(pp->p, pp->e, field_cap));
      }()),
      field_(Field::extension(ground_, k, field_cap)) {}

AffineFlat affine_points_of_line(const AffineSpace& space, Field::Elem a,
                                 Field::Elem d) {
  if (d == 0) throw std::invalid_argument("line direction must be nonzero");
  const Field& f = space.field();
  AffineFlat flat;
  flat.affine_exponents.reserve(space.q());
  for (Field::Elem c = 0; c < space.q(); ++c) {
    const Field::Elem v = f.add(a, f.mul(c, d));
    if (v == 0) {
      flat.contains_origin = true;
    } else {
      flat.affine_exponents.push_back(f.log(v));
    }
  }
  std::sort(flat.affine_exponents.begin(), flat.affine_exponents.end());
  return flat;
}

std::uint64_t infinite_point_of_line(const AffineSpace& space, Field::Elem d) {
  if (d == 0) throw std::invalid_argument("line direction must be nonzero");
  return space.field().log(d) % space.infinite_modulus();
}

OrbitKind classify_affine_flat_orbit(const AffineFlat& flat) {
  const bool meets_affine_part =
      !flat.affine_exponents.empty() || flat.contains_origin;
  if (flat.contains_origin || !meets_affine_part) return OrbitKind::kShort;
  return OrbitKind::kFull;
}

std::vector<AffineFlat> enumerate_affine_lines(const AffineSpace& space,
                                               std::uint64_t max_points) {
  const Field& f = space.field();
  if (f.order() > max_points) {
    throw std::runtime_error("point count " + std::to_string(f.order()) +
                             " exceeds the enumeration cap " +
                             std::to_string(max_points) +
                             "; raise the cap to proceed");
  }
  std::vector<AffineFlat> lines;
  std::vector<Field::Elem> pts(space.q());
  for (std::uint64_t u = 0; u < space.infinite_modulus(); ++u) {
    const Field::Elem d = f.exp(u);
    for (std::uint64_t a = 0; a < f.order(); ++a) {
      Field::Elem least = static_cast<Field::Elem>(a);
      for (Field::Elem c = 0; c < space.q(); ++c) {
        pts[c] = f.add(static_cast<Field::Elem>(a), f.mul(c, d));
        least = std::min(least, pts[c]);
      }
      if (least != a) continue;  // emitted at its least base point
      AffineFlat flat;
      flat.affine_exponents.reserve(space.q());
      for (const Field::Elem v : pts) {
        if (v == 0) {
          flat.contains_origin = true;
        } else {
          flat.affine_exponents.push_back(f.log(v));
        }
      }
      std::sort(flat.affine_exponents.begin(), flat.affine_exponents.end());
      lines.push_back(std::move(flat));
    }
  }
  return lines;
}

}  // namespace ooc3d
