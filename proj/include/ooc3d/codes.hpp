// Incidence arrays and the four families of ideal 3-D optical orthogonal
// codes built from line orbits (projective and affine) and punctured
// planes.  Every construction is deterministic: codewords are canonical
// orbit representatives, listed in sorted order, and each family's
// cardinality is re-checked against its closed form before returning.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ooc3d/automorphism.hpp"
#include "ooc3d/bigint.hpp"
#include "ooc3d/geometry.hpp"

namespace ooc3d {

// Array dimensions: wavelengths x space x time.  Only the time axis is
// cyclic for correlation purposes.
struct Dims {
  std::uint64_t wavelengths = 1;
  std::uint64_t space = 1;
  std::uint64_t time = 1;

  std::uint64_t product() const;  // throws std::overflow_error past 64 bits
  bool operator==(const Dims&) const = default;
};

struct Pulse {
  std::uint64_t wavelength = 0;
  std::uint64_t space = 0;
  std::uint64_t time = 0;

  auto operator<=>(const Pulse&) const = default;
};

struct Codeword {
  Dims dims;
  std::vector<Pulse> pulses;  // sorted, duplicate-free

  std::uint64_t weight() const { return pulses.size(); }
  bool operator==(const Codeword&) const = default;
};

enum class Family {
  kProjectiveLine,   // line orbits off the line spread of PG(k,q), k odd
  kDSpreadLine,      // line orbits off the d-spread of PG(m(d+1)-1, q)
  kPuncturedPlane,   // plane-minus-spread-line supports in PG(3,q)
  kAffineLine,       // origin-avoiding line orbits of AG(k,q)
};

struct Provenance {
  Family family = Family::kProjectiveLine;
  std::uint64_t q = 0;
  unsigned k = 0;  // geometry dimension (derived for the d-spread family)
  unsigned d = 0;  // d-spread family only
  unsigned m = 0;  // d-spread family only

  bool operator==(const Provenance&) const = default;
};

struct Code {
  Dims dims;
  std::uint64_t weight = 0;
  std::uint64_t lambda_a = 0;  // claimed maximum off-peak autocorrelation
  std::uint64_t lambda_c = 0;  // claimed maximum cross-correlation
  std::vector<Codeword> codewords;
  std::optional<Provenance> provenance;
  std::vector<std::string> warnings;

  std::uint64_t size() const { return codewords.size(); }
};

// Pulse at (i, j, k) iff the index i + j*L + k*S*L is in the pointset;
// indices must be < L*S*T.
Codeword projective_incidence_array(const PointSet& points, std::uint64_t L,
                                    std::uint64_t S, std::uint64_t T);

// Same decomposition over nonzero-point exponents mod q^k - 1 = L*S*T.
Codeword affine_incidence_array(const PointSet& exponents, std::uint64_t L,
                                std::uint64_t S, std::uint64_t T);
// Convenience over a flat; rejects flats touching the origin (it has no
// exponent) or the hyperplane at infinity.
Codeword affine_incidence_array(const AffineFlat& flat, std::uint64_t L,
                                std::uint64_t S, std::uint64_t T);

// Inverse of the incidence maps: sorted index support.
PointSet support_of(const Codeword& cw);

// Largest number of pulses a codeword puts into any one plane of each
// orientation: spatial = fixed space index, wavelength = fixed wavelength
// index, temporal = fixed time index.
struct PlanePulseMaxima {
  std::uint64_t spatial = 0;
  std::uint64_t wavelength = 0;
  std::uint64_t temporal = 0;
};
PlanePulseMaxima plane_pulse_maxima(const Codeword& cw);

struct Limits {
  std::uint64_t max_points = kDefaultMaxPoints;
  std::uint64_t field_cap = kDefaultFieldCap;
};

// Weight q+1 ideal code from full line orbits of PG(k,q), k odd >= 3;
// wavelengths*space must equal theta(k,q)/(q+1) and T = q+1.
Code construct_projective_line_code(std::uint64_t q, unsigned k,
                                    std::uint64_t wavelengths,
                                    std::uint64_t space,
                                    const Limits& limits = {});

// Generalization quotienting by the d-spread of PG(m(d+1)-1, q):
// wavelengths*space = theta(k,q)/theta(d,q), T = theta(d,q), d >= 1, m >= 2.
Code construct_dspread_line_code(std::uint64_t q, unsigned d, unsigned m,
                                 std::uint64_t wavelengths,
                                 std::uint64_t space,
                                 const Limits& limits = {});

// Weight q^2 code on PG(3,q): one punctured plane per line of the line
// spread; wavelengths*space = q^2 + 1, T = q + 1, cross-correlation q - 1.
Code construct_punctured_plane_code(std::uint64_t q, std::uint64_t wavelengths,
                                    std::uint64_t space,
                                    const Limits& limits = {});

// Weight q code from origin-avoiding line orbits of AG(k,q), k >= 2;
// wavelengths*space = theta(k-1,q), T = q - 1 (T = 1 warns).
Code construct_affine_line_code(std::uint64_t q, unsigned k,
                                std::uint64_t wavelengths, std::uint64_t space,
                                const Limits& limits = {});

// Closed-form cardinality of a construction.
BigInt expected_size(const Provenance& prov);

// Stable names used in files and reports: "projective-line",
// "dspread-line", "punctured-plane", "affine-line".
std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

}  // namespace ooc3d
