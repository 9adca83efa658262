#include "ooc3d/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ooc3d {
namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("dimension product exceeds 64 bits");
  }
  return r;
}

void require_dims(std::uint64_t L, std::uint64_t S, std::uint64_t T) {
  if (L == 0 || S == 0 || T == 0) {
    throw std::invalid_argument("all dimensions must be positive");
  }
}

// The caller-chosen (wavelengths, space) split must multiply to the
// product the construction mandates.
void require_factorization(std::uint64_t L, std::uint64_t S,
                           std::uint64_t product, const char* what) {
  if (L == 0 || S == 0 || L > product / S || L * S != product) {
    throw std::invalid_argument(
        "wavelengths * space must equal " + std::string(what) + " = " +
        std::to_string(product) + " (got " + std::to_string(L) + " * " +
        std::to_string(S) + ")");
  }
}

Codeword incidence_array(const PointSet& points, std::uint64_t L,
                         std::uint64_t S, std::uint64_t T) {
  require_dims(L, S, T);
  const std::uint64_t M = checked_product(checked_product(L, S), T);
  Codeword cw;
  cw.dims = Dims{L, S, T};
  cw.pulses.reserve(points.size());
  for (const std::uint64_t x : points) {
    if (x >= M) {
      throw std::invalid_argument("index " + std::to_string(x) +
                                  " exceeds the array size " +
                                  std::to_string(M));
    }
    cw.pulses.push_back(Pulse{x % L, (x / L) % S, x / (L * S)});
  }
  std::sort(cw.pulses.begin(), cw.pulses.end());
  const auto dup = std::adjacent_find(cw.pulses.begin(), cw.pulses.end());
  if (dup != cw.pulses.end()) {
    throw std::invalid_argument("duplicate index in pointset");
  }
  return cw;
}

void sort_codewords(std::vector<Codeword>& codewords) {
  std::sort(codewords.begin(), codewords.end(),
            [](const Codeword& a, const Codeword& b) {
              return a.pulses < b.pulses;
            });
}

void check_expected_size(const Code& code) {
  const BigInt want = expected_size(*code.provenance);
  if (BigInt(code.size()) != want) {
    throw std::logic_error("construction produced " +
                           std::to_string(code.size()) +
                           " codewords; closed form gives " + want.str());
  }
}

// Shared core of the two line-orbit families: full orbits of lines not
// contained in any element of the coset d-spread, one canonical
// representative each.
Code line_orbit_code(std::uint64_t q, unsigned k, unsigned d, std::uint64_t L,
                     std::uint64_t S, const Limits& limits, Provenance prov,
                     const char* product_name) {
  const ProjectiveSpace space(q, k, limits.field_cap);
  const std::uint64_t n = space.num_points();
  const std::uint64_t td = theta(d, q);
  if (n % td != 0) throw std::logic_error("spread divisibility violated");
  const std::uint64_t t = n / td;  // spread size; also the mandated L*S
  require_factorization(L, S, t, product_name);

  Code code;
  code.dims = Dims{L, S, td};
  code.weight = q + 1;
  code.lambda_a = 0;
  code.lambda_c = 1;
  code.provenance = prov;

  for (const PointSet& line : space.enumerate_lines(limits.max_points)) {
    const std::uint64_t r = line[0] % t;
    const bool in_spread_element =
        std::all_of(line.begin(), line.end(),
                    [&](std::uint64_t p) { return p % t == r; });
    if (in_spread_element) continue;
    const Orbit orbit = h_orbit(line, t, td, n);
    if (orbit.length != td) {
      throw std::logic_error("line off the spread has a short orbit");
    }
    if (line != orbit.representative) continue;  // one emission per orbit
    code.codewords.push_back(incidence_array(line, L, S, td));
  }
  sort_codewords(code.codewords);
  check_expected_size(code);
  return code;
}

}  // namespace

std::uint64_t Dims::product() const {
  return checked_product(checked_product(wavelengths, space), time);
}

Codeword projective_incidence_array(const PointSet& points, std::uint64_t L,
                                    std::uint64_t S, std::uint64_t T) {
  return incidence_array(points, L, S, T);
}

Codeword affine_incidence_array(const PointSet& exponents, std::uint64_t L,
                                std::uint64_t S, std::uint64_t T) {
  return incidence_array(exponents, L, S, T);
}

Codeword affine_incidence_array(const AffineFlat& flat, std::uint64_t L,
                                std::uint64_t S, std::uint64_t T) {
  if (flat.contains_origin) {
    throw std::invalid_argument(
        "the origin has no exponent and cannot enter an incidence array");
  }
  if (!flat.infinite_points.empty()) {
    throw std::invalid_argument(
        "flats meeting the hyperplane at infinity have no incidence array");
  }
  return incidence_array(flat.affine_exponents, L, S, T);
}

PointSet support_of(const Codeword& cw) {
  PointSet out;
  out.reserve(cw.pulses.size());
  for (const Pulse& p : cw.pulses) {
    out.push_back(p.wavelength + p.space * cw.dims.wavelengths +
                  p.time * cw.dims.wavelengths * cw.dims.space);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlanePulseMaxima plane_pulse_maxima(const Codeword& cw) {
  std::vector<std::uint64_t> per_spatial(cw.dims.space, 0);
  std::vector<std::uint64_t> per_wavelength(cw.dims.wavelengths, 0);
  std::vector<std::uint64_t> per_temporal(cw.dims.time, 0);
  PlanePulseMaxima out;
  for (const Pulse& p : cw.pulses) {
    if (p.wavelength >= cw.dims.wavelengths || p.space >= cw.dims.space ||
        p.time >= cw.dims.time) {
      throw std::invalid_argument("pulse outside the codeword dimensions");
    }
    out.spatial = std::max(out.spatial, ++per_spatial[p.space]);
    out.wavelength = std::max(out.wavelength, ++per_wavelength[p.wavelength]);
    out.temporal = std::max(out.temporal, ++per_temporal[p.time]);
  }
  return out;
}

Code construct_projective_line_code(std::uint64_t q, unsigned k,
                                    std::uint64_t wavelengths,
                                    std::uint64_t space, const Limits& limits) {
  if (k % 2 == 0) {
    throw std::invalid_argument("k must be odd (a line spread needs 2 | k+1)");
  }
  if (k < 3) {
    throw std::invalid_argument(
        "k must be at least 3: for k = 1 every line lies in the spread and "
        "the code is empty");
  }
  return line_orbit_code(q, k, 1, wavelengths, space, limits,
                         Provenance{Family::kProjectiveLine, q, k, 0, 0},
                         "theta(k,q)/(q+1)");
}

Code construct_dspread_line_code(std::uint64_t q, unsigned d, unsigned m,
                                 std::uint64_t wavelengths,
                                 std::uint64_t space, const Limits& limits) {
  if (d < 1) throw std::invalid_argument("flat dimension d must be >= 1");
  if (m < 2) {
    throw std::invalid_argument(
        "m must be at least 2: for m = 1 the spread is the whole space and "
        "the code is empty");
  }
  const unsigned k = m * (d + 1) - 1;
  return line_orbit_code(q, k, d, wavelengths, space, limits,
                         Provenance{Family::kDSpreadLine, q, k, d, m},
                         "theta(k,q)/theta(d,q)");
}

Code construct_punctured_plane_code(std::uint64_t q, std::uint64_t wavelengths,
                                    std::uint64_t space,
                                    const Limits& limits) {
  const ProjectiveSpace geom(q, 3, limits.field_cap);
  const std::uint64_t n = geom.num_points();
  const std::uint64_t t = n / (q + 1);  // q^2 + 1 spread lines
  require_factorization(wavelengths, space, t, "q^2+1");

  Code code;
  code.dims = Dims{wavelengths, space, q + 1};
  code.weight = q * q;
  code.lambda_a = 0;
  code.lambda_c = q - 1;
  code.provenance = Provenance{Family::kPuncturedPlane, q, 3, 0, 0};

  for (const Flat& line : geom.singer_spread(1).elements) {
    // Deterministic plane choice: extend by the least point off the line.
    std::uint64_t off = 0;
    while (std::binary_search(line.points.begin(), line.points.end(), off)) {
      ++off;
    }
    PointSet gens = line.points;
    gens.push_back(off);
    const Flat plane = geom.span(gens);
    if (plane.dimension != 2) {
      throw std::logic_error("extending a line did not give a plane");
    }
    PointSet punctured;
    punctured.reserve(plane.points.size() - line.points.size());
    std::set_difference(plane.points.begin(), plane.points.end(),
                        line.points.begin(), line.points.end(),
                        std::back_inserter(punctured));
    if (punctured.size() != q * q) {
      throw std::logic_error("punctured plane does not have q^2 points");
    }
    code.codewords.push_back(
        incidence_array(punctured, wavelengths, space, q + 1));
  }
  sort_codewords(code.codewords);
  check_expected_size(code);
  return code;
}

Code construct_affine_line_code(std::uint64_t q, unsigned k,
                                std::uint64_t wavelengths, std::uint64_t space,
                                const Limits& limits) {
  if (k < 2) {
    throw std::invalid_argument(
        "k must be at least 2: for k = 1 the only line meets the origin and "
        "the code is empty");
  }
  const AffineSpace geom(q, k, limits.field_cap);
  const std::uint64_t N = geom.num_nonzero_points();
  const std::uint64_t h = geom.infinite_modulus();  // theta(k-1)
  require_factorization(wavelengths, space, h, "theta(k-1,q)");
  const std::uint64_t T = q - 1;

  Code code;
  code.dims = Dims{wavelengths, space, T};
  code.weight = q;
  code.lambda_a = 0;
  code.lambda_c = 1;
  code.provenance = Provenance{Family::kAffineLine, q, k, 0, 0};
  if (T == 1) {
    code.warnings.push_back(
        "time dimension is 1: cyclic time shifts are trivial and the "
        "autocorrelation constraint is vacuous");
  }

  for (const AffineFlat& flat :
       enumerate_affine_lines(geom, limits.max_points)) {
    if (classify_affine_flat_orbit(flat) != OrbitKind::kFull) continue;
    const Orbit orbit = h_orbit(flat.affine_exponents, h, T, N);
    if (orbit.length != T) {
      throw std::logic_error("origin-avoiding line has a short orbit");
    }
    if (flat.affine_exponents != orbit.representative) continue;
    code.codewords.push_back(
        incidence_array(flat.affine_exponents, wavelengths, space, T));
  }
  sort_codewords(code.codewords);
  check_expected_size(code);
  return code;
}

BigInt expected_size(const Provenance& prov) {
  const BigInt Q = prov.q;
  switch (prov.family) {
    case Family::kProjectiveLine: {
      if (prov.k < 3 || prov.k % 2 == 0) {
        throw std::invalid_argument("k must be odd and at least 3");
      }
      const BigInt num =
          Q * theta_big(prov.k, Q) * theta_big(prov.k - 2, Q);
      const BigInt den = (Q + 1) * (Q + 1);
      if (num % den != 0) throw std::logic_error("size formula not integral");
      return num / den;
    }
    case Family::kDSpreadLine: {
      if (prov.d < 1 || prov.m < 2) {
        throw std::invalid_argument("need d >= 1 and m >= 2");
      }
      const unsigned k = prov.m * (prov.d + 1) - 1;
      const BigInt num =
          theta_big(k, Q) * (theta_big(k - 1, Q) - theta_big(prov.d - 1, Q));
      const BigInt den = theta_big(prov.d, Q) * (Q + 1);
      if (num % den != 0) throw std::logic_error("size formula not integral");
      return num / den;
    }
    case Family::kPuncturedPlane:
      return Q * Q + 1;
    case Family::kAffineLine: {
      if (prov.k < 2) throw std::invalid_argument("need k >= 2");
      return theta_big(prov.k - 1, Q) * theta_big(prov.k - 2, Q);
    }
  }
  throw std::invalid_argument("unknown construction");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kProjectiveLine:
      return "projective-line";
    case Family::kDSpreadLine:
      return "dspread-line";
    case Family::kPuncturedPlane:
      return "punctured-plane";
    case Family::kAffineLine:
      return "affine-line";
  }
  throw std::invalid_argument("unknown construction");
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "projective-line") return Family::kProjectiveLine;
  if (name == "dspread-line") return Family::kDSpreadLine;
  if (name == "punctured-plane") return Family::kPuncturedPlane;
  if (name == "affine-line") return Family::kAffineLine;
  return std::nullopt;
}

}  // namespace ooc3d
