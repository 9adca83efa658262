// Acceptance suite: one line per criterion, every comparison exact.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ooc3d/automorphism.hpp"
#include "ooc3d/bigint.hpp"
#include "ooc3d/bounds.hpp"
#include "ooc3d/codes.hpp"
#include "ooc3d/geometry.hpp"
#include "ooc3d/verify.hpp"

using namespace ooc3d;

namespace {

// Collects sub-checks; remembers the first failing one for the report.
struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
};

std::string u64(std::uint64_t v) { return std::to_string(v); }

// --- criterion 1: projective line family ---------------------------------

void projective_line_family(Checker& c) {
  const std::array<std::pair<std::uint64_t, unsigned>, 4> params{
      {{2, 3}, {3, 3}, {2, 5}, {4, 3}}};
  const std::array<std::uint64_t, 4> sizes{10, 30, 210, 68};
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto [q, k] = params[i];
    const std::string tag = "(q=" + u64(q) + ", k=" + u64(k) + ")";
    const std::uint64_t planes = theta(k, q) / (q + 1);
    const Code code = construct_projective_line_code(q, k, planes, 1);

    const BigInt closed_form =
        BigInt(q) * theta(k, q) * theta(k - 2, q) / ((q + 1) * (q + 1));
    c.expect(closed_form == BigInt(sizes[i]),
             "closed form disagrees with the frozen size at " + tag);
    c.expect(BigInt(code.size()) == closed_form,
             "generated size is off the closed form at " + tag);

    const CorrelationProfile p = correlation_profile(code);
    c.expect(p.max_auto == 0, "autocorrelation not zero at " + tag);
    c.expect(p.max_cross == 1, "cross-correlation not one at " + tag);

    c.expect(johnson_ideal_3d(planes, 1, q + 1, code.weight, 1) ==
                 BigInt(code.size()),
             "ideal bound does not meet the size at " + tag);
  }
}

// --- criterion 2: spread quotient family ---------------------------------

void spread_quotient_family(Checker& c) {
  const std::array<std::array<unsigned, 3>, 3> params{
      {{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}};
  const std::array<std::uint64_t, 3> sizes{210, 30, 84};
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto [q, d, m] = params[i];
    const std::string tag =
        "(q=" + u64(q) + ", d=" + u64(d) + ", m=" + u64(m) + ")";
    const unsigned k = m * (d + 1) - 1;
    const std::uint64_t T = theta(d, q);
    const std::uint64_t planes = theta(k, q) / T;
    const Code code = construct_dspread_line_code(q, d, m, planes, 1);
    c.expect(code.size() == sizes[i], "size mismatch at " + tag);

    const CorrelationProfile p = correlation_profile(code);
    c.expect(p.max_auto == 0 && p.max_cross == 1,
             "profile is not (0, 1) at " + tag);

    // Exhaustive cross-check: lines not inside any spread element fall
    // into full orbits whose canonical representatives are exactly the
    // codeword supports.
    const ProjectiveSpace space(q, k);
    const Spread spread = space.singer_spread(d);
    std::set<PointSet> reps;
    std::uint64_t free_lines = 0;
    for (const PointSet& line : space.enumerate_lines()) {
      bool inside = false;
      for (const Flat& el : spread.elements) {
        if (std::includes(el.points.begin(), el.points.end(), line.begin(),
                          line.end())) {
          inside = true;
          break;
        }
      }
      if (inside) continue;
      ++free_lines;
      const Orbit orbit = h_orbit(line, planes, T, theta(k, q));
      c.expect(orbit.length == T, "short orbit off the spread at " + tag);
      reps.insert(orbit.representative);
    }
    c.expect(free_lines == code.size() * T,
             "off-spread line count disagrees at " + tag);
    std::set<PointSet> supports;
    for (const Codeword& cw : code.codewords) supports.insert(support_of(cw));
    c.expect(supports == reps,
             "codeword supports differ from enumerated orbits at " + tag);
  }

  // d = 1 must reproduce the line family exactly.
  const Code special = construct_dspread_line_code(2, 1, 3, 21, 1);
  const Code direct = construct_projective_line_code(2, 5, 21, 1);
  c.expect(special.codewords == direct.codewords,
           "d=1 output differs from the line family at (q=2, m=3)");
}

// --- criterion 3: punctured plane family ---------------------------------

void punctured_plane_family(Checker& c) {
  for (std::uint64_t q : {2, 3, 4}) {
    const std::string tag = "(q=" + u64(q) + ")";
    const std::uint64_t planes = q * q + 1;
    const std::uint64_t T = q + 1;
    const std::uint64_t w = q * q;
    const std::uint64_t lam = q - 1;
    const Code code = construct_punctured_plane_code(q, planes, 1);
    c.expect(code.size() == planes, "size is not q^2+1 at " + tag);

    const CorrelationProfile p = correlation_profile(code);
    c.expect(p.max_auto == 0, "autocorrelation not zero at " + tag);
    c.expect(p.max_cross == lam, "cross-correlation not q-1 at " + tag);

    // Ratio form of the general 3-D bound, evaluated from scratch: the
    // premise w^2 > (LS)T*lam holds with a margin of exactly one.
    const BigInt cells = BigInt(planes) * T;
    const BigInt excess = BigInt(w) * w - cells * lam;
    c.expect(excess == 1, "ratio-bound premise is off at " + tag);
    const BigInt ratio =
        std::min(BigInt(planes), BigInt(planes) * (w - lam) / excess);
    c.expect(ratio == BigInt(code.size()),
             "ratio bound does not meet the size at " + tag);
    c.expect(johnson_3d(planes, 1, T, w, lam) == BigInt(code.size()),
             "general 3-D bound does not meet the size at " + tag);
  }
}

// --- criterion 4: affine line family -------------------------------------

void affine_line_family(Checker& c) {
  const std::array<std::pair<std::uint64_t, unsigned>, 4> params{
      {{3, 2}, {3, 3}, {4, 2}, {5, 2}}};
  const std::array<std::uint64_t, 4> sizes{4, 52, 5, 6};
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto [q, k] = params[i];
    const std::string tag = "(q=" + u64(q) + ", k=" + u64(k) + ")";
    const std::uint64_t planes = theta(k - 1, q);
    const Code code = construct_affine_line_code(q, k, planes, 1);

    c.expect(BigInt(sizes[i]) ==
                 BigInt(theta(k - 1, q)) * theta(k - 2, q),
             "closed form disagrees with the frozen size at " + tag);
    c.expect(code.size() == sizes[i], "size mismatch at " + tag);

    const CorrelationProfile p = correlation_profile(code);
    c.expect(p.max_auto == 0 && p.max_cross == 1,
             "profile is not (0, 1) at " + tag);

    c.expect(johnson_ideal_3d(code.dims.wavelengths, code.dims.space,
                              code.dims.time, code.weight, 1) ==
                 BigInt(code.size()),
             "ideal bound does not meet the size at " + tag);
  }
}

// --- criterion 5: bound consistency grid ---------------------------------

void bound_consistency(Checker& c) {
  for (std::uint64_t L = 1; L <= 6; ++L) {
    for (std::uint64_t S = 1; S <= 6; ++S) {
      for (std::uint64_t T = 2; T <= 5; ++T) {
        for (std::uint64_t w = 2; w <= 6; ++w) {
          for (std::uint64_t lam = 1; lam <= 2; ++lam) {
            if (lam >= w) continue;
            const std::uint64_t n = L * S;
            if (w > n) continue;
            const std::string tag = "(" + u64(L) + "," + u64(S) + "," +
                                    u64(T) + "," + u64(w) + "," + u64(lam) +
                                    ")";

            // The chain form of the T-ary bound, divided by T, is the
            // ideal 3-D bound exactly.
            c.expect(johnson_nonbinary_chain(n, w, lam, T) / T ==
                         johnson_ideal_3d(L, S, T, w, lam),
                     "chain identity fails at " + tag);
            // With the ratio branch included the bound can only drop.
            c.expect(johnson_nonbinary(n, w, lam, T) / T <=
                         johnson_ideal_3d(L, S, T, w, lam),
                     "branch-inclusive bound exceeds the ideal bound at " +
                         tag);

            // Alphabet scale 1: the chain plus the binary ratio branch,
            // recomputed from scratch, is the binary bound.
            BigInt binary_expected = johnson_nonbinary_chain(n, w, lam, 1);
            const BigInt excess = BigInt(w) * w - BigInt(n) * lam;
            if (excess > 0) {
              binary_expected = std::min(
                  binary_expected, BigInt(n) * (w - lam) / excess);
            }
            c.expect(johnson_binary(n, w, lam) == binary_expected,
                     "binary bound differs from its closed form at " + tag);
            c.expect(johnson_nonbinary(n, w, lam, 1) <=
                         johnson_binary(n, w, lam),
                     "scale-1 bound exceeds the binary bound at " + tag);
          }
        }
      }
    }
  }
}

// --- criterion 6: dense correlation oracle -------------------------------

Codeword random_codeword(std::mt19937_64& rng, const Dims& dims) {
  const std::uint64_t cells = dims.wavelengths * dims.space * dims.time;
  const std::uint64_t w = 1 + rng() % std::min<std::uint64_t>(cells, 16);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < w) chosen.insert(rng() % cells);
  Codeword cw;
  cw.dims = dims;
  for (std::uint64_t cell : chosen) {
    cw.pulses.push_back(Pulse{cell % dims.wavelengths,
                              (cell / dims.wavelengths) % dims.space,
                              cell / (dims.wavelengths * dims.space)});
  }
  std::sort(cw.pulses.begin(), cw.pulses.end());
  return cw;
}

std::vector<std::uint8_t> dense(const Codeword& cw) {
  std::vector<std::uint8_t> a(
      cw.dims.wavelengths * cw.dims.space * cw.dims.time, 0);
  for (const Pulse& p : cw.pulses) {
    a[(p.wavelength * cw.dims.space + p.space) * cw.dims.time + p.time] = 1;
  }
  return a;
}

std::uint64_t dense_overlap_at(const std::vector<std::uint8_t>& a,
                               const std::vector<std::uint8_t>& b,
                               const Dims& d, std::uint64_t t) {
  std::uint64_t count = 0;
  for (std::uint64_t wl = 0; wl < d.wavelengths; ++wl) {
    for (std::uint64_t s = 0; s < d.space; ++s) {
      const std::size_t base =
          static_cast<std::size_t>((wl * d.space + s) * d.time);
      for (std::uint64_t tau = 0; tau < d.time; ++tau) {
        count += a[base + tau] & b[base + (tau + t) % d.time];
      }
    }
  }
  return count;
}

void dense_oracle(Checker& c) {
  std::mt19937_64 rng(424243);
  for (int trial = 0; trial < 200; ++trial) {
    const Dims dims{1 + rng() % 8, 1 + rng() % 8, 1 + rng() % 64};
    const Codeword x = random_codeword(rng, dims);
    const Codeword y = random_codeword(rng, dims);
    const std::vector<std::uint8_t> dx = dense(x);
    const std::vector<std::uint8_t> dy = dense(y);

    std::uint64_t auto_best = 0;
    for (std::uint64_t t = 1; t < dims.time; ++t) {
      auto_best = std::max(auto_best, dense_overlap_at(dx, dx, dims, t));
    }
    std::uint64_t cross_best = 0;
    for (std::uint64_t t = 0; t < dims.time; ++t) {
      cross_best = std::max(cross_best, dense_overlap_at(dx, dy, dims, t));
    }
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(autocorrelation(x) == auto_best,
             "autocorrelation disagrees with the dense oracle at " + tag);
    c.expect(cross_correlation(x, y) == cross_best,
             "cross-correlation disagrees with the dense oracle at " + tag);
  }
}

// --- criterion 7: structural properties ----------------------------------

void structural_properties(Checker& c) {
  const std::array<std::array<unsigned, 3>, 4> spreads{
      {{3, 2, 1}, {3, 3, 1}, {5, 2, 1}, {5, 2, 2}}};
  for (const auto& [k, q, d] : spreads) {
    const std::string tag =
        "(k=" + u64(k) + ", q=" + u64(q) + ", d=" + u64(d) + ")";
    const ProjectiveSpace space(q, k);
    const Spread spread = space.singer_spread(d);
    c.expect(spread.flat_dimension == d, "wrong flat dimension at " + tag);
    c.expect(spread.elements.size() == theta(k, q) / theta(d, q),
             "wrong element count at " + tag);
    std::vector<std::uint64_t> covered;
    for (const Flat& el : spread.elements) {
      c.expect(el.points.size() == theta(d, q),
               "element has the wrong cardinality at " + tag);
      const Flat hull = space.span(el.points);
      c.expect(hull.dimension == d && hull.points == el.points,
               "element is not a d-flat at " + tag);
      covered.insert(covered.end(), el.points.begin(), el.points.end());
    }
    std::sort(covered.begin(), covered.end());
    c.expect(std::adjacent_find(covered.begin(), covered.end()) ==
                 covered.end(),
             "spread elements overlap at " + tag);
    c.expect(covered.size() == theta(k, q) &&
                 covered.front() == 0 && covered.back() == theta(k, q) - 1,
             "spread misses points at " + tag);
  }

  std::mt19937_64 rng(997);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t L = 1 + rng() % 5;
    const std::uint64_t S = 1 + rng() % 5;
    const std::uint64_t T = 1 + rng() % 6;
    const std::uint64_t M = L * S * T;
    PointSet a;
    for (std::uint64_t x = 0; x < M; ++x) {
      if (rng() & 1) a.push_back(x);
    }
    if (a.empty()) a.push_back(rng() % M);
    const std::string tag = "trial " + std::to_string(trial);

    const Codeword cw = projective_incidence_array(a, L, S, T);
    c.expect(support_of(cw) == a, "incidence round trip fails at " + tag);

    const std::uint64_t t = rng() % T;
    c.expect(projective_incidence_array(shift(a, L * S * t, M), L, S, T) ==
                 temporal_shift(cw, t),
             "temporal equivariance fails at " + tag);

    const Orbit once = h_orbit(a, L * S, T, M);
    const Orbit twice = h_orbit(once.representative, L * S, T, M);
    c.expect(twice.representative == once.representative &&
                 twice.length == once.length,
             "canonical representative is not idempotent at " + tag);
  }
}

int run_criterion(int index, const char* label, void (*fn)(Checker&)) {
  Checker c;
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index << ": "
            << label;
  if (!c.ok) std::cout << " (" << c.detail << ")";
  std::cout << "\n";
  return c.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(
      1, "projective line family sizes, profiles, and ideal-bound optimality",
      projective_line_family);
  failures += run_criterion(
      2, "spread quotient family sizes, enumeration cross-check, and d=1 "
         "agreement",
      spread_quotient_family);
  failures += run_criterion(
      3, "punctured plane family profiles and ratio-bound optimality",
      punctured_plane_family);
  failures += run_criterion(
      4, "affine line family sizes, profiles, and ideal-bound optimality",
      affine_line_family);
  failures += run_criterion(5, "bound consistency across the parameter grid",
                            bound_consistency);
  failures += run_criterion(
      6, "sparse correlation equals the dense oracle on random pairs",
      dense_oracle);
  failures += run_criterion(
      7, "spread partitions, incidence round-trips, and canonical "
         "representatives",
      structural_properties);
  return failures == 0 ? 0 : 1;
}
