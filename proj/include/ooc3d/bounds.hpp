#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ooc3d/bigint.hpp"
#include "ooc3d/codes.hpp"

namespace ooc3d {

// Nested floor chain, outermost level first:
//   floor(n0 * floor(n1 * ... floor(nk / dk) ... / d1) / d0).
// An empty chain evaluates to 1. Numerators must be nonnegative and
// denominators positive.
BigInt nested_floor(const std::vector<std::pair<BigInt, BigInt>>& levels);

// Upper bounds on A(n, w, lambda), the maximum size of a binary
// constant-weight-w code of length n whose pairwise intersections (and
// cyclic self-intersections, in the correlation setting) stay <= lambda.
// Preconditions for all of them: 1 <= w <= n and lambda < w.

// Johnson bound: the nested-floor chain over factors (n-i)/(w-i) for
// i = 0..lambda, combined with floor(n(w-lambda)/(w^2 - n*lambda)) when
// w^2 - n*lambda > 0; returns the smaller of the applicable values.
BigInt johnson_binary(std::uint64_t n, std::uint64_t w, std::uint64_t lambda);

// Agrell bound: A(n, w, lambda) <= n, applicable exactly when
// 0 < w^2 - n*lambda <= w - lambda.  Empty when inapplicable.
std::optional<BigInt> agrell_bound(std::uint64_t n, std::uint64_t w,
                                   std::uint64_t lambda);

// Svanstrom shortening recursion for constant-weight codes over an
// alphabet of size m + 1 containing zero:
//   A(n, w, lambda) <= floor(m*n/w * A(n-1, w-1, lambda-1)),
// with base case A(n, w, 0) = m * floor(n/w).  Requires m >= 1.
BigInt svanstrom_bound(std::uint64_t n, std::uint64_t w, std::uint64_t lambda,
                       std::uint64_t m);

// The nested-chain part of the non-binary Johnson bound alone: factors
// m(n-i)/(w-i) for i = 0..lambda.  This is the quantity the ideal 3-D
// bound factors through (dividing the outer level by T commutes with the
// floors), so chain(L*S, w, lambda, T) / T == johnson_ideal_3d exactly.
BigInt johnson_nonbinary_chain(std::uint64_t n, std::uint64_t w,
                               std::uint64_t lambda, std::uint64_t m);

// Non-binary Johnson bound over an alphabet of size m + 1: the chain
// above, combined with min{mn, floor(mn(w-lambda) / (w^2 - mn*lambda))}
// when w^2 > mn*lambda; minimum of the applicable values.  At m = 1 the
// chain part matches johnson_binary's chain, but the mn cap in the ratio
// branch can bite where the binary ratio does not, so the full values can
// drop below johnson_binary (first case: n = 12, w = 5, lambda = 2).
BigInt johnson_nonbinary(std::uint64_t n, std::uint64_t w,
                         std::uint64_t lambda, std::uint64_t m);

// Bounds on the size of an (L x S x T, w, lambda) 3-D code.  All require
// positive dimensions, 1 <= w, lambda < w.

// General 3-D Johnson bound:
//   floor(LS/w * floor((LST-1)/(w-1) * ... floor((LST-lambda)/(w-lambda)))),
// combined with min{LS, floor(LS(w-lambda)/(w^2 - LST*lambda))} when
// w^2 > LST*lambda; minimum of the applicable values.  Needs w <= LST.
BigInt johnson_3d(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                  std::uint64_t w, std::uint64_t lambda);

// For codes with zero autocorrelation (at most one pulse per
// wavelength/space cell, so w <= LS):
//   floor(LS/w * floor(T(LS-1)/(w-1) * ... floor(T(LS-lambda)/(w-lambda)))).
BigInt johnson_ideal_3d(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                        std::uint64_t w, std::uint64_t lambda_c);

// For zero-autocorrelation codes with at most one pulse per spatial plane
// (fixed space index; requires w <= S):
//   floor(1/T * floor(LST/w * floor(LT(S-1)/(w-1) * ...
//         floor(LT(S-lambda)/(w-lambda)))))
BigInt johnson_amopp(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda);

// Same with wavelength planes (fixed wavelength index; w <= L): inner
// factors ST(L-i)/(w-i).
BigInt johnson_amopw(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda);

// Same with temporal planes (fixed time index; w <= T): inner factors
// LS(T-i)/(w-i).
BigInt johnson_amopt(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda);

// Capacity L^lambda * T^(lambda-1) of single-pulse-per-spatial-plane
// codes (weight exactly S).  Reported alongside johnson_amopp for
// comparison; requires lambda >= 1.
BigInt spp_capacity(std::uint64_t L, std::uint64_t T, std::uint64_t lambda);

// One evaluated bound in a report.  `value` is present whenever the bound
// could be computed, even for rows excluded from the verdict; `reason`
// says why an entry does not count toward the optimum.
struct BoundEntry {
  std::string name;
  bool applicable = false;
  std::optional<BigInt> value;
  std::string reason;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  std::optional<BigInt> best;  // minimum over applicable entries
  std::string best_name;       // entry attaining `best`
  std::optional<BigInt> size;  // code size the verdict refers to
  bool j_optimal = false;      // size present and equal to best
};

// Structural facts a bound report is conditioned on.  The per-plane flags
// mean: no codeword puts two pulses into one plane of that orientation.
struct BoundInputs {
  Dims dims;
  std::uint64_t weight = 0;
  std::uint64_t lambda_a = 0;
  std::uint64_t lambda_c = 0;
  bool one_per_spatial = false;     // at most one pulse per space index
  bool one_per_wavelength = false;  // at most one pulse per wavelength index
  bool one_per_temporal = false;    // at most one pulse per time index
};

// Evaluates every bound whose hypotheses the inputs satisfy: the general
// 3-D bound always (with lambda = max(lambda_a, lambda_c)); the ideal
// bound when lambda_a = 0; the per-plane bounds when lambda_a = 0 and the
// matching flag holds; the single-pulse capacity as an informational row
// when weight = space and the spatial flag holds.  `best` is the minimum
// applicable value and the verdict compares `size` against it.
BoundReport evaluate_bounds(const BoundInputs& inputs,
                            std::optional<BigInt> size);

// Report for a constructed code: claimed correlations, measured per-plane
// structure, size = number of codewords.
BoundReport optimality_report(const Code& code);

// Code classes selectable by name, for reports on bare parameters
// ("general", "ideal", "amopp", "amopw", "amopt", "spp").  All but
// general assert zero autocorrelation; the last four add the per-plane
// property of the matching bound, with spp additionally requiring
// weight = space.
enum class CodeClass { kGeneral, kIdeal, kAmopp, kAmopw, kAmopt, kSpp };

std::string code_class_name(CodeClass cls);
std::optional<CodeClass> code_class_from_name(const std::string& name);

// Report for bare parameters: lambda is the cross-correlation budget (and
// also the autocorrelation budget for the general class).
BoundReport class_report(const Dims& dims, std::uint64_t weight,
                         std::uint64_t lambda, CodeClass cls,
                         std::optional<BigInt> size = std::nullopt);

}  // namespace ooc3d
