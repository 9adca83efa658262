#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ooc3d/bounds.hpp"
#include "ooc3d/codes.hpp"

namespace ooc3d {

// The codeword advanced t steps in time, indices mod T; pulses stay
// sorted.  Shifting by a multiple of T is the identity.
Codeword temporal_shift(const Codeword& cw, std::uint64_t t);

// Number of pulses the two (sorted) codewords share.
std::uint64_t pulse_overlap(const Codeword& a, const Codeword& b);

// Largest overlap between cw and any of its T-1 nontrivial temporal
// shifts; 0 when T = 1.  The sum behind the overlap runs over every time
// index.
std::uint64_t autocorrelation(const Codeword& cw);

// Largest overlap between a and any temporal shift (including t = 0) of
// b.  Throws on mismatched dimensions.  Symmetric.
std::uint64_t cross_correlation(const Codeword& a, const Codeword& b);

struct AutoWitness {
  std::size_t codeword = 0;
  std::uint64_t shift = 0;
  bool operator==(const AutoWitness&) const = default;
};

struct CrossWitness {
  std::size_t first = 0;   // indices into Code::codewords, first < second
  std::size_t second = 0;
  std::uint64_t shift = 0;  // applied to the second codeword
  bool operator==(const CrossWitness&) const = default;
};

// Exact measured correlation maxima.  A witness is present exactly when
// the corresponding maximum is positive, and is then the first attaining
// (codeword, shift) / (pair, shift) in scan order, independent of the
// number of worker threads.
struct CorrelationProfile {
  std::uint64_t max_auto = 0;
  std::optional<AutoWitness> auto_witness;
  std::uint64_t max_cross = 0;
  std::optional<CrossWitness> cross_witness;
  std::map<std::uint64_t, std::uint64_t> weight_histogram;

  bool operator==(const CorrelationProfile&) const = default;
};

// Brute force over all codewords, unordered pairs, and temporal shifts.
// Pair work is split over `jobs` threads (0 and 1 both mean serial); the
// result is identical for any job count.  Throws on an empty code or
// mismatched codeword dimensions.
CorrelationProfile correlation_profile(const Code& code, unsigned jobs = 1);

// Structural class of a code, measured from the pulses alone (claimed
// correlation values are ignored).  The "single pulse" variants add
// "every plane hit exactly once" on top of the at-most-one property.
struct ClassFlags {
  bool ideal = false;  // every codeword has zero autocorrelation
  bool amopp = false;  // <= 1 pulse per space index
  bool spp = false;    // exactly 1 pulse per space index
  bool amopw = false;  // <= 1 pulse per wavelength index
  bool spw = false;    // exactly 1 pulse per wavelength index
  bool amopt = false;  // <= 1 pulse per time index
  bool spt = false;    // exactly 1 pulse per time index

  bool operator==(const ClassFlags&) const = default;
};
ClassFlags classify(const Code& code);

// One violated claim: which check failed plus a human-readable witness.
struct Failure {
  std::string claim;   // "dims", "pulses", "constant-weight",
                       // "autocorrelation", "cross-correlation",
                       // "expected-size", "bounds"
  std::string detail;
};

struct Certification {
  bool passed = false;
  std::vector<Failure> failures;
  CorrelationProfile profile;
  ClassFlags flags;
  BoundReport bounds;
};

// Full certification: codeword shape and pulse sanity, constant weight,
// exact agreement of claimed lambda_a / lambda_c with the measured
// profile (an unattained claim fails too), size == the closed-form count
// when construction parameters are attached, plus the bound report.
// An empty code fails outright.  Malformed input is reported, not
// thrown: when shape checks fail, profile, flags, and bounds stay
// default-constructed.
Certification full_check(const Code& code, unsigned jobs = 1);

}  // namespace ooc3d
