#include "ooc3d/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ooc3d/bigint.hpp"

namespace ooc3d {

namespace {

// Per-pair cross-correlation along with the first shift attaining it.
struct PairResult {
  std::uint64_t value = 0;
  std::uint64_t shift = 0;
};

PairResult cross_with_shift(const Codeword& a, const Codeword& b) {
  PairResult best;
  bool have = false;
  for (std::uint64_t t = 0; t < a.dims.time; ++t) {
    const std::uint64_t v = pulse_overlap(a, temporal_shift(b, t));
    if (!have || v > best.value) {
      best = {v, t};
      have = true;
    }
  }
  return best;
}

std::string describe_pulse(const Pulse& p) {
  std::ostringstream os;
  os << "(" << p.wavelength << "," << p.space << "," << p.time << ")";
  return os.str();
}

}  // namespace

Codeword temporal_shift(const Codeword& cw, std::uint64_t t) {
  Codeword out = cw;
  const std::uint64_t T = cw.dims.time;
  t %= T;
  if (t == 0) return out;
  for (Pulse& p : out.pulses) p.time = (p.time + t) % T;
  std::sort(out.pulses.begin(), out.pulses.end());
  return out;
}

std::uint64_t pulse_overlap(const Codeword& a, const Codeword& b) {
  std::uint64_t count = 0;
  auto ia = a.pulses.begin();
  auto ib = b.pulses.begin();
  while (ia != a.pulses.end() && ib != b.pulses.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::uint64_t autocorrelation(const Codeword& cw) {
  std::uint64_t best = 0;
  for (std::uint64_t t = 1; t < cw.dims.time; ++t) {
    best = std::max(best, pulse_overlap(cw, temporal_shift(cw, t)));
  }
  return best;
}

std::uint64_t cross_correlation(const Codeword& a, const Codeword& b) {
  if (!(a.dims == b.dims)) {
    throw std::invalid_argument("codeword dimensions differ");
  }
  return cross_with_shift(a, b).value;
}

CorrelationProfile correlation_profile(const Code& code, unsigned jobs) {
  if (code.codewords.empty()) {
    throw std::invalid_argument("correlation profile needs a nonempty code");
  }
  for (const Codeword& cw : code.codewords) {
    if (!(cw.dims == code.dims)) {
      throw std::invalid_argument("codeword dimensions differ from the code");
    }
  }

  CorrelationProfile profile;
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    const Codeword& cw = code.codewords[i];
    ++profile.weight_histogram[cw.weight()];
    for (std::uint64_t t = 1; t < cw.dims.time; ++t) {
      const std::uint64_t v = pulse_overlap(cw, temporal_shift(cw, t));
      if (v > profile.max_auto) {
        profile.max_auto = v;
        profile.auto_witness = AutoWitness{i, t};
      }
    }
  }

  // Unordered pairs, first index dealt out to workers a row at a time.
  // Each worker keeps the first attaining witness within its rows; the
  // merge prefers larger values, then earlier pairs, so the outcome
  // matches a serial scan for every job count.
  struct Best {
    std::uint64_t value = 0;
    CrossWitness witness;
    bool have = false;
  };
  const std::size_t n = code.codewords.size();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs == 0 ? 1 : jobs,
                                      n > 1 ? static_cast<unsigned>(n - 1)
                                            : 1u));
  std::vector<Best> bests(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&code, &bests, &next, n](unsigned slot) {
    // fetch_add hands this worker an increasing row sequence, so its scan
    // is lex-ordered and "strictly greater or first" keeps the earliest
    // pair attaining its local maximum.
    Best local;
    for (std::size_t i = next.fetch_add(1); i + 1 < n;
         i = next.fetch_add(1)) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const PairResult r =
            cross_with_shift(code.codewords[i], code.codewords[j]);
        if (r.value > local.value || !local.have) {
          local.value = r.value;
          local.witness = CrossWitness{i, j, r.shift};
          local.have = true;
        }
      }
    }
    bests[slot] = local;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned s = 0; s < workers; ++s) pool.emplace_back(run, s);
    for (std::thread& th : pool) th.join();
  }

  Best merged;
  for (const Best& b : bests) {
    if (!b.have) continue;
    const bool better =
        !merged.have || b.value > merged.value ||
        (b.value == merged.value &&
         std::tie(b.witness.first, b.witness.second, b.witness.shift) <
             std::tie(merged.witness.first, merged.witness.second,
                      merged.witness.shift));
    if (better) merged = b;
  }
  profile.max_cross = merged.have ? merged.value : 0;
  if (profile.max_cross > 0) profile.cross_witness = merged.witness;
  return profile;
}

ClassFlags classify(const Code& code) {
  ClassFlags flags{.ideal = true,
                   .amopp = true,
                   .spp = true,
                   .amopw = true,
                   .spw = true,
                   .amopt = true,
                   .spt = true};
  for (const Codeword& cw : code.codewords) {
    const PlanePulseMaxima m = plane_pulse_maxima(cw);
    const std::uint64_t w = cw.weight();
    flags.ideal = flags.ideal && autocorrelation(cw) == 0;
    flags.amopp = flags.amopp && m.spatial <= 1;
    flags.spp = flags.spp && m.spatial <= 1 && w == cw.dims.space;
    flags.amopw = flags.amopw && m.wavelength <= 1;
    flags.spw = flags.spw && m.wavelength <= 1 && w == cw.dims.wavelengths;
    flags.amopt = flags.amopt && m.temporal <= 1;
    flags.spt = flags.spt && m.temporal <= 1 && w == cw.dims.time;
  }
  return flags;
}

Certification full_check(const Code& code, unsigned jobs) {
  Certification cert;
  auto fail = [&cert](std::string claim, std::string detail) {
    cert.failures.push_back({std::move(claim), std::move(detail)});
  };

  bool shape_ok = true;
  if (code.codewords.empty()) {
    fail("dims", "code has no codewords, so its claims cannot be checked");
    shape_ok = false;
  }
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    const Codeword& cw = code.codewords[i];
    if (!(cw.dims == code.dims)) {
      fail("dims", "codeword " + std::to_string(i) +
                       " has dimensions different from the code header");
      shape_ok = false;
      continue;
    }
    bool pulses_ok = true;
    for (std::size_t p = 0; p < cw.pulses.size(); ++p) {
      const Pulse& pulse = cw.pulses[p];
      if (pulse.wavelength >= cw.dims.wavelengths ||
          pulse.space >= cw.dims.space || pulse.time >= cw.dims.time) {
        fail("pulses", "codeword " + std::to_string(i) + " pulse " +
                           describe_pulse(pulse) + " is out of range");
        pulses_ok = false;
        break;
      }
      if (p > 0 && !(cw.pulses[p - 1] < pulse)) {
        fail("pulses", "codeword " + std::to_string(i) +
                           " pulses are not sorted and distinct near " +
                           describe_pulse(pulse));
        pulses_ok = false;
        break;
      }
    }
    shape_ok = shape_ok && pulses_ok;
    if (pulses_ok && cw.weight() != code.weight) {
      fail("constant-weight",
           "codeword " + std::to_string(i) + " has weight " +
               std::to_string(cw.weight()) + ", header says " +
               std::to_string(code.weight));
    }
  }

  if (shape_ok) {
    cert.profile = correlation_profile(code, jobs);
    if (cert.profile.max_auto != code.lambda_a) {
      std::string detail = "claimed " + std::to_string(code.lambda_a) +
                           ", measured " +
                           std::to_string(cert.profile.max_auto);
      if (cert.profile.auto_witness) {
        detail += " (codeword " +
                  std::to_string(cert.profile.auto_witness->codeword) +
                  ", shift " +
                  std::to_string(cert.profile.auto_witness->shift) + ")";
      }
      fail("autocorrelation", std::move(detail));
    }
    if (cert.profile.max_cross != code.lambda_c) {
      std::string detail = "claimed " + std::to_string(code.lambda_c) +
                           ", measured " +
                           std::to_string(cert.profile.max_cross);
      if (cert.profile.cross_witness) {
        detail += " (codewords " +
                  std::to_string(cert.profile.cross_witness->first) + " and " +
                  std::to_string(cert.profile.cross_witness->second) +
                  ", shift " +
                  std::to_string(cert.profile.cross_witness->shift) + ")";
      }
      fail("cross-correlation", std::move(detail));
    }
  }

  if (code.provenance) {
    const BigInt expected = expected_size(*code.provenance);
    if (BigInt(code.size()) != expected) {
      fail("expected-size", "construction yields " + expected.str() +
                                " codewords, found " +
                                std::to_string(code.size()));
    }
  }

  // Classification and bounds both walk the pulse lists, so they are only
  // meaningful (and safe) once the shape checks hold.
  if (shape_ok) {
    cert.flags = classify(code);
    try {
      cert.bounds = optimality_report(code);
    } catch (const std::invalid_argument& e) {
      fail("bounds", e.what());
    }
  }

  cert.passed = cert.failures.empty();
  return cert;
}

}  // namespace ooc3d
