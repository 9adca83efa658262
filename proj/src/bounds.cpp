#include "ooc3d/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ooc3d {

namespace {

void check_cw_params(std::uint64_t n, std::uint64_t w, std::uint64_t lambda) {
  if (w == 0 || w > n) {
    throw std::invalid_argument("constant weight must satisfy 1 <= w <= n");
  }
  if (lambda >= w) {
    throw std::invalid_argument("correlation budget must stay below the weight");
  }
}

void check_3d_params(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda) {
  if (L == 0 || S == 0 || T == 0) {
    throw std::invalid_argument("all dimensions must be positive");
  }
  if (w == 0) throw std::invalid_argument("weight must be positive");
  if (lambda >= w) {
    throw std::invalid_argument("correlation budget must stay below the weight");
  }
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Chain whose level-i numerator (i = 1..lambda) is scale*(top - i) and
// whose outermost level is outer_num/w.
BigInt scaled_chain(const BigInt& outer_num, std::uint64_t w,
                    const BigInt& scale, const BigInt& top,
                    std::uint64_t lambda) {
  std::vector<std::pair<BigInt, BigInt>> levels;
  levels.reserve(lambda + 1);
  levels.emplace_back(outer_num, w);
  for (std::uint64_t i = 1; i <= lambda; ++i) {
    levels.emplace_back(scale * (top - i), w - i);
  }
  return nested_floor(levels);
}

}  // namespace

BigInt nested_floor(const std::vector<std::pair<BigInt, BigInt>>& levels) {
  BigInt v = 1;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (it->second <= 0) {
      throw std::invalid_argument("nested_floor needs positive denominators");
    }
    if (it->first < 0) {
      throw std::invalid_argument("nested_floor needs nonnegative numerators");
    }
    v = (it->first * v) / it->second;
  }
  return v;
}

BigInt johnson_binary(std::uint64_t n, std::uint64_t w, std::uint64_t lambda) {
  check_cw_params(n, w, lambda);
  std::vector<std::pair<BigInt, BigInt>> levels;
  levels.reserve(lambda + 1);
  for (std::uint64_t i = 0; i <= lambda; ++i) {
    levels.emplace_back(BigInt(n - i), BigInt(w - i));
  }
  BigInt best = nested_floor(levels);
  const BigInt excess = BigInt(w) * w - BigInt(n) * lambda;
  if (excess > 0) {
    best = std::min(best, BigInt(n) * (w - lambda) / excess);
  }
  return best;
}

std::optional<BigInt> agrell_bound(std::uint64_t n, std::uint64_t w,
                                   std::uint64_t lambda) {
  check_cw_params(n, w, lambda);
  const BigInt excess = BigInt(w) * w - BigInt(n) * lambda;
  if (excess > 0 && excess <= w - lambda) return BigInt(n);
  return std::nullopt;
}

BigInt svanstrom_bound(std::uint64_t n, std::uint64_t w, std::uint64_t lambda,
                       std::uint64_t m) {
  check_cw_params(n, w, lambda);
  if (m == 0) throw std::invalid_argument("alphabet parameter m must be >= 1");
  // Shorten lambda times down to the zero-correlation base case, then
  // unwind: each step multiplies by m*(length)/(weight) under one floor.
  BigInt v = BigInt(m) * (BigInt(n - lambda) / (w - lambda));
  for (std::uint64_t i = lambda; i-- > 0;) {
    v = BigInt(m) * (n - i) * v / (w - i);
  }
  return v;
}

BigInt johnson_nonbinary_chain(std::uint64_t n, std::uint64_t w,
                               std::uint64_t lambda, std::uint64_t m) {
  check_cw_params(n, w, lambda);
  if (m == 0) throw std::invalid_argument("alphabet parameter m must be >= 1");
  std::vector<std::pair<BigInt, BigInt>> levels;
  levels.reserve(lambda + 1);
  for (std::uint64_t i = 0; i <= lambda; ++i) {
    levels.emplace_back(BigInt(m) * (n - i), BigInt(w - i));
  }
  return nested_floor(levels);
}

BigInt johnson_nonbinary(std::uint64_t n, std::uint64_t w, std::uint64_t lambda,
                         std::uint64_t m) {
  BigInt best = johnson_nonbinary_chain(n, w, lambda, m);
  const BigInt mn = BigInt(m) * n;
  const BigInt excess = BigInt(w) * w - mn * lambda;
  if (excess > 0) {
    best = std::min(best, std::min(mn, BigInt(mn * (w - lambda) / excess)));
  }
  return best;
}

BigInt johnson_3d(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                  std::uint64_t w, std::uint64_t lambda) {
  check_3d_params(L, S, T, w, lambda);
  const BigInt cells = BigInt(L) * S * T;
  if (w > cells) {
    throw std::invalid_argument("weight cannot exceed the number of cells");
  }
  const BigInt ls = BigInt(L) * S;
  BigInt best = scaled_chain(ls, w, 1, cells, lambda);
  const BigInt excess = BigInt(w) * w - cells * lambda;
  if (excess > 0) {
    best = std::min(best, std::min(ls, BigInt(ls * (w - lambda) / excess)));
  }
  return best;
}

BigInt johnson_ideal_3d(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                        std::uint64_t w, std::uint64_t lambda_c) {
  check_3d_params(L, S, T, w, lambda_c);
  const BigInt ls = BigInt(L) * S;
  if (w > ls) {
    throw std::invalid_argument(
        "zero autocorrelation forces at most one pulse per wavelength/space "
        "cell, so w <= L*S");
  }
  return scaled_chain(ls, w, BigInt(T), ls, lambda_c);
}

BigInt johnson_amopp(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda) {
  check_3d_params(L, S, T, w, lambda);
  if (w > S) {
    throw std::invalid_argument(
        "one pulse per spatial plane forces w <= space dimension");
  }
  const BigInt inner = scaled_chain(BigInt(L) * S * T, w, BigInt(L) * T,
                                    BigInt(S), lambda);
  return inner / T;
}

BigInt johnson_amopw(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda) {
  check_3d_params(L, S, T, w, lambda);
  if (w > L) {
    throw std::invalid_argument(
        "one pulse per wavelength plane forces w <= wavelength dimension");
  }
  const BigInt inner = scaled_chain(BigInt(L) * S * T, w, BigInt(S) * T,
                                    BigInt(L), lambda);
  return inner / T;
}

BigInt johnson_amopt(std::uint64_t L, std::uint64_t S, std::uint64_t T,
                     std::uint64_t w, std::uint64_t lambda) {
  check_3d_params(L, S, T, w, lambda);
  if (w > T) {
    throw std::invalid_argument(
        "one pulse per temporal plane forces w <= time dimension");
  }
  const BigInt inner = scaled_chain(BigInt(L) * S * T, w, BigInt(L) * S,
                                    BigInt(T), lambda);
  return inner / T;
}

BigInt spp_capacity(std::uint64_t L, std::uint64_t T, std::uint64_t lambda) {
  if (L == 0 || T == 0) {
    throw std::invalid_argument("all dimensions must be positive");
  }
  if (lambda == 0) {
    throw std::invalid_argument("single-pulse capacity needs lambda >= 1");
  }
  return power(L, lambda) * power(T, lambda - 1);
}

BoundReport evaluate_bounds(const BoundInputs& in, std::optional<BigInt> size) {
  const auto [L, S, T] = in.dims;
  if (L == 0 || S == 0 || T == 0) {
    throw std::invalid_argument("all dimensions must be positive");
  }
  if (in.weight == 0) throw std::invalid_argument("weight must be positive");

  BoundReport report;
  report.size = std::move(size);
  const std::uint64_t w = in.weight;
  const bool ideal = in.lambda_a == 0;
  const std::uint64_t lambda_any = std::max(in.lambda_a, in.lambda_c);

  auto add = [&report](std::string name, bool applicable,
                       std::optional<BigInt> value, std::string reason) {
    report.entries.push_back(
        {std::move(name), applicable, std::move(value), std::move(reason)});
  };

  if (lambda_any >= w) {
    add("johnson-3d", false, std::nullopt,
        "correlation budget is not below the weight");
  } else if (BigInt(w) > BigInt(L) * S * T) {
    add("johnson-3d", false, std::nullopt,
        "weight exceeds the number of cells");
  } else {
    add("johnson-3d", true, johnson_3d(L, S, T, w, lambda_any), "");
  }

  if (!ideal) {
    add("johnson-ideal", false, std::nullopt,
        "requires zero autocorrelation");
  } else if (in.lambda_c >= w) {
    add("johnson-ideal", false, std::nullopt,
        "cross-correlation budget is not below the weight");
  } else if (BigInt(w) > BigInt(L) * S) {
    add("johnson-ideal", false, std::nullopt,
        "weight exceeds the wavelength/space cell count");
  } else {
    add("johnson-ideal", true, johnson_ideal_3d(L, S, T, w, in.lambda_c), "");
  }

  struct PlaneBound {
    const char* name;
    bool flag;
    std::uint64_t planes;
    BigInt (*eval)(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t,
                   std::uint64_t);
    const char* missing;
  };
  const PlaneBound plane_bounds[] = {
      {"johnson-amopp", in.one_per_spatial, S, &johnson_amopp,
       "needs at most one pulse per spatial plane"},
      {"johnson-amopw", in.one_per_wavelength, L, &johnson_amopw,
       "needs at most one pulse per wavelength plane"},
      {"johnson-amopt", in.one_per_temporal, T, &johnson_amopt,
       "needs at most one pulse per temporal plane"},
  };
  for (const PlaneBound& b : plane_bounds) {
    if (!ideal) {
      add(b.name, false, std::nullopt, "requires zero autocorrelation");
    } else if (!b.flag) {
      add(b.name, false, std::nullopt, b.missing);
    } else if (in.lambda_c >= w) {
      add(b.name, false, std::nullopt,
          "cross-correlation budget is not below the weight");
    } else if (w > b.planes) {
      add(b.name, false, std::nullopt,
          "weight exceeds the number of planes of this orientation");
    } else {
      add(b.name, true, b.eval(L, S, T, w, in.lambda_c), "");
    }
  }

  if (ideal && in.one_per_spatial && w == S && in.lambda_c >= 1) {
    add("spp-capacity", false, spp_capacity(L, T, in.lambda_c),
        "reported for comparison; the verdict uses the bounds above");
  }

  for (const BoundEntry& e : report.entries) {
    if (!e.applicable) continue;
    if (!report.best || *e.value < *report.best) {
      report.best = e.value;
      report.best_name = e.name;
    }
  }
  report.j_optimal =
      report.best && report.size && *report.size == *report.best;
  return report;
}

BoundReport optimality_report(const Code& code) {
  BoundInputs in;
  in.dims = code.dims;
  in.weight = code.weight;
  in.lambda_a = code.lambda_a;
  in.lambda_c = code.lambda_c;
  in.one_per_spatial = true;
  in.one_per_wavelength = true;
  in.one_per_temporal = true;
  for (const Codeword& cw : code.codewords) {
    const PlanePulseMaxima m = plane_pulse_maxima(cw);
    in.one_per_spatial = in.one_per_spatial && m.spatial <= 1;
    in.one_per_wavelength = in.one_per_wavelength && m.wavelength <= 1;
    in.one_per_temporal = in.one_per_temporal && m.temporal <= 1;
  }
  return evaluate_bounds(in, BigInt(code.size()));
}

std::string code_class_name(CodeClass cls) {
  switch (cls) {
    case CodeClass::kGeneral: return "general";
    case CodeClass::kIdeal: return "ideal";
    case CodeClass::kAmopp: return "amopp";
    case CodeClass::kAmopw: return "amopw";
    case CodeClass::kAmopt: return "amopt";
    case CodeClass::kSpp: return "spp";
  }
  throw std::invalid_argument("unknown code class");
}

std::optional<CodeClass> code_class_from_name(const std::string& name) {
  for (CodeClass cls :
       {CodeClass::kGeneral, CodeClass::kIdeal, CodeClass::kAmopp,
        CodeClass::kAmopw, CodeClass::kAmopt, CodeClass::kSpp}) {
    if (name == code_class_name(cls)) return cls;
  }
  return std::nullopt;
}

BoundReport class_report(const Dims& dims, std::uint64_t weight,
                         std::uint64_t lambda, CodeClass cls,
                         std::optional<BigInt> size) {
  if (weight == 0) throw std::invalid_argument("weight must be positive");
  if (lambda >= weight) {
    throw std::invalid_argument("correlation budget must stay below the weight");
  }
  BoundInputs in;
  in.dims = dims;
  in.weight = weight;
  in.lambda_a = cls == CodeClass::kGeneral ? lambda : 0;
  in.lambda_c = lambda;
  switch (cls) {
    case CodeClass::kGeneral:
    case CodeClass::kIdeal:
      break;
    case CodeClass::kSpp:
      if (weight != dims.space) {
        throw std::invalid_argument(
            "a single pulse in each spatial plane forces weight == space "
            "dimension");
      }
      in.one_per_spatial = true;
      break;
    case CodeClass::kAmopp:
      if (weight > dims.space) {
        throw std::invalid_argument(
            "one pulse per spatial plane forces w <= space dimension");
      }
      in.one_per_spatial = true;
      break;
    case CodeClass::kAmopw:
      if (weight > dims.wavelengths) {
        throw std::invalid_argument(
            "one pulse per wavelength plane forces w <= wavelength dimension");
      }
      in.one_per_wavelength = true;
      break;
    case CodeClass::kAmopt:
      if (weight > dims.time) {
        throw std::invalid_argument(
            "one pulse per temporal plane forces w <= time dimension");
      }
      in.one_per_temporal = true;
      break;
  }
  return evaluate_bounds(in, std::move(size));
}

}  // namespace ooc3d
