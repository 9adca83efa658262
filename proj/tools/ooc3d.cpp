// Command-line front end: generate the code families, verify code files
// against their claims, print bound tables, and describe the projective
// geometries behind the constructions.
//
// Exit codes: 0 success / verified, 1 usage or input error, 2 a code
// file whose claims failed verification.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ooc3d/bounds.hpp"
#include "ooc3d/codefile.hpp"
#include "ooc3d/codes.hpp"
#include "ooc3d/field.hpp"
#include "ooc3d/geometry.hpp"
#include "ooc3d/verify.hpp"

namespace {

using namespace ooc3d;

struct GenerateArgs {
  std::string construction;
  std::uint64_t q = 0;
  unsigned k = 0;
  unsigned d = 0;
  unsigned m = 0;
  std::uint64_t wavelengths = 0;
  std::uint64_t space = 0;
  std::string out;
  std::string format = "structured";
  std::uint64_t max_points = kDefaultMaxPoints;
  bool wavelengths_given = false;
  bool space_given = false;
};

// Budget on pair-shift overlap evaluations; sized for seconds-scale runs.
constexpr std::uint64_t kDefaultMaxPairs = std::uint64_t{1} << 28;

struct VerifyArgs {
  std::string path;
  unsigned jobs = 1;
  std::uint64_t max_pairs = kDefaultMaxPairs;
};

struct BoundsArgs {
  std::uint64_t wavelengths = 0;
  std::uint64_t space = 0;
  std::uint64_t time = 0;
  std::uint64_t weight = 0;
  std::uint64_t lambda = 0;
  std::string code_class = "general";
};

struct InfoArgs {
  std::uint64_t q = 0;
  unsigned k = 0;
};

std::string dims_text(const Dims& d) {
  std::ostringstream os;
  os << d.wavelengths << "x" << d.space << "x" << d.time;
  return os.str();
}

std::string parameter_text(const Provenance& p) {
  std::ostringstream os;
  os << "q=" << p.q;
  switch (p.family) {
    case Family::kProjectiveLine:
    case Family::kAffineLine:
      os << " k=" << p.k;
      break;
    case Family::kDSpreadLine:
      os << " d=" << p.d << " m=" << p.m;
      break;
    case Family::kPuncturedPlane:
      break;
  }
  return os.str();
}

std::string class_text(const ClassFlags& f) {
  std::vector<const char*> names;
  if (f.ideal) names.push_back("ideal");
  if (f.amopp) names.push_back("amopp");
  if (f.spp) names.push_back("spp");
  if (f.amopw) names.push_back("amopw");
  if (f.spw) names.push_back("spw");
  if (f.amopt) names.push_back("amopt");
  if (f.spt) names.push_back("spt");
  if (names.empty()) return "(none)";
  std::string joined;
  for (const char* n : names) {
    if (!joined.empty()) joined += ' ';
    joined += n;
  }
  return joined;
}

void print_bounds(const BoundReport& report) {
  std::cout << "bounds:\n";
  for (const BoundEntry& e : report.entries) {
    std::cout << "  " << e.name << ": ";
    if (e.applicable) {
      std::cout << e.value->str();
    } else if (e.value) {
      std::cout << e.value->str() << " (informational: " << e.reason << ")";
    } else {
      std::cout << "not applicable (" << e.reason << ")";
    }
    std::cout << "\n";
  }
  if (report.best) {
    std::cout << "best bound: " << report.best->str() << " ("
              << report.best_name << ")\n";
  } else {
    std::cout << "best bound: none applicable\n";
  }
}

// Wavelength*space plane count each family requires, used to derive
// whichever of the two factors the user left out.
std::uint64_t base_planes(Family family, const GenerateArgs& a) {
  switch (family) {
    case Family::kProjectiveLine:
      return theta(a.k, a.q) / (a.q + 1);
    case Family::kDSpreadLine:
      if (a.d == 0 || a.m < 2) {
        throw std::invalid_argument("dspread-line needs d >= 1 and m >= 2");
      }
      return theta(a.m * (a.d + 1) - 1, a.q) / theta(a.d, a.q);
    case Family::kPuncturedPlane:
      return a.q * a.q + 1;
    case Family::kAffineLine:
      if (a.k < 2) {
        throw std::invalid_argument("affine-line needs k >= 2");
      }
      return theta(a.k - 1, a.q);
  }
  throw std::invalid_argument("unknown construction");
}

int run_generate(const GenerateArgs& a, bool have_k, bool have_d,
                 bool have_m) {
  const std::optional<Family> family = family_from_name(a.construction);
  if (!family) {
    std::cerr << "error: unknown construction \"" << a.construction << "\"\n";
    return 1;
  }
  switch (*family) {
    case Family::kProjectiveLine:
    case Family::kAffineLine:
      if (!have_k) {
        std::cerr << "error: " << a.construction << " requires --k\n";
        return 1;
      }
      break;
    case Family::kDSpreadLine:
      if (!have_d || !have_m) {
        std::cerr << "error: dspread-line requires --d and --m\n";
        return 1;
      }
      break;
    case Family::kPuncturedPlane:
      break;
  }

  std::uint64_t L = a.wavelengths;
  std::uint64_t S = a.space;
  if (!a.wavelengths_given || !a.space_given) {
    const std::uint64_t planes = base_planes(*family, a);
    if (!a.wavelengths_given && !a.space_given) {
      L = planes;
      S = 1;
    } else if (a.wavelengths_given) {
      if (L == 0 || planes % L != 0) {
        throw std::invalid_argument(
            "--lambda-dim must divide the plane count " +
            std::to_string(planes));
      }
      S = planes / L;
    } else {
      if (S == 0 || planes % S != 0) {
        throw std::invalid_argument("--s-dim must divide the plane count " +
                                    std::to_string(planes));
      }
      L = planes / S;
    }
  }

  Limits limits;
  limits.max_points = a.max_points;
  Code code;
  switch (*family) {
    case Family::kProjectiveLine:
      code = construct_projective_line_code(a.q, a.k, L, S, limits);
      break;
    case Family::kDSpreadLine:
      code = construct_dspread_line_code(a.q, a.d, a.m, L, S, limits);
      break;
    case Family::kPuncturedPlane:
      code = construct_punctured_plane_code(a.q, L, S, limits);
      break;
    case Family::kAffineLine:
      code = construct_affine_line_code(a.q, a.k, L, S, limits);
      break;
  }

  for (const std::string& w : code.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  std::ostringstream summary;
  summary << "generated " << a.construction << " "
          << parameter_text(*code.provenance) << ": " << code.size()
          << " codewords, dims " << dims_text(code.dims) << ", weight "
          << code.weight << ", lambda_a " << code.lambda_a << ", lambda_c "
          << code.lambda_c;

  const bool csv = a.format == "csv";
  if (!a.out.empty()) {
    if (csv) {
      save_csv(code, a.out);
    } else {
      save_structured_text(code, a.out);
    }
    std::cout << summary.str() << " -> " << a.out << "\n";
  } else {
    // Keep stdout parseable: the document goes there, the summary does not.
    std::cout << (csv ? to_csv(code) : to_structured_text(code));
    std::cerr << summary.str() << "\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  Code code;
  try {
    code = load_structured_text(a.path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const BigInt n = code.size();
  const BigInt scans = n * (n - 1) / 2 * code.dims.time +
                       n * (code.dims.time > 0 ? code.dims.time - 1 : 0);
  if (scans > a.max_pairs) {
    std::cerr << "error: verification needs " << scans
              << " pair-shift evaluations, above the --max-pairs budget of "
              << a.max_pairs << "\n";
    return 1;
  }

  const Certification cert = full_check(code, a.jobs);

  std::cout << "file: " << a.path << "\n";
  std::cout << "dims " << dims_text(code.dims) << ", weight " << code.weight
            << ", size " << code.size() << "\n";
  if (code.provenance) {
    std::cout << "construction: " << family_name(code.provenance->family)
              << " " << parameter_text(*code.provenance) << "\n";
  }
  std::cout << "claimed lambda_a " << code.lambda_a << ", lambda_c "
            << code.lambda_c << "\n";

  bool shape_ok = true;
  for (const Failure& f : cert.failures) {
    if (f.claim == "dims" || f.claim == "pulses") shape_ok = false;
  }
  if (shape_ok) {
    std::cout << "measured lambda_a " << cert.profile.max_auto
              << ", lambda_c " << cert.profile.max_cross << "\n";
    std::cout << "classes: " << class_text(cert.flags) << "\n";
    print_bounds(cert.bounds);
    std::cout << "J-optimal: " << (cert.bounds.j_optimal ? "yes" : "no")
              << "\n";
  }
  for (const Failure& f : cert.failures) {
    std::cout << "FAIL " << f.claim << ": " << f.detail << "\n";
  }
  if (!cert.passed) {
    std::cout << "result: claim mismatch\n";
    return 2;
  }
  std::cout << "result: verified\n";
  return 0;
}

int run_bounds(const BoundsArgs& a) {
  const std::optional<CodeClass> cls = code_class_from_name(a.code_class);
  if (!cls) {
    std::cerr << "error: unknown code class \"" << a.code_class << "\"\n";
    return 1;
  }
  const Dims dims{a.wavelengths, a.space, a.time};
  const BoundReport report = class_report(dims, a.weight, a.lambda, *cls);
  std::cout << "parameters: dims " << dims_text(dims) << ", weight "
            << a.weight << ", lambda " << a.lambda << ", class "
            << a.code_class << "\n";
  print_bounds(report);
  return 0;
}

int run_info(const InfoArgs& a) {
  const std::optional<PrimePower> pp = PrimePower::factor(a.q);
  if (!pp) {
    std::cerr << "error: " << a.q << " is not a prime power\n";
    return 1;
  }
  const std::uint64_t points = theta(a.k, a.q);
  std::cout << "PG(" << a.k << ", " << a.q << "): q = " << pp->p << "^"
            << pp->e << ", theta = " << points << " points, "
            << num_lines(a.k, a.q).str() << " lines\n";
  bool any = false;
  for (unsigned d = 1; d < a.k; ++d) {
    if ((a.k + 1) % (d + 1) == 0) {
      any = true;
      std::cout << "spread d=" << d << ": " << points / theta(d, a.q)
                << " flats of " << theta(d, a.q) << " points each\n";
    }
  }
  if (!any) {
    std::cout << "spreads: none (no proper d with d+1 dividing " << a.k + 1
              << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-D optical orthogonal code toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "generate", "construct a code family and write it out");
  gen->add_option("construction", gen_args.construction,
                  "projective-line | dspread-line | punctured-plane | "
                  "affine-line")
      ->required()
      ->check(CLI::IsMember({"projective-line", "dspread-line",
                             "punctured-plane", "affine-line"}));
  gen->add_option("--q", gen_args.q, "field order")->required();
  CLI::Option* k_opt =
      gen->add_option("--k", gen_args.k, "geometry dimension");
  CLI::Option* d_opt =
      gen->add_option("--d", gen_args.d, "spread flat dimension");
  CLI::Option* m_opt = gen->add_option("--m", gen_args.m, "quotient factor");
  CLI::Option* lam_dim_opt = gen->add_option(
      "--lambda-dim", gen_args.wavelengths, "wavelength count (derived)");
  CLI::Option* s_dim_opt =
      gen->add_option("--s-dim", gen_args.space, "space count (default 1)");
  gen->add_option("--out", gen_args.out, "output path (stdout if omitted)");
  gen->add_option("--format", gen_args.format, "structured | csv")
      ->check(CLI::IsMember({"structured", "csv"}));
  gen->add_option("--max-points", gen_args.max_points,
                  "point enumeration cap")
      ->envname("OOC3D_MAX_POINTS");

  VerifyArgs verify_args;
  CLI::App* ver =
      app.add_subcommand("verify", "check a code file against its claims");
  ver->add_option("input", verify_args.path, "code file path")->required();
  ver->add_option("--jobs", verify_args.jobs,
                  "worker threads for the pair scan");
  ver->add_option("--max-pairs", verify_args.max_pairs,
                  "pair-shift evaluation budget")
      ->envname("OOC3D_MAX_PAIRS");

  BoundsArgs bounds_args;
  CLI::App* bnd = app.add_subcommand(
      "bounds", "print the bound table for code parameters");
  bnd->add_option("--lambda-dim", bounds_args.wavelengths,
                  "wavelength count")
      ->required();
  bnd->add_option("--s-dim", bounds_args.space, "space count")->required();
  bnd->add_option("--t-dim", bounds_args.time, "time count")->required();
  bnd->add_option("--weight", bounds_args.weight, "codeword weight")
      ->required();
  bnd->add_option("--lam", bounds_args.lambda, "correlation budget")
      ->required();
  bnd->add_option("--code-class", bounds_args.code_class,
                  "general | ideal | amopp | amopw | amopt | spp")
      ->check(CLI::IsMember(
          {"general", "ideal", "amopp", "amopw", "amopt", "spp"}));

  InfoArgs info_args;
  CLI::App* inf =
      app.add_subcommand("info", "describe PG(k,q) and its spreads");
  inf->add_option("--q", info_args.q, "field order")->required();
  inf->add_option("--k", info_args.k, "geometry dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  gen_args.wavelengths_given = lam_dim_opt->count() > 0;
  gen_args.space_given = s_dim_opt->count() > 0;
  try {
    if (gen->parsed()) {
      return run_generate(gen_args, k_opt->count() > 0, d_opt->count() > 0,
                          m_opt->count() > 0);
    }
    if (ver->parsed()) return run_verify(verify_args);
    if (bnd->parsed()) return run_bounds(bounds_args);
    if (inf->parsed()) return run_info(info_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
