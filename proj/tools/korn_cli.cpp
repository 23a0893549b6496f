// Command-line front end: equivalence sweeps, kernel summaries and the
// closed-form Fourier-characterization checks, emitting CSV/JSON artifacts.

#include "korn/catalog.hpp"
#include "korn/equivalence.hpp"
#include "korn/spec_io.hpp"
#include "korn/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using korn::config_error;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
  std::string structure;
  std::string spec_file;
  std::string range;
  std::string range_b;
  std::string norm_a = "patch-iso";
  std::string norm_b = "patch-iso0";
  std::vector<long> periods;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::string catalog_dir;
  bool quiet = false;
};

void add_structure_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--structure", opt.structure,
                  "catalog structure name (chain, zigzag, helix, ...)");
  cmd->add_option("--spec-file", opt.spec_file,
                  "path to a group-spec JSON file");
  cmd->add_option("--catalog-dir", opt.catalog_dir,
                  "directory with user catalog entries "
                  "(also env KORN_CATALOG_DIR)");
  cmd->add_option("--out", opt.out, "output file (default: stdout)");
  cmd->add_option("--format", opt.format, "output format: csv|json");
  cmd->add_flag("--quiet", opt.quiet, "suppress informational output");
}

struct ResolvedStructure {
  korn::GroupSpecPtr spec;
  std::optional<korn::CatalogEntry> entry;
};

ResolvedStructure resolve_structure(const CommonOptions& opt) {
  if (opt.structure.empty() == opt.spec_file.empty())
    throw config_error("give exactly one of --structure or --spec-file");
  ResolvedStructure resolved;
  if (!opt.spec_file.empty()) {
    resolved.spec = korn::load_group_spec_file(opt.spec_file);
  } else {
    resolved.entry = korn::load_catalog_entry(opt.structure, opt.catalog_dir);
    resolved.spec = resolved.entry->spec;
  }
  return resolved;
}

korn::RangeSet resolve_range(const ResolvedStructure& structure,
                             const std::string& expr) {
  if (!expr.empty()) return korn::parse_range(*structure.spec, expr);
  if (structure.entry) {
    auto it = structure.entry->ranges.find("p2");
    if (it != structure.entry->ranges.end()) return it->second;
  }
  throw config_error("no --range given and the structure has no default");
}

void check_periods(const korn::GroupSpec& spec,
                   const std::vector<long>& periods) {
  if (periods.empty()) throw config_error("--periods is required");
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] <= 0 || periods[i] % spec.m0() != 0)
      throw config_error("periods must be positive multiples of m0 = " +
                         std::to_string(spec.m0()));
    if (i > 0 && periods[i] <= periods[i - 1])
      throw config_error("periods must be strictly ascending");
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit(const CommonOptions& opt, const std::string& payload) {
  if (!opt.out.empty()) {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw config_error("cannot open output file '" + opt.out + "'");
    file << payload;
  } else {
    std::cout << payload;
  }
}

// ---- analyze -------------------------------------------------------------

int run_analyze(const CommonOptions& opt) {
  ResolvedStructure structure = resolve_structure(opt);
  check_periods(*structure.spec, opt.periods);
  korn::NormOnRange a{resolve_range(structure, opt.range),
                      korn::seminorm_kind_from_string(opt.norm_a)};
  korn::NormOnRange b{
      resolve_range(structure, opt.range_b.empty() ? opt.range : opt.range_b),
      korn::seminorm_kind_from_string(opt.norm_b)};
  korn::SweepResult result = sweep(*structure.spec, a, b, opt.periods);

  if (opt.format == "csv") {
    std::ostringstream csv;
    write_sweep_csv(result, csv);
    emit(opt, csv.str());
  } else if (opt.format == "json") {
    json doc;
    doc["growth_exponent"] = result.growth_exponent;
    doc["diagnosis"] = to_string(result.diagnosis);
    doc["reports"] = json::array();
    for (const auto& r : result.reports)
      doc["reports"].push_back({{"N", r.period},
                                {"c_min", r.c_min},
                                {"c_max", r.c_max},
                                {"dim_ker_a", r.dim_ker_a},
                                {"dim_ker_b", r.dim_ker_b},
                                {"kernels_equal", r.kernels_equal}});
    emit(opt, doc.dump(2) + "\n");
  } else {
    throw config_error("--format must be csv or json");
  }

  if (!opt.quiet) {
    std::string label = result.diagnosis == korn::GrowthDiagnosis::Bounded
                            ? "BOUNDED"
                        : result.diagnosis == korn::GrowthDiagnosis::Growing
                            ? "GROWING"
                            : "INCONCLUSIVE";
    std::cout << label << " exponent=" << format_double(result.growth_exponent)
              << "\n";
  }
  return kExitOk;
}

// ---- kernel ---------------------------------------------------------------

int run_kernel(const CommonOptions& opt) {
  ResolvedStructure structure = resolve_structure(opt);
  const korn::GroupSpec& spec = *structure.spec;
  check_periods(spec, opt.periods);
  korn::RangeSet range = resolve_range(structure, opt.range);
  korn::SeminormKind kind = korn::seminorm_kind_from_string(opt.norm_a);

  // The closed-form dimension d + d4(d3+d1-1)/2 applies to the patch
  // seminorms with a Property-2 range when the rotation group is finite.
  bool patch_kind = kind == korn::SeminormKind::PatchIso ||
                    kind == korn::SeminormKind::PatchIso0 ||
                    kind == korn::SeminormKind::PatchIso00;
  bool formula_applies =
      patch_kind &&
      korn::property_2_status(spec, range) == korn::Property2Status::Yes &&
      korn::rotation_group_finite(spec);
  int formula_dim = 0;
  if (formula_applies) {
    int daff = spec.affine_dim();
    int d3 = spec.d() - daff;
    int d4 = daff - spec.d2();
    formula_dim = spec.d() + d4 * (d3 + spec.d1() - 1) / 2;
  }

  json records = json::array();
  for (long period : opt.periods) {
    korn::KernelBasis basis = kernel(spec, range, kind, period);
    json rec;
    rec["N"] = period;
    rec["dim"] = basis.dimension;
    if (formula_applies) {
      rec["formula_dim"] = formula_dim;
      rec["match"] = basis.dimension == formula_dim;
    } else {
      rec["formula_dim"] = nullptr;
      rec["match"] = nullptr;
    }
    records.push_back(rec);
  }

  if (opt.format == "json") {
    json doc;
    doc["norm"] = to_string(kind);
    doc["records"] = records;
    emit(opt, doc.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "N,dim,formula_dim,match\n";
    for (const auto& rec : records) {
      csv << rec["N"].get<long>() << "," << rec["dim"].get<int>() << ",";
      if (rec["formula_dim"].is_null())
        csv << ",";
      else
        csv << rec["formula_dim"].get<int>() << ","
            << (rec["match"].get<bool>() ? "true" : "false");
      csv << "\n";
    }
    emit(opt, csv.str());
  } else {
    throw config_error("--format must be csv or json");
  }
  return kExitOk;
}

// ---- fourier-check ----------------------------------------------------------

int run_fourier_check(const CommonOptions& opt) {
  ResolvedStructure structure = resolve_structure(opt);
  const korn::GroupSpec& spec = *structure.spec;
  if (!korn::detect_spectral_structure(spec))
    throw config_error(
        "fourier-check supports only the chain and zigzag structures");
  check_periods(spec, opt.periods);
  if (opt.trials <= 0) throw config_error("--trials must be positive");

  korn::RangeSet range = korn::spectral_reference_range(spec);
  json records = json::array();
  for (long period : opt.periods) {
    double grad_min = 0, grad_max = 0, semi_min = 0, semi_max = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
      std::uint64_t seed =
          opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(
                         trial + 1000 * period);
      auto u = korn::PeriodicDisplacement::random(structure.spec, period, seed);
      double grad_sq = korn::seminorm(u, range, korn::SeminormKind::GradPlain);
      double semi_sq = korn::seminorm(u, range, korn::SeminormKind::PatchIso);
      grad_sq *= grad_sq;
      semi_sq *= semi_sq;
      double grad_ratio =
          korn::fourier_weighted_sum(u, korn::SpectralVariant::Grad) / grad_sq;
      double semi_ratio =
          korn::fourier_weighted_sum(u, korn::SpectralVariant::Seminorm) /
          semi_sq;
      if (trial == 0) {
        grad_min = grad_max = grad_ratio;
        semi_min = semi_max = semi_ratio;
      } else {
        grad_min = std::min(grad_min, grad_ratio);
        grad_max = std::max(grad_max, grad_ratio);
        semi_min = std::min(semi_min, semi_ratio);
        semi_max = std::max(semi_max, semi_ratio);
      }
    }
    records.push_back({{"N", period},
                       {"grad", {{"min_ratio", grad_min},
                                 {"max_ratio", grad_max}}},
                       {"seminorm", {{"min_ratio", semi_min},
                                     {"max_ratio", semi_max}}}});
  }

  if (opt.format == "json") {
    json doc;
    doc["trials"] = opt.trials;
    doc["records"] = records;
    emit(opt, doc.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "N,variant,min_ratio,max_ratio\n";
    for (const auto& rec : records) {
      for (const char* variant : {"grad", "seminorm"})
        csv << rec["N"].get<long>() << "," << variant << ","
            << format_double(rec[variant]["min_ratio"].get<double>()) << ","
            << format_double(rec[variant]["max_ratio"].get<double>()) << "\n";
    }
    emit(opt, csv.str());
  } else {
    throw config_error("--format must be csv or json");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Korn-type rigidity seminorms for objective "
               "structures"};
  app.require_subcommand(1);

  CommonOptions analyze_opt, kernel_opt, fourier_opt;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "sweep two seminorms over periods and diagnose growth");
  add_structure_flags(analyze, analyze_opt);
  analyze->add_option("--range", analyze_opt.range,
                      "range expression, e.g. \"id,t,t^2\"");
  analyze->add_option("--range-b", analyze_opt.range_b,
                      "range for the second seminorm (default: --range)");
  analyze->add_option("--norm-a", analyze_opt.norm_a, "first seminorm kind");
  analyze->add_option("--norm-b", analyze_opt.norm_b, "second seminorm kind");
  analyze->add_option("--periods", analyze_opt.periods,
                      "ascending periods, multiples of m0")
      ->delimiter(',');
  analyze->add_option("--seed", analyze_opt.seed, "random seed");

  CLI::App* kernel = app.add_subcommand(
      "kernel", "kernel dimension of a seminorm at the given periods");
  add_structure_flags(kernel, kernel_opt);
  kernel_opt.format = "json";
  kernel->add_option("--range", kernel_opt.range, "range expression");
  kernel->add_option("--norm-a", kernel_opt.norm_a, "seminorm kind");
  kernel->add_option("--periods", kernel_opt.periods, "periods")
      ->delimiter(',');

  CLI::App* fourier = app.add_subcommand(
      "fourier-check",
      "empirical spectral-sum / seminorm ratio extremes (chain, zigzag)");
  add_structure_flags(fourier, fourier_opt);
  fourier_opt.format = "json";
  fourier->add_option("--periods", fourier_opt.periods, "periods")
      ->delimiter(',');
  fourier->add_option("--trials", fourier_opt.trials,
                      "random fields per period");
  fourier->add_option("--seed", fourier_opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (kernel->parsed()) return run_kernel(kernel_opt);
    if (fourier->parsed()) return run_fourier_check(fourier_opt);
    return kExitConfig;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const korn::numeric_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
