#include "dkgcs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "dkgcs/coherent.hpp"
#include "dkgcs/io.hpp"
#include "dkgcs/reference_tables.hpp"
#include "dkgcs/spectrum.hpp"
#include "dkgcs/verify.hpp"

namespace dkg {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

// Raised for anything wrong with the user's configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw ParseError("not a finite number: '" + s + "'");
  return v;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

struct PhysOptions {
  std::string curvature = "gaussian";
  std::string alpha = "1/2";
  double R = 1.0;
  double m = 1.0;
};

void add_phys(CLI::App* sub, PhysOptions& o) {
  sub->add_option("--case", o.curvature, "curvature profile: gaussian, rational, sinc")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "Dunkl parameter p/2 with p odd")->capture_default_str();
  sub->add_option("--R", o.R, "curvature constant")->capture_default_str();
  sub->add_option("--m", o.m, "mass")->capture_default_str();
}

struct ProfileOptions {
  PhysOptions phys;
  std::string xi = "0.5+0.2i";
  std::string n_list = "0..5";
  std::string branch;
  std::string tau_list;
  std::string phase = "corrected";
  double x_min = kStandardXMin;
  double x_max = kStandardXMax;
  int points = kStandardPoints;
};

void add_profile(CLI::App* sub, ProfileOptions& o, bool evolve) {
  add_phys(sub, o.phys);
  sub->add_option("--xi", o.xi, "coherent-state parameter, |xi| < 1")->capture_default_str();
  sub->add_option("--n", o.n_list, "quantum numbers: 0..5 or 0,2,4")->capture_default_str();
  sub->add_option("--branch", o.branch, "spectral branch for rational/sinc: plus, minus");
  sub->add_option("--x-min", o.x_min, "grid start (> 0)")->capture_default_str();
  sub->add_option("--x-max", o.x_max, "grid end")->capture_default_str();
  sub->add_option("--points", o.points, "grid points")->capture_default_str();
  sub->add_option("--phase", o.phase, "phase convention: corrected, as-printed")->capture_default_str();
  if (evolve) sub->add_option("--tau", o.tau_list, "evolution times, comma separated")->required();
}

int emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw ConfigError("cannot write output file '" + output + "'");
  file << text;
  return 0;
}

struct ProfileJob {
  CurvatureCase curvature;
  PhysParams phys;
  Complex xi;
  std::vector<int> ns;
  std::vector<double> taus;
  std::optional<Branch> branch;
  PhaseConvention phase;
  std::vector<double> grid;
  bool evolved;
};

ProfileJob validate_profile(const ProfileOptions& o, bool evolve) {
  const CurvatureCase curvature = parse_curvature_case(o.phys.curvature);
  const PhysParams phys = PhysParams::make(DunklAlpha::parse(o.phys.alpha), o.phys.R, o.phys.m);
  const Complex xi = parse_complex(o.xi);
  if (!(std::abs(xi) < 1.0)) {
    throw ConfigError("xi must lie in the open unit disk, got |xi| = " + std::to_string(std::abs(xi)));
  }
  std::optional<Branch> branch;
  if (!o.branch.empty()) branch = parse_branch(o.branch);
  if (curvature != CurvatureCase::kGaussian && !branch) {
    throw ConfigError("--branch plus|minus is required for the " + std::string(to_string(curvature)) + " profile");
  }
  if (curvature == CurvatureCase::kGaussian && branch && *branch == Branch::kMinus) {
    throw ConfigError("the gaussian spectrum has a single branch; omit --branch");
  }
  if (!(o.x_min > 0.0)) throw ConfigError("--x-min must be positive");
  if (!(o.x_max > o.x_min)) throw ConfigError("--x-max must exceed --x-min");
  if (o.points < 2) throw ConfigError("--points must be at least 2");
  return ProfileJob{curvature,
                    phys,
                    xi,
                    parse_n_list(o.n_list),
                    evolve ? parse_real_list(o.tau_list) : std::vector<double>{0.0},
                    branch,
                    parse_phase_convention(o.phase),
                    linear_grid(o.x_min, o.x_max, o.points),
                    evolve};
}

std::string run_profiles(const ProfileJob& job, OutputFormat format, std::ostream& err) {
  std::vector<ProfileBlock> blocks;
  for (int n : job.ns) {
    const Complex lam = coherent_scale(job.curvature, n, job.phys.alpha, job.phys.R, job.phys.m, job.branch);
    std::optional<std::string> warning;
    if (flagged_unstable(job.phys.alpha, n)) {
      warning = "numerically-unstable-profile";
      err << "warning: the n=0, alpha=7/2 profile is numerically unstable\n";
    }
    for (double tau : job.taus) {
      const auto p = CoherentParams::make(job.xi, job.phys.alpha, lam, n, tau, job.phase);
      ProfileMeta meta{job.curvature, job.phys.alpha, n, job.branch, job.xi, tau, job.evolved, job.phase,
                       job.curvature != CurvatureCase::kGaussian, warning};
      blocks.push_back({meta, density_profile(job.grid, p, job.evolved)});
    }
  }
  std::ostringstream os;
  write_profiles(os, blocks, format);
  return os.str();
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args, std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i) {
    if (args[i] == "--config" && i + 1 < limit) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  const std::string s = trim(text);
  std::vector<int> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(trim(s.substr(0, dots)));
    const int hi = parse_int(trim(s.substr(dots + 2)));
    if (lo < 0 || hi < lo) throw ParseError("n range must satisfy 0 <= lo <= hi; got '" + s + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  for (const std::string& item : split(s, ',')) {
    const int n = parse_int(item);
    if (n < 0) throw ParseError("quantum numbers must be non-negative; got '" + item + "'");
    out.push_back(n);
  }
  if (out.empty()) throw ParseError("empty n list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(trim(text), ',')) out.push_back(parse_double(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dunkl-Klein-Gordon spectra, eigenfunctions and SU(1,1) coherent states"};
  app.name("dkgcs");
  app.option_defaults()->take_last();
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text;
  std::string config_path;
  std::string output;
  if (const char* env = std::getenv("DKGCS_FORMAT")) format_text = env;
  if (format_text.empty()) format_text = "csv";
  app.add_option("--format", format_text, "output format: csv, json (default from DKGCS_FORMAT)");
  app.add_option("--config", config_path, "key=value file; explicit flags take precedence");
  app.add_option("-o,--output", output, "write to this file instead of stdout");

  PhysOptions spec_opts;
  std::string spec_n = "0..5";
  std::string spec_radical = "principal";
  auto* spectrum = app.add_subcommand("spectrum", "closed-form energy spectrum");
  add_phys(spectrum, spec_opts);
  spectrum->add_option("--n", spec_n, "quantum numbers: 0..5 or 0,2,4")->capture_default_str();
  spectrum->add_option("--radical", spec_radical, "inner radical: principal, factored")->capture_default_str();

  std::string table_name;
  double table_tol = 1e-2;
  std::string table_radical = "principal";
  auto* table = app.add_subcommand("table", "regenerate a published table and compare entrywise");
  table->add_option("--reproduce", table_name, "table1 (rational) or table2 (sinc)")->required();
  table->add_option("--tol", table_tol, "absolute tolerance per component")->capture_default_str();
  table->add_option("--radical", table_radical, "inner radical: principal, factored")->capture_default_str();

  ProfileOptions density_opts;
  auto* density = app.add_subcommand("density", "normalized coherent-state densities");
  add_profile(density, density_opts, false);

  ProfileOptions evolve_opts;
  auto* evolve = app.add_subcommand("evolve", "time-evolved normalized densities");
  add_profile(evolve, evolve_opts, true);

  VerifyOptions verify_opts;
  std::string suites;
  auto* verify = app.add_subcommand("verify", "run the verification suites (JSON report)");
  verify->add_option("--suite", suites, "comma-separated subset of suites");
  verify->add_option("--grid-h", verify_opts.grid_h, "radial grid spacing")->capture_default_str();
  verify->add_option("--ode-tol", verify_opts.ode_tol)->capture_default_str();
  verify->add_option("--z3-tol", verify_opts.z3_tol)->capture_default_str();
  verify->add_option("--table-tol", verify_opts.table_tol)->capture_default_str();
  verify->add_option("--series-tol", verify_opts.series_tol)->capture_default_str();
  verify->add_option("--consistency-tol", verify_opts.consistency_tol)->capture_default_str();

  std::vector<std::string> args = raw_args;
  try {
    // Config values go in right after the subcommand so that any explicit
    // flag, which comes later, wins under take_last.
    const auto sub_it = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
      return app.get_subcommand_no_throw(a) != nullptr;
    });
    if (const auto path = find_config_path(args, args.size())) {
      std::vector<std::string> injected;
      CLI::App* sub = sub_it == args.end() ? nullptr : app.get_subcommand(*sub_it);
      for (const auto& [key, value] : read_config_file(*path)) {
        const std::string flag = "--" + key;
        if (sub && sub->get_option_no_throw(flag)) {
          injected.push_back(flag);
          injected.push_back(value);
        } else if (key == "format" || key == "output") {
          if (key == "format" && std::find(args.begin(), args.end(), "--format") == args.end()) format_text = value;
          if (key == "output" && output.empty()) output = value;
        } else {
          bool known = false;
          for (const CLI::App* s : app.get_subcommands({})) known = known || s->get_option_no_throw(flag);
          if (!known) throw ConfigError("unknown config key '" + key + "'");
        }
      }
      if (sub_it != args.end()) args.insert(sub_it + 1, injected.begin(), injected.end());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  // Validation phase: anything thrown here is a configuration error.
  OutputFormat format = OutputFormat::kCsv;
  std::optional<ProfileJob> job;
  std::optional<SpectrumTable> spectrum_rows;
  std::optional<ReferenceTable> reference;
  RadicalForm radical = RadicalForm::kPrincipal;
  try {
    format = parse_output_format(format_text);
    if (spectrum->parsed()) {
      const CurvatureCase c = parse_curvature_case(spec_opts.curvature);
      const DunklAlpha alpha = DunklAlpha::parse(spec_opts.alpha);
      // R = 0 is the flat limit, where E^2 = m^2.
      if (!(spec_opts.R >= 0.0)) throw ConfigError("--R must be non-negative");
      if (!(spec_opts.m > 0.0)) throw ConfigError("--m must be positive");
      const std::vector<int> ns = parse_n_list(spec_n);
      radical = parse_radical_form(spec_radical);
      SpectrumTable t{c, spec_opts.R, spec_opts.m, {}};
      for (int n : ns) t.rows.push_back({alpha, energy_pair(c, n, alpha, spec_opts.R, spec_opts.m, radical)});
      spectrum_rows = std::move(t);
    } else if (table->parsed()) {
      reference = parse_reference_table(table_name);
      radical = parse_radical_form(table_radical);
      if (!(table_tol > 0.0)) throw ConfigError("--tol must be positive");
    } else if (density->parsed()) {
      job = validate_profile(density_opts, false);
    } else if (evolve->parsed()) {
      job = validate_profile(evolve_opts, true);
    } else if (verify->parsed()) {
      if (!suites.empty()) verify_opts.suites = split(suites, ',');
      for (const std::string& s : verify_opts.suites) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
          throw ConfigError("unknown suite '" + s + "'");
        }
      }
      if (!(verify_opts.grid_h > 0.0) || verify_opts.grid_h > 0.05) throw ConfigError("--grid-h must lie in (0, 0.05]");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    std::ostringstream os;
    int status = 0;
    if (spectrum_rows) {
      write_spectrum(os, *spectrum_rows, format);
    } else if (reference) {
      const TableComparison cmp = compare_with_reference(*reference, table_tol, radical);
      write_table_comparison(os, cmp, format);
      if (!cmp.all_within()) {
        err << to_string(*reference) << ": " << cmp.failures() << " entries exceed tolerance " << table_tol
            << " (max deviation " << cmp.max_deviation << ")\n";
        status = kExitFailure;
      }
    } else if (job) {
      os << run_profiles(*job, format, err);
    } else {
      const VerifyReport report = run_verify(verify_opts);
      write_verify_report(os, report);
      if (!report.ok()) {
        for (const Check& c : report.checks) {
          if (c.status == CheckStatus::kFail) err << "FAIL " << c.suite << ": " << c.name << " = " << c.value << '\n';
        }
        status = kExitFailure;
      }
    }
    emit(os.str(), output, out);
    return status;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace dkg
