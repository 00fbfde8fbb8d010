#include "galcurve/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galcurve/families.hpp"
#include "galcurve/frenet.hpp"
#include "galcurve/golden.hpp"
#include "galcurve/grid.hpp"
#include "galcurve/natural_eq.hpp"
#include "galcurve/sampling.hpp"
#include "galcurve/smarandache.hpp"

namespace galcurve::cli {
namespace {

/// Malformed command-line input; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string short_number(double v) {
  if (v == 0.0) {
    return "0";
  }
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string vec_text(const GVec3& v) {
  return "(" + short_number(v.x1()) + "," + short_number(v.x2()) + "," + short_number(v.x3()) + ")";
}

double parse_real(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return v;
}

ScalarFunction parse_function(const std::string& text, const std::string& flag) {
  try {
    return ScalarFunction::parse(text);
  } catch (const ParseError& e) {
    std::string expected;
    for (const auto& x : e.expected()) {
      expected += (expected.empty() ? "" : ", ") + x;
    }
    throw UsageError(flag + ": " + e.message() + " at offset " + std::to_string(e.offset()) + " (expected " +
                     expected + ")");
  }
}

GridRange range_or_usage(const std::string& text) {
  try {
    return parse_range(text);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error("cannot open " + tmp.string() + " for writing");
    }
    f << content;
    f.flush();
    if (!f) {
      throw Error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

struct ExportOptions {
  std::string format = "csv";
  std::string out_path;
  bool no_meta = false;
};

void add_export_options(CLI::App* cmd, ExportOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
  cmd->add_flag("--no-meta", opts.no_meta, "Leave the generation timestamp out of JSON output");
}

void emit(Polyline p, const ExportOptions& opts, std::ostream& out) {
  p.meta().generated_at = timestamp_utc();
  const std::string text = opts.format == "json" ? to_json(p, !opts.no_meta) : to_csv(p);
  if (opts.out_path.empty()) {
    out << text;
  } else {
    write_atomic(opts.out_path, text);
  }
}

// Family parameters as given on the command line or in a curve spec.
struct FamilyArgs {
  std::string kind;
  std::optional<double> m;
  std::optional<double> kappa0;
  std::optional<double> tau0;
  std::optional<std::string> kappa;
  std::optional<std::string> tau;
};

FamilyParams family_params(const FamilyArgs& a) {
  auto need = [&](bool present, const char* name) {
    if (!present) {
      throw UsageError(a.kind + " needs " + name);
    }
  };
  auto forbid = [&](bool present, const char* name) {
    if (present) {
      throw UsageError(std::string(name) + " is not a parameter of " + a.kind);
    }
  };
  if (a.kind == "general-helix") {
    need(a.m.has_value(), "m");
    need(a.kappa.has_value(), "kappa");
    forbid(a.kappa0.has_value(), "kappa0");
    forbid(a.tau0.has_value(), "tau0");
    forbid(a.tau.has_value(), "tau");
    return GeneralHelixParams{*a.m, parse_function(*a.kappa, "kappa")};
  }
  if (a.kind == "circular-helix") {
    need(a.kappa0.has_value(), "kappa0");
    need(a.tau0.has_value(), "tau0");
    forbid(a.m.has_value(), "m");
    forbid(a.kappa.has_value(), "kappa");
    forbid(a.tau.has_value(), "tau");
    return CircularHelixParams{*a.kappa0, *a.tau0};
  }
  if (a.kind == "salkowski") {
    need(a.kappa0.has_value(), "kappa0");
    need(a.tau.has_value(), "tau");
    forbid(a.m.has_value(), "m");
    forbid(a.kappa.has_value(), "kappa");
    forbid(a.tau0.has_value(), "tau0");
    return SalkowskiParams{*a.kappa0, parse_function(*a.tau, "tau")};
  }
  if (a.kind == "anti-salkowski") {
    need(a.kappa.has_value(), "kappa");
    need(a.tau0.has_value(), "tau0");
    forbid(a.m.has_value(), "m");
    forbid(a.kappa0.has_value(), "kappa0");
    forbid(a.tau.has_value(), "tau");
    return AntiSalkowskiParams{parse_function(*a.kappa, "kappa"), *a.tau0};
  }
  throw UsageError("unknown curve kind '" + a.kind + "'");
}

std::size_t default_steps(std::size_t n) { return 100 * n; }

// Curve spec: example1 | example2 | KIND[:key=value,...]. Keys are the
// family parameters plus domain=s0:s1 and steps=N. Expressions never contain
// ',' so the list needs no quoting.
struct CurveSpec {
  std::string text;
  std::optional<FamilyArgs> family;
  std::optional<Interval> domain;
  std::optional<std::size_t> steps;
};

CurveSpec parse_curve_spec(const std::string& text) {
  CurveSpec spec{text, std::nullopt, std::nullopt, std::nullopt};
  if (text == "example1" || text == "example2") {
    return spec;
  }
  const auto colon = text.find(':');
  FamilyArgs a;
  a.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      if (comma == std::string::npos) {
        comma = rest.size();
      }
      const std::string item = rest.substr(start, comma - start);
      start = comma + 1;
      if (item.empty()) {
        continue;
      }
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw UsageError("curve spec item '" + item + "' must be key=value");
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "m") {
        a.m = parse_real(value, "m");
      } else if (key == "kappa0") {
        a.kappa0 = parse_real(value, "kappa0");
      } else if (key == "tau0") {
        a.tau0 = parse_real(value, "tau0");
      } else if (key == "kappa") {
        a.kappa = value;
      } else if (key == "tau") {
        a.tau = value;
      } else if (key == "domain") {
        const GridRange r = range_or_usage(value + ":2");
        spec.domain = r.domain;
      } else if (key == "steps") {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || n < 2) {
          throw UsageError("invalid steps '" + value + "'");
        }
        spec.steps = n;
      } else {
        throw UsageError("unknown curve spec key '" + key + "'");
      }
    }
  }
  family_params(a);  // validates kind and parameter set early
  spec.family = a;
  return spec;
}

/// Builds the curve for a spec. Families are built on `domain` unless the
/// spec fixes one; examples keep their own domain and are restricted to
/// `domain` when given.
Curve build_curve(const CurveSpec& spec, std::optional<Interval> domain, std::size_t grid_n) {
  if (!spec.family) {
    Curve c = spec.text == "example1" ? example_general_helix() : example_anti_salkowski();
    return domain ? c.restricted(*domain) : c;
  }
  std::optional<Interval> d = spec.domain ? spec.domain : domain;
  if (!d) {
    throw UsageError("curve spec '" + spec.text + "' needs domain=s0:s1 when no --range is given");
  }
  Curve c = make_family(family_params(*spec.family), *d, spec.steps.value_or(default_steps(grid_n)));
  if (spec.domain && domain) {
    c = c.restricted(*domain);
  }
  return c;
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

int run_verify(double tolerance, std::ostream& out) {
  const std::vector<golden::CheckResult> results = golden::run_golden_suite(tolerance);
  std::size_t width = 5;
  for (const auto& r : results) {
    width = std::max(width, r.name.size());
  }
  out << std::left << std::setw(static_cast<int>(width)) << "check"
      << "  result  measured                 tolerance\n";
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.passed ? "PASS  " : "FAIL  ")
        << "  " << std::setw(23) << sci(r.measured) << "  " << sci(r.tolerance) << '\n';
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves of the Galilean 3-space: families, Frenet frames, Smarandache curves"};
  app.name("galcurve");
  app.require_subcommand(1);
  app.footer(
      "Expressions (--kappa, --tau) use s, numbers, + - * / ^, parentheses and\n"
      "sin cos tan exp ln sqrt abs. '^' binds tighter than unary minus: -2^2 = -4.\n"
      "Curve specs: example1 | example2 | KIND:key=value,... with keys m, kappa0,\n"
      "tau0, kappa, tau, domain=s0:s1, steps=N. Ranges are s0:s1:n, endpoints included.");

  FamilyArgs fam;
  std::string range_text;
  std::optional<std::size_t> steps;
  ExportOptions export_opts;

  auto* family = app.add_subcommand("family", "Generate a special curve");
  family->add_option("--kind", fam.kind, "Curve family")
      ->required()
      ->check(CLI::IsMember({"general-helix", "circular-helix", "salkowski", "anti-salkowski"}));
  family->add_option("--m", fam.m, "General helix ratio tau/kappa");
  family->add_option("--kappa0", fam.kappa0, "Constant curvature");
  family->add_option("--tau0", fam.tau0, "Constant torsion");
  family->add_option("--kappa", fam.kappa, "Curvature expression in s");
  family->add_option("--tau", fam.tau, "Torsion expression in s");
  family->add_option("--range", range_text, "s0:s1:n")->required();
  family->add_option("--steps", steps, "Integration steps (default 100*n)");
  add_export_options(family, export_opts);

  std::string curve_text;
  std::optional<double> at;
  auto* frenet = app.add_subcommand("frenet", "Print Frenet frames");
  frenet->add_option("--curve", curve_text, "Curve spec")->required();
  auto* at_opt = frenet->add_option("--at", at, "Single parameter value");
  auto* range_opt = frenet->add_option("--range", range_text, "s0:s1:n");
  at_opt->excludes(range_opt);
  range_opt->excludes(at_opt);

  std::string kind_text;
  auto* smarandache = app.add_subcommand("smarandache", "Generate a TN, TB or TNB Smarandache curve");
  smarandache->add_option("--kind", kind_text, "tn, tb or tnb")->required()->check(CLI::IsMember({"tn", "tb", "tnb"}));
  smarandache->add_option("--curve", curve_text, "Curve spec")->required();
  smarandache->add_option("--range", range_text, "s0:s1:n")->required();
  add_export_options(smarandache, export_opts);

  std::string kappa_text;
  std::string tau_text;
  auto* recon = app.add_subcommand("reconstruct", "Integrate a curve from its natural equations");
  recon->add_option("--kappa", kappa_text, "Curvature expression in s")->required();
  recon->add_option("--tau", tau_text, "Torsion expression in s")->required();
  recon->add_option("--range", range_text, "s0:s1:n")->required();
  recon->add_option("--steps", steps, "Integration steps (default 100*n)");
  add_export_options(recon, export_opts);

  auto* admissible = app.add_subcommand("admissible", "Check admissibility on a grid");
  admissible->add_option("--curve", curve_text, "Curve spec")->required();
  admissible->add_option("--range", range_text, "s0:s1:n")->required();

  double tolerance = 1e-9;
  auto* verify = app.add_subcommand("verify", "Run the golden example suite");
  verify->add_option("--tolerance", tolerance, "Tolerance for exact-derivative comparisons")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*family) {
      const GridRange r = range_or_usage(range_text);
      const Curve c = make_family(family_params(fam), r.domain, steps.value_or(default_steps(r.n)));
      emit(sample_curve(c, r.n), export_opts, out);
    } else if (*frenet) {
      if (!at && range_text.empty()) {
        throw UsageError("frenet needs --at or --range");
      }
      const CurveSpec spec = parse_curve_spec(curve_text);
      if (at) {
        const Curve c = build_curve(spec, std::nullopt, 1);
        const FrenetFrame f = frenet_frame(c, *at);
        out << "T=" << vec_text(f.T) << " N=" << vec_text(f.N) << " B=" << vec_text(f.B)
            << " kappa=" << short_number(f.kappa) << " tau=" << short_number(f.tau) << '\n';
      } else {
        const GridRange r = range_or_usage(range_text);
        const Curve c = build_curve(spec, r.domain, r.n);
        const std::vector<double> grid = uniform_grid(c.domain(), r.n);
        out << "s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau\n";
        for (const FrenetFrame& f : sample_frames(c, grid)) {
          out << format_number(f.s);
          for (const GVec3* v : {&f.T, &f.N, &f.B}) {
            out << ',' << format_number(v->x1()) << ',' << format_number(v->x2()) << ','
                << format_number(v->x3());
          }
          out << ',' << format_number(f.kappa) << ',' << format_number(f.tau) << '\n';
        }
      }
    } else if (*smarandache) {
      const GridRange r = range_or_usage(range_text);
      const Curve c = build_curve(parse_curve_spec(curve_text), r.domain, r.n);
      emit(smarandache_curve(c, *parse_kind(kind_text), r.n), export_opts, out);
    } else if (*recon) {
      const GridRange r = range_or_usage(range_text);
      const NaturalEquations eqs{parse_function(kappa_text, "--kappa"), parse_function(tau_text, "--tau"),
                                 r.domain};
      const Curve c = reconstruct(eqs, steps.value_or(default_steps(r.n)));
      emit(sample_curve(c, r.n), export_opts, out);
    } else if (*admissible) {
      const GridRange r = range_or_usage(range_text);
      const Curve c = build_curve(parse_curve_spec(curve_text), r.domain, r.n);
      const AdmissibilityReport rep = check_admissible(c, r.n);
      out << "admissible: " << (rep.admissible ? "yes" : "no") << '\n'
          << "min_kappa: " << format_number(rep.min_kappa) << '\n'
          << "samples: " << rep.samples << '\n'
          << "isotropic_tangents: none (graph form)\n";
      if (!rep.admissible) {
        out << "reason: " << failure_name(*rep.reason) << '\n';
        if (rep.offending_s) {
          out << "offending_s: " << format_number(*rep.offending_s) << '\n';
        }
        return kExitFailure;
      }
    } else if (*verify) {
      return run_verify(tolerance, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace galcurve::cli
