// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. argv[1] is the path of the galcurve executable.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "galcurve/expr.hpp"
#include "galcurve/families.hpp"
#include "galcurve/frenet.hpp"
#include "galcurve/grid.hpp"
#include "galcurve/natural_eq.hpp"
#include "galcurve/polyline.hpp"
#include "galcurve/smarandache.hpp"

using namespace galcurve;
using std::numbers::pi;

namespace {

struct ClosedForm {
  GVec3 T, N, B;
  GVec3 tn, tb, tnb;
};

// General helix example; the tangent's second component is
// cos(ln s) sin(ln s).
ClosedForm example1(double s) {
  const double l = std::log(s);
  const double cl = std::cos(l);
  const double sl = std::sin(l);
  const double c = std::cos(2 * l);
  const double sn = std::sin(2 * l);
  return {{1, cl * sl, -c / 2},         {0, c, sn},          {0, -sn, c},
          {1, c + cl * sl, -c / 2 + sn}, {1, -cl * sl, c / 2}, {1, c - cl * sl, c / 2 + sn}};
}

ClosedForm example2(double s) {
  const double e = std::exp(-s);
  const double c = std::cos(2 * s);
  const double sn = std::sin(2 * s);
  return {{1, -e / 5 * (c - 2 * sn), -e / 5 * (2 * c + sn)},
          {0, c, sn},
          {0, -sn, c},
          {1, c - e / 5 * (c - 2 * sn), sn - e / 5 * (2 * c + sn)},
          {1, -e / 5 * (c + (-2 + 5 * std::exp(s)) * sn), c - e / 5 * (2 * c + sn)},
          {1, c - e / 5 * (c - 2 * sn) - sn, c + sn - e / 5 * (2 * c + sn)}};
}

struct Golden {
  Curve curve;
  std::function<double(double)> kappa;
  std::function<double(double)> tau;
  ClosedForm (*closed_form)(double);
};

std::vector<Golden> goldens() {
  return {{example_general_helix(), [](double s) { return 1 / s; }, [](double s) { return 2 / s; }, example1},
          {example_anti_salkowski(), [](double s) { return std::exp(-s); }, [](double) { return 2.0; }, example2}};
}

std::vector<Curve> family_curves() {
  const Interval d{0.0, 2.0};
  return {make_general_helix(2.0, ScalarFunction::parse("1/(1+s)"), d), make_circular_helix(1.0, 2.0, d),
          make_salkowski(1.0, ScalarFunction::parse("s"), d),
          make_anti_salkowski(ScalarFunction::parse("exp(-s)"), 2.0, d)};
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
  std::printf("AC%-2d %s  %-34s %s\n", id, ok ? "PASS" : "FAIL", what, detail.c_str());
  failures += ok ? 0 : 1;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Criteria 1 and 2.
void natural_equations(int id, const Golden& g, const char* what) {
  double worst = 0.0;
  for (double s : uniform_grid(g.curve.domain(), 101)) {
    worst = std::max({worst, rel(curvature(g.curve, s), g.kappa(s)), rel(torsion(g.curve, s), g.tau(s))});
  }
  report(id, what, worst <= 1e-9, "max rel err " + num(worst) + " (tol 1e-9)");
}

void frames() {
  double worst = 0.0;
  for (const Golden& g : goldens()) {
    for (double s : uniform_grid(g.curve.domain(), 101)) {
      const FrenetFrame f = frenet_frame(g.curve, s);
      const ClosedForm p = g.closed_form(s);
      worst = std::max({worst, max_abs_diff(f.T, p.T), max_abs_diff(f.N, p.N), max_abs_diff(f.B, p.B)});
    }
  }
  report(3, "golden frames", worst <= 1e-9, "max abs err " + num(worst) + " (tol 1e-9)");
}

void smarandache() {
  double worst = 0.0;
  for (const Golden& g : goldens()) {
    const Polyline tn = smarandache_curve(g.curve, SmarandacheKind::TN, 101);
    const Polyline tb = smarandache_curve(g.curve, SmarandacheKind::TB, 101);
    const Polyline tnb = smarandache_curve(g.curve, SmarandacheKind::TNB, 101);
    for (std::size_t i = 0; i < 101; ++i) {
      const ClosedForm p = g.closed_form(tn[i].s);
      auto diff = [](const Sample& q, const GVec3& want) { return max_abs_diff(GVec3(q.x, q.y, q.z), want); };
      worst = std::max({worst, diff(tn[i], p.tn), diff(tb[i], p.tb), diff(tnb[i], p.tnb)});
    }
  }
  report(4, "Smarandache closed forms", worst <= 1e-9, "max abs err " + num(worst) + " (tol 1e-9)");
}

std::vector<double> interior(const Interval& d, int count) {
  std::vector<double> out;
  for (int i = 1; i <= count; ++i) {
    out.push_back(d.lo + d.width() * i / (count + 1));
  }
  return out;
}

void residuals() {
  std::vector<Curve> curves = family_curves();
  for (const Golden& g : goldens()) {
    curves.push_back(g.curve);
  }
  double worst = 0.0;
  for (const Curve& c : curves) {
    for (double s : interior(c.domain(), 25)) {
      worst = std::max(worst, frenet_residuals(c, s).max());
    }
  }
  report(5, "Frenet-equation residuals", worst < 1e-4, "max residual " + num(worst) + " (tol 1e-4)");
}

double helix_error(std::size_t n) {
  const Curve c = reconstruct({ScalarFunction::parse("1"), ScalarFunction::parse("1"), {0.0, pi}}, n);
  const GVec3 p = c.point(pi);
  return std::hypot(p.x2() - 2.0, p.x3() - pi);
}

void reconstruction() {
  const double e4096 = helix_error(4096);
  const double e512 = helix_error(512);
  const double e1024 = helix_error(1024);
  const double e2048 = helix_error(2048);
  const double r1 = e512 / e1024;
  const double r2 = e1024 / e2048;
  const bool ok = e4096 <= 1e-6 && r1 >= 12 && r1 <= 20 && r2 >= 12 && r2 <= 20;
  char detail[160];
  std::snprintf(detail, sizeof detail, "endpoint err %.3e (tol 1e-6), ratios %.2f %.2f (want [12,20])", e4096, r1,
                r2);
  report(6, "reconstruction oracle", ok, detail);
}

void round_trip() {
  const NaturalEquations eqs{ScalarFunction::parse("exp(-s)"), ScalarFunction::parse("2"), {0.0, 2.0}};
  const Curve c = reconstruct(eqs, 4096);
  double worst = 0.0;
  for (double s : uniform_grid(eqs.domain, 21)) {
    worst = std::max({worst, std::abs(curvature(c, s) - std::exp(-s)), std::abs(torsion(c, s) - 2.0)});
  }
  report(7, "round trip", worst < 1e-5, "max err " + num(worst) + " (tol 1e-5)");
}

void identities() {
  std::vector<Curve> curves = family_curves();
  for (const Golden& g : goldens()) {
    curves.push_back(g.curve);
  }
  double cross_err = 0.0;
  double ortho_err = 0.0;
  bool unit = true;
  std::size_t frames = 0;
  for (const Curve& c : curves) {
    for (double s : uniform_grid(c.domain(), 101)) {
      const FrenetFrame f = frenet_frame(c, s);
      ++frames;
      cross_err = std::max(cross_err, max_abs_diff(cross(f.T, f.N), f.B));
      ortho_err = std::max({ortho_err, std::abs(dot(f.N, f.N) - 1), std::abs(dot(f.B, f.B) - 1),
                            std::abs(dot(f.N, f.B))});
      unit = unit && norm(f.T + f.N) == 1.0 && norm(f.T + f.B) == 1.0 && norm(f.T + f.N + f.B) == 1.0;
    }
  }
  const bool ok = cross_err <= 1e-12 && ortho_err <= 1e-9 && unit;
  report(8, "structural identities", ok,
         std::to_string(frames) + " frames, cross err " + num(cross_err) + ", orthonormality err " + num(ortho_err) +
             (unit ? ", norms exactly 1" : ", norm != 1"));
}

void degeneration() {
  const Interval d{0.0, 2.0};
  const Curve circ = make_circular_helix(1.0, 2.0, d);
  const Curve sal = make_salkowski(1.0, ScalarFunction::parse("2"), d);
  const Curve anti = make_anti_salkowski(ScalarFunction::parse("1"), 2.0, d);
  double worst = 0.0;
  for (double s : uniform_grid(d, 201)) {
    worst = std::max({worst, max_abs_diff(sal.point(s), circ.point(s)), max_abs_diff(anti.point(s), circ.point(s))});
  }
  report(9, "family degeneration", worst <= 1e-6, "max diff " + num(worst) + " (tol 1e-6)");
}

struct Case {
  const char* text;
  double (*value)(double);
};

// Evaluated at s = 1.75; the C++ expressions mirror the intended precedence.
const std::array<Case, 50> kCorpus{{
    {"1+2*3", [](double) { return 1.0 + 2.0 * 3.0; }},
    {"(1+2)*3", [](double) { return (1.0 + 2.0) * 3.0; }},
    {"2^3^2", [](double) { return std::pow(2.0, 9.0); }},
    {"(2^3)^2", [](double) { return 64.0; }},
    {"-2^2", [](double) { return -4.0; }},
    {"(-2)^2", [](double) { return 4.0; }},
    {"2^-1", [](double) { return 0.5; }},
    {"8/4/2", [](double) { return 1.0; }},
    {"8/(4/2)", [](double) { return 4.0; }},
    {"10-4-3", [](double) { return 3.0; }},
    {"10-(4-3)", [](double) { return 9.0; }},
    {"--3", [](double) { return 3.0; }},
    {"-s", [](double s) { return -s; }},
    {"s", [](double s) { return s; }},
    {"1/s", [](double s) { return 1.0 / s; }},
    {"2/s", [](double s) { return 2.0 / s; }},
    {"exp(-s)", [](double s) { return std::exp(-s); }},
    {"2", [](double) { return 2.0; }},
    {"s^2", [](double s) { return std::pow(s, 2.0); }},
    {"-s^2", [](double s) { return -std::pow(s, 2.0); }},
    {"2*s^2", [](double s) { return 2.0 * std::pow(s, 2.0); }},
    {"s*s*s", [](double s) { return s * s * s; }},
    {"1/(1+s^2)", [](double s) { return 1.0 / (1.0 + std::pow(s, 2.0)); }},
    {"sin(s)", [](double s) { return std::sin(s); }},
    {"cos(2*s)", [](double s) { return std::cos(2.0 * s); }},
    {"tan(s/4)", [](double s) { return std::tan(s / 4.0); }},
    {"ln(s)", [](double s) { return std::log(s); }},
    {"sqrt(s)", [](double s) { return std::sqrt(s); }},
    {"abs(1-s)", [](double s) { return std::abs(1.0 - s); }},
    {"exp(-s)*cos(2*s)", [](double s) { return std::exp(-s) * std::cos(2.0 * s); }},
    {"sin(s)^2+cos(s)^2", [](double s) { return std::pow(std::sin(s), 2.0) + std::pow(std::cos(s), 2.0); }},
    {"sin(ln(s))*cos(ln(s))", [](double s) { return std::sin(std::log(s)) * std::cos(std::log(s)); }},
    {"cos(2*ln(s))/s", [](double s) { return std::cos(2.0 * std::log(s)) / s; }},
    {"1.5e2", [](double) { return 150.0; }},
    {"2.5E-1*s", [](double s) { return 0.25 * s; }},
    {".5+s", [](double s) { return 0.5 + s; }},
    {"3.", [](double) { return 3.0; }},
    {"3.14159*s", [](double s) { return 3.14159 * s; }},
    {"exp(1)", [](double) { return std::exp(1.0); }},
    {"2*3.5*s", [](double s) { return 2.0 * 3.5 * s; }},
    {"exp(1)^s", [](double s) { return std::pow(std::exp(1.0), s); }},
    {"s-1-1", [](double s) { return s - 1.0 - 1.0; }},
    {"s-(1-1)", [](double s) { return s - (1.0 - 1.0); }},
    {"s/2*3", [](double s) { return s / 2.0 * 3.0; }},
    {"s/(2*3)", [](double s) { return s / (2.0 * 3.0); }},
    {"-(s+1)", [](double s) { return -(s + 1.0); }},
    {"2^(s+1)", [](double s) { return std::pow(2.0, s + 1.0); }},
    {"((s))", [](double s) { return s; }},
    {" 1 +\ts ", [](double s) { return 1.0 + s; }},
    {"sqrt(abs(-s))*-1", [](double s) { return std::sqrt(std::abs(-s)) * -1.0; }},
}};

void parser() {
  const double s = 1.75;
  int bad = 0;
  std::string first_bad;
  for (const Case& c : kCorpus) {
    const expr::Expression e = expr::parse(c.text);
    const std::string canonical = expr::to_string(e);
    const expr::Expression again = expr::parse(canonical);
    const expr::EvalResult r = expr::eval_expr(e, s);
    const double want = c.value(s);
    const bool ok = again == e && expr::to_string(again) == canonical && r.ok() &&
                    std::abs(r.value - want) <= 1e-15 * std::abs(want);
    if (!ok) {
      ++bad;
      if (first_bad.empty()) {
        first_bad = c.text;
      }
    }
  }
  // Hand values of the example natural equations.
  struct Hand {
    const char* text;
    double s;
    double value;
  };
  const Hand hand[] = {{"1/s", 0.5, 2.0},  {"1/s", 4.0, 0.25},         {"2/s", 0.5, 4.0},
                       {"2/s", 3.0, 2.0 / 3.0}, {"exp(-s)", 0.0, 1.0}, {"exp(-s)", 1.0, 0.36787944117144233},
                       {"exp(-s)", 2.0, 0.1353352832366127}, {"2", 7.0, 2.0}};
  for (const Hand& h : hand) {
    const expr::EvalResult r = expr::eval_expr(expr::parse(h.text), h.s);
    if (!r.ok() || std::abs(r.value - h.value) > 1e-15 * std::abs(h.value)) {
      ++bad;
      if (first_bad.empty()) {
        first_bad = h.text;
      }
    }
  }
  report(10, "parser corpus", bad == 0,
         std::to_string(kCorpus.size()) + " expressions + " + std::to_string(std::size(hand)) + " hand values" +
             (bad ? ", " + std::to_string(bad) + " bad, first '" + first_bad + "'" : ""));
}

bool capture(const std::string& command, std::string& out) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    return false;
  }
  std::array<char, 4096> buf;
  out.clear();
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  return pclose(pipe) == 0;
}

void cli_determinism(const std::string& exe) {
  const std::vector<std::string> commands{
      "family --kind circular-helix --kappa0 1 --tau0 1 --range 0:3.14159265:101",
      "family --kind general-helix --m 2 --kappa '1/(1+s)' --range 0:2:101",
      "smarandache --kind tnb --curve example1 --range 0.5:3:101",
      "smarandache --kind tb --curve example2 --range 0:2:101",
      "reconstruct --kappa 'exp(-s)' --tau 2 --range 0:2:101",
  };
  int bad = 0;
  for (const std::string& cmd : commands) {
    const std::string base = "'" + exe + "' " + cmd + " --no-meta";
    std::string csv1, csv2, json1, json2;
    const bool ran = capture(base + " --format csv", csv1) && capture(base + " --format csv", csv2) &&
                     capture(base + " --format json", json1) && capture(base + " --format json", json2);
    bool ok = ran && csv1 == csv2 && json1 == json2;
    if (ok) {
      const Polyline a = polyline_from_csv(csv1);
      const Polyline b = polyline_from_json(json1);
      ok = a.size() == 101 && a.size() == b.size();
      for (std::size_t i = 0; ok && i < a.size(); ++i) {
        ok = a[i] == b[i];
      }
    }
    bad += ok ? 0 : 1;
  }
  report(11, "CLI determinism", bad == 0,
         std::to_string(commands.size() - bad) + "/" + std::to_string(commands.size()) +
             " commands byte-identical with matching CSV/JSON");
}

template <class Fn>
void guarded(int id, const char* what, Fn fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(id, what, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Golden> g = goldens();
  guarded(1, "natural equations, example 1", [&] { natural_equations(1, g[0], "natural equations, example 1"); });
  guarded(2, "natural equations, example 2", [&] { natural_equations(2, g[1], "natural equations, example 2"); });
  guarded(3, "golden frames", frames);
  guarded(4, "Smarandache closed forms", smarandache);
  guarded(5, "Frenet-equation residuals", residuals);
  guarded(6, "reconstruction oracle", reconstruction);
  guarded(7, "round trip", round_trip);
  guarded(8, "structural identities", identities);
  guarded(9, "family degeneration", degeneration);
  guarded(10, "parser corpus", parser);
  if (argc > 1) {
    guarded(11, "CLI determinism", [&] { cli_determinism(argv[1]); });
  } else {
    report(11, "CLI determinism", false, "no executable path given");
  }
  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " failed").c_str());
  return failures == 0 ? 0 : 1;
}
