#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "unit_shapes/curve.hpp"
#include "unit_shapes/errors.hpp"
#include "unit_shapes/family_catalog.hpp"
#include "unit_shapes/optimizer.hpp"
#include "unit_shapes/sampling.hpp"
#include "unit_shapes/shape_json.hpp"
#include "unit_shapes/solids3d.hpp"
#include "unit_shapes/unitizer.hpp"
#include "unit_shapes/verifier.hpp"

namespace unit_shapes::cli {
namespace {

using std::numbers::pi;
using ordered_json = nlohmann::ordered_json;

enum class Format { Pretty, Json, Csv };

struct GlobalOptions {
  Format format = Format::Pretty;
  std::optional<double> tolerance;
  bool degrees = false;
  std::uint64_t seed = 42;
};

struct FamilyOptions {
  std::string family;
  std::optional<double> r;
  std::optional<double> s;
  std::optional<double> theta;
  std::optional<int> m;
};

ordered_json ordered(const nlohmann::json& j) { return ordered_json::parse(j.dump()); }

std::string number(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

double angle_in(double value, const GlobalOptions& g) { return g.degrees ? value * pi / 180.0 : value; }

FamilyParam family_from_options(const FamilyOptions& f, const GlobalOptions& g) {
  nlohmann::json j = {{"family", f.family}};
  if (f.r) j["r"] = *f.r;
  if (f.s) j["s"] = *f.s;
  if (f.theta) j["theta"] = angle_in(*f.theta, g);
  if (f.m) j["m"] = *f.m;
  return family_from_json(j);
}

ordered_json catalog_entry(const FamilyParam& p) {
  const Shape shape = build_unit_shape(p);
  ordered_json j;
  j["family"] = family_name(p);
  j["Pi"] = fundamental_measure(p);
  ordered_json params = ordered(to_json(p));
  params.erase("family");
  j["params"] = params;
  j["kernel_area"] = area(shape);
  j["kernel_semiperimeter"] = semiperimeter(shape);
  return j;
}

int run_catalog(const FamilyOptions& f, const GlobalOptions& g, std::ostream& out) {
  std::vector<FamilyParam> params;
  if (f.family.empty()) {
    params = default_catalog();
  } else {
    params.push_back(family_from_options(f, g));
  }

  switch (g.format) {
    case Format::Json:
      if (params.size() == 1) {
        out << catalog_entry(params.front()).dump() << '\n';
      } else {
        for (const auto& p : params) out << catalog_entry(p).dump() << '\n';
      }
      break;
    case Format::Csv:
      out << "family,params,Pi\n";
      for (const auto& p : params) {
        out << family_name(p) << ',' << params_string(p) << ',' << number(fundamental_measure(p)) << '\n';
      }
      break;
    case Format::Pretty:
      out << std::left << std::setw(18) << "family" << std::setw(44) << "params"
          << "Pi\n";
      out << std::setprecision(12);
      for (const auto& p : params) {
        out << std::setw(18) << family_name(p) << std::setw(44) << params_string(p) << fundamental_measure(p)
            << '\n';
      }
      break;
  }
  return kExitOk;
}

nlohmann::json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return nlohmann::json::parse(in);
  std::ifstream file(path);
  if (!file) throw ShapeError("cannot open '" + path + "'");
  return nlohmann::json::parse(file);
}

int run_unitize(const std::string& shape_path, const FamilyOptions& f, const GlobalOptions& g, std::istream& in,
                std::ostream& out) {
  const Shape shape = !shape_path.empty() ? shape_from_json(read_json(shape_path, in))
                      : !f.family.empty() ? build_unit_shape(family_from_options(f, g))
                                          : throw ShapeError("unitize needs --shape or --family");
  const UnitizationResult result = unitize(shape);
  switch (g.format) {
    case Format::Json: {
      ordered_json j;
      j["tong_inradius_reciprocal"] = result.tong_inradius_reciprocal;
      j["fundamental_measure"] = result.fundamental_measure;
      j["unit_shape"] = ordered(to_json(result.unit_shape));
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "tong_inradius_reciprocal,fundamental_measure,area,semiperimeter\n"
          << number(result.tong_inradius_reciprocal) << ',' << number(result.fundamental_measure) << ','
          << number(area(result.unit_shape)) << ',' << number(semiperimeter(result.unit_shape)) << '\n';
      break;
    case Format::Pretty:
      out << std::setprecision(12) << "scale (S/A):          " << result.tong_inradius_reciprocal << '\n'
          << "tong inradius (A/S):  " << 1.0 / result.tong_inradius_reciprocal << '\n'
          << "fundamental measure:  " << result.fundamental_measure << '\n'
          << "unit shape area:      " << area(result.unit_shape) << '\n'
          << "unit shape semiperim: " << semiperimeter(result.unit_shape) << '\n';
      break;
  }
  return kExitOk;
}

std::pair<double, double> default_bracket(Family1D family) {
  switch (family) {
    case Family1D::RightTriangle: return {0.01, 0.5 * pi - 0.01};
    case Family1D::Rectangle: return {0.01, 100.0};
    case Family1D::Rhombus: return {0.01, pi - 0.01};
    case Family1D::Ellipse: return {0.01, 0.99};
  }
  return {0.0, 1.0};
}

bool is_angle_family(Family1D family) {
  return family == Family1D::RightTriangle || family == Family1D::Rhombus;
}

void print_minimization(const std::string& family, const MinimizationResult& result, const GlobalOptions& g,
                        std::ostream& out) {
  switch (g.format) {
    case Format::Json: {
      ordered_json j;
      j["family"] = family;
      j["argmin"] = result.argmin;
      j["min_value"] = result.min_value;
      j["iterations"] = result.iterations;
      j["converged"] = result.converged;
      if (result.boundary_infimum) j["boundary_infimum"] = *result.boundary_infimum;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv: {
      out << "family,argmin,min_value,iterations,converged,boundary_infimum\n" << family << ',';
      for (std::size_t i = 0; i < result.argmin.size(); ++i) {
        out << (i ? ";" : "") << number(result.argmin[i]);
      }
      out << ',' << number(result.min_value) << ',' << result.iterations << ','
          << (result.converged ? "true" : "false") << ','
          << (result.boundary_infimum ? number(*result.boundary_infimum) : "") << '\n';
      break;
    }
    case Format::Pretty:
      out << std::setprecision(12) << "family:     " << family << "\nargmin:     (";
      for (std::size_t i = 0; i < result.argmin.size(); ++i) out << (i ? ", " : "") << result.argmin[i];
      out << ")\nmin value:  " << result.min_value << "\niterations: " << result.iterations
          << "\nconverged:  " << (result.converged ? "yes" : "no") << '\n';
      if (result.boundary_infimum) {
        out << "infimum at domain edge (not attained): " << *result.boundary_infimum << '\n';
      }
      break;
  }
}

int run_minimize(const std::string& family, std::optional<double> lo, std::optional<double> hi,
                 const GlobalOptions& g, std::ostream& out) {
  if (auto f1 = family_1d_from_string(family)) {
    auto [default_lo, default_hi] = default_bracket(*f1);
    const double a = lo ? (is_angle_family(*f1) ? angle_in(*lo, g) : *lo) : default_lo;
    const double b = hi ? (is_angle_family(*f1) ? angle_in(*hi, g) : *hi) : default_hi;
    print_minimization(family, minimize_1d(*f1, a, b, g.tolerance.value_or(1e-10)), g, out);
    return kExitOk;
  }
  if (auto f2 = family_2d_from_string(family)) {
    Minimize2dOptions options;
    if (g.tolerance) options.nelder_mead.parameter_tolerance = *g.tolerance;
    print_minimization(family, minimize_2d(*f2, options), g, out);
    return kExitOk;
  }
  throw DomainError("minimize: unsupported family '" + family +
                    "' (right_triangle, rectangle, rhombus, ellipse, triangle, parallelogram)");
}

int run_scan(const std::string& quantity, const std::string& family, double lo, double hi, int n,
             const GlobalOptions& g, std::ostream& out) {
  ScanRequest request;
  request.n = n;
  bool angular = false;
  if (quantity == "pi") {
    request.quantity = ScanQuantity::FundamentalMeasure;
    request.family = family_1d_from_string(family);
    if (!request.family) throw DomainError("scan: --family must be a one-parameter family for --quantity pi");
    angular = is_angle_family(*request.family);
  } else if (quantity == "a") {
    request.quantity = ScanQuantity::EllipseSemiMinor;
  } else if (quantity == "h") {
    request.quantity = ScanQuantity::RhombusShortDiagonal;
    angular = true;
  } else {
    throw DomainError("scan: unknown quantity '" + quantity + "'");
  }
  request.lo = angular ? angle_in(lo, g) : lo;
  request.hi = angular ? angle_in(hi, g) : hi;

  const ScanTable table = scan(request);
  switch (g.format) {
    case Format::Csv: out << scan_to_csv(table); break;
    case Format::Json: out << ordered(to_json(table)).dump() << '\n'; break;
    case Format::Pretty: {
      out << std::setprecision(12) << "points: " << table.x.size() << '\n';
      for (const auto& run : table.runs) {
        out << (run.direction > 0 ? "increasing" : run.direction < 0 ? "decreasing" : "flat") << " on ["
            << table.x[run.begin] << ", " << table.x[run.end] << "]\n";
      }
      out << "min " << table.values[table.argmin] << " at " << table.x[table.argmin] << '\n'
          << "max " << table.values[table.argmax] << " at " << table.x[table.argmax] << '\n'
          << "endpoints: f(" << table.x.front() << ") = " << table.values.front() << ", f(" << table.x.back()
          << ") = " << table.values.back() << '\n';
      break;
    }
  }
  return kExitOk;
}

// Verification suites. ----------------------------------------------------

Shape random_catalog_shape(Rng& rng) {
  return apply_similarity(random_similarity(rng), build_unit_shape(random_family_param(rng)));
}

VerificationReport suite_isoperimetric(int samples, double tol, Rng& rng) {
  VerificationReport total;
  total.claim = "isoperimetric_inequality";
  total.merge(check_isoperimetric(make_circle({0.0, 0.0}, 1.0), tol));
  total.merge(check_isoperimetric(make_rational_circle(), tol));
  for (const auto& p : default_catalog()) total.merge(check_isoperimetric(build_unit_shape(p), tol));
  for (int i = 0; i < samples; ++i) total.merge(check_isoperimetric(random_catalog_shape(rng), tol));
  for (int i = 0; i < samples; ++i) {
    total.merge(check_isoperimetric(random_simple_polygon(rng.uniform_int(3, 8), rng), tol));
  }
  return total;
}

VerificationReport suite_unit_floor(int samples, double tol, Rng& rng) {
  VerificationReport total;
  total.claim = "unit_shape_floor";
  total.merge(check_unit_floor(unitize(make_circle({1.0, -2.0}, 5.0)), tol));
  for (const auto& p : default_catalog()) total.merge(check_unit_floor(unitize(build_unit_shape(p)), tol));
  for (int i = 0; i < samples; ++i) total.merge(check_unit_floor(unitize(random_catalog_shape(rng)), tol));
  return total;
}

VerificationReport suite_scale_equivalence(int samples, double tol, Rng& rng) {
  VerificationReport total;
  total.claim = "scale_equivalence";
  const std::vector<double> kappas = {0.5, 1.0, 3.0};
  const Shape square = build_unit_shape(Rectangle{1.0});
  const Shape circle = make_circle({0.0, 0.0}, 1.0);
  total.merge(check_scale_equivalence(square, 4.0, kappas, tol));
  total.merge(check_scale_equivalence(circle, 3.0, kappas, tol));
  total.merge(check_scale_equivalence(circle, 3.2, kappas, tol));
  for (int i = 0; i < samples; ++i) {
    const FamilyParam p = random_family_param(rng);
    const Shape unit = build_unit_shape(p);
    const double measure = fundamental_measure(p);
    const double rho = measure * rng.uniform(0.8, 1.2);
    std::vector<double> sampled = {rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)};
    total.merge(check_scale_equivalence(unit, rho, sampled, tol));
  }
  return total;
}

std::vector<VerificationReport> suite_mgon(int samples, double tol, std::uint64_t seed) {
  std::vector<VerificationReport> reports;
  for (int m = 3; m <= 6; ++m) {
    auto shapes = random_simple_polygons(m, samples, seed + static_cast<std::uint64_t>(m));
    const Shape regular = build_unit_shape(RegularPolygon{m});
    shapes.push_back(regular);
    shapes.push_back(apply_similarity(Similarity{{0.7, true, {3.0, -1.0}}, 2.5}, regular));
    reports.push_back(check_mgon_bound(m, shapes, tol));
  }
  return reports;
}

VerificationReport suite_blob(int samples, double tol, Rng& rng) {
  VerificationReport total;
  total.claim = "blob_pythagoras";
  for (int i = 0; i < samples; ++i) {
    const Shape base = random_catalog_shape(rng);
    const double a = rng.uniform(0.2, 5.0);
    const double b = rng.uniform(0.2, 5.0);
    const double c = std::hypot(a, b);
    total.merge(check_blob_pythagoras(base, {a, b, c}, tol));
    total.merge(check_blob_pythagoras(base, {a, b, c * rng.uniform(1.01, 1.5)}, tol));
  }
  return total;
}

VerificationReport suite_calculus(double /*tol*/) {
  VerificationReport total;
  total.claim = "calculus_friendly_indexing";
  for (const auto& p : default_catalog()) {
    total.merge(check_calculus_friendly({build_unit_shape(p), {0.5, 1.0, 2.0}}));
  }
  total.merge(check_calculus_friendly({make_circle({0.0, 0.0}, 1.0), {0.5, 1.0, 2.0}}));
  return total;
}

void print_reports(const std::vector<VerificationReport>& reports, const GlobalOptions& g, std::ostream& out) {
  switch (g.format) {
    case Format::Json:
      for (const auto& r : reports) out << ordered(to_json(r)).dump() << '\n';
      break;
    case Format::Csv:
      out << "claim,instances,worst_slack,equality_cases,pass\n";
      for (const auto& r : reports) {
        out << r.claim << ',' << r.instances << ',' << number(r.worst_slack) << ',' << r.equality_cases << ','
            << (r.pass() ? "true" : "false") << '\n';
      }
      break;
    case Format::Pretty:
      for (const auto& r : reports) {
        out << (r.pass() ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.claim << " instances=" << r.instances
            << " worst_slack=" << std::setprecision(6) << r.worst_slack << " equality=" << r.equality_cases << '\n';
        for (const auto& c : r.counterexamples) out << "    " << c << '\n';
      }
      break;
  }
}

int run_verify(const std::string& suite, int samples, const GlobalOptions& g, std::ostream& out) {
  const double tol = g.tolerance.value_or(kEqualityTolerance);
  Rng rng(g.seed);
  std::vector<VerificationReport> reports;
  const bool all = suite == "all";
  bool known = all;

  auto want = [&](const char* name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };

  if (want("isoperimetric")) reports.push_back(suite_isoperimetric(samples, tol, rng));
  if (want("unit-floor")) reports.push_back(suite_unit_floor(samples, tol, rng));
  if (want("scale-equivalence")) reports.push_back(suite_scale_equivalence(samples, tol, rng));
  if (want("mgon")) {
    for (auto& r : suite_mgon(samples, tol, g.seed)) reports.push_back(std::move(r));
  }
  if (want("blob")) reports.push_back(suite_blob(std::max(1, samples / 5), tol, rng));
  if (want("rational")) reports.push_back(check_rational_circle(tol));
  if (want("calculus")) reports.push_back(suite_calculus(tol));
  if (want("conciliation")) reports.push_back(conciliation_checks());
  if (want("solids")) reports.push_back(table_check());
  if (!known) throw DomainError("verify: unknown suite '" + suite + "'");

  print_reports(reports, g, out);
  for (const auto& r : reports) {
    if (!r.pass()) return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_solids(bool wide, const GlobalOptions& g, std::ostream& out) {
  switch (g.format) {
    case Format::Csv: out << (wide ? solids_table_csv_wide() : solids_table_csv()); break;
    case Format::Json: out << ordered(solids_table_json()).dump() << '\n'; break;
    case Format::Pretty:
      out << std::left << std::setw(14) << "solid" << std::setw(20) << "edge" << std::setw(20) << "volume"
          << std::setw(20) << "surface/3" << "tabulated\n"
          << std::setprecision(12);
      for (SolidKind kind : kAllSolids) {
        const PlatonicSolid unit = unitize_solid({kind, 1.0});
        const SolidMeasures m = measures(unit);
        out << std::setw(14) << to_string(kind) << std::setw(20) << unit.edge_length << std::setw(20) << m.volume
            << std::setw(20) << m.surface_area / 3.0 << tabulated_fundamental_measure(kind) << '\n';
      }
      break;
  }
  const auto report = table_check();
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit shapes: canonical area = semiperimeter members of similarity classes", "unit-shapes"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format = "pretty";
  double tolerance = 0.0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  auto* tol_option = app.add_option("--tol", tolerance, "Override the default tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--degrees", g.degrees, "Read angles in degrees");
  app.add_option("--seed", g.seed, "Sampling seed");

  FamilyOptions family;
  auto add_family_options = [&family](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--family", family.family, "Shape family");
    if (required) opt->required();
    sub->add_option("--r", family.r, "Ratio parameter r");
    sub->add_option("--s", family.s, "Ratio parameter s (triangle)");
    sub->add_option("--theta", family.theta, "Angle parameter theta");
    sub->add_option("--m", family.m, "Polygon order m");
  };

  auto* catalog = app.add_subcommand("catalog", "Fundamental measures of the shape families");
  add_family_options(catalog, false);

  auto* unitize_cmd = app.add_subcommand("unitize", "Canonical unit shape of a JSON shape or a family member");
  std::string shape_path;
  unitize_cmd->add_option("--shape", shape_path, "Shape JSON file ('-' for stdin)");
  add_family_options(unitize_cmd, false);

  auto* minimize_cmd = app.add_subcommand("minimize", "Minimize the fundamental measure over a family");
  std::string minimize_family;
  std::optional<double> lo;
  std::optional<double> hi;
  minimize_cmd->add_option("--family", minimize_family, "Family")->required();
  minimize_cmd->add_option("--lo", lo, "Bracket lower end (one-parameter families)");
  minimize_cmd->add_option("--hi", hi, "Bracket upper end (one-parameter families)");

  auto* scan_cmd = app.add_subcommand("scan", "Sweep a quantity over a uniform grid");
  std::string quantity = "pi";
  std::string scan_family;
  double scan_lo = 0.01;
  double scan_hi = 0.99;
  int scan_n = 1000;
  scan_cmd->add_option("--quantity", quantity, "pi, a (ellipse semi-minor) or h (rhombus short diagonal)")
      ->check(CLI::IsMember({"pi", "a", "h"}));
  scan_cmd->add_option("--family", scan_family, "Family for --quantity pi");
  scan_cmd->add_option("--lo", scan_lo, "Grid start");
  scan_cmd->add_option("--hi", scan_hi, "Grid end");
  scan_cmd->add_option("--n", scan_n, "Grid points");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  int samples = 100;
  verify_cmd
      ->add_option("--suite", suite,
                   "isoperimetric, unit-floor, scale-equivalence, mgon, blob, rational, calculus, "
                   "conciliation, solids or all");
  verify_cmd->add_option("--samples", samples, "Random instances per suite")->check(CLI::PositiveNumber);

  auto* solids_cmd = app.add_subcommand("solids", "Platonic solid fundamental measures");
  bool wide = false;
  solids_cmd->add_flag("--wide", wide, "CSV in the two-row table layout");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  g.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;
  if (tol_option->count() > 0) g.tolerance = tolerance;

  try {
    if (catalog->parsed()) return run_catalog(family, g, out);
    if (unitize_cmd->parsed()) return run_unitize(shape_path, family, g, in, out);
    if (minimize_cmd->parsed()) return run_minimize(minimize_family, lo, hi, g, out);
    if (scan_cmd->parsed()) return run_scan(quantity, scan_family, scan_lo, scan_hi, scan_n, g, out);
    if (verify_cmd->parsed()) return run_verify(suite, samples, g, out);
    if (solids_cmd->parsed()) return run_solids(wide, g, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const QuadratureFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace unit_shapes::cli
