// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unit_shapes/family_catalog.hpp"
#include "unit_shapes/optimizer.hpp"
#include "unit_shapes/sampling.hpp"
#include "unit_shapes/solids3d.hpp"
#include "unit_shapes/unitizer.hpp"
#include "unit_shapes/verifier.hpp"

using namespace unit_shapes;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

std::string num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

Outcome catalog_golden_values() {
  Outcome o;
  struct Golden {
    FamilyParam p;
    double value;
  };
  std::vector<Golden> golden{{RightTriangle{pi / 4}, 3.0 + 2.0 * std::numbers::sqrt2},
                             {Triangle{1.0, 1.0}, 3.0 * std::numbers::sqrt3},
                             {Rectangle{1.0}, 4.0},
                             {Rhombus{pi / 2}, 4.0}};
  for (int m = 3; m <= 12; ++m) golden.push_back({RegularPolygon{m}, m * std::tan(pi / m)});

  double worst_closed = 0.0;
  double worst_kernel = 0.0;
  for (const auto& g : golden) {
    const double closed = fundamental_measure(g.p);
    const Shape u = build_unit_shape(g.p);
    const double gap = rel(closed, g.value);
    const double kernel = std::max(rel(area(u), g.value), rel(semiperimeter(u), g.value));
    worst_closed = std::max(worst_closed, gap);
    worst_kernel = std::max(worst_kernel, kernel);
    o.require(gap <= 1e-12, params_string(g.p) + " closed form " + num(closed));
    o.require(kernel <= 1e-8, params_string(g.p) + " kernel off by " + num(kernel));
  }
  if (o.pass) o.detail = "closed-form gap " + num(worst_closed) + ", kernel gap " + num(worst_kernel);
  return o;
}

// Random catalog member moved by a random similarity.
Shape random_catalog_shape(Rng& rng) {
  return apply_similarity(random_similarity(rng), build_unit_shape(random_family_param(rng)));
}

Outcome unit_property() {
  Outcome o;
  Rng rng(2024);
  constexpr int kSamples = 200;
  double worst_unit = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const Shape c = random_catalog_shape(rng);
    const auto u = unitize(c);
    const double a = area(u.unit_shape);
    const double s = semiperimeter(u.unit_shape);
    worst_unit = std::max(worst_unit, std::abs(a - s) / s);
    o.require(std::abs(a - s) / s <= 1e-8, "sample " + std::to_string(i) + " |A-S|/S = " + num(std::abs(a - s) / s));
    const double again = unitize(u.unit_shape).tong_inradius_reciprocal;
    o.require(std::abs(again - 1.0) <= 1e-9, "sample " + std::to_string(i) + " rescale " + num(again));
    o.require(idempotence_check(c), "sample " + std::to_string(i) + " not idempotent");
  }
  if (o.pass) o.detail = std::to_string(kSamples) + " shapes, worst |A-S|/S " + num(worst_unit);
  return o;
}

Outcome calculus_friendly() {
  Outcome o;
  const std::vector<FamilyParam> families{RightTriangle{0.4}, Triangle{0.9, 0.7}, Rectangle{2.5},
                                          Rhombus{1.1},       Parallelogram{0.8, 1.7}, Ellipse{0.3},
                                          RegularPolygon{5}};
  std::vector<FamilyParam> all = default_catalog();
  all.insert(all.end(), families.begin(), families.end());
  int instances = 0;
  for (const auto& p : all) {
    const auto report = check_calculus_friendly({build_unit_shape(p), {0.5, 1.0, 2.0}});
    instances += report.instances;
    o.require(report.pass(), params_string(p) + ": " + (report.pass() ? "" : report.counterexamples.front()));
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " members, " + std::to_string(instances) + " checks";
  return o;
}

Outcome isoperimetric_floor() {
  Outcome o;
  Rng rng(77);
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 300; ++i) {
    Shape c = i % 3 == 2 ? random_simple_polygon(rng.uniform_int(3, 9), rng) : random_catalog_shape(rng);
    const double measure = unitize(c).fundamental_measure;
    lowest = std::min(lowest, measure);
    o.require(measure >= pi - 1e-9, "sample " + std::to_string(i) + " Pi = " + num(measure));
  }
  const double circle = unitize(make_circle({0.3, 0.1}, 4.0)).fundamental_measure;
  o.require(std::abs(circle - pi) <= 1e-9, "circle Pi = " + num(circle));
  const double near = fundamental_measure(Ellipse{0.999});
  o.require(near - pi <= 1e-3 && near - pi > 0.0, "Pi_E(0.999) - pi = " + num(near - pi));
  if (o.pass) o.detail = "min sampled Pi " + num(lowest) + ", Pi_E(0.999) - pi = " + num(near - pi);
  return o;
}

Outcome mgon_bound() {
  Outcome o;
  int total = 0;
  for (int m : {3, 4, 5, 6}) {
    const auto samples = random_simple_polygons(m, 500, 9000 + m);
    const auto report = check_mgon_bound(m, samples);
    total += report.instances;
    o.require(report.pass() && report.instances == 500,
              std::to_string(m) + "-gons: " + (report.pass() ? "short sample" : report.counterexamples.front()));

    const Shape regular = build_unit_shape(RegularPolygon{m});
    const std::vector<Shape> one{regular};
    const auto eq = check_mgon_bound(m, one);
    const double s = semiperimeter(regular);
    const double gap = std::abs(polygon_constant(m) * area(regular) - s * s) / (s * s);
    o.require(eq.pass() && eq.equality_cases == 1 && gap <= 1e-9,
              "regular " + std::to_string(m) + "-gon gap " + num(gap));
  }
  if (o.pass) o.detail = std::to_string(total) + " random polygons, regular ones at equality";
  return o;
}

Outcome blob_pythagoras() {
  Outcome o;
  Rng rng(31);
  int right = 0;
  int other = 0;
  for (int i = 0; i < 20; ++i) {
    const Shape base = i % 4 == 3 ? random_simple_polygon(rng.uniform_int(3, 8), rng) : random_catalog_shape(rng);
    const double a = rng.uniform(0.2, 5.0);
    const double b = rng.uniform(0.2, 5.0);
    const double c = std::hypot(a, b);
    const auto yes = check_blob_pythagoras(base, {a, b, c});
    const auto no = check_blob_pythagoras(base, {a, b, c * rng.uniform(1.001, 1.5)});
    const auto short_c = check_blob_pythagoras(base, {a, b, c * rng.uniform(0.5, 0.999)});
    right += yes.equality_cases;
    other += no.equality_cases + short_c.equality_cases;
    o.require(yes.pass() && yes.equality_cases == 1, "base " + std::to_string(i) + " right triple missed");
    o.require(no.pass() && short_c.pass(), "base " + std::to_string(i) + " non-right triple matched");
  }
  if (o.pass) o.detail = std::to_string(right) + "/20 right triples equal, " + std::to_string(other) + "/40 others";
  return o;
}

Outcome optimizers_vs_oracles() {
  Outcome o;
  struct Case {
    Family1D family;
    double lo;
    double hi;
  };
  const Case cases[] = {{Family1D::RightTriangle, 0.01, pi / 2 - 0.01},
                        {Family1D::Rectangle, 0.01, 100.0},
                        {Family1D::Rhombus, 0.01, pi - 0.01},
                        {Family1D::Ellipse, 0.01, 0.99}};
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto found = minimize_1d(c.family, c.lo, c.hi);
    const auto grid = oracle::grid_min_1d(
        [&](double x) { return fundamental_measure(make_param(c.family, x)); }, c.lo, c.hi, 1000000);
    const double gap = std::abs(found.min_value - grid.value);
    worst = std::max(worst, gap);
    o.require(gap <= 1e-6, to_string(c.family) + " value gap " + num(gap));
  }

  // Coarse sweep of the whole box, then a fine sweep around the coarse winner.
  auto oracle_2d = [](Family2D family, std::array<double, 2> lo, std::array<double, 2> hi) {
    auto f = [family](double u, double v) { return penalized_objective(family, std::array{u, v}); };
    constexpr std::size_t n = 1000;
    const auto coarse = oracle::grid_min_2d(f, lo, hi, n);
    std::array<double, 2> flo{};
    std::array<double, 2> fhi{};
    for (int k = 0; k < 2; ++k) {
      const double cell = (hi[k] - lo[k]) / (n - 1);
      flo[k] = std::max(lo[k], coarse.x[k] - 5.0 * cell);
      fhi[k] = std::min(hi[k], coarse.x[k] + 5.0 * cell);
    }
    return oracle::grid_min_2d(f, flo, fhi, n);
  };

  const auto tri = minimize_2d(Family2D::Triangle);
  const auto tri_grid = oracle_2d(Family2D::Triangle, {0.01, 0.01}, {1.0, 1.0});
  const double tri_gap = std::abs(tri.min_value - tri_grid.value);
  o.require(tri_gap <= 1e-6, "triangle value gap " + num(tri_gap));
  o.require(std::abs(tri.argmin[0] - 1.0) <= 1e-6 && std::abs(tri.argmin[1] - 1.0) <= 1e-6,
            "triangle argmin (" + num(tri.argmin[0]) + ", " + num(tri.argmin[1]) + ")");

  const auto par = minimize_2d(Family2D::Parallelogram);
  const auto par_grid = oracle_2d(Family2D::Parallelogram, {0.01, 0.01}, {pi - 0.01, 10.0});
  const double par_gap = std::abs(par.min_value - par_grid.value);
  o.require(par_gap <= 1e-6, "parallelogram value gap " + num(par_gap));
  o.require(std::abs(par.argmin[0] - pi / 2) <= 1e-6 && std::abs(par.argmin[1] - 1.0) <= 1e-6,
            "parallelogram argmin (" + num(par.argmin[0]) + ", " + num(par.argmin[1]) + ")");

  if (o.pass) {
    o.detail = "1D gap " + num(worst) + ", 2D gaps " + num(tri_gap) + " / " + num(par_gap);
  }
  return o;
}

Outcome ellipse_auxiliaries() {
  Outcome o;
  const auto table = scan({ScanQuantity::EllipseSemiMinor, std::nullopt, 0.01, 0.99, 1000});
  o.require(table.strictly_increasing(), "a(r) not strictly increasing");
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const double v = table.values[i];
    if (!(v > 2.0 / pi && v < 1.0)) {
      o.require(false, "a(" + num(table.x[i]) + ") = " + num(v) + " outside (2/pi, 1)");
      break;
    }
  }
  const double low = ellipse_semi_minor(0.01);
  const double high = ellipse_semi_minor(0.99);
  o.require(std::abs(low - 2.0 / pi) <= 2e-2, "a(0.01) = " + num(low));
  o.require(std::abs(high - 1.0) <= 2e-2, "a(0.99) = " + num(high));

  // Independent Simpson evaluation of a(r) = (1/pi) int_0^pi sqrt(1 + (r^2 - 1) cos^2 t) dt.
  double worst = 0.0;
  for (double r : {0.01, 0.25, 0.5, 0.75, 0.99}) {
    const double simpson =
        oracle::simpson([r](double t) { return std::sqrt(1.0 + (r * r - 1.0) * std::cos(t) * std::cos(t)); }, 0.0,
                        pi, 100000) /
        pi;
    worst = std::max(worst, std::abs(simpson - ellipse_semi_minor(r)));
  }
  o.require(worst <= 1e-8, "Simpson oracle gap " + num(worst));
  if (o.pass) o.detail = "a(0.01) = " + num(low) + ", a(0.99) = " + num(high) + ", oracle gap " + num(worst);
  return o;
}

Outcome platonic_table() {
  Outcome o;
  double worst = 0.0;
  for (SolidKind kind : kAllSolids) {
    const double measured = measures(unitize_solid({kind, 1.0})).volume;
    const double gap = rel(measured, tabulated_fundamental_measure(kind));
    worst = std::max(worst, gap);
    o.require(gap <= 1e-9, to_string(kind) + " gap " + num(gap));
  }
  const auto report = table_check();
  o.require(report.pass(), report.pass() ? "" : report.counterexamples.front());
  if (o.pass) o.detail = "worst relative gap " + num(worst);
  return o;
}

Outcome rational_circle() {
  Outcome o;
  const Shape c = make_rational_circle();
  const double a = area(c);
  const double s = semiperimeter(c);
  o.require(std::abs(a - pi) <= 1e-9, "A = " + num(a));
  o.require(std::abs(s - pi) <= 1e-9, "S = " + num(s));
  o.require(check_rational_circle().pass(), "report failed");
  if (o.pass) o.detail = "A - pi = " + num(a - pi) + ", S - pi = " + num(s - pi);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalog golden values", catalog_golden_values},
      {"unit property and idempotence", unit_property},
      {"calculus-friendly indexing", calculus_friendly},
      {"isoperimetric floor", isoperimetric_floor},
      {"m-gon bound", mgon_bound},
      {"blob pythagoras", blob_pythagoras},
      {"optimizers vs brute-force oracles", optimizers_vs_oracles},
      {"ellipse auxiliaries", ellipse_auxiliaries},
      {"platonic table", platonic_table},
      {"rational circle", rational_circle},
  };

  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index++, name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
