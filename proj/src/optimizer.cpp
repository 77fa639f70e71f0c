#include "unit_shapes/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "unit_shapes/errors.hpp"

namespace unit_shapes {
namespace {

using std::numbers::pi;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct NelderMeadRun {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

NelderMeadRun nelder_mead_once(const std::function<double(std::span<const double>)>& f,
                               const std::vector<double>& start, const NelderMeadOptions& options) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  values[0] = f(start);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += options.initial_step;
    values[i + 1] = f(simplex[i + 1]);
    if (!std::isfinite(values[i + 1])) {
      simplex[i + 1][i] = start[i] - options.initial_step;
      values[i + 1] = f(simplex[i + 1]);
    }
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> trial(n);
  std::vector<double> second(n);

  auto point_along = [&](double coefficient, std::vector<double>& out, const std::vector<double>& worst) {
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coefficient * (centroid[j] - worst[j]);
  };

  int iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        spread = std::max(spread, std::abs(simplex[i][j] - simplex[best][j]));
      }
    }
    if (spread <= options.parameter_tolerance && std::isfinite(values[worst])) {
      return {simplex[best], values[best], iteration, true};
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);
    }

    point_along(kReflect, trial, simplex[worst]);
    const double reflected = f(trial);

    if (reflected < values[best]) {
      point_along(kExpand, second, simplex[worst]);
      const double expanded = f(second);
      if (expanded < reflected) {
        simplex[worst] = second;
        values[worst] = expanded;
      } else {
        simplex[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected < values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = reflected;
      continue;
    }

    const bool outside = reflected < values[worst];
    point_along(outside ? kContract : -kContract, second, simplex[worst]);
    const double contracted = f(second);
    if (contracted < (outside ? reflected : values[worst])) {
      simplex[worst] = second;
      values[worst] = contracted;
      continue;
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], iteration, false};
}

double one_d_objective(Family1D family, double x) { return fundamental_measure(make_param(family, x)); }

}  // namespace

std::string to_string(Family1D family) {
  switch (family) {
    case Family1D::RightTriangle: return "right_triangle";
    case Family1D::Rectangle: return "rectangle";
    case Family1D::Rhombus: return "rhombus";
    case Family1D::Ellipse: return "ellipse";
  }
  return "unknown";
}

std::string to_string(Family2D family) {
  switch (family) {
    case Family2D::Triangle: return "triangle";
    case Family2D::Parallelogram: return "parallelogram";
  }
  return "unknown";
}

std::optional<Family1D> family_1d_from_string(const std::string& name) {
  for (auto f : {Family1D::RightTriangle, Family1D::Rectangle, Family1D::Rhombus, Family1D::Ellipse}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<Family2D> family_2d_from_string(const std::string& name) {
  for (auto f : {Family2D::Triangle, Family2D::Parallelogram}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

FamilyParam make_param(Family1D family, double x) {
  switch (family) {
    case Family1D::RightTriangle: return RightTriangle{x};
    case Family1D::Rectangle: return Rectangle{x};
    case Family1D::Rhombus: return Rhombus{x};
    case Family1D::Ellipse: return Ellipse{x};
  }
  throw DomainError("unknown one-parameter family");
}

FamilyParam make_param(Family2D family, std::span<const double> x) {
  if (x.size() != 2) throw DomainError("two-parameter family needs exactly two parameters");
  switch (family) {
    case Family2D::Triangle: return Triangle{x[0], x[1]};
    case Family2D::Parallelogram: return Parallelogram{x[0], x[1]};
  }
  throw DomainError("unknown two-parameter family");
}

nlohmann::json to_json(const MinimizationResult& result) {
  nlohmann::json j = {{"argmin", result.argmin},
                      {"min_value", result.min_value},
                      {"iterations", result.iterations},
                      {"converged", result.converged}};
  if (result.boundary_infimum) j["boundary_infimum"] = *result.boundary_infimum;
  return j;
}

GoldenSectionResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                            double tolerance, int max_iterations) {
  if (!(lo < hi)) throw DomainError("golden section needs lo < hi");
  const double shrink = 0.5 * (std::sqrt(5.0) - 1.0);

  double a = lo;
  double b = hi;
  double c = b - shrink * (b - a);
  double d = a + shrink * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;

  while (b - a > tolerance) {
    if (++iterations > max_iterations) {
      std::ostringstream msg;
      msg << "golden section: bracket still " << (b - a) << " wide after " << max_iterations
          << " iterations";
      throw NotConverged(msg.str());
    }
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - shrink * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + shrink * (b - a);
      fd = f(d);
    }
  }

  const double mid = 0.5 * (a + b);
  const double fmid = f(mid);
  if (fc < fmid && fc <= fd) return {c, fc, iterations};
  if (fd < fmid) return {d, fd, iterations};
  return {mid, fmid, iterations};
}

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start, const NelderMeadOptions& options) {
  if (start.empty()) throw DomainError("nelder-mead needs at least one parameter");
  if (!std::isfinite(f(start))) throw DomainError("nelder-mead start point is infeasible");

  constexpr int kMaxRestarts = 10;
  NelderMeadRun run = nelder_mead_once(f, start, options);
  int iterations = run.iterations;
  for (int restart = 0; restart < kMaxRestarts && run.converged; ++restart) {
    NelderMeadOptions fresh = options;
    fresh.initial_step = std::max(options.initial_step * 1e-2, 100.0 * options.parameter_tolerance);
    fresh.max_iterations = options.max_iterations - iterations;
    if (fresh.max_iterations <= 0) break;
    NelderMeadRun next = nelder_mead_once(f, run.x, fresh);
    iterations += next.iterations;
    if (!(next.value < run.value)) break;
    run = next;
  }
  return {run.x, run.value, iterations, run.converged};
}

MinimizationResult minimize_1d(Family1D family, double lo, double hi, double tolerance) {
  if (!(lo < hi)) throw DomainError("bracket must satisfy lo < hi");
  validate(make_param(family, lo));
  validate(make_param(family, hi));

  const auto found = golden_section_minimize([family](double x) { return one_d_objective(family, x); },
                                             lo, hi, tolerance);
  MinimizationResult result;
  result.argmin = {found.x};
  result.min_value = found.value;
  result.iterations = found.iterations;

  const double edge_band = 10.0 * tolerance * std::max(1.0, std::abs(found.x));
  const bool at_lo = found.x - lo <= edge_band;
  const bool at_hi = hi - found.x <= edge_band;
  result.converged = !(at_lo || at_hi);
  if (family == Family1D::Ellipse && at_hi) {
    // As r -> 1 the unit ellipse tends to the unit circle, whose measure is pi.
    result.boundary_infimum = pi;
  }
  return result;
}

std::vector<std::array<double, 2>> default_seeds(Family2D family) {
  switch (family) {
    case Family2D::Triangle:
      return {{1.0, 1.0}, {0.8, 0.8}, {0.6, 0.9}, {0.9, 0.3}, {0.7, 0.5}};
    case Family2D::Parallelogram:
      return {{0.5 * pi, 1.0}, {1.0, 0.5}, {2.0, 2.0}, {0.5, 3.0}, {2.5, 0.3}};
  }
  return {};
}

double penalized_objective(Family2D family, std::span<const double> x) {
  const FamilyParam p = make_param(family, x);
  try {
    validate(p);
  } catch (const DomainError&) {
    return kInfinity;
  }
  return fundamental_measure(p);
}

MinimizationResult minimize_2d(Family2D family, const Minimize2dOptions& options) {
  const auto seeds = options.seeds.empty() ? default_seeds(family) : options.seeds;
  auto objective = [family](std::span<const double> x) { return penalized_objective(family, x); };

  std::optional<NelderMeadResult> best;
  int total_iterations = 0;
  for (const auto& seed : seeds) {
    if (!std::isfinite(objective(seed))) {
      std::ostringstream msg;
      msg << to_string(family) << ": seed (" << seed[0] << ", " << seed[1] << ") is outside the domain";
      throw DomainError(msg.str());
    }
    NelderMeadResult run = nelder_mead_minimize(objective, {seed[0], seed[1]}, options.nelder_mead);
    total_iterations += run.iterations;
    if (!run.converged) continue;
    if (!best || run.value < best->value) best = std::move(run);
  }
  if (!best) throw NotConverged(to_string(family) + ": no seed converged");

  MinimizationResult result;
  result.argmin = best->x;
  result.min_value = best->value;
  result.iterations = total_iterations;
  result.converged = true;
  return result;
}

bool ScanTable::strictly_increasing() const {
  return runs.size() == 1 && runs.front().direction == 1;
}

bool ScanTable::strictly_decreasing() const {
  return runs.size() == 1 && runs.front().direction == -1;
}

ScanTable scan(const ScanRequest& request) {
  if (request.n < 2) throw DomainError("scan needs at least two grid points");
  if (!(request.lo < request.hi)) throw DomainError("scan needs lo < hi");

  std::function<double(double)> quantity;
  switch (request.quantity) {
    case ScanQuantity::FundamentalMeasure: {
      if (!request.family) throw DomainError("fundamental-measure scan needs a family");
      const Family1D family = *request.family;
      quantity = [family](double x) { return one_d_objective(family, x); };
      break;
    }
    case ScanQuantity::EllipseSemiMinor:
      quantity = ellipse_semi_minor;
      break;
    case ScanQuantity::RhombusShortDiagonal:
      quantity = rhombus_short_diagonal;
      break;
  }

  ScanTable table;
  const auto n = static_cast<std::size_t>(request.n);
  table.x.reserve(n);
  table.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const double x = i + 1 == n ? request.hi : request.lo + t * (request.hi - request.lo);
    table.x.push_back(x);
    table.values.push_back(quantity(x));
  }

  table.argmin = static_cast<std::size_t>(
      std::min_element(table.values.begin(), table.values.end()) - table.values.begin());
  table.argmax = static_cast<std::size_t>(
      std::max_element(table.values.begin(), table.values.end()) - table.values.begin());

  auto direction = [&](std::size_t i) {
    const double delta = table.values[i + 1] - table.values[i];
    return delta > 0.0 ? 1 : (delta < 0.0 ? -1 : 0);
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int d = direction(i);
    if (!table.runs.empty() && table.runs.back().direction == d) {
      table.runs.back().end = i + 1;
    } else {
      table.runs.push_back({i, i + 1, d});
    }
  }
  return table;
}

std::string scan_to_csv(const ScanTable& table) {
  std::ostringstream out;
  out << std::setprecision(17) << "x,value\n";
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    out << table.x[i] << ',' << table.values[i] << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ScanTable& table) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& run : table.runs) {
    runs.push_back({{"begin", table.x[run.begin]},
                    {"end", table.x[run.end]},
                    {"direction", run.direction > 0 ? "increasing" : (run.direction < 0 ? "decreasing" : "flat")}});
  }
  return {{"points", table.x.size()},
          {"monotone_runs", std::move(runs)},
          {"min", {{"x", table.x[table.argmin]}, {"value", table.values[table.argmin]}}},
          {"max", {{"x", table.x[table.argmax]}, {"value", table.values[table.argmax]}}},
          {"endpoints",
           {{"lo", {{"x", table.x.front()}, {"value", table.values.front()}}},
            {"hi", {{"x", table.x.back()}, {"value", table.values.back()}}}}}};
}

}  // namespace unit_shapes
