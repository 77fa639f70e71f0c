#pragma once

#include <array>
#include <functional>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unit_shapes/family_catalog.hpp"

namespace unit_shapes {

enum class Family1D { RightTriangle, Rectangle, Rhombus, Ellipse };
enum class Family2D { Triangle, Parallelogram };

std::string to_string(Family1D family);
std::string to_string(Family2D family);
std::optional<Family1D> family_1d_from_string(const std::string& name);
std::optional<Family2D> family_2d_from_string(const std::string& name);

FamilyParam make_param(Family1D family, double x);
FamilyParam make_param(Family2D family, std::span<const double> x);

struct MinimizationResult {
  std::vector<double> argmin;
  double min_value = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Set when the infimum is a limit at the family's domain edge and is not
  /// attained (ellipses degenerate to the circle as r -> 1).
  std::optional<double> boundary_infimum;
};

nlohmann::json to_json(const MinimizationResult& result);

// Generic searches. ------------------------------------------------------

struct GoldenSectionResult {
  double x;
  double value;
  int iterations;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than
/// tolerance. Throws NotConverged after max_iterations.
GoldenSectionResult golden_section_minimize(const std::function<double(double)>& f, double lo,
                                            double hi, double tolerance = 1e-10,
                                            int max_iterations = 200);

struct NelderMeadOptions {
  /// Simplex vertices must all lie within this distance (max norm) of the best.
  double parameter_tolerance = 1e-8;
  int max_iterations = 5000;
  /// Initial simplex edge along each axis.
  double initial_step = 0.05;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

/// Nelder-Mead downhill simplex. The objective may return +inf to mark
/// infeasible points. Re-seeds a fresh simplex at each converged point until
/// a restart no longer improves the value.
NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start, const NelderMeadOptions& options = {});

// Family searches. -------------------------------------------------------

MinimizationResult minimize_1d(Family1D family, double lo, double hi, double tolerance = 1e-10);

struct Minimize2dOptions {
  /// Empty means the fixed default seed list for the family.
  std::vector<std::array<double, 2>> seeds;
  NelderMeadOptions nelder_mead;
};

std::vector<std::array<double, 2>> default_seeds(Family2D family);

/// Fundamental measure of the family, +inf outside its open domain.
double penalized_objective(Family2D family, std::span<const double> x);

MinimizationResult minimize_2d(Family2D family, const Minimize2dOptions& options = {});

// Sweeps. ----------------------------------------------------------------

enum class ScanQuantity { FundamentalMeasure, EllipseSemiMinor, RhombusShortDiagonal };

struct ScanRequest {
  ScanQuantity quantity = ScanQuantity::FundamentalMeasure;
  /// Required for FundamentalMeasure.
  std::optional<Family1D> family;
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;
};

struct MonotoneRun {
  std::size_t begin;
  std::size_t end;  // inclusive
  int direction;    // +1 increasing, -1 decreasing, 0 flat
};

struct ScanTable {
  std::vector<double> x;
  std::vector<double> values;
  std::vector<MonotoneRun> runs;
  std::size_t argmin = 0;
  std::size_t argmax = 0;

  bool strictly_increasing() const;
  bool strictly_decreasing() const;
};

ScanTable scan(const ScanRequest& request);

std::string scan_to_csv(const ScanTable& table);
nlohmann::json to_json(const ScanTable& table);

}  // namespace unit_shapes
