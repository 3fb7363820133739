#pragma once

#include "exsol/equations.hpp"

#include <random>
#include <optional>

namespace exsol {

struct SampleSpec {
  std::array<std::pair<double, double>, 4> box{{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  int n_points = 200;
  std::uint64_t seed = 42;
  /// true iff the point is admissible (outside singular sets)
  std::function<bool(const Vec4&)> domain;
  double exclusion_radius = 0.05;
  int max_attempts_factor = 200;

  SampleSpec() = default;
};

struct ResidualReport {
  std::string equation;
  std::string solution;
  std::map<std::string, double> params;
  int n_points = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double mean_rel = 0.0;
  bool pass = false;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string note;  // e.g. "degenerate (zero field)" or branch diagnostics
};

/// Draw admissible points in the box (throws std::runtime_error if the box is
/// effectively empty after exclusion).
std::vector<Vec4> sample_points(const SampleSpec& spec, int n_vars);

/// Sample residuals of `field` under `eq` and aggregate.
/// Local scale for max_rel: |field(x)| + mean field norm over the sample.
ResidualReport verify_field(const EquationDef& eq, const FieldFn& field, const EqParams& params,
                            const SampleSpec& spec, double tol);

}  // namespace exsol
