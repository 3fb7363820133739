#include "exsol/verify.hpp"

#include <cmath>

namespace exsol {

std::vector<Vec4> sample_points(const SampleSpec& spec, int n_vars) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec4> pts;
  pts.reserve(spec.n_points);
  long attempts = 0;
  const long max_attempts = static_cast<long>(spec.max_attempts_factor) * spec.n_points + 100;
  while (static_cast<int>(pts.size()) < spec.n_points) {
    if (++attempts > max_attempts)
      throw std::runtime_error("sample_points: cannot find enough admissible points");
    Vec4 x{0, 0, 0, 0};
    for (int v = 0; v < n_vars; ++v) {
      const auto& [lo, hi] = spec.box[v];
      x[v] = lo + (hi - lo) * unit(rng);
    }
    if (spec.domain && !spec.domain(x)) continue;
    pts.push_back(x);
  }
  return pts;
}

ResidualReport verify_field(const EquationDef& eq, const FieldFn& field, const EqParams& params,
                            const SampleSpec& spec, double tol) {
  ResidualReport rep;
  rep.equation = eq.id;
  rep.tolerance = tol;
  rep.seed = spec.seed;
  rep.params = params.scalars;

  const auto pts = sample_points(spec, eq.n_vars);
  rep.n_points = static_cast<int>(pts.size());

  // first pass: field norms
  double mean_norm = 0.0;
  std::vector<double> norms(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    norms[i] = cvnorm(field(pts[i]));
    mean_norm += norms[i];
  }
  mean_norm /= std::max<std::size_t>(1, pts.size());

  if (mean_norm == 0.0) {
    rep.note = "degenerate (zero field)";
    rep.pass = true;
    return rep;
  }

  int branch_failures = 0;
  std::string branch_msg;
  double sum_rel = 0.0;
  int n_ok = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CVec r;
    try {
      r = residual_at(eq, field, params, pts[i]);
    } catch (const BranchError& e) {
      ++branch_failures;
      branch_msg = e.what();
      continue;
    }
    double rmax = 0.0;
    for (const auto& c : r) rmax = std::max(rmax, std::abs(c));
    const double scale = norms[i] + mean_norm;
    rep.max_abs = std::max(rep.max_abs, rmax);
    rep.max_rel = std::max(rep.max_rel, rmax / scale);
    sum_rel += rmax / scale;
    ++n_ok;
  }
  if (n_ok > 0) rep.mean_rel = sum_rel / n_ok;

  if (branch_failures > 0 &&
      branch_failures * 10 > static_cast<int>(pts.size())) {
    rep.pass = false;
    rep.note = "branch errors at " + std::to_string(branch_failures) + "/" +
               std::to_string(pts.size()) + " points: " + branch_msg;
    return rep;
  }
  if (branch_failures > 0)
    rep.note = "branch errors at " + std::to_string(branch_failures) + " points (tolerated)";

  rep.pass = rep.max_rel <= tol;
  return rep;
}

}  // namespace exsol
