#include "exsol/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace exsol {

namespace {

CVec sample(const FieldFn& f, Vec4 x, int mu, double off) {
  x[mu] += off;
  return f(x);
}

}  // namespace

Jet2 fd_jet(const FieldFn& field, const Vec4& x, double h, bool want_hess) {
  const int n = field.n_vars;
  const int m = field.m;
  if (h <= 0.0) {
    double xmax = 0.0;
    for (int v = 0; v < n; ++v) xmax = std::max(xmax, std::abs(x[v]));
    h = 1e-3 * std::max(1.0, xmax);
  }

  Jet2 jet;
  jet.value = field(x);
  jet.grad.assign(4, CVec(m, cdouble(0.0)));

  // cache the axis samples f(x +- h), f(x +- 2h)
  std::vector<std::array<CVec, 4>> ax(n);  // [-2h, -h, +h, +2h]
  for (int mu = 0; mu < n; ++mu) {
    ax[mu][0] = sample(field, x, mu, -2 * h);
    ax[mu][1] = sample(field, x, mu, -h);
    ax[mu][2] = sample(field, x, mu, +h);
    ax[mu][3] = sample(field, x, mu, +2 * h);
    for (int c = 0; c < m; ++c)
      jet.grad[mu][c] =
          (-ax[mu][3][c] + 8.0 * ax[mu][2][c] - 8.0 * ax[mu][1][c] + ax[mu][0][c]) / (12.0 * h);
  }

  if (want_hess) {
    jet.has_hess = true;
    jet.hess.assign(4, std::vector<CVec>(4, CVec(m, cdouble(0.0))));
    for (int mu = 0; mu < n; ++mu)
      for (int c = 0; c < m; ++c)
        jet.hess[mu][mu][c] = (-ax[mu][3][c] + 16.0 * ax[mu][2][c] - 30.0 * jet.value[c] +
                               16.0 * ax[mu][1][c] - ax[mu][0][c]) /
                              (12.0 * h * h);
    // mixed derivatives: nested 4th-order first differences
    for (int mu = 0; mu < n; ++mu)
      for (int nu = mu + 1; nu < n; ++nu) {
        auto dmu_at = [&](double off_nu) {
          Vec4 y = x;
          y[nu] += off_nu;
          const CVec fpp = sample(field, y, mu, 2 * h), fp = sample(field, y, mu, h),
                     fm = sample(field, y, mu, -h), fmm = sample(field, y, mu, -2 * h);
          CVec r(m);
          for (int c = 0; c < m; ++c)
            r[c] = (-fpp[c] + 8.0 * fp[c] - 8.0 * fm[c] + fmm[c]) / (12.0 * h);
          return r;
        };
        const CVec gpp = dmu_at(2 * h), gp = dmu_at(h), gm = dmu_at(-h), gmm = dmu_at(-2 * h);
        for (int c = 0; c < m; ++c) {
          const cdouble v = (-gpp[c] + 8.0 * gp[c] - 8.0 * gm[c] + gmm[c]) / (12.0 * h);
          jet.hess[mu][nu][c] = v;
          jet.hess[nu][mu][c] = v;
        }
      }
  }

  for (const auto& v : jet.value)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("fd_jet: non-finite field value");
  return jet;
}

}  // namespace exsol
