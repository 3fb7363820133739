#pragma once

#include "exsol/cmat.hpp"

#include <functional>

namespace exsol {

/// A smooth field R^{n_vars} -> C^m wrapped as a callable.
struct FieldFn {
  int n_vars = 4;
  int m = 4;
  std::function<CVec(const Vec4&)> eval;

  CVec operator()(const Vec4& x) const { return eval(x); }
};

/// 1D complex profile with FD derivative helper (4th-order central).
struct Profile1D {
  std::function<cdouble(double)> f;
  cdouble operator()(double t) const { return f(t); }
  cdouble deriv(double t, double h = 1e-4) const {
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
  }
  cdouble deriv2(double t, double h = 1e-3) const {
    return (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) - f(t - 2 * h)) /
           (12.0 * h * h);
  }
};

}  // namespace exsol
