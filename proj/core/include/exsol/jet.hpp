#pragma once

#include "exsol/field.hpp"

namespace exsol {

/// Value, gradient and (optionally) Hessian of a field at a point.
struct Jet2 {
  CVec value;                          // m
  std::vector<CVec> grad;              // n_vars x m
  std::vector<std::vector<CVec>> hess; // n_vars x n_vars x m, symmetric; empty if not computed
  bool has_hess = false;

  cdouble d(int mu, int comp) const { return grad[mu][comp]; }
  cdouble dd(int mu, int nu, int comp) const { return hess[mu][nu][comp]; }
};

/// Finite-difference jet: 4th-order central first derivatives, 4th-order pure
/// second derivatives, mixed ones by nested first differences.
/// Default step h = 1e-3 * max(1, |x|_inf).
Jet2 fd_jet(const FieldFn& field, const Vec4& x, double h = 0.0, bool want_hess = true);

}  // namespace exsol
