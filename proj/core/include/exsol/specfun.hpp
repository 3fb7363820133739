#pragma once

#include "exsol/cmat.hpp"

#include <functional>

namespace exsol {

/// Bessel functions for real order, x > 0 (domain error otherwise).
double bessel_J(double nu, double x);
double bessel_Y(double nu, double x);
double bessel_I(double nu, double x);
double bessel_K(double nu, double x);

/// Derivatives via the downward recurrences J' = (nu/x)J - J_{nu+1} etc.
double bessel_J_prime(double nu, double x);
double bessel_Y_prime(double nu, double x);
double bessel_I_prime(double nu, double x);
double bessel_K_prime(double nu, double x);

struct JacobiSnCnDn {
  double sn, cn, dn;
};

/// Jacobi elliptic functions, elliptic modulus k in [0,1) (not m = k^2).
/// Descending Landen transformation.
JacobiSnCnDn jacobi_sn_cn_dn(double u, double k);

struct QuadratureSpec {
  double target_accuracy = 1e-11;
  int max_subdivisions = 2000;
};

/// Adaptive Gauss-Kronrod 7/15 integration of a continuous function.
/// Throws std::runtime_error if the subdivision limit is exceeded before the
/// accuracy target is met.
double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec = {});
cdouble integrate_complex(const std::function<cdouble(double)>& f, double a, double b,
                          const QuadratureSpec& spec = {});

template <typename F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  using R = decltype(f(0.0));
  if constexpr (std::is_same_v<R, cdouble>)
    return integrate_complex(std::function<cdouble(double)>(std::forward<F>(f)), a, b, spec);
  else
    return integrate_real(std::function<double(double)>(std::forward<F>(f)), a, b, spec);
}

/// Antiderivative F(x) = int_base^x f, with per-object caching along the path
/// so that repeated nearby evaluations stay cheap.
class Antiderivative {
 public:
  Antiderivative(std::function<double(double)> f, double base, QuadratureSpec spec = {})
      : f_(std::move(f)), base_(base), spec_(spec) {}
  double operator()(double x) const;

 private:
  std::function<double(double)> f_;
  double base_;
  QuadratureSpec spec_;
};

/// Matrix exponential by scaling and squaring with a Taylor kernel.
CMat expm(const CMat& m);
inline CMat expm4(const CMat& m) { return expm(m); }

}  // namespace exsol
