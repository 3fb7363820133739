#pragma once

#include "exsol/field.hpp"
#include "exsol/specfun.hpp"

#include <array>

namespace exsol {

/// Free profiles of the two-dimensional general solution.
struct Profiles2D {
  std::array<Profile1D, 4> U;  // U0, U1, U2, U3
};

Profiles2D default_profiles_2d();

/// General solution of the cubic-current two-dimensional spinor system on
/// (x0, x1): components 0,2 ride the forward cone variable, 1,3 the backward
/// one, with quadrature phases driven by the opposite pair.
FieldFn dh2d_general(const Profiles2D& profiles, double lambda);

/// Explicit solution of the Cauchy problem psi(0, x1) = f(x1).
FieldFn dh2d_cauchy(const Profiles2D& initial, double lambda);

/// Map a Klein-Gordon solution w (w_xy + m^2 w = 0) to a solution (u, v) of
/// the mixed-sign Thirring system. Base points (A, B) anchor the quadrature
/// phases. Throws std::invalid_argument if w fails its own residual check on
/// the reference box.
FieldFn thirring_map(const FieldFn& w, double m, double lambda, double base_x = 0.0,
                     double base_y = 0.0, bool check_precondition = true);

}  // namespace exsol
