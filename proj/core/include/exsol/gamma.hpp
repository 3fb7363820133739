#pragma once

#include "exsol/cmat.hpp"

#include <string>
#include <vector>

namespace exsol {

/// One concrete realization of the Clifford-Dirac algebra
/// g_mu g_nu + g_nu g_mu = 2 g_{mu nu} I, together with g4 = g0 g1 g2 g3.
struct GammaRep {
  std::string id;              // "standard" | "antihermitian-real-form" | "chiral"
  std::array<CMat, 4> g;       // g0..g3
  CMat g4;                     // derived product g0 g1 g2 g3

  const CMat& gamma(int mu) const { return mu == 4 ? g4 : g[mu]; }

  /// Dirac conjugate row: psi^dagger g0 as a CVec (components of the row).
  CVec bar(const CVec& psi) const;

  /// bar(psi1) . M . psi2
  cdouble sandwich(const CVec& psi1, const CMat& m, const CVec& psi2) const;
  /// bar(psi1) . psi2
  cdouble sandwich(const CVec& psi1, const CVec& psi2) const;

  /// gamma . v = g_{mu nu} gamma_mu v_nu = gamma_0 v_0 - gamma_a v_a
  CMat gamma_dot(const Vec4& v) const;

  /// S_{mu nu} = (1/4)[gamma_mu, gamma_nu]
  CMat spin(int mu, int nu) const;
};

/// Matrices transcribed from the book's three catalog representations.
/// Throws std::invalid_argument for unknown ids.
GammaRep build_rep(const std::string& id);

/// The sixteen products {I, g_mu, g_mu g_nu (mu<nu), g4 g_mu, g4}.
std::vector<CMat> basis16(const GammaRep& rep);

/// Bilinear covariants of a spinor pair.
struct Bilinears {
  cdouble s;                   // bar(psi1) psi2
  cdouble p;                   // bar(psi1) g4 psi2
  std::array<cdouble, 4> v;    // bar(psi1) g_mu psi2
  std::array<cdouble, 4> w;    // bar(psi1) g4 g_mu psi2
  CMat sigma;                  // 4x4, entries bar(psi1) S_{mu nu} psi2

  cdouble v_dot_v() const;     // Minkowski contraction v.v
  cdouble w_dot_w() const;
  cdouble sigma_dot_sigma() const;  // sigma_{mu nu} sigma^{mu nu}
};

Bilinears bilinears(const GammaRep& rep, const CVec& psi1, const CVec& psi2);

/// Max component magnitude of left-minus-right over the four contraction
/// identities relating (bar(psi1) M psi2) M' psi2 to scalar/pseudoscalar
/// bilinears.
double fierz_residual(const GammaRep& rep, const CVec& psi1, const CVec& psi2);

/// Deviations used by the rep self-checks.
double clifford_deviation(const GammaRep& rep);       // anticommutators vs 2 g_{mu nu} I
double g4_deviation(const GammaRep& rep);             // {g4, g_mu} = 0 and g4^2 = -I

}  // namespace exsol
