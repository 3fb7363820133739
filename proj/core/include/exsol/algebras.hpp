#pragma once

#include "exsol/diffop.hpp"
#include "exsol/gamma.hpp"

namespace exsol {

/// Spinor-representation generators on variables (x0..x3).
/// P_mu = d^mu, J_{mu nu} = x_mu d^nu - x_nu d^mu + S_{mu nu},
/// D = x_rho d_rho + k, K_mu = 2 x_mu D - (x.x) d^mu + 2 S_{mu nu} x^nu.
MatDiffOp1 op_P(int mu, const GammaRep& rep);
MatDiffOp1 op_J(int mu, int nu, const GammaRep& rep);
MatDiffOp1 op_D(double conformal_k, const GammaRep& rep);
MatDiffOp1 op_K(int mu, const GammaRep& rep);

/// Galilei generators of the generalized Galilei algebra on (t, x1..x3),
/// projective representation with mass parameter m.
MatDiffOp1 gal_P0(const GammaRep& rep);
MatDiffOp1 gal_Pa(int a, const GammaRep& rep);
MatDiffOp1 gal_J(int a, int b, const GammaRep& rep);
MatDiffOp1 gal_G(int a, double m, const GammaRep& rep);
MatDiffOp1 gal_M(double m, const GammaRep& rep);
MatDiffOp1 gal_D(const GammaRep& rep);
MatDiffOp1 gal_A(double m, const GammaRep& rep);

/// Non-Lie symmetry operators of the massive Dirac equation:
/// omega_{mu nu} = (i/2)(g_mu d^nu - g_nu d^mu) + m S_{mu nu}.
MatDiffOp1 op_omega(int mu, int nu, double m, const GammaRep& rep);

/// Named certified catalogs.
AlgebraCatalog catalog_poincare_spinor(const GammaRep& rep);       // AP(1,3), (10 gens)
AlgebraCatalog catalog_extended_poincare(const GammaRep& rep);     // + D at k = 3/2
AlgebraCatalog catalog_conformal_spinor(const GammaRep& rep);      // AC(1,3), (15 gens)
AlgebraCatalog catalog_galilei(double m, const GammaRep& rep);     // AG2(1,3), (13 gens)
AlgebraCatalog catalog_poincare_scalar();                          // scalar rep, dim 1
AlgebraCatalog catalog_yme_conformal();                            // 12 field components

/// All certified catalogs by name.
std::vector<std::string> algebra_catalog_names();
AlgebraCatalog build_algebra_catalog(const std::string& name);

}  // namespace exsol
