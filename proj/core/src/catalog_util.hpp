#pragma once

#include "exsol/catalog.hpp"
#include "exsol/gamma.hpp"

#include <cmath>

namespace exsol::detail {

/// Minkowski-orthonormal tetrad: a.a=1, b.b=c.c=d.d=-1, mixed products 0.
struct Tetrad {
  Vec4 a{1, 0, 0, 0}, b{0, -1, 0, 0}, c{0, 0, -1, 0}, d{0, 0, 0, -1};

  Vec4 k() const { return {a[0] + d[0], a[1] + d[1], a[2] + d[2], a[3] + d[3]}; }
  double check() const;  // max deviation from the orthonormality relations
};

/// Random proper Lorentz transform applied to the default tetrad (keeps the
/// orthonormality relations exactly up to rounding).
Tetrad random_tetrad(std::mt19937_64& rng, double amplitude = 0.4);

inline double dot(const Vec4& v, const Vec4& x) { return mdot(v, x); }

double get_scalar(const Overrides& ov, const std::string& name, double fallback);
CVec get_chi(const Overrides& ov, const CVec& fallback);
Profile1D get_profile(const Overrides& ov, const std::string& name, Profile1D fallback);

/// bar(chi) chi for the given rep; throws ConstraintError unless > 0 when
/// require_positive is set.
double chi_bar_chi(const GammaRep& rep, const CVec& chi, bool require_positive);

/// w2(chi) = chi^+ chi + bar(chi) g4 chi (Galilei invariant bilinear).
double chi_w2(const GammaRep& rep, const CVec& chi);

const GammaRep& rep_standard();
const GammaRep& rep_chiral();  // the (0 I; I 0) catalog representation

/// field factory: 4-var spinor field from a matrix-valued closure
FieldFn spinor_field(std::function<CVec(const Vec4&)> f);

/// standard profile defaults for free-function slots
Profile1D default_profile(int which);

}  // namespace exsol::detail
