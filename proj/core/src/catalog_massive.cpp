// Exact solutions of the massive spinor equation with (bar psi psi)^k coupling.
#include "catalog_util.hpp"

namespace exsol {

using namespace detail;

namespace {

struct MassiveCtx {
  const GammaRep* rep;
  double m, lambda, k, theta;
  CVec chi;
  Tetrad t;
  Vec4 shift;
  Vec4 z(const Vec4& x) const {
    return {x[0] + shift[0], x[1] + shift[1], x[2] + shift[2], x[3] + shift[3]};
  }
};

MassiveCtx make_ctx(const Overrides& ov) {
  MassiveCtx c;
  c.rep = &rep_standard();
  c.m = get_scalar(ov, "m", 1.0);
  c.lambda = get_scalar(ov, "lambda", 1.0);
  c.k = get_scalar(ov, "k", 1.0);
  c.chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
  c.theta = c.m + c.lambda * positive_pow(chi_bar_chi(*c.rep, c.chi, true), c.k);
  c.shift = {get_scalar(ov, "t0", 0.0), get_scalar(ov, "t1", 0.0), get_scalar(ov, "t2", 0.0),
             get_scalar(ov, "t3", 0.0)};
  return c;
}

Overrides massive_randomizer(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Overrides ov;
  ov.scalars["m"] = 0.6 + u(rng);
  ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
  const double kk[3] = {0.5, 1.0, 2.0};
  ov.scalars["k"] = kk[static_cast<int>(u(rng) * 2.999)];
  ov.scalars["t1"] = 0.5 * u(rng);
  ov.chi = CVec{1.0, cdouble(0.4 * u(rng), 0.2 * u(rng)), cdouble(0.3 * u(rng), 0.0), 0.0};
  return ov;
}

EqParams massive_params(const MassiveCtx& c) {
  EqParams p;
  p.scalars = {{"lambda", c.lambda}, {"k", c.k}, {"m", c.m}};
  p.rep = c.rep;
  return p;
}

SolutionEntry massive_entry(int which) {
  SolutionEntry e;
  e.id = "dirac-massive/psi" + std::to_string(which);
  e.equation = "dirac-massive";
  e.tier = "core";
  e.provenance = "sec2.4.4 psi" + std::to_string(which);
  if (which == 3 || which == 6) e.box = {{{0.6, 1.8}, {-1.0, 1.0}, {-1.0, 1.0}, {0.2, 1.0}}};
  if (which == 7) e.profile_slots = {"w1", "w2", "w3"};
  e.build = [which](const Overrides& ov) {
    MassiveCtx c = make_ctx(ov);
    const GammaRep& rep = *c.rep;
    const CMat ga = rep.gamma_dot(c.t.a), gb = rep.gamma_dot(c.t.b), gc = rep.gamma_dot(c.t.c),
               gd = rep.gamma_dot(c.t.d);
    const CMat nil = (ga + gd) * gb;
    const CMat gad = ga * gd;
    SolutionInstance inst;
    inst.eq_params = massive_params(c);
    inst.domain = [](const Vec4&) { return true; };

    switch (which) {
      case 1:
        inst.field = spinor_field([c, ga](const Vec4& x) {
          const Vec4 z = c.z(x);
          return expm(ga * (-I_UNIT * c.theta * mdot(c.t.a, z))) * c.chi;
        });
        break;
      case 2:
        inst.field = spinor_field([c, gb](const Vec4& x) {
          const Vec4 z = c.z(x);
          return expm(gb * (I_UNIT * c.theta * mdot(c.t.b, z))) * c.chi;
        });
        break;
      case 3: {
        const CMat m2 = gc * (I_UNIT * c.theta) + gc * (ga + gd) * cdouble(0.5);
        inst.domain = [c](const Vec4& x) {
          const Vec4 z = c.z(x);
          return mdot(c.t.a, z) + mdot(c.t.d, z) > 0.05;
        };
        inst.field = spinor_field([c, gad, m2](const Vec4& x) {
          const Vec4 z = c.z(x);
          const double u = mdot(c.t.a, z) + mdot(c.t.d, z);
          return expm(gad * cdouble(0.5 * std::log(u))) * (expm(m2 * cdouble(mdot(c.t.c, z))) * c.chi);
        });
        break;
      }
      case 4:
        inst.field = spinor_field([c, nil, gb](const Vec4& x) {
          const Vec4 z = c.z(x);
          const double u = mdot(c.t.a, z) + mdot(c.t.d, z);
          CVec out = expm(gb * (I_UNIT * 0.5 * c.theta * (2.0 * mdot(c.t.b, z) + u * u))) * c.chi;
          return expm(nil * cdouble(-0.5 * u)) * out;
        });
        break;
      case 5: {
        const double alpha = get_scalar(ov, "alpha", 0.7);
        inst.field = spinor_field([c, nil, gb, gc, alpha](const Vec4& x) {
          const Vec4 z = c.z(x);
          const double u = mdot(c.t.a, z) + mdot(c.t.d, z);
          const double arg =
              2.0 * (mdot(c.t.c, z) - alpha * mdot(c.t.b, z)) - alpha * u * u;
          CVec out = expm((gc - gb * cdouble(alpha)) *
                          (I_UNIT * 0.5 * c.theta / (1.0 + alpha * alpha) * arg)) *
                     c.chi;
          return expm(nil * cdouble(-0.5 * u)) * out;
        });
        break;
      }
      case 6: {
        const double beta = get_scalar(ov, "beta", 0.3);
        const CMat m3 = gc * (ga + gd) + (gc - (ga + gd) * cdouble(beta)) * (I_UNIT * c.theta);
        inst.domain = [c](const Vec4& x) {
          const Vec4 z = c.z(x);
          return mdot(c.t.a, z) + mdot(c.t.d, z) > 0.05;
        };
        inst.field = spinor_field([c, nil, gad, m3, beta](const Vec4& x) {
          const Vec4 z = c.z(x);
          const double u = mdot(c.t.a, z) + mdot(c.t.d, z);
          CVec out = expm(m3 * cdouble(mdot(c.t.c, z) - beta * std::log(u))) * c.chi;
          out = expm(gad * cdouble(0.5 * std::log(u))) * out;
          return expm(nil * cdouble(0.5 * (mdot(c.t.b, z) - std::log(u)) / u)) * out;
        });
        break;
      }
      case 7: {
        const Profile1D w1 = get_profile(ov, "w1", default_profile(0));
        const Profile1D w2 = get_profile(ov, "w2", default_profile(1));
        const Profile1D w3 = get_profile(ov, "w3", default_profile(2));
        const GammaRep* rp = c.rep;
        const CMat g4 = rep.g4;
        const CMat gpd = ga + gd;
        inst.field = spinor_field([c, w1, w2, w3, gb, gc, g4, gpd, rp](const Vec4& x) {
          const Vec4 z = c.z(x);
          const double xi = mdot(c.t.a, z) + mdot(c.t.d, z);
          const double w1v = w1(xi).real(), w3v = w3(xi).real();
          const double dw1 = w1.deriv(xi).real(), dw2 = w2.deriv(xi).real();
          const CMat nilp = gpd * (gb * cdouble(-0.5 * dw1) + gc * cdouble(-0.5 * dw2) +
                                   g4 * cdouble(w3v));
          CVec out = expm(gb * (I_UNIT * c.theta * (mdot(c.t.b, z) + w1v))) * c.chi;
          return expm(nilp) * out;
        });
        break;
      }
    }
    return inst;
  };
  e.randomize = massive_randomizer;
  return e;
}

}  // namespace

void register_dirac_massive(std::vector<SolutionEntry>& v) {
  for (int i = 1; i <= 7; ++i) v.push_back(massive_entry(i));
}

}  // namespace exsol
