// Extended-tier exact solutions of the power-nonlinearity Dirac equation:
// Bessel-type entries, the remaining closed-form lists, and the conformal
// (cubic-root) equation entries.
#include "catalog_util.hpp"

namespace exsol {

using namespace detail;

namespace {

// ---- Bessel family ---------------------------------------------------------
//
// phi components solve  w^2 f'' + (1/2)(N - 2 th) w f' + (tau^2/4) w^{2 th + 1} f = 0
// with th = -N/(4k), tau = -lambda C^{1/2k}; the constant C is linked to the
// component constants through the Wronskian of the Bessel pair.
struct BesselPhi {
  double p, th, tau, nu, q;
  cdouble c0, c1, c2, c3;

  static BesselPhi make(double lambda, double k, int N, double taumag) {
    // Pick tau with the sign that keeps the Bessel argument positive, then the
    // amplitude constant follows from the Wronskian of the (J, Y) pair.
    BesselPhi b;
    b.th = -N / (4.0 * k);
    const double two_th1 = (2.0 * k - N) / (2.0 * k);
    b.tau = std::copysign(taumag, two_th1);
    if (!(-b.tau / lambda > 0.0))
      throw ConstraintError("bessel family: lambda must have sign opposite to 2k - N");
    const double C = std::pow(-b.tau / lambda, 2.0 * k);
    const double c = C * b.tau * M_PI / (4.0 * two_th1);
    b.nu = (b.th + 1.0 - N / 2.0) / (1.0 + 2.0 * b.th);
    b.q = (2.0 * b.th + 1.0) / 2.0;
    b.p = (2.0 + 2.0 * b.th - N) / 4.0;
    b.c0 = 1.0;
    b.c1 = 0.0;
    b.c2 = cdouble(0.0, c);
    b.c3 = 0.0;
    return b;
  }

  CVec eval(double w) const {
    const double z = tau / (2.0 * th + 1.0) * std::pow(w, q);
    const double J = bessel_J(nu, z), Y = bessel_Y(nu, z);
    const double Jp = bessel_J_prime(nu, z), Yp = bessel_Y_prime(nu, z);
    const double wp = std::pow(w, p);
    const double dz = 0.5 * tau * std::pow(w, q - 1.0);
    const cdouble f0 = wp * (c0 * J + c2 * Y);
    const cdouble f3 = wp * (c1 * Y + c3 * J);
    const cdouble df0 = p * std::pow(w, p - 1.0) * (c0 * J + c2 * Y) + wp * (c0 * Jp + c2 * Yp) * dz;
    const cdouble df3 = p * std::pow(w, p - 1.0) * (c1 * Y + c3 * J) + wp * (c1 * Yp + c3 * Jp) * dz;
    const cdouble f2 = -2.0 * I_UNIT / tau * std::pow(w, -th) * df0;
    const cdouble f1 = -2.0 * I_UNIT / tau * std::pow(w, -th) * df3;
    return {f0, f1, f2, f3};
  }
};

// Ansatz matrices of the light-cone reductions, in the off-diagonal rep
CMat cone_boost(const GammaRep& rep, double s) {
  // exp{(1/2) g0 g3 ln s}
  return expm(rep.g[0] * rep.g[3] * cdouble(0.5 * std::log(s)));
}

SolutionEntry entry_bessel(int which, int N) {
  SolutionEntry e;
  e.id = "dirac/psi" + std::to_string(which);
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi" + std::to_string(which) + " (bessel)";
  if (N == 1)
    e.box = {{{1.2, 2.2}, {-1.0, 1.0}, {-1.0, 1.0}, {-0.5, 0.5}}};
  else if (N == 2)
    e.box = {{{1.6, 2.6}, {-0.6, 0.6}, {-1.0, 1.0}, {-0.5, 0.5}}};
  else
    e.box = {{{1.9, 2.9}, {-0.6, 0.6}, {-0.6, 0.6}, {-0.5, 0.5}}};
  e.build = [N](const Overrides& ov) {
    const GammaRep& rep = rep_chiral();
    double kdef = N == 1 ? 1.0 : (N == 2 ? 0.75 : 1.0);
    const double k = get_scalar(ov, "k", kdef);
    const double lambda = get_scalar(ov, "lambda", (2.0 * k - N) > 0 ? -1.0 : 1.0);
    if (std::abs(2.0 * k - N) < 1e-9)
      throw ConstraintError("bessel family: k = N/2 is the elementary branch");
    const double taumag = get_scalar(ov, "taumag", 0.8);
    const BesselPhi phi = BesselPhi::make(lambda, k, N, taumag);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [N](const Vec4& x) {
      const double s = x[0] + x[3];
      double w = x[0] * x[0] - x[3] * x[3];
      if (N >= 2) w -= x[1] * x[1];
      if (N >= 3) w -= x[2] * x[2];
      return s > 0.2 && w > 0.2;
    };
    inst.field = spinor_field([phi, N, &rep](const Vec4& x) {
      const double s = x[0] + x[3];
      double w = x[0] * x[0] - x[3] * x[3];
      if (N >= 2) w -= x[1] * x[1];
      if (N >= 3) w -= x[2] * x[2];
      CVec v = phi.eval(w);
      CMat A = cone_boost(rep, s);
      if (N == 2)
        A = expm((rep.g[0] + rep.g[3]) * rep.g[1] * cdouble(0.5 * x[1] / s)) * A;
      else if (N == 3)
        A = expm((rep.g[0] + rep.g[3]) * (rep.g[1] * x[1] + rep.g[2] * x[2]) * cdouble(0.5 / s)) *
            A;
      return A * v;
    });
    return inst;
  };
  e.randomize = [N](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    double kk;
    if (N == 1)
      kk = u(rng) < 0.5 ? 1.0 : 0.75;
    else if (N == 2)
      kk = u(rng) < 0.5 ? 0.75 : 1.25;
    else
      kk = u(rng) < 0.5 ? 1.0 : 1.25;
    ov.scalars["k"] = kk;
    // sign rule: lambda (2k - N) < 0
    const double mag = 0.5 + 1.2 * u(rng);
    ov.scalars["lambda"] = (2.0 * kk - N) > 0 ? -mag : mag;
    ov.scalars["taumag"] = 0.4 + u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi16() {
  SolutionEntry e;
  e.id = "dirac/psi16";
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi16";
  e.box = {{{1.2, 2.2}, {-1.0, 1.0}, {-1.0, 1.0}, {-0.5, 0.5}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_chiral();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double c = get_scalar(ov, "c", 0.7);
    const double tau = -2.0 * lambda * c;
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 0.5}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [](const Vec4& x) {
      return x[0] + x[3] > 0.2 && x[0] * x[0] - x[3] * x[3] > 0.2;
    };
    inst.field = spinor_field([tau, c, &rep](const Vec4& x) {
      const double s = x[0] + x[3];
      const double w = x[0] * x[0] - x[3] * x[3];
      const double ph = 0.5 * tau * std::log(w);
      const cdouble ic(0.0, c);
      CVec v(4);
      v[0] = std::cos(ph) + ic * std::sin(ph);
      v[1] = 0.0;
      v[2] = -I_UNIT / std::sqrt(w) * (ic * std::cos(ph) - std::sin(ph));
      v[3] = 0.0;
      return cone_boost(rep, s) * v;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.scalars["c"] = 0.3 + u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_power_elem(int which, int N) {
  // psi26 (N=2, k=1) and psi27 (N=3, k=3/2): power-law phi with coupled theta
  SolutionEntry e;
  e.id = "dirac/psi" + std::to_string(which);
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi" + std::to_string(which);
  e.box = (N == 2) ? std::array<std::pair<double, double>, 4>{
                         {{1.6, 2.6}, {-0.6, 0.6}, {-1.0, 1.0}, {-0.5, 0.5}}}
                   : std::array<std::pair<double, double>, 4>{
                         {{1.9, 2.9}, {-0.6, 0.6}, {-0.6, 0.6}, {-0.5, 0.5}}};
  e.build = [N](const Overrides& ov) {
    const GammaRep& rep = rep_chiral();
    const double k = N / 2.0;
    const double lambda = get_scalar(ov, "lambda", 1.0);
    // tau must have sign opposite to lambda so that C = (-tau/lambda)^{2k} > 0
    const double tau = -std::copysign(get_scalar(ov, "tau", N == 2 ? 0.4 : 0.5), lambda);
    double c;
    double disc;
    if (N == 2) {
      disc = 1.0 - 4.0 * tau * tau;
      if (disc <= 0.0) throw ConstraintError("psi26: |tau| must be < 1/2");
      c = -tau * std::pow(tau / lambda, 2) / (2.0 * std::sqrt(disc));
    } else {
      disc = 1.0 - tau * tau;
      if (disc <= 0.0) throw ConstraintError("psi27: |tau| must be < 1");
      c = -tau * std::pow(-tau / lambda, 3) / (4.0 * std::sqrt(disc));
    }
    const double tp = (N == 2) ? 0.25 * (-1.0 + std::sqrt(disc)) : 0.5 * (-1.0 + std::sqrt(disc));
    const double tm = (N == 2) ? 0.25 * (-1.0 - std::sqrt(disc)) : 0.5 * (-1.0 - std::sqrt(disc));
    const cdouble c0 = 1.0, c2 = cdouble(0.0, c);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [N](const Vec4& x) {
      const double s = x[0] + x[3];
      double w = x[0] * x[0] - x[3] * x[3] - x[1] * x[1];
      if (N == 3) w -= x[2] * x[2];
      return s > 0.2 && w > 0.2;
    };
    inst.field = spinor_field([=, &rep](const Vec4& x) {
      const double s = x[0] + x[3];
      double w = x[0] * x[0] - x[3] * x[3] - x[1] * x[1];
      if (N == 3) w -= x[2] * x[2];
      CVec v(4);
      v[0] = c0 * std::pow(w, tp) + c2 * std::pow(w, tm);
      v[3] = 0.0;
      v[2] = -2.0 * I_UNIT / tau / std::sqrt(w) * (tp * c0 * std::pow(w, tp) + tm * c2 * std::pow(w, tm));
      v[1] = 0.0;
      CMat A = cone_boost(rep, s);
      if (N == 2)
        A = expm((rep.g[0] + rep.g[3]) * rep.g[1] * cdouble(0.5 * x[1] / s)) * A;
      else
        A = expm((rep.g[0] + rep.g[3]) * (rep.g[1] * x[1] + rep.g[2] * x[2]) * cdouble(0.5 / s)) *
            A;
      return A * v;
    });
    return inst;
  };
  e.randomize = [N](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.scalars["tau"] = N == 2 ? (0.15 + 0.3 * u(rng)) : (0.25 + 0.6 * u(rng));
    return ov;
  };
  return e;
}

// ---- psi19/psi20: profile entries at k = 1 ---------------------------------

SolutionEntry entry_psi19() {
  SolutionEntry e;
  e.id = "dirac/psi19";
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi19";
  e.profile_slots = {"w0", "w1", "w2", "w3"};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * std::sqrt(chi_bar_chi(rep, chi, true));
    const Profile1D w0 = get_profile(ov, "w0", Profile1D{[](double z) {
                           return cdouble(std::exp(-0.25 * z * z));
                         }});
    const Profile1D w1 = get_profile(ov, "w1", default_profile(0));
    const Profile1D w2 = get_profile(ov, "w2", default_profile(1));
    const Profile1D w3 = get_profile(ov, "w3", default_profile(2));
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 1.0}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [w0](const Vec4& x) { return w0(x[0] + x[3]).real() > 0.05; };
    const CMat g1 = rep.g[1], g2 = rep.g[2], g4 = rep.g4;
    const CMat gp = rep.g[0] + rep.g[3];
    inst.field = spinor_field([=](const Vec4& x) {
      const double xi = x[0] + x[3];
      const double w0v = w0(xi).real(), w1v = w1(xi).real(), w2v = w2(xi).real(),
                   w3v = w3(xi).real();
      const double dw0 = w0.deriv(xi).real(), dw1 = w1.deriv(xi).real(),
                   dw2 = w2.deriv(xi).real();
      const CMat nil =
          gp * (g1 * cdouble(-0.5 * dw1) + g2 * cdouble(-0.5 * dw2) + g4 * cdouble(w3v) +
                (g1 * (x[1] + w1v) + g2 * (x[2] + w2v)) * cdouble(0.5 * dw0 / w0v));
      CVec out = expm(nil) * (expm(g1 * (I_UNIT * tau / w0v * (x[1] + w1v))) * chi);
      for (auto& cc : out) cc /= w0v;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi20() {
  SolutionEntry e;
  e.id = "dirac/psi20";
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi20";
  e.profile_slots = {"w0", "w1", "w2", "w3"};
  e.box = {{{-1.0, 1.0}, {0.4, 1.6}, {0.4, 1.6}, {-1.0, 1.0}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * std::sqrt(chi_bar_chi(rep, chi, true));
    const Profile1D w0 = get_profile(ov, "w0", Profile1D{[](double z) {
                           return cdouble(std::exp(-0.25 * z * z));
                         }});
    const Profile1D w1 = get_profile(ov, "w1", default_profile(0));
    const Profile1D w2 = get_profile(ov, "w2", default_profile(1));
    const Profile1D w3 = get_profile(ov, "w3", default_profile(2));
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 1.0}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [w0, w1, w2](const Vec4& x) {
      const double xi = x[0] + x[3];
      const double u1 = x[1] + w1(xi).real(), u2 = x[2] + w2(xi).real();
      return w0(xi).real() > 0.05 && u1 * u1 + u2 * u2 > 0.1 && std::abs(u2) > 0.05;
    };
    const CMat g1 = rep.g[1], g2 = rep.g[2], g4 = rep.g4;
    const CMat gp = rep.g[0] + rep.g[3];
    const CMat g12 = rep.g[1] * rep.g[2];
    inst.field = spinor_field([=](const Vec4& x) {
      const double xi = x[0] + x[3];
      const double w0v = w0(xi).real(), w1v = w1(xi).real(), w2v = w2(xi).real(),
                   w3v = w3(xi).real();
      const double dw0 = w0.deriv(xi).real(), dw1 = w1.deriv(xi).real(),
                   dw2 = w2.deriv(xi).real();
      const double u1 = x[1] + w1v, u2 = x[2] + w2v;
      const double r2 = u1 * u1 + u2 * u2;
      const CMat nil = gp * (g1 * cdouble(-0.5 * dw1) + g2 * cdouble(-0.5 * dw2) +
                             g4 * cdouble(w3v) +
                             (g1 * u1 + g2 * u2) * cdouble(0.5 * dw0 / w0v));
      CVec out = expm(g2 * (2.0 * I_UNIT * tau * std::pow(r2, 0.25) / std::sqrt(w0v))) * chi;
      out = expm(g12 * cdouble(-0.5 * std::atan(u1 / u2))) * out;
      out = expm(nil) * out;
      const double pref = std::pow(w0v, -0.5) * std::pow(r2, -0.25);
      for (auto& cc : out) cc *= pref;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    return ov;
  };
  return e;
}

// ---- psi21..psi25: conformal-prefactor entries at k = 1 --------------------

SolutionEntry entry_cone(int which) {
  SolutionEntry e;
  e.id = "dirac/psi" + std::to_string(which);
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi" + std::to_string(which);
  const bool spatial = (which == 24 || which == 25);
  if (spatial)
    e.box = {{{-1.0, 1.0}, {0.4, 1.4}, {0.4, 1.4}, {0.4, 1.4}}};
  else
    e.box = {{{1.8, 2.8}, {0.3, 0.9}, {0.3, 0.9}, {-1.0, 1.0}}};
  e.build = [which](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const bool spatial = (which == 24 || which == 25);
    // the spatial prefactor squares to -r^2, so bar(psi) psi > 0 needs
    // bar(chi) chi < 0 there; the timelike prefactor keeps the plus branch
    const CVec chi = get_chi(ov, spatial ? CVec{0.0, 0.0, 1.0, 0.0} : CVec{1.0, 0.0, 0.0, 0.0});
    const double cbc = rep.sandwich(chi, chi).real();
    if (spatial ? !(cbc < 0.0) : !(cbc > 0.0))
      throw ConstraintError("constraint violated: sign of bar(chi) chi for this entry");
    const double tau = lambda * std::sqrt(std::abs(cbc));
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 1.0}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [which, spatial](const Vec4& x) {
      if (spatial) {
        const double r2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        if (r2 < 0.2) return false;
        if (which == 25 && (x[1] * x[1] + x[2] * x[2] < 0.1 || std::abs(x[2]) < 0.05))
          return false;
        return true;
      }
      const double q = x[0] * x[0] - x[1] * x[1] - x[2] * x[2];
      if (q < 0.2) return false;
      if (which == 23 && (x[1] * x[1] + x[2] * x[2] < 0.1 || std::abs(x[2]) < 0.05)) return false;
      return true;
    };
    const CMat g0 = rep.g[0], g1 = rep.g[1], g2 = rep.g[2], g3 = rep.g[3];
    const CMat g12 = g1 * g2;
    inst.field = spinor_field([=](const Vec4& x) {
      CVec out = chi;
      if (which == 21 || which == 22 || which == 23) {
        const double q = x[0] * x[0] - x[1] * x[1] - x[2] * x[2];
        const CMat pref = g0 * x[0] - g1 * x[1] - g2 * x[2];
        if (which == 21)
          out = expm(g0 * (I_UNIT * tau * x[0] / q)) * out;
        else if (which == 22)
          out = expm(g1 * (-I_UNIT * tau * x[1] / q)) * out;
        else {
          const double r2 = x[1] * x[1] + x[2] * x[2];
          out = expm(g2 * (-2.0 * I_UNIT * tau * std::pow(r2, 0.25) / std::sqrt(q))) * out;
          out = expm(g12 * cdouble(-0.5 * std::atan(x[1] / x[2]))) * out;
          out = pref * out;
          const double sc = 1.0 / q * std::pow(r2, -0.25);
          for (auto& cc : out) cc *= sc;
          return out;
        }
        out = pref * out;
        const double sc = std::pow(q, -1.5);
        for (auto& cc : out) cc *= sc;
        return out;
      }
      // psi24 / psi25
      const double r2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
      const CMat pref = g1 * x[1] + g2 * x[2] + g3 * x[3];
      if (which == 24) {
        out = expm(g1 * (-I_UNIT * tau * x[1] / r2)) * out;
        out = pref * out;
        const double sc = std::pow(r2, -1.5);
        for (auto& cc : out) cc *= sc;
        return out;
      }
      const double rho2 = x[1] * x[1] + x[2] * x[2];
      out = expm(g2 * (-2.0 * I_UNIT * tau * std::pow(rho2, 0.25) / std::sqrt(r2))) * out;
      out = expm(g12 * cdouble(-0.5 * std::atan(x[1] / x[2]))) * out;
      out = pref * out;
      const double sc = 1.0 / r2 * std::pow(rho2, -0.25);
      for (auto& cc : out) cc *= sc;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    return ov;
  };
  e.randomize = [spatial_ids = std::vector<int>{24, 25}, e_id = e.id](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    const bool spatial = e_id == "dirac/psi24" || e_id == "dirac/psi25";
    if (spatial)
      ov.chi = CVec{cdouble(0.2 * u(rng), 0.0), 0.0, 1.0, cdouble(0.2 * u(rng), 0.1)};
    else
      ov.chi = CVec{1.0, cdouble(0.2 * u(rng), 0.3 * u(rng)), cdouble(0.2 * u(rng), 0.0), 0.0};
    return ov;
  };
  return e;
}

// ---- psi28/psi29 and the parabolic-variable entries -------------------------

SolutionEntry entry_psi28() {
  SolutionEntry e;
  e.id = "dirac/psi28";
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi28";
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double beta = get_scalar(ov, "beta", 0.4);
    const double b1 = get_scalar(ov, "beta1", 1.0);
    const double b2 = get_scalar(ov, "beta2", 0.6);
    const CVec chi = get_chi(ov, CVec{0.0, 0.0, 1.0, 0.0});
    const double cbc = rep.sandwich(chi, chi).real();
    if (!(cbc < 0.0))
      throw ConstraintError("psi28 needs bar(chi) chi < 0 (prefactor squares to -omega)");
    const double sgn = -1.0;
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 0.5}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [beta](const Vec4& x) {
      const double s = x[0] + x[3];
      const double u = x[2] + beta * s;
      const double V = 2.0 * x[1] + s * s;
      return u * u + 0.25 * V * V > 0.1;
    };
    const CMat g1 = rep.g[1];
    const CMat gp = rep.g[0] + rep.g[3];
    const CMat B1 = rep.g[2] + gp * cdouble(beta);
    inst.field = spinor_field([=](const Vec4& x) {
      const double s = x[0] + x[3];
      const double u = x[2] + beta * s;
      const double V = 2.0 * x[1] + s * s;
      const double w = u * u + 0.25 * V * V;
      const CMat big = B1 * u + g1 * cdouble(0.5 * V);
      const CMat phase = (B1 * b1 + g1 * b2) *
                         (I_UNIT * sgn * lambda * std::abs(cbc) / (b1 * b1 + b2 * b2) / w *
                          (b1 * u + 0.5 * b2 * V));
      CVec out = expm(phase) * chi;
      out = big * out;
      out = expm(g1 * gp * cdouble(0.5 * s)) * out;
      for (auto& cc : out) cc /= w;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.scalars["beta"] = 0.6 * u(rng);
    ov.scalars["beta1"] = 0.7 + 0.6 * u(rng);
    ov.scalars["beta2"] = 0.3 + 0.6 * u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi29() {
  SolutionEntry e;
  e.id = "dirac/psi29";
  e.equation = "dirac-power";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4 psi29";
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double beta = get_scalar(ov, "beta", 0.4);
    // only the k = -1 member of this structure closes on the equation
    const double k = -1.0;
    const double C0 = 0.0;
    const double eps = lambda > 0 ? 1.0 : -1.0;
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double cbc = chi_bar_chi(rep, chi, true);
    const double amp = eps * lambda / std::sqrt(2.0 * cbc);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [beta](const Vec4& x) {
      const double s = x[0] + x[3];
      const double u = x[2] + beta * s;
      const double V = 2.0 * x[1] + s * s;
      return u * u + 0.25 * V * V > 0.1;
    };
    const CMat g1 = rep.g[1];
    const CMat gp = rep.g[0] + rep.g[3];
    const CMat B1 = rep.g[2] + gp * cdouble(beta);
    inst.field = spinor_field([=](const Vec4& x) {
      const double s = x[0] + x[3];
      const double u = x[2] + beta * s;
      const double V = 2.0 * x[1] + s * s;
      const double w = u * u + 0.25 * V * V;
      (void)k;
      const double f = amp;
      const double g = -eps * std::sqrt(2.0 * amp * amp * w + C0);
      const CMat big = B1 * u + g1 * cdouble(0.5 * V);
      CVec out = big * chi;
      for (std::size_t i = 0; i < 4; ++i) out[i] = out[i] * f + I_UNIT * g * chi[i];
      out = expm(g1 * gp * cdouble(0.5 * s)) * out;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.scalars["beta"] = 0.6 * u(rng);
    ov.chi = CVec{1.0, cdouble(0.3 * u(rng), 0.2 * u(rng)), 0.0, 0.0};
    return ov;
  };
  return e;
}

SolutionEntry entry_logwave() {
  // the k = 1/2 solution with a logarithmic cone phase
  SolutionEntry e;
  e.id = "dirac/logwave";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 eq57";
  e.box = {{{0.6, 1.8}, {-1.0, 1.0}, {-1.0, 1.0}, {0.2, 1.0}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double cbc = chi_bar_chi(rep, chi, true);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", 0.5}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [](const Vec4& x) { return x[0] + x[3] > 0.1; };
    const CMat g03 = rep.g[0] * rep.g[3];
    const CMat g3 = rep.g[3];
    inst.field = spinor_field([=](const Vec4& x) {
      const double s = x[0] + x[3];
      CVec out = expm(g3 * (I_UNIT * 0.5 * lambda * cbc * (std::log(s) - x[0] + x[3]))) * chi;
      out = expm((g03 - CMat::identity(4)) * cdouble(0.25 * std::log(s))) * out;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.chi = CVec{1.0, cdouble(0.3 * u(rng), 0.2), 0.0, cdouble(0.0, 0.4 * u(rng))};
    return ov;
  };
  return e;
}

SolutionEntry entry_conefamily() {
  // the family with hyperbolic profile functions of x2/(x0-x3)
  SolutionEntry e;
  e.id = "dirac/conefamily";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 eq60-62 family";
  e.box = {{{0.6, 1.8}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 0.2}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau0 = chi_bar_chi(rep, chi, true);
    const double lt = lambda * std::pow(tau0, 1.0 / (2.0 * k));
    const double theta = k;
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = [](const Vec4& x) { return x[0] - x[3] > 0.1; };
    const CMat g2 = rep.g[2];
    const CMat gm = rep.g[0] - rep.g[3];
    const CMat g2gm = g2 * gm;
    inst.field = spinor_field([=](const Vec4& x) {
      const double s = x[0] - x[3];
      const double z = x[2] / s;
      const cdouble f1 = std::cosh(lt * z);
      const cdouble f2 = I_UNIT * std::sinh(lt * z);
      const cdouble f3 = I_UNIT * (1.0 - 2.0 * theta) / (4.0 * lt) * std::cosh(lt * z) -
                         I_UNIT * 0.5 * (1.0 + z) * std::sinh(lt * z);
      const cdouble f4 = (1.0 - 2.0 * theta) / (4.0 * lt) * std::sinh(lt * z) +
                         0.5 * (1.0 - z) * std::cosh(lt * z);
      CMat M = CMat::identity(4) * f1 + g2 * f2 + gm * f3 + g2gm * f4;
      CVec out = M * chi;
      const double pref = std::pow(s, -k);
      for (auto& cc : out) cc *= pref;
      return out;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + u(rng);
    ov.scalars["k"] = 0.5 + u(rng);
    ov.chi = CVec{1.0, cdouble(0.3 * u(rng), 0.0), 0.0, cdouble(0.2 * u(rng), 0.0)};
    return ov;
  };
  return e;
}

// ---- conformal (cubic-root) equation entries --------------------------------

SolutionEntry entry_gursey(int which) {
  SolutionEntry e;
  e.id = "gursey/sol" + std::to_string(which);
  e.equation = "gursey";
  e.tier = "extended";
  e.tol = 1e-4;
  e.provenance = "sec2.4.3 entry" + std::to_string(which);
  if (which == 4)
    e.box = {{{0.8, 1.4}, {0.15, 0.45}, {0.15, 0.45}, {0.2, 0.6}}};
  else
    e.box = {{{-0.45, 0.45}, {-1.0, 1.0}, {-1.0, 1.0}, {-0.45, 0.45}}};
  e.build = [which](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau0 = std::cbrt(chi_bar_chi(rep, chi, true));
    EqParams p;
    p.scalars = {{"lambda", lambda}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    const CMat g0 = rep.g[0], g1 = rep.g[1], g2 = rep.g[2], g3 = rep.g[3];
    const CMat g03 = g0 * g3, g12 = g1 * g2;
    const CMat gm = g0 - g3;
    auto gdotx = [&rep](const Vec4& x) {
      return rep.g[0] * x[0] - rep.g[1] * x[1] - rep.g[2] * x[2] - rep.g[3] * x[3];
    };
    auto Rmat = [g03, gm, gdotx](double tau, const Vec4& x) {
      const double ct = std::cos(0.5 * tau), st = std::sin(0.5 * tau);
      return CMat::identity(4) * cdouble(ct * ct) + g03 * cdouble(st * st) +
             gdotx(x) * gm * cdouble(0.5 * std::sin(tau));
    };
    if (which == 1) {
      inst.domain = [](const Vec4&) { return true; };
      inst.field = spinor_field([=](const Vec4& x) {
        const double xi = x[0] - x[3];
        const double den = 1.0 + xi * xi;
        const double t = std::atan(xi);
        CVec out = expm((g2 + g3 - g0) * (I_UNIT * lambda * tau0 *
                                          (-t + (x[1] * xi + x[2]) / den))) *
                   chi;
        out = expm(g2 * gm * cdouble(-0.5 * (x[2] * xi - x[1]) / den)) * out;
        out = expm(g1 * gm * cdouble(-0.5 * t)) * out;
        out = expm(g12 * cdouble(-0.5 * t)) * out;
        out = Rmat(t, x) * out;
        for (auto& cc : out) cc /= den;
        return out;
      });
    } else if (which == 3) {
      inst.domain = [](const Vec4&) { return true; };
      inst.field = spinor_field([=](const Vec4& x) {
        const double xi = x[0] - x[3];
        const double den = 1.0 + xi * xi;
        const double t = std::atan(xi);
        CVec out = expm(g1 * (-I_UNIT * lambda * tau0 * (x[2] * xi - x[1]) / den)) * chi;
        out = expm(g1 * gm * cdouble(-0.5 * (x[1] * xi + x[2]) / den)) * out;
        out = expm(g12 * cdouble(-0.5 * t)) * out;
        out = Rmat(t, x) * out;
        for (auto& cc : out) cc /= den;
        return out;
      });
    } else {
      // quadrature-phase entry
      Antiderivative phase(
          [](double z) { return std::pow(z, -2.0 / 3.0) * std::pow(z - 4.0, -2.0 / 3.0); }, 4.5);
      inst.domain = [](const Vec4& x) {
        const double rho2 = x[1] * x[1] + x[2] * x[2];
        if (rho2 < 0.02 || std::abs(x[2]) < 0.05) return false;
        const double xx = mdot(x, x);
        const double w = (4.0 * x[0] * x[0] + (xx - 1.0) * (xx - 1.0)) / rho2;
        return w > 4.3 && std::abs(x[0]) > 0.05 && std::abs(x[3]) > 0.05;
      };
      inst.field = spinor_field([=](const Vec4& x) {
        const double rho2 = x[1] * x[1] + x[2] * x[2];
        const double xx = mdot(x, x);
        const double w = (4.0 * x[0] * x[0] + (xx - 1.0) * (xx - 1.0)) / rho2;
        const double t2 = std::atan((xx - 1.0) / (2.0 * x[0])) + M_PI / 2.0;
        const double t3 = std::atan((xx + 1.0) / (2.0 * x[3])) - M_PI / 2.0;
        const CMat brace =
            CMat::identity(4) * cdouble(std::cos(0.5 * t2) * std::cos(0.5 * t3)) +
            g03 * cdouble(std::sin(0.5 * t2) * std::sin(0.5 * t3)) +
            gdotx(x) * (g0 * cdouble(std::sin(0.5 * t2) * std::cos(0.5 * t3)) -
                        g3 * cdouble(std::cos(0.5 * t2) * std::sin(0.5 * t3)));
        CVec out = expm(g2 * (-I_UNIT * std::pow(2.0, -4.0 / 3.0) * lambda * tau0 * phase(w))) * chi;
        out = expm(g12 * cdouble(-0.5 * std::atan(x[1] / x[2]))) * out;
        out = brace * out;
        const double pref = 1.0 / rho2 * std::pow(w, -0.25) * std::pow(w - 4.0, -0.25) *
                            std::pow(std::sqrt(w) + std::sqrt(w - 4.0), -0.5);
        for (auto& cc : out) cc *= pref;
        return out;
      });
    }
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    ov.chi = CVec{1.0, cdouble(0.2 * u(rng), 0.1), 0.0, 0.0};
    return ov;
  };
  return e;
}

}  // namespace

void register_dirac_extended(std::vector<SolutionEntry>& v) {
  v.push_back(entry_bessel(11, 1));
  v.push_back(entry_bessel(14, 2));
  v.push_back(entry_bessel(15, 3));
  v.push_back(entry_psi16());
  v.push_back(entry_power_elem(26, 2));
  v.push_back(entry_power_elem(27, 3));
  v.push_back(entry_psi19());
  v.push_back(entry_psi20());
  for (int w : {21, 22, 23, 24, 25}) v.push_back(entry_cone(w));
  v.push_back(entry_psi28());
  v.push_back(entry_psi29());
  v.push_back(entry_logwave());
  v.push_back(entry_conefamily());
  v.push_back(entry_gursey(1));
  v.push_back(entry_gursey(3));
  v.push_back(entry_gursey(4));
}

}  // namespace exsol
