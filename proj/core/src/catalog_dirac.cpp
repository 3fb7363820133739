// Exact solutions of the power-nonlinearity Dirac equation, elementary family.
#include "catalog_util.hpp"

namespace exsol {

using namespace detail;

namespace {

CVec random_positive_chi(std::mt19937_64& rng, const GammaRep& rep) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int tries = 0; tries < 200; ++tries) {
    CVec chi(4);
    for (auto& c : chi) c = cdouble(u(rng), u(rng));
    if (rep.sandwich(chi, chi).real() > 0.25) return chi;
  }
  throw ConstraintError("could not draw chi with positive norm");
}

Overrides basic_randomizer(std::mt19937_64& rng, bool with_k = true) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Overrides ov;
  ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
  if (with_k) {
    const double kk[5] = {0.5, 0.75, 1.0, 1.5, 2.0};
    ov.scalars["k"] = kk[static_cast<int>(u(rng) * 4.999)];
  }
  ov.chi = random_positive_chi(rng, rep_standard());
  return ov;
}

/// psi = expm(E1) expm(E2) ... chi with position-dependent exponents
SolutionInstance make_exp_product(const GammaRep& rep, EqParams params,
                                  std::vector<std::function<CMat(const Vec4&)>> exps, CVec chi,
                                  std::function<bool(const Vec4&)> domain) {
  SolutionInstance inst;
  inst.eq_params = std::move(params);
  inst.eq_params.rep = &rep;
  inst.domain = std::move(domain);
  inst.field = spinor_field([exps = std::move(exps), chi = std::move(chi)](const Vec4& x) {
    CVec v = chi;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) v = expm((*it)(x)) * v;
    return v;
  });
  return inst;
}

std::function<bool(const Vec4&)> all_domain() {
  return [](const Vec4&) { return true; };
}

// ---- psi1 .. psi6: tetrad families -----------------------------------------

SolutionEntry entry_psi_plane(int which) {
  // which = 1: exp(-i tau (g.a)(a.x)) chi ; which = 2: exp(+i tau (g.b)(b.x)) chi
  SolutionEntry e;
  e.id = "dirac/psi" + std::to_string(which);
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = which == 1 ? "sec2.4 psi1 / family 2.4.46" : "sec2.4 psi2";
  e.build = [which](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * positive_pow(chi_bar_chi(rep, chi, true), 1.0 / (2.0 * k));
    Tetrad t;
    const double boost = get_scalar(ov, "boost", 0.0);
    if (boost != 0.0) {
      // boosted member of the one-parameter family in the (a,d) plane
      Vec4 a = t.a, d = t.d;
      for (int i = 0; i < 4; ++i) {
        t.a[i] = std::cosh(boost) * a[i] + std::sinh(boost) * d[i];
        t.d[i] = std::cosh(boost) * d[i] + std::sinh(boost) * a[i];
      }
    }
    const Vec4 dir = which == 1 ? t.a : t.b;
    const double sign = which == 1 ? -1.0 : 1.0;
    const CMat gdir = rep.gamma_dot(dir);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    return make_exp_product(
        rep, p,
        {[gdir, tau, sign, dir](const Vec4& x) {
          return gdir * (sign * I_UNIT * tau * mdot(dir, x));
        }},
        chi, all_domain());
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    ov.scalars["boost"] = u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi3() {
  SolutionEntry e;
  e.id = "dirac/psi3";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi3";
  e.box = {{{0.6, 1.8}, {-1.0, 1.0}, {-1.0, 1.0}, {0.2, 1.0}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    // theta acts as the scale-generated family parameter:
    // psi(x) = theta^k psi_base(theta (x + shift))
    const double theta = get_scalar(ov, "theta", 1.0);
    const Vec4 shift{get_scalar(ov, "t0", 0.0), get_scalar(ov, "t1", 0.0),
                     get_scalar(ov, "t2", 0.0), get_scalar(ov, "t3", 0.0)};
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * positive_pow(chi_bar_chi(rep, chi, true), 1.0 / (2.0 * k));
    Tetrad t;
    const CMat ga = rep.gamma_dot(t.a), gd = rep.gamma_dot(t.d), gc = rep.gamma_dot(t.c);
    const CMat gad = ga * gd;
    const CMat m2 = gc * (I_UNIT * tau) + gc * (ga + gd) * cdouble(0.5);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    const double pref = std::pow(theta, k);
    auto zmap = [theta, shift](const Vec4& x) {
      return Vec4{theta * (x[0] + shift[0]), theta * (x[1] + shift[1]),
                  theta * (x[2] + shift[2]), theta * (x[3] + shift[3])};
    };
    auto inst = make_exp_product(
        rep, p,
        {[gad, t, zmap](const Vec4& x) {
           const Vec4 z = zmap(x);
           return gad * cdouble(0.5 * std::log(mdot(t.a, z) + mdot(t.d, z)));
         },
         [m2, t, zmap](const Vec4& x) {
           const Vec4 z = zmap(x);
           return m2 * cdouble(mdot(t.c, z));
         }},
        chi, [t, zmap](const Vec4& x) {
          const Vec4 z = zmap(x);
          return mdot(t.a, z) + mdot(t.d, z) > 0.05;
        });
    inst.field = spinor_field([inner = inst.field.eval, pref](const Vec4& x) {
      return cvscale(pref, inner(x));
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["theta"] = 0.5 + u(rng);
    ov.scalars["t0"] = 0.4 * u(rng);
    ov.scalars["t2"] = 0.5 * u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi45(int which) {
  SolutionEntry e;
  e.id = "dirac/psi" + std::to_string(which);
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = which == 4 ? "sec2.4 psi4" : "sec2.4 psi5";
  e.build = [which](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const double theta = get_scalar(ov, "theta", 1.0);
    const double alpha = get_scalar(ov, "alpha", 0.7);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * positive_pow(chi_bar_chi(rep, chi, true), 1.0 / (2.0 * k));
    Tetrad t;
    const CMat ga = rep.gamma_dot(t.a), gd = rep.gamma_dot(t.d), gb = rep.gamma_dot(t.b),
               gc = rep.gamma_dot(t.c);
    const CMat nil = (ga + gd) * gb;
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    std::function<CMat(const Vec4&)> e2;
    if (which == 4) {
      e2 = [gb, tau, t, theta](const Vec4& x) {
        const double u = mdot(t.a, x) + mdot(t.d, x);
        return gb * (I_UNIT * 0.5 * tau * (2.0 * mdot(t.b, x) + theta * u * u));
      };
    } else {
      e2 = [gb, gc, tau, t, theta, alpha](const Vec4& x) {
        const double u = mdot(t.a, x) + mdot(t.d, x);
        const double arg = 2.0 * (mdot(t.c, x) - alpha * mdot(t.b, x)) - alpha * theta * u * u;
        return (gc - gb * cdouble(alpha)) * (I_UNIT * 0.5 * tau / (1.0 + alpha * alpha) * arg);
      };
    }
    return make_exp_product(rep, p,
                            {[nil, t, theta](const Vec4& x) {
                               const double u = mdot(t.a, x) + mdot(t.d, x);
                               return nil * cdouble(-0.5 * theta * u);
                             },
                             e2},
                            chi, all_domain());
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["theta"] = 0.5 + u(rng);
    ov.scalars["alpha"] = 0.3 + u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi6() {
  SolutionEntry e;
  e.id = "dirac/psi6";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi6";
  e.box = {{{0.6, 1.8}, {-1.0, 1.0}, {-1.0, 1.0}, {0.2, 1.0}}};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const double scale = get_scalar(ov, "scale", 1.0);
    const double alpha = get_scalar(ov, "alpha", 0.4);
    const double beta = get_scalar(ov, "beta", 0.3);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * positive_pow(chi_bar_chi(rep, chi, true), 1.0 / (2.0 * k));
    Tetrad t;
    const CMat ga = rep.gamma_dot(t.a), gd = rep.gamma_dot(t.d), gb = rep.gamma_dot(t.b),
               gc = rep.gamma_dot(t.c);
    const CMat nil = (ga + gd) * gb;
    const CMat gad = ga * gd;
    const CMat m3 = gc * (ga + gd) + (gc - (ga + gd) * cdouble(beta)) * (I_UNIT * tau);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    const double pref = std::pow(scale, k);
    auto zmap = [scale](const Vec4& x) {
      return Vec4{scale * x[0], scale * x[1], scale * x[2], scale * x[3]};
    };
    auto inst = make_exp_product(
        rep, p,
        {[nil, t, zmap, alpha](const Vec4& xx) {
           const Vec4 x = zmap(xx);
           const double u = mdot(t.a, x) + mdot(t.d, x);
           return nil * cdouble((mdot(t.b, x) - alpha * std::log(u)) / (2.0 * u));
         },
         [gad, t, zmap](const Vec4& xx) {
           const Vec4 x = zmap(xx);
           const double u = mdot(t.a, x) + mdot(t.d, x);
           return gad * cdouble(0.5 * std::log(u));
         },
         [m3, t, zmap, beta](const Vec4& xx) {
           const Vec4 x = zmap(xx);
           const double u = mdot(t.a, x) + mdot(t.d, x);
           return m3 * cdouble(mdot(t.c, x) - beta * std::log(u));
         }},
        chi, [t, zmap](const Vec4& xx) {
          const Vec4 x = zmap(xx);
          return mdot(t.a, x) + mdot(t.d, x) > 0.05;
        });
    inst.field = spinor_field([inner = inst.field.eval, pref](const Vec4& x) {
      return cvscale(pref, inner(x));
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["scale"] = 0.7 + 0.6 * u(rng);
    ov.scalars["alpha"] = 0.6 * u(rng);
    ov.scalars["beta"] = 0.6 * u(rng);
    return ov;
  };
  return e;
}

// ---- psi7 .. psi9: algebraic-constraint entries -----------------------------

/// Scale chi so that bar(N chi) (N chi) = tau^{2k} holds exactly at tau0.
/// The sign of the bilinear depends on the direction of chi; if the requested
/// chi lands on the wrong branch, nearby admissible directions are tried.
CVec scale_chi_for(const GammaRep& rep, const CMat& n, CVec chi, double tau0, double two_k) {
  std::vector<CVec> candidates{chi};
  const double cn = cvnorm(chi);
  candidates.push_back({chi[1], chi[0], chi[3], chi[2]});
  candidates.push_back({chi[0], chi[1], -chi[2], -chi[3]});
  candidates.push_back(CVec{cn, 0.0, 0.0, 0.0});
  candidates.push_back(CVec{0.0, cn, 0.0, 0.0});
  candidates.push_back(CVec{cn, 0.0, cdouble(0, 0.5) * cn, 0.0});
  candidates.push_back(CVec{cn, cdouble(0, 0.5) * cn, 0.0, 0.0});
  for (const auto& cand : candidates) {
    const CVec nchi = n * cand;
    const double q = rep.sandwich(nchi, nchi).real();
    if (q > 1e-8 * cn * cn) {
      CVec out = cand;
      const double s = std::sqrt(std::pow(tau0, two_k) / q);
      for (auto& c : out) c *= s;
      return out;
    }
  }
  throw ConstraintError("constraint unsatisfiable: bar(N chi)(N chi) <= 0 for all tried chi");
}

SolutionEntry entry_psi7() {
  SolutionEntry e;
  e.id = "dirac/psi7";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi7";
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const double alpha = get_scalar(ov, "alpha", 1.0);
    const double eps = get_scalar(ov, "eps", 1.0) >= 0 ? 1.0 : -1.0;
    const double tfac = get_scalar(ov, "taufac", 1.5);
    const double tau = tfac / (2.0 * std::abs(lambda) * alpha);
    const double disc = 4.0 * lambda * lambda * tau * tau * alpha * alpha - 1.0;
    if (disc < 0.0) throw ConstraintError("psi7: tau below the admissible branch");
    const double theta = eps / (2.0 * alpha) * std::sqrt(disc);
    const CMat n = (rep.g[2] * theta - rep.g[1] * cdouble(1.0 / (2.0 * alpha))) * rep.g4 -
                   CMat::identity(4) * (I_UNIT * lambda * tau);
    CVec chi = scale_chi_for(rep, n, get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0}), tau, 2.0 * k);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = all_domain();
    const CMat g03 = rep.g[0] * rep.g[3];
    CVec nchi = n * chi;
    inst.field = spinor_field([g03, nchi, alpha, theta](const Vec4& x) {
      return expm(g03 * cdouble((x[2] + 2.0 * alpha * theta * x[1]) / (2.0 * alpha))) * nchi;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["alpha"] = 0.7 + 0.8 * u(rng);
    ov.scalars["taufac"] = 1.2 + u(rng);
    ov.scalars["eps"] = u(rng) < 0.5 ? 1.0 : -1.0;
    return ov;
  };
  return e;
}

SolutionEntry entry_psi8() {
  SolutionEntry e;
  e.id = "dirac/psi8";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi8";
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const double alpha = get_scalar(ov, "alpha", 1.0);
    const double eps = get_scalar(ov, "eps", 1.0) >= 0 ? 1.0 : -1.0;
    const double tfac = get_scalar(ov, "taufac", 0.6);
    const double tau = tfac / (2.0 * std::abs(lambda) * alpha);
    const double disc = 1.0 - 4.0 * alpha * alpha * lambda * lambda * tau * tau;
    if (disc < 0.0) throw ConstraintError("psi8: tau above the admissible branch");
    const double theta = eps / (2.0 * alpha) * std::sqrt(disc);
    const CMat n = (rep.g[0] * theta - rep.g[3] * cdouble(1.0 / (2.0 * alpha))) * rep.g4 -
                   CMat::identity(4) * (I_UNIT * lambda * tau);
    CVec chi = scale_chi_for(rep, n, get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0}), tau, 2.0 * k);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = all_domain();
    const CMat g12 = rep.g[1] * rep.g[2];
    CVec nchi = n * chi;
    inst.field = spinor_field([g12, nchi, alpha, theta](const Vec4& x) {
      return expm(g12 * cdouble((2.0 * alpha * theta * x[3] - x[0]) / (2.0 * alpha))) * nchi;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["alpha"] = 0.7 + 0.8 * u(rng);
    ov.scalars["taufac"] = 0.3 + 0.5 * u(rng);
    ov.scalars["eps"] = u(rng) < 0.5 ? 1.0 : -1.0;
    return ov;
  };
  return e;
}

SolutionEntry entry_psi9() {
  SolutionEntry e;
  e.id = "dirac/psi9";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi9";
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const double tau = get_scalar(ov, "tau", 0.5);
    const double theta = -lambda * lambda * tau * tau;
    const CMat n = (rep.g[0] + rep.g[3]) * rep.g4 * cdouble(4.0 * theta) +
                   (rep.g[0] - rep.g[3]) * rep.g4 -
                   CMat::identity(4) * (4.0 * I_UNIT * lambda * tau);
    CVec chi = scale_chi_for(rep, n, get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0}), tau, 2.0 * k);
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = all_domain();
    const CMat g12 = rep.g[1] * rep.g[2];
    CVec nchi = n * chi;
    inst.field = spinor_field([g12, nchi, theta](const Vec4& x) {
      return expm(g12 * cdouble(0.25 * (x[3] - x[0]) + theta * (x[0] + x[3]))) * nchi;
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    Overrides ov = basic_randomizer(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ov.scalars["tau"] = 0.3 + 0.6 * u(rng);
    return ov;
  };
  return e;
}

SolutionEntry entry_psi10() {
  SolutionEntry e;
  e.id = "dirac/psi10";
  e.equation = "dirac-power";
  e.tier = "core";
  e.provenance = "sec2.4 psi10";
  e.profile_slots = {"w1", "w2", "w3"};
  e.build = [](const Overrides& ov) {
    const GammaRep& rep = rep_standard();
    const double lambda = get_scalar(ov, "lambda", 1.0);
    const double k = get_scalar(ov, "k", 1.0);
    const CVec chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
    const double tau = lambda * positive_pow(chi_bar_chi(rep, chi, true), 1.0 / (2.0 * k));
    const Profile1D w1 = get_profile(ov, "w1", default_profile(0));
    const Profile1D w2 = get_profile(ov, "w2", default_profile(1));
    const Profile1D w3 = get_profile(ov, "w3", default_profile(2));
    EqParams p;
    p.scalars = {{"lambda", lambda}, {"k", k}};
    SolutionInstance inst;
    inst.eq_params = p;
    inst.eq_params.rep = &rep;
    inst.domain = all_domain();
    const CMat g1 = rep.g[1], g2 = rep.g[2], g4 = rep.g4;
    const CMat gp = rep.g[0] + rep.g[3];
    inst.field = spinor_field([=, &rep](const Vec4& x) {
      const double xi = x[0] + x[3];
      const double w1v = w1(xi).real(), w3v = w3(xi).real();
      const double dw1 = w1.deriv(xi).real(), dw2 = w2.deriv(xi).real();
      const CMat nil = gp * (g1 * cdouble(-0.5 * dw1) + g2 * cdouble(-0.5 * dw2) + g4 * cdouble(w3v));
      const CMat phase = g1 * (I_UNIT * tau * (x[1] + w1v));
      return expm(nil) * (expm(phase) * chi);
    });
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) { return basic_randomizer(rng); };
  return e;
}

}  // namespace

void register_dirac_power(std::vector<SolutionEntry>& v) {
  v.push_back(entry_psi_plane(1));
  v.push_back(entry_psi_plane(2));
  v.push_back(entry_psi3());
  v.push_back(entry_psi45(4));
  v.push_back(entry_psi45(5));
  v.push_back(entry_psi6());
  v.push_back(entry_psi7());
  v.push_back(entry_psi8());
  v.push_back(entry_psi9());
  v.push_back(entry_psi10());
}

}  // namespace exsol
