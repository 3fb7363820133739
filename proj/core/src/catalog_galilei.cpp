// Exact solutions of the Galilei-invariant spinor equation with power coupling.
#include "catalog_util.hpp"
#include <memory>

namespace exsol {

using namespace detail;

namespace {

// phase integrals W_n(k, w) = (lt^2 / 4m) * { k/(k-n) w^{(k-n)/k}  (k != n)
//                                            { ln w                (k == n)
double phase_W(int n, double k, double lt2_over_4m, double w) {
  if (std::abs(k - n) < 1e-12) return lt2_over_4m * std::log(w);
  return lt2_over_4m * k / (k - n) * std::pow(w, (k - n) / k);
}

struct GalileiCtx {
  const GammaRep* rep;
  double m, lambda, k, alpha, beta, lt;
  CVec chi;
};

GalileiCtx gal_ctx(const Overrides& ov, double alpha_def = 0.5, double beta_def = 0.25) {
  GalileiCtx c;
  c.rep = &rep_standard();
  c.m = get_scalar(ov, "m", 1.0);
  c.lambda = get_scalar(ov, "lambda", 1.0);
  c.k = get_scalar(ov, "k", 1.0);
  c.alpha = get_scalar(ov, "alpha", alpha_def);
  c.beta = get_scalar(ov, "beta", beta_def);
  c.chi = get_chi(ov, CVec{1.0, 0.0, 0.0, 0.0});
  const double w2 = chi_w2(*c.rep, c.chi);
  if (!(w2 > 0.0)) throw ConstraintError("galilei family: chi^+chi + bar(chi) g4 chi must be > 0");
  c.lt = c.lambda * positive_pow(w2, 1.0 / (2.0 * c.k));
  return c;
}

/// phi_N(w) = (1/2)[ f (g0+g4) + g (1 + g0 g4) ] chi
CVec phi_of(const GalileiCtx& c, cdouble f, cdouble g) {
  const GammaRep& rep = *c.rep;
  static thread_local CMat P, R;
  if (P.rows() == 0) {
    P = rep.g[0] + rep.g4;
    R = CMat::identity(4) + rep.g[0] * rep.g4;
  }
  CVec out = P * c.chi;
  const CVec r = R * c.chi;
  for (int i = 0; i < 4; ++i) out[i] = 0.5 * (f * out[i] + g * r[i]);
  return out;
}

cdouble phase_exp(double re_ph, double im_ph) {
  return std::exp(cdouble(re_ph, im_ph));
}

struct FG {
  cdouble f, g;
};

FG fg_of(int N, const GalileiCtx& c, double w, const Antiderivative* quad) {
  const double m = c.m, k = c.k, a = c.alpha, b = c.beta, lt = c.lt;
  const double q = lt * lt / (4.0 * m);
  switch (N) {
    case 6: {
      const cdouble g = std::pow(w, -0.5) *
                        phase_exp(0.0, -1.0 / (16.0 * a * a * m * w) + phase_W(1, k, q, w));
      const cdouble f = (cdouble(lt * std::pow(w, -1.0 / (2.0 * k))) -
                         I_UNIT / (2.0 * a * w)) *
                        g / (2.0 * m);
      return {f, g};
    }
    case 7: {
      // the full three-axis projective factor scales the bilinear as w^{-3},
      // so the radial power is -3/2 and the phase integral uses n = 3
      const cdouble g = std::pow(w, -1.5) *
                        phase_exp(0.0, -1.0 / (16.0 * a * a * m * w) + phase_W(3, k, q, w));
      const cdouble f =
          (cdouble(lt * std::pow(w, -1.5 / k)) - I_UNIT / (2.0 * a * w)) * g / (2.0 * m);
      return {f, g};
    }
    case 8: {
      const cdouble g = phase_exp(0.0, (1.0 + 4.0 * a * a * lt * lt) / (16.0 * a * a * m) * w);
      const cdouble f = (cdouble(lt) + I_UNIT / (2.0 * a)) * g / (2.0 * m);
      return {f, g};
    }
    case 9: {
      const cdouble g = std::pow(w, -1.0) *
                        phase_exp(0.0, w / (16.0 * a * a * m) + phase_W(2, k, q, w));
      const cdouble f =
          (cdouble(lt * std::pow(w, -1.0 / k)) + I_UNIT / (2.0 * a)) * g / (2.0 * m);
      return {f, g};
    }
    case 10: {
      const cdouble g = phase_exp(0.0, q * w);
      return {lt / (2.0 * m) * g, g};
    }
    case 11: {
      const cdouble g = std::pow(w, -0.5) * phase_exp(0.0, phase_W(1, k, q, w));
      return {lt / (2.0 * m) * std::pow(w, -1.0 / (2.0 * k)) * g, g};
    }
    case 12: {
      const double prod = w * w - c.alpha * w;
      const cdouble g = std::pow(prod, -0.5) * phase_exp(0.0, q * (*quad)(w));
      return {lt / (2.0 * m) * std::pow(prod, -1.0 / (2.0 * k)) * g, g};
    }
    case 13: {
      const double prod = w * (w - c.alpha) * (w - c.beta);
      const cdouble g = std::pow(prod, -0.5) * phase_exp(0.0, q * (*quad)(w));
      return {lt / (2.0 * m) * std::pow(prod, -1.0 / (2.0 * k)) * g, g};
    }
    default: {
      const cdouble g = phase_exp(0.0, q * w);
      return {lt / (2.0 * m) * g, g};
    }
  }
}

SolutionEntry galilei_entry(int N) {
  SolutionEntry e;
  e.id = "galilei/psi" + std::to_string(N);
  e.equation = "galilei-power";
  e.tier = "core";
  e.provenance = "sec4.2 psi" + std::to_string(N);
  e.box = {{{0.5, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  if (N == 12 || N == 13) e.box[0] = {1.0, 2.4};
  e.build = [N](const Overrides& ov) {
    GalileiCtx c = gal_ctx(ov, N == 12 ? 0.3 : 0.5, 0.15);
    if (N == 12) c.beta = 0.0;
    const GammaRep& rep = *c.rep;
    EqParams p;
    p.scalars = {{"lambda", c.lambda}, {"k", c.k}, {"m", c.m}};
    p.rep = c.rep;
    SolutionInstance inst;
    inst.eq_params = p;

    std::shared_ptr<Antiderivative> quad;
    if (N == 12) {
      const double k = c.k, a = c.alpha;
      quad = std::make_shared<Antiderivative>(
          [k, a](double z) { return std::pow(z * z - a * z, -1.0 / k); }, a + 0.7);
      inst.domain = [a](const Vec4& x) { return x[0] > a + 0.3; };
    } else if (N == 13) {
      const double k = c.k, a = c.alpha, b = c.beta;
      quad = std::make_shared<Antiderivative>(
          [k, a, b](double z) { return std::pow(z * (z - a) * (z - b), -1.0 / k); },
          std::max(a, b) + 0.7);
      inst.domain = [a, b](const Vec4& x) { return x[0] > std::max(a, b) + 0.3; };
    } else {
      inst.domain = [](const Vec4& x) { return x[0] > 0.3; };
    }

    // nilpotent building blocks eta_a = (1/2)(g0+g4) g_a
    const CMat eta1 = (rep.g[0] + rep.g4) * rep.g[1] * cdouble(0.5);
    const CMat eta2 = (rep.g[0] + rep.g4) * rep.g[2] * cdouble(0.5);
    const CMat eta3 = (rep.g[0] + rep.g4) * rep.g[3] * cdouble(0.5);
    const CMat g12 = rep.g[1] * rep.g[2];
    const double m = c.m;

    inst.field = spinor_field([N, c, quad, eta1, eta2, eta3, g12, m](const Vec4& x) {
      const double t = x[0];
      const auto fg = fg_of(N, c, t, quad.get());
      CVec v = phi_of(c, fg.f, fg.g);
      // the projective (eta) factor and the rotation factor do not commute,
      // so they multiply in the printed order: projective . rotation . phi
      switch (N) {
        case 6:
          v = expm(g12 * cdouble(x[3] / (2.0 * c.alpha * t)) - eta3 * cdouble(x[3] / t) -
                   CMat::identity(4) * (I_UNIT * m * x[3] * x[3] / t)) *
              v;
          break;
        case 7:
          v = expm(g12 * cdouble(x[3] / (2.0 * c.alpha * t))) * v;
          v = expm(CMat::identity(4) *
                       (-I_UNIT * m * (x[1] * x[1] + x[2] * x[2] + x[3] * x[3]) / t) -
                   eta1 * cdouble(x[1] / t) - eta2 * cdouble(x[2] / t) -
                   eta3 * cdouble(x[3] / t)) *
              v;
          break;
        case 8:
          v = expm(g12 * cdouble(-x[3] / (2.0 * c.alpha))) * v;
          break;
        case 9:
          v = expm(g12 * cdouble(-x[3] / (2.0 * c.alpha))) * v;
          v = expm(CMat::identity(4) * (-I_UNIT * m * (x[1] * x[1] + x[2] * x[2]) / t) -
                   eta1 * cdouble(x[1] / t) - eta2 * cdouble(x[2] / t)) *
              v;
          break;
        case 10:
          break;
        case 11:
          v = expm(CMat::identity(4) * (-I_UNIT * m * x[1] * x[1] / t) -
                   eta1 * cdouble(x[1] / t)) *
              v;
          break;
        case 12:
          v = expm(CMat::identity(4) *
                       (-I_UNIT * m * (x[2] * x[2] / t - x[1] * x[1] / (c.alpha - t))) -
                   eta2 * cdouble(x[2] / t) + eta1 * cdouble(x[1] / (c.alpha - t))) *
              v;
          break;
        case 13:
          v = expm(CMat::identity(4) *
                       (-I_UNIT * m *
                        (x[3] * x[3] / t + x[1] * x[1] / (t - c.alpha) +
                         x[2] * x[2] / (t - c.beta))) -
                   eta3 * cdouble(x[3] / t) + eta1 * cdouble(x[1] / (c.alpha - t)) +
                   eta2 * cdouble(x[2] / (c.beta - t))) *
              v;
          break;
      }
      return v;
    });
    return inst;
  };
  e.randomize = [N](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Overrides ov;
    ov.scalars["m"] = 0.7 + 0.8 * u(rng);
    ov.scalars["lambda"] = 0.5 + 1.5 * u(rng);
    const double kk[3] = {0.5, 1.0, 2.0};
    ov.scalars["k"] = kk[static_cast<int>(u(rng) * 2.999)];
    if (N == 6 || N == 7 || N == 8 || N == 9) ov.scalars["alpha"] = 0.4 + 0.6 * u(rng);
    if (N == 12) ov.scalars["alpha"] = 0.2 + 0.3 * u(rng);
    if (N == 13) {
      ov.scalars["alpha"] = 0.2 + 0.3 * u(rng);
      ov.scalars["beta"] = 0.1 + 0.15 * u(rng);
    }
    ov.chi = CVec{1.0, cdouble(0.3 * u(rng), 0.2 * u(rng)), 0.1 * u(rng), 0.0};
    return ov;
  };
  return e;
}

}  // namespace

void register_galilei(std::vector<SolutionEntry>& v) {
  for (int n = 6; n <= 13; ++n) v.push_back(galilei_entry(n));
}

}  // namespace exsol
