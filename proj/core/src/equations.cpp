#include "exsol/equations.hpp"

#include <cmath>

namespace exsol {

double positive_pow(double s, double p) {
  if (!(s > 0.0))
    throw BranchError("fractional power of non-positive base (value " + std::to_string(s) + ")");
  return std::pow(s, p);
}

namespace {

const GammaRep& rep_of(const EqParams& p) {
  static const GammaRep std_rep = build_rep("standard");
  return p.rep ? *p.rep : std_rep;
}

cdouble bar_dot(const GammaRep& rep, const CVec& psi, const CMat& m, const CVec& phi) {
  return rep.sandwich(psi, m, phi);
}

CVec dirac_kinetic(const GammaRep& rep, const Jet2& jet) {
  // i sum_mu g_mu d_mu psi  (plain sum, book matrices)
  CVec out(4, cdouble(0.0));
  for (int mu = 0; mu < 4; ++mu) {
    const CVec t = rep.g[mu] * jet.grad[mu];
    for (int i = 0; i < 4; ++i) out[i] += I_UNIT * t[i];
  }
  return out;
}

CVec residual_dirac_power(const Jet2& jet, const EqParams& p, double exponent_num) {
  // exponent: lambda (bar psi psi)^{1/2k}, or fixed exponent when
  // exponent_num >= 0 is supplied
  const GammaRep& rep = rep_of(p);
  const double lambda = p.get("lambda", 1.0);
  double expo;
  if (exponent_num >= 0.0)
    expo = exponent_num;
  else
    expo = 1.0 / (2.0 * p.require("k"));
  CVec out = dirac_kinetic(rep, jet);
  const double s = rep.sandwich(jet.value, jet.value).real();
  double nl = 0.0;
  if (cvnorm(jet.value) > 0.0) nl = lambda * positive_pow(s, expo);
  for (int i = 0; i < 4; ++i) out[i] -= nl * jet.value[i];
  return out;
}

CVec residual_dirac_massive(const Jet2& jet, const EqParams& p) {
  const GammaRep& rep = rep_of(p);
  const double lambda = p.get("lambda", 1.0);
  const double m = p.require("m");
  const double k = p.require("k");
  CVec out = dirac_kinetic(rep, jet);
  const double s = rep.sandwich(jet.value, jet.value).real();
  double nl = 0.0;
  if (cvnorm(jet.value) > 0.0) nl = lambda * positive_pow(s, k);
  for (int i = 0; i < 4; ++i) out[i] -= (m + nl) * jet.value[i];
  return out;
}

CVec residual_dirac_linear(const Jet2& jet, const EqParams& p) {
  const GammaRep& rep = rep_of(p);
  const double m = p.get("m", 0.0);
  CVec out = dirac_kinetic(rep, jet);
  for (int i = 0; i < 4; ++i) out[i] -= m * jet.value[i];
  return out;
}

CVec galilei_linear(const GammaRep& rep, const Jet2& jet, double m) {
  // -i(g0+g4) d_t + i g_a d_a + m(g0-g4)
  CVec out(4, cdouble(0.0));
  const CMat gp = rep.g[0] + rep.g4;
  const CMat gm = rep.g[0] - rep.g4;
  const CVec t0 = gp * jet.grad[0];
  for (int i = 0; i < 4; ++i) out[i] -= I_UNIT * t0[i];
  for (int a = 1; a < 4; ++a) {
    const CVec ta = rep.g[a] * jet.grad[a];
    for (int i = 0; i < 4; ++i) out[i] += I_UNIT * ta[i];
  }
  const CVec tm = gm * jet.value;
  for (int i = 0; i < 4; ++i) out[i] += m * tm[i];
  return out;
}

double galilei_w2(const GammaRep& rep, const CVec& psi) {
  double w2 = 0.0;
  for (const auto& c : psi) w2 += std::norm(c);
  w2 += bar_dot(rep, psi, rep.g4, psi).real();
  return w2;
}

CVec residual_galilei_power(const Jet2& jet, const EqParams& p) {
  const GammaRep& rep = rep_of(p);
  const double lambda = p.get("lambda", 1.0);
  const double k = p.require("k");
  const double m = p.require("m");
  CVec out = galilei_linear(rep, jet, m);
  double nl = 0.0;
  if (cvnorm(jet.value) > 0.0)
    nl = lambda * positive_pow(galilei_w2(rep, jet.value), 1.0 / (2.0 * k));
  for (int i = 0; i < 4; ++i) out[i] -= nl * jet.value[i];
  return out;
}

CVec residual_galilei_power2(const Jet2& jet, const EqParams& p) {
  // nonlinearity lambda w2^k (g0+g4) psi  (the conditional-reduction variant)
  const GammaRep& rep = rep_of(p);
  const double lambda = p.get("lambda", 1.0);
  const double k = p.require("k");
  const double m = p.get("m", 0.0);
  CVec out = galilei_linear(rep, jet, m);
  double nl = 0.0;
  if (cvnorm(jet.value) > 0.0) nl = lambda * positive_pow(galilei_w2(rep, jet.value), k);
  const CVec t = (rep.g[0] + rep.g4) * jet.value;
  for (int i = 0; i < 4; ++i) out[i] -= nl * t[i];
  return out;
}

// --- SU(2) Yang-Mills -------------------------------------------------------

inline std::array<cdouble, 3> color_of(const CVec& v, int mu) {
  return {v[0 * 4 + mu], v[1 * 4 + mu], v[2 * 4 + mu]};
}

inline std::array<cdouble, 3> cross(const std::array<cdouble, 3>& a,
                                    const std::array<cdouble, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

CVec residual_yang_mills(const Jet2& jet, const EqParams& p) {
  const double e = p.get("e", 1.0);
  CVec out(12, cdouble(0.0));

  // div = d^nu A_nu (Minkowski divergence), per color
  std::array<cdouble, 3> div{0, 0, 0};
  std::array<cdouble, 3> ddiv[4];  // d_mu of divergence
  for (int nu = 0; nu < 4; ++nu) {
    const auto dA = color_of(jet.grad[nu], nu);
    for (int a = 0; a < 3; ++a) div[a] += minkowski(nu) * dA[a];
  }
  for (int mu = 0; mu < 4; ++mu) {
    ddiv[mu] = {0, 0, 0};
    for (int nu = 0; nu < 4; ++nu)
      for (int a = 0; a < 3; ++a)
        ddiv[mu][a] += minkowski(nu) * jet.hess[mu][nu][a * 4 + nu];
  }

  for (int mu = 0; mu < 4; ++mu) {
    // box A_mu
    std::array<cdouble, 3> box{0, 0, 0};
    for (int nu = 0; nu < 4; ++nu)
      for (int a = 0; a < 3; ++a) box[a] += minkowski(nu) * jet.hess[nu][nu][a * 4 + mu];

    std::array<cdouble, 3> r = box;
    for (int a = 0; a < 3; ++a) r[a] -= minkowski(mu) * ddiv[mu][a];

    const auto A_mu = color_of(jet.value, mu);
    // e [ div x A_mu - 2 (d_nu A_mu) x A^nu + (d^mu A_nu) x A^nu ]
    auto t1 = cross(div, A_mu);
    std::array<cdouble, 3> t2{0, 0, 0}, t3{0, 0, 0};
    for (int nu = 0; nu < 4; ++nu) {
      const auto dnuAmu = color_of(jet.grad[nu], mu);
      const auto A_nu = color_of(jet.value, nu);
      const auto c2 = cross(dnuAmu, A_nu);
      const auto dmuAnu = color_of(jet.grad[mu], nu);
      const auto c3 = cross(dmuAnu, A_nu);
      for (int a = 0; a < 3; ++a) {
        t2[a] += minkowski(nu) * c2[a];
        t3[a] += minkowski(nu) * c3[a];
      }
    }
    for (int a = 0; a < 3; ++a) r[a] += e * (t1[a] - 2.0 * t2[a] + minkowski(mu) * t3[a]);

    // e^2 A_nu x (A^nu x A_mu)
    std::array<cdouble, 3> t4{0, 0, 0};
    for (int nu = 0; nu < 4; ++nu) {
      const auto A_nu = color_of(jet.value, nu);
      const auto inner = cross(A_nu, A_mu);
      const auto outer = cross(A_nu, inner);
      for (int a = 0; a < 3; ++a) t4[a] += minkowski(nu) * outer[a];
    }
    for (int a = 0; a < 3; ++a) {
      r[a] += e * e * t4[a];
      out[a * 4 + mu] = r[a];
    }
  }
  return out;
}

CVec residual_dah_pair(const Jet2& jet, const EqParams& p) {
  const double eps = p.get("eps", 1.0);
  const double N = p.get("N", 0.0);
  const cdouble u = jet.value[0];
  cdouble box = 0.0, grad2 = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    box += minkowski(mu) * jet.hess[mu][mu][0];
    grad2 += minkowski(mu) * jet.grad[mu][0] * jet.grad[mu][0];
  }
  CVec r(2);
  r[0] = box - (N == 0.0 ? cdouble(0.0) : cdouble(eps * N) / u);
  r[1] = grad2 - eps;
  return r;
}

CVec residual_dh2d(const Jet2& jet, const EqParams& p) {
  const double lambda = p.get("lambda", 1.0);
  const auto& v = jet.value;
  const double q02 = std::norm(v[0]) + std::norm(v[2]);
  const double q13 = std::norm(v[1]) + std::norm(v[3]);
  CVec r(4);
  r[0] = I_UNIT * (jet.grad[0][0] - jet.grad[1][0]) - 2.0 * lambda * q13 * v[0];
  r[1] = I_UNIT * (jet.grad[0][1] + jet.grad[1][1]) - 2.0 * lambda * q02 * v[1];
  r[2] = I_UNIT * (jet.grad[0][2] - jet.grad[1][2]) - 2.0 * lambda * q13 * v[2];
  r[3] = I_UNIT * (jet.grad[0][3] + jet.grad[1][3]) - 2.0 * lambda * q02 * v[3];
  return r;
}

CVec residual_thirring(const Jet2& jet, const EqParams& p) {
  const double m = p.require("m");
  const double lambda = p.get("lambda", 1.0);
  const cdouble u = jet.value[0], v = jet.value[1];
  CVec r(2);
  r[0] = I_UNIT * jet.grad[1][0] - m * v - lambda * std::norm(v) * u;
  r[1] = I_UNIT * jet.grad[0][1] - m * u + lambda * std::norm(u) * v;
  return r;
}

CVec residual_kg2d(const Jet2& jet, const EqParams& p) {
  const double m = p.require("m");
  CVec r(1);
  r[0] = jet.hess[0][1][0] + m * m * jet.value[0];
  return r;
}

CVec residual_laplace3(const Jet2& jet, const EqParams&) {
  CVec r(1);
  r[0] = jet.hess[0][0][0] + jet.hess[1][1][0] + jet.hess[2][2][0];
  return r;
}

std::map<std::string, EquationDef> make_registry() {
  std::map<std::string, EquationDef> reg;
  auto put = [&](EquationDef def) { reg[def.id] = def; };

  put({"dirac-power", 4, 4, 4, false,
       [](const Jet2& j, const EqParams& p) { return residual_dirac_power(j, p, -1.0); }});
  put({"gursey", 4, 4, 4, false,
       [](const Jet2& j, const EqParams& p) { return residual_dirac_power(j, p, 1.0 / 3.0); }});
  put({"dirac-massive", 4, 4, 4, false, residual_dirac_massive});
  put({"dirac-linear", 4, 4, 4, false, residual_dirac_linear});
  put({"galilei-power", 4, 4, 4, false, residual_galilei_power});
  put({"galilei-power2", 4, 4, 4, false, residual_galilei_power2});
  put({"yang-mills", 4, 12, 12, true, residual_yang_mills});
  put({"dah-pair", 4, 1, 2, true, residual_dah_pair});
  put({"dh2d", 2, 4, 4, false, residual_dh2d});
  put({"thirring-gen", 2, 2, 2, false, residual_thirring});
  put({"kg2d", 2, 1, 1, true, residual_kg2d});
  put({"laplace3", 3, 1, 1, true, residual_laplace3});
  return reg;
}

const std::map<std::string, EquationDef>& registry() {
  static const std::map<std::string, EquationDef> reg = make_registry();
  return reg;
}

}  // namespace

const EquationDef& get_equation(const std::string& id) {
  const auto& reg = registry();
  auto it = reg.find(id);
  if (it == reg.end()) throw std::invalid_argument("unknown equation id: " + id);
  return it->second;
}

std::vector<std::string> equation_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : registry()) ids.push_back(k);
  return ids;
}

CVec residual_at(const EquationDef& eq, const FieldFn& field, const EqParams& params,
                 const Vec4& x, double fd_step) {
  const Jet2 jet = fd_jet(field, x, fd_step, eq.needs_hess);
  return eq.residual(jet, params);
}

}  // namespace exsol
