#include "exsol/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace exsol {

namespace {

CMat pauli(int a) {
  switch (a) {
    case 1: return CMat(2, 2, {0, 1, 1, 0});
    case 2: return CMat(2, 2, {0, -I_UNIT, I_UNIT, 0});
    case 3: return CMat(2, 2, {1, 0, 0, -1});
  }
  throw std::logic_error("pauli index");
}

CMat block2(const CMat& tl, const CMat& tr, const CMat& bl, const CMat& br) {
  CMat m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = tl(i, j);
      m(i, j + 2) = tr(i, j);
      m(i + 2, j) = bl(i, j);
      m(i + 2, j + 2) = br(i, j);
    }
  return m;
}

const CMat I2 = CMat::identity(2);
const CMat Z2 = CMat::zero(2);

}  // namespace

CVec GammaRep::bar(const CVec& psi) const {
  // row vector psi^dagger g0, stored as components
  CVec row(4, cdouble(0.0));
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) row[j] += std::conj(psi[i]) * g[0](i, j);
  return row;
}

cdouble GammaRep::sandwich(const CVec& psi1, const CMat& m, const CVec& psi2) const {
  const CVec row = bar(psi1);
  const CVec mv = m * psi2;
  cdouble s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += row[i] * mv[i];
  return s;
}

cdouble GammaRep::sandwich(const CVec& psi1, const CVec& psi2) const {
  const CVec row = bar(psi1);
  cdouble s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += row[i] * psi2[i];
  return s;
}

CMat GammaRep::gamma_dot(const Vec4& v) const {
  CMat m = g[0] * cdouble(v[0]);
  for (int a = 1; a < 4; ++a) m -= g[a] * cdouble(v[a]);
  return m;
}

CMat GammaRep::spin(int mu, int nu) const {
  return commutator(g[mu], g[nu]) * cdouble(0.25);
}

GammaRep build_rep(const std::string& id) {
  GammaRep rep;
  rep.id = id;
  if (id == "standard") {
    rep.g[0] = block2(I2, Z2, Z2, -I2);
    for (int a = 1; a <= 3; ++a) rep.g[a] = block2(Z2, pauli(a), -pauli(a), Z2);
  } else if (id == "antihermitian-real-form") {
    // purely imaginary matrices, adapted to the eight-real-component form;
    // i*g_mu is real for every mu
    rep.g[0] = block2(Z2, I_UNIT * I2, -I_UNIT * I2, Z2);
    rep.g[1] = block2(-I_UNIT * pauli(3), Z2, Z2, I_UNIT * pauli(3));
    rep.g[2] = block2(I_UNIT * pauli(1), Z2, Z2, -I_UNIT * pauli(1));
    rep.g[3] = block2(Z2, -I_UNIT * I2, -I_UNIT * I2, Z2);
  } else if (id == "chiral") {
    rep.g[0] = block2(Z2, I2, I2, Z2);
    for (int a = 1; a <= 3; ++a) rep.g[a] = block2(Z2, pauli(a), -pauli(a), Z2);
  } else {
    throw std::invalid_argument("build_rep: unknown representation id '" + id + "'");
  }
  rep.g4 = rep.g[0] * rep.g[1] * rep.g[2] * rep.g[3];
  return rep;
}

std::vector<CMat> basis16(const GammaRep& rep) {
  std::vector<CMat> b;
  b.reserve(16);
  b.push_back(CMat::identity(4));
  for (int mu = 0; mu < 4; ++mu) b.push_back(rep.g[mu]);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) b.push_back(rep.g[mu] * rep.g[nu]);
  for (int mu = 0; mu < 4; ++mu) b.push_back(rep.g4 * rep.g[mu]);
  b.push_back(rep.g4);
  return b;
}

Bilinears bilinears(const GammaRep& rep, const CVec& psi1, const CVec& psi2) {
  Bilinears r;
  r.s = rep.sandwich(psi1, psi2);
  r.p = rep.sandwich(psi1, rep.g4, psi2);
  for (int mu = 0; mu < 4; ++mu) {
    r.v[mu] = rep.sandwich(psi1, rep.g[mu], psi2);
    r.w[mu] = rep.sandwich(psi1, rep.g4 * rep.g[mu], psi2);
  }
  r.sigma = CMat(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) r.sigma(mu, nu) = rep.sandwich(psi1, rep.spin(mu, nu), psi2);
  return r;
}

cdouble Bilinears::v_dot_v() const {
  cdouble s = v[0] * v[0];
  for (int a = 1; a < 4; ++a) s -= v[a] * v[a];
  return s;
}

cdouble Bilinears::w_dot_w() const {
  cdouble s = w[0] * w[0];
  for (int a = 1; a < 4; ++a) s -= w[a] * w[a];
  return s;
}

cdouble Bilinears::sigma_dot_sigma() const {
  // Contraction in the Hermitian normalization (i S); with S = (1/4)[g,g]
  // the raw bilinear is anti-Hermitian and the contraction flips sign.
  cdouble s = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      s -= minkowski(mu) * minkowski(nu) * sigma(mu, nu) * sigma(mu, nu);
  return s;
}

double fierz_residual(const GammaRep& rep, const CVec& psi1, const CVec& psi2) {
  const cdouble s = rep.sandwich(psi1, psi2);
  const cdouble p = rep.sandwich(psi1, rep.g4, psi2);

  auto vec_max = [](const CVec& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
  };

  const CVec g4psi2 = rep.g4 * psi2;

  // (bar1 g_mu psi2) g^mu psi2 = s psi2 + p g4 psi2
  CVec lhs1(4, cdouble(0.0));
  // (bar1 g4 g_mu psi2) g^mu psi2 = p psi2 - s g4 psi2
  CVec lhs2(4, cdouble(0.0));
  // (bar1 g4 g_mu psi2) g4 g^mu psi2 = p g4 psi2 + s psi2
  CVec lhs3(4, cdouble(0.0));
  for (int mu = 0; mu < 4; ++mu) {
    const double gmm = minkowski(mu);
    const cdouble v_mu = rep.sandwich(psi1, rep.g[mu], psi2);
    const cdouble w_mu = rep.sandwich(psi1, rep.g4 * rep.g[mu], psi2);
    const CVec gpsi = rep.g[mu] * psi2;
    const CVec g4gpsi = rep.g4 * gpsi;
    for (int i = 0; i < 4; ++i) {
      lhs1[i] += gmm * v_mu * gpsi[i];
      lhs2[i] += gmm * w_mu * gpsi[i];
      lhs3[i] += gmm * w_mu * g4gpsi[i];
    }
  }
  // (bar1 S_{mu nu} psi2) S^{mu nu} psi2 = (1/2)(s psi2 - p g4 psi2),
  // stated for the Hermitian normalization i S (hence the sign below)
  CVec lhs4(4, cdouble(0.0));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const CMat smn = rep.spin(mu, nu);
      const cdouble smn12 = rep.sandwich(psi1, smn, psi2);
      const CVec spsi = smn * psi2;
      const double gg = minkowski(mu) * minkowski(nu);
      for (int i = 0; i < 4; ++i) lhs4[i] -= gg * smn12 * spsi[i];
    }

  double dev = 0.0;
  {
    CVec rhs(4);
    for (int i = 0; i < 4; ++i) rhs[i] = s * psi2[i] + p * g4psi2[i];
    dev = std::max(dev, vec_max(cvsub(lhs1, rhs)));
    for (int i = 0; i < 4; ++i) rhs[i] = p * psi2[i] - s * g4psi2[i];
    dev = std::max(dev, vec_max(cvsub(lhs2, rhs)));
    for (int i = 0; i < 4; ++i) rhs[i] = p * g4psi2[i] + s * psi2[i];
    dev = std::max(dev, vec_max(cvsub(lhs3, rhs)));
    for (int i = 0; i < 4; ++i) rhs[i] = 0.5 * (s * psi2[i] - p * g4psi2[i]);
    dev = std::max(dev, vec_max(cvsub(lhs4, rhs)));
  }
  return dev;
}

double clifford_deviation(const GammaRep& rep) {
  double dev = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      CMat lhs = anticommutator(rep.g[mu], rep.g[nu]);
      if (mu == nu) lhs -= CMat::identity(4) * cdouble(2.0 * minkowski(mu));
      dev = std::max(dev, lhs.max_abs());
    }
  return dev;
}

double g4_deviation(const GammaRep& rep) {
  double dev = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    dev = std::max(dev, anticommutator(rep.g4, rep.g[mu]).max_abs());
  dev = std::max(dev, (rep.g4 * rep.g4 + CMat::identity(4)).max_abs());
  return dev;
}

}  // namespace exsol
