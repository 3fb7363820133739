#include <doctest.h>

#include "exsol/gamma.hpp"

#include <random>

using namespace exsol;

namespace {

CVec random_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVec psi(4);
  for (auto& c : psi) c = cdouble(u(rng), u(rng));
  return psi;
}

const char* kRepIds[3] = {"standard", "antihermitian-real-form", "chiral"};

}  // namespace

TEST_CASE("gamma representations satisfy the Clifford relations") {
  for (const char* id : kRepIds) {
    const GammaRep rep = build_rep(id);
    CAPTURE(id);
    CHECK(clifford_deviation(rep) <= 1e-14);
    CHECK(g4_deviation(rep) <= 1e-14);
  }
}

TEST_CASE("standard rep details") {
  const GammaRep rep = build_rep("standard");
  // g0 = diag(1,1,-1,-1)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cdouble want = (i == j) ? cdouble(i < 2 ? 1.0 : -1.0) : cdouble(0.0);
      CHECK(std::abs(rep.g[0](i, j) - want) < 1e-15);
    }
  // hermiticity pattern g0^+ = g0, g_a^+ = -g_a
  CHECK((rep.g[0].adjoint() - rep.g[0]).max_abs() < 1e-15);
  for (int a = 1; a < 4; ++a) CHECK((rep.g[a].adjoint() + rep.g[a]).max_abs() < 1e-15);
}

TEST_CASE("unknown rep id throws") {
  CHECK_THROWS_AS(build_rep("weyl-rotated"), std::invalid_argument);
}

TEST_CASE("basis16 has rank 16 in every rep") {
  for (const char* id : kRepIds) {
    const GammaRep rep = build_rep(id);
    const auto b = basis16(rep);
    REQUIRE(b.size() == 16);
    CHECK((b[0] - CMat::identity(4)).max_abs() == 0.0);
    CHECK(rank_of_flattened(b) == 16);
  }
}

TEST_CASE("bilinears on the unit spinor") {
  const GammaRep rep = build_rep("standard");
  CVec psi{1.0, 0.0, 0.0, 0.0};
  const auto bl = bilinears(rep, psi, psi);
  CHECK(std::abs(bl.s - cdouble(1.0)) < 1e-15);
  CHECK(std::abs(bl.p) < 1e-15);
  CHECK(std::abs(bl.v[0] - cdouble(1.0)) < 1e-15);
  for (int a = 1; a < 4; ++a) CHECK(std::abs(bl.v[a]) < 1e-15);
}

TEST_CASE("zero spinor gives zero bilinears and zero fierz residual") {
  const GammaRep rep = build_rep("standard");
  CVec zero(4, cdouble(0.0));
  CVec psi{0.3, cdouble(0, 1.0), -0.2, 0.7};
  const auto bl = bilinears(rep, zero, zero);
  CHECK(std::abs(bl.s) == 0.0);
  CHECK(std::abs(bl.p) == 0.0);
  CHECK(fierz_residual(rep, psi, zero) == 0.0);
}

TEST_CASE("Pauli-Fierz identities: 1000 seeded random spinors per rep") {
  for (const char* id : kRepIds) {
    const GammaRep rep = build_rep(id);
    std::mt19937_64 rng(42);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const CVec psi = random_spinor(rng);
      const auto bl = bilinears(rep, psi, psi);
      const double n = cvnorm(psi);
      const double scale = n * n * n * n;
      const cdouble target = bl.s * bl.s + bl.p * bl.p;
      worst = std::max(worst, std::abs(bl.v_dot_v() - target) / scale);
      worst = std::max(worst, std::abs(bl.w_dot_w() - target) / scale);
      worst = std::max(worst,
                       std::abs(bl.sigma_dot_sigma() - 0.5 * (bl.s * bl.s - bl.p * bl.p)) / scale);
      // s, p real for psi1 = psi2
      worst = std::max(worst, std::abs(bl.s.imag()) / scale);
      worst = std::max(worst, std::abs(bl.p.imag()) / scale);
    }
    CAPTURE(id);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("four-term contraction identities for random spinor pairs") {
  for (const char* id : kRepIds) {
    const GammaRep rep = build_rep(id);
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const CVec psi1 = random_spinor(rng), psi2 = random_spinor(rng);
      const double n1 = cvnorm(psi1), n2 = cvnorm(psi2);
      worst = std::max(worst, fierz_residual(rep, psi1, psi2) / (n1 * n2 * n2));
    }
    CAPTURE(id);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("sigma antisymmetry") {
  const GammaRep rep = build_rep("chiral");
  std::mt19937_64 rng(5);
  const CVec psi1 = random_spinor(rng), psi2 = random_spinor(rng);
  const auto bl = bilinears(rep, psi1, psi2);
  CHECK((bl.sigma + bl.sigma.transpose()).max_abs() < 1e-14);
}
