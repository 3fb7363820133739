#include <doctest.h>

#include "exsol/specfun.hpp"
#include "exsol/gamma.hpp"

#include <cmath>
#include <random>

using namespace exsol;

namespace {

// independent power-series / integral-representation oracle, deliberately not
// sharing a code path with the library wrappers
double series_J(double nu, double x) {
  // J_nu(x) = sum_k (-1)^k / (k! Gamma(k+nu+1)) (x/2)^{2k+nu}
  double sum = 0.0, term;
  const double half = 0.5 * x;
  for (int k = 0; k < 200; ++k) {
    term = ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(half, 2.0 * k + nu) /
           (std::tgamma(k + 1.0) * std::tgamma(k + nu + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && k > 4) break;
  }
  return sum;
}

double series_I(double nu, double x) {
  double sum = 0.0;
  const double half = 0.5 * x;
  for (int k = 0; k < 200; ++k) {
    const double term =
        std::pow(half, 2.0 * k + nu) / (std::tgamma(k + 1.0) * std::tgamma(k + nu + 1.0));
    sum += term;
    if (term < 1e-18 * std::max(1.0, sum) && k > 4) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("closed forms of half-integer Bessel") {
  // J_{1/2}(x) = sqrt(2/(pi x)) sin x
  for (double x : {0.3, 1.0, M_PI / 2, 2.5, 7.0}) {
    CHECK(bessel_J(0.5, x) == doctest::Approx(std::sqrt(2.0 / (M_PI * x)) * std::sin(x)).epsilon(1e-12));
    CHECK(bessel_Y(0.5, x) == doctest::Approx(-std::sqrt(2.0 / (M_PI * x)) * std::cos(x)).epsilon(1e-12));
  }
  CHECK(bessel_J(0.5, M_PI / 2) == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("J_0 tends to 1 at 0+") {
  CHECK(bessel_J(0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_J(0.25, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_K(0.25, -1.0), std::domain_error);
  CHECK_THROWS_AS(jacobi_sn_cn_dn(0.1, 1.0), std::domain_error);
}

TEST_CASE("Bessel values vs independent series oracle, 50 points per order") {
  for (double nu : {0.0, 0.25, 0.5}) {
    for (int i = 1; i <= 50; ++i) {
      const double x = 0.1 + 0.15 * i;  // up to x = 7.6
      CHECK(bessel_J(nu, x) == doctest::Approx(series_J(nu, x)).epsilon(1e-9));
      CHECK(bessel_I(nu, x) == doctest::Approx(series_I(nu, x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Bessel Wronskian identity") {
  for (double nu : {0.0, 0.25, 0.5, 1.0}) {
    for (double x : {0.2, 0.9, 2.3, 5.7, 11.0}) {
      const double w = bessel_J(nu, x) * bessel_Y_prime(nu, x) -
                       bessel_Y(nu, x) * bessel_J_prime(nu, x);
      CHECK(w == doctest::Approx(2.0 / (M_PI * x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Jacobi elliptic basic values and identities") {
  const auto r0 = jacobi_sn_cn_dn(0.0, 0.7);
  CHECK(r0.sn == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r0.cn == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r0.dn == doctest::Approx(1.0).epsilon(1e-14));

  const double k = std::sqrt(2.0) / 2.0;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 100; ++t) {
    const double x = u(rng);
    const auto r = jacobi_sn_cn_dn(x, k);
    CHECK(std::abs(r.sn * r.sn + r.cn * r.cn - 1.0) < 1e-12);
    CHECK(std::abs(r.dn * r.dn + k * k * r.sn * r.sn - 1.0) < 1e-12);
  }
}

TEST_CASE("Jacobi sn matches RK-integrated defining ODE") {
  // sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn from (sn,cn,dn)(0)=(0,1,1)
  const double k = std::sqrt(2.0) / 2.0;
  double sn = 0.0, cn = 1.0, dn = 1.0;
  const double h = 1e-4;
  const double target = 1.7;
  auto deriv = [&](double s, double c, double d, double& ds, double& dc, double& dd) {
    ds = c * d;
    dc = -s * d;
    dd = -k * k * s * c;
  };
  int steps = static_cast<int>(target / h);
  for (int i = 0; i < steps; ++i) {
    double k1s, k1c, k1d, k2s, k2c, k2d, k3s, k3c, k3d, k4s, k4c, k4d;
    deriv(sn, cn, dn, k1s, k1c, k1d);
    deriv(sn + 0.5 * h * k1s, cn + 0.5 * h * k1c, dn + 0.5 * h * k1d, k2s, k2c, k2d);
    deriv(sn + 0.5 * h * k2s, cn + 0.5 * h * k2c, dn + 0.5 * h * k2d, k3s, k3c, k3d);
    deriv(sn + h * k3s, cn + h * k3c, dn + h * k3d, k4s, k4c, k4d);
    sn += h / 6.0 * (k1s + 2 * k2s + 2 * k3s + k4s);
    cn += h / 6.0 * (k1c + 2 * k2c + 2 * k3c + k4c);
    dn += h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
  }
  const auto r = jacobi_sn_cn_dn(target, k);
  CHECK(r.sn == doctest::Approx(sn).epsilon(1e-9));
  CHECK(r.cn == doctest::Approx(cn).epsilon(1e-9));
  CHECK(r.dn == doctest::Approx(dn).epsilon(1e-9));
}

TEST_CASE("adaptive quadrature") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-11));
  // oscillatory
  CHECK(integrate([](double x) { return std::sin(20.0 * x); }, 0.0, 2.0) ==
        doctest::Approx((1.0 - std::cos(40.0)) / 20.0).epsilon(1e-10));
}

TEST_CASE("antiderivative is smooth in the upper limit") {
  Antiderivative F([](double x) { return std::cos(3.0 * x) * std::exp(-0.1 * x * x); }, 0.0);
  const double x = 0.8, h = 1e-4;
  const double fd = (-F(x + 2 * h) + 8 * F(x + h) - 8 * F(x - h) + F(x - 2 * h)) / (12 * h);
  const double f = std::cos(3.0 * x) * std::exp(-0.1 * x * x);
  CHECK(fd == doctest::Approx(f).epsilon(1e-7));
}

TEST_CASE("expm basics") {
  CHECK((expm4(CMat::zero(4)) - CMat::identity(4)).max_abs() == 0.0);

  const GammaRep rep = build_rep("standard");
  // (g0 g3)^2 = I so exp(theta g0 g3) = cosh I + sinh g0 g3
  const double th = 0.37;
  const CMat lhs = expm4(rep.g[0] * rep.g[3] * cdouble(th));
  const CMat rhs = CMat::identity(4) * cdouble(std::cosh(th)) +
                   rep.g[0] * rep.g[3] * cdouble(std::sinh(th));
  CHECK((lhs - rhs).max_abs() < 1e-13);

  // ((g0+g3) g1)^2 = 0 so the series truncates
  const CMat n = (rep.g[0] + rep.g[3]) * rep.g[1] * cdouble(th);
  CHECK((expm4(n) - CMat::identity(4) - n).max_abs() < 1e-14);
}

TEST_CASE("expm inverse law for 100 random matrices") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    CMat a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = cdouble(u(rng), u(rng));
    // scale to norm <= 5
    const double nrm = a.norm_inf();
    if (nrm > 5.0) a *= cdouble(5.0 / nrm);
    CHECK((expm4(a) * expm4(-a) - CMat::identity(4)).max_abs() < 1e-12);
  }
}
