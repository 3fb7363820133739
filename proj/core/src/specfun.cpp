#include "exsol/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace exsol {

namespace {

void check_bessel_domain(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel: requires x > 0");
}

}  // namespace

double bessel_J(double nu, double x) {
  check_bessel_domain(x);
  if (nu < 0.0) {
    // J_{-nu} = J_nu cos(nu pi) - Y_nu sin(nu pi)
    const double p = -nu;
    return std::cyl_bessel_j(p, x) * std::cos(p * M_PI) -
           std::cyl_neumann(p, x) * std::sin(p * M_PI);
  }
  return std::cyl_bessel_j(nu, x);
}

double bessel_Y(double nu, double x) {
  check_bessel_domain(x);
  if (nu < 0.0) {
    const double p = -nu;
    return std::cyl_neumann(p, x) * std::cos(p * M_PI) +
           std::cyl_bessel_j(p, x) * std::sin(p * M_PI);
  }
  return std::cyl_neumann(nu, x);
}

double bessel_I(double nu, double x) {
  check_bessel_domain(x);
  if (nu < 0.0) {
    const double p = -nu;
    // I_{-nu} = I_nu + (2/pi) sin(nu pi) K_nu
    return std::cyl_bessel_i(p, x) + (2.0 / M_PI) * std::sin(p * M_PI) * std::cyl_bessel_k(p, x);
  }
  return std::cyl_bessel_i(nu, x);
}

double bessel_K(double nu, double x) {
  check_bessel_domain(x);
  return std::cyl_bessel_k(std::abs(nu), x);
}

double bessel_J_prime(double nu, double x) { return (nu / x) * bessel_J(nu, x) - bessel_J(nu + 1, x); }
double bessel_Y_prime(double nu, double x) { return (nu / x) * bessel_Y(nu, x) - bessel_Y(nu + 1, x); }
double bessel_I_prime(double nu, double x) { return (nu / x) * bessel_I(nu, x) + bessel_I(nu + 1, x); }
double bessel_K_prime(double nu, double x) { return (nu / x) * bessel_K(nu, x) - bessel_K(nu + 1, x); }

JacobiSnCnDn jacobi_sn_cn_dn(double u, double k) {
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("jacobi_sn_cn_dn: modulus must be in [0,1)");
  if (k < 1e-14) return {std::sin(u), std::cos(u), 1.0};

  // descending Landen: a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n)
  std::vector<double> a_seq, c_seq;
  double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
  a_seq.push_back(a);
  c_seq.push_back(c);
  int n = 0;
  while (std::abs(c) > 1e-16 * a && n < 64) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    ++n;
    a_seq.push_back(a);
    c_seq.push_back(c);
  }
  double phi = std::ldexp(1.0, n) * a * u;  // 2^n a_n u
  for (int i = n; i >= 1; --i)
    phi = 0.5 * (phi + std::asin(std::clamp(c_seq[i] / a_seq[i] * std::sin(phi), -1.0, 1.0)));
  JacobiSnCnDn r;
  r.sn = std::sin(phi);
  r.cn = std::cos(phi);
  r.dn = std::sqrt(std::max(0.0, 1.0 - k * k * r.sn * r.sn));
  return r;
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1]
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& kron, double& err);

template <>
void gk15<cdouble>(const std::function<cdouble(double)>& f, double a, double b, cdouble& kron,
                   double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cdouble resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    cdouble fv = f(c - dx);
    if (kXgk[i] != 0.0) fv += f(c + dx);
    resk += kWgk[i] * fv;
    if (i % 2 == 1) resg += kWg[i / 2] * fv;
  }
  kron = resk * h;
  err = std::abs(resk * h - resg * h);
}

template <>
void gk15<double>(const std::function<double(double)>& f, double a, double b, double& kron,
                  double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fv = f(c - dx);
    if (kXgk[i] != 0.0) fv += f(c + dx);
    resk += kWgk[i] * fv;
    if (i % 2 == 1) resg += kWg[i / 2] * fv;
  }
  kron = resk * h;
  err = std::abs(resk * h - resg * h);
}

template <typename T>
T adaptive_quad(const std::function<T(double)>& f, double a, double b, const QuadratureSpec& spec) {
  if (a == b) return T{};
  struct Seg {
    double a, b, err;
    T val;
  };
  std::vector<Seg> segs;
  T v{};
  double e;
  gk15<T>(f, a, b, v, e);
  segs.push_back({a, b, e, v});
  int n = 0;
  auto total_err = [&]() {
    double s = 0.0;
    for (const auto& sg : segs) s += sg.err;
    return s;
  };
  while (total_err() > spec.target_accuracy) {
    if (++n > spec.max_subdivisions)
      throw std::runtime_error("integrate: subdivision limit exceeded");
    // split worst segment
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    Seg sg = segs[worst];
    const double m = 0.5 * (sg.a + sg.b);
    Seg left{sg.a, m, 0.0, T{}}, right{m, sg.b, 0.0, T{}};
    gk15<T>(f, left.a, left.b, left.val, left.err);
    gk15<T>(f, right.a, right.b, right.val, right.err);
    segs[worst] = left;
    segs.push_back(right);
  }
  T sum{};
  for (const auto& sg : segs) sum += sg.val;
  return sum;
}

}  // namespace

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec) {
  return adaptive_quad<double>(f, a, b, spec);
}

cdouble integrate_complex(const std::function<cdouble(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
  return adaptive_quad<cdouble>(f, a, b, spec);
}

double Antiderivative::operator()(double x) const {
  return integrate_real(f_, base_, x, spec_);
}

CMat expm(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: not square");
  const double nrm = m.norm_inf();
  int s = 0;
  double scaled = nrm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++s;
  }
  CMat a = m * cdouble(std::ldexp(1.0, -s));
  // Taylor on the scaled matrix; ||a|| <= 0.5 so ~20 terms reach eps
  CMat result = CMat::identity(m.rows());
  CMat term = CMat::identity(m.rows());
  for (int k = 1; k <= 24; ++k) {
    term = term * a * cdouble(1.0 / k);
    result += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

}  // namespace exsol
