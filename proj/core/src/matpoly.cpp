#include "exsol/matpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace exsol {

MatPoly MatPoly::constant(int n_vars, const CMat& c, int degree_cap) {
  MatPoly p(n_vars, c.rows(), degree_cap);
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

MatPoly MatPoly::monomial(int n_vars, std::size_t dim, const MultiIndex& k, cdouble coeff,
                          int degree_cap) {
  MatPoly p(n_vars, dim, degree_cap);
  p.add_term(k, CMat::identity(dim) * coeff);
  return p;
}

int MatPoly::max_degree(double tol) const {
  int d = 0;
  for (const auto& [k, c] : terms_)
    if (c.max_abs() > tol) d = std::max(d, total_degree(k));
  return d;
}

bool MatPoly::is_zero(double tol) const {
  for (const auto& [k, c] : terms_)
    if (c.max_abs() > tol) return false;
  return true;
}

void MatPoly::add_term(const MultiIndex& k, const CMat& c) {
  if (total_degree(k) > degree_cap_)
    throw std::invalid_argument("MatPoly: term exceeds degree cap");
  if (c.rows() != dim_ || c.cols() != dim_)
    throw std::invalid_argument("MatPoly: coefficient dim mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end())
    terms_.emplace(k, c);
  else
    it->second += c;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
  MatPoly r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
  MatPoly r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
  MatPoly r(n_vars_, dim_, degree_cap_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      MultiIndex k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]};
      r.add_term(k, c1 * c2);
    }
  return r;
}

MatPoly MatPoly::operator*(cdouble s) const {
  MatPoly r(n_vars_, dim_, degree_cap_);
  for (const auto& [k, c] : terms_) r.add_term(k, c * s);
  return r;
}

MatPoly MatPoly::derivative(int mu) const {
  MatPoly r(n_vars_, dim_, degree_cap_);
  for (const auto& [k, c] : terms_) {
    if (k[mu] == 0) continue;
    MultiIndex kd = k;
    kd[mu] -= 1;
    r.add_term(kd, c * cdouble(double(k[mu])));
  }
  return r;
}

CMat MatPoly::eval(const double* x) const {
  CMat r(dim_, dim_);
  for (const auto& [k, c] : terms_) {
    double mono = 1.0;
    for (int v = 0; v < n_vars_; ++v)
      for (int e = 0; e < k[v]; ++e) mono *= x[v];
    r += c * cdouble(mono);
  }
  return r;
}

double MatPoly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

bool MatPoly::scalar_coefficients(double tol) const {
  for (const auto& [k, c] : terms_) {
    const cdouble d = c(0, 0);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        const cdouble want = (i == j) ? d : cdouble(0.0);
        if (std::abs(c(i, j) - want) > tol * std::max(1.0, std::abs(d))) return false;
      }
  }
  return true;
}

}  // namespace exsol
