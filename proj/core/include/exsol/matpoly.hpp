#pragma once

#include "exsol/cmat.hpp"

#include <map>
#include <array>

namespace exsol {

using MultiIndex = std::array<int, 4>;  // exponents; unused variables stay 0

inline int total_degree(const MultiIndex& k) { return k[0] + k[1] + k[2] + k[3]; }

/// Polynomial in up to four real variables with square complex matrix
/// coefficients. Total degree is capped (default 2: enough for the conformal
/// and projective generators); construction beyond the cap throws.
class MatPoly {
 public:
  MatPoly() : n_vars_(0), dim_(0), degree_cap_(8) {}
  MatPoly(int n_vars, std::size_t dim, int degree_cap = 8)
      : n_vars_(n_vars), dim_(dim), degree_cap_(degree_cap) {}

  static MatPoly constant(int n_vars, const CMat& c, int degree_cap = 8);
  /// scalar * x^k * Identity(dim)
  static MatPoly monomial(int n_vars, std::size_t dim, const MultiIndex& k, cdouble coeff,
                          int degree_cap = 8);

  /// highest total degree with a nonzero coefficient
  int max_degree(double tol = 0.0) const;

  int n_vars() const { return n_vars_; }
  std::size_t dim() const { return dim_; }
  int degree_cap() const { return degree_cap_; }
  bool is_zero(double tol = 0.0) const;

  void add_term(const MultiIndex& k, const CMat& c);

  MatPoly operator+(const MatPoly& o) const;
  MatPoly operator-(const MatPoly& o) const;
  MatPoly operator*(const MatPoly& o) const;   // throws if degree cap exceeded
  MatPoly operator*(cdouble s) const;

  /// d/dx_mu, exact on coefficients
  MatPoly derivative(int mu) const;

  CMat eval(const double* x) const;
  CMat eval(const Vec4& x) const { return eval(x.data()); }

  double max_coeff_abs() const;
  const std::map<MultiIndex, CMat>& terms() const { return terms_; }

  /// true if every coefficient is a multiple of the identity
  bool scalar_coefficients(double tol = 1e-14) const;

 private:
  int n_vars_;
  std::size_t dim_;
  int degree_cap_;
  std::map<MultiIndex, CMat> terms_;
};

}  // namespace exsol
