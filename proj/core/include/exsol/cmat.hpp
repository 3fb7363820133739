#pragma once

#include <complex>
#include <vector>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <cstddef>

namespace exsol {

using cdouble = std::complex<double>;
using Vec4 = std::array<double, 4>;
using CVec = std::vector<cdouble>;

inline constexpr cdouble I_UNIT{0.0, 1.0};

/// Minkowski metric diag(1,-1,-1,-1), entry (mu,mu).
inline double minkowski(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// a.b = g_{mu nu} a_mu b_nu
inline double mdot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// Dense complex matrix, row major. Sizes here are tiny (4x4, 12x12, 16x16),
/// so no attempt is made at being clever.
class CMat {
 public:
  CMat() : rows_(0), cols_(0) {}
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cdouble(0.0)) {}
  CMat(std::size_t rows, std::size_t cols, std::initializer_list<cdouble> vals)
      : rows_(rows), cols_(cols), a_(vals) {
    if (a_.size() != rows * cols) throw std::invalid_argument("CMat: bad init size");
  }

  static CMat identity(std::size_t n);
  static CMat zero(std::size_t n) { return CMat(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator-() const;
  CMat operator*(const CMat& o) const;
  CMat operator*(cdouble s) const;
  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cdouble s);

  CVec operator*(const CVec& v) const;

  CMat adjoint() const;    // conjugate transpose
  CMat transpose() const;
  CMat conj() const;
  CMat inverse() const;    // Gauss-Jordan with partial pivoting
  cdouble trace() const;

  double norm_inf() const;       // max row sum of |entry|
  double max_abs() const;        // max |entry|
  double frobenius() const;

  bool same_shape(const CMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  const std::vector<cdouble>& data() const { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<cdouble> a_;
};

inline CMat operator*(cdouble s, const CMat& m) { return m * s; }
inline CMat operator*(double s, const CMat& m) { return m * cdouble(s); }

/// Numerical rank of a list of equally shaped matrices, each flattened to a
/// row; pivoted Gaussian elimination with relative tolerance.
std::size_t rank_of_flattened(const std::vector<CMat>& mats, double rel_tol = 1e-10);

/// Commutator [A,B] and anticommutator {A,B}.
CMat commutator(const CMat& a, const CMat& b);
CMat anticommutator(const CMat& a, const CMat& b);

// small vector helpers
CVec cvadd(const CVec& a, const CVec& b);
CVec cvsub(const CVec& a, const CVec& b);
CVec cvscale(cdouble s, const CVec& a);
double cvnorm(const CVec& a);
cdouble cvdot_conj(const CVec& a, const CVec& b);  // sum conj(a_i) b_i

}  // namespace exsol
