#include "exsol/cmat.hpp"

#include <algorithm>
#include <cmath>

namespace exsol {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::operator+(const CMat& o) const {
  if (!same_shape(o)) throw std::invalid_argument("CMat+: shape mismatch");
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  if (!same_shape(o)) throw std::invalid_argument("CMat-: shape mismatch");
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

CMat CMat::operator-() const {
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

CMat CMat::operator*(const CMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CMat*: shape mismatch");
  CMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cdouble aik = a_[i * cols_ + k];
      if (aik == cdouble(0.0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.a_[i * o.cols_ + j] += aik * o.a_[k * o.cols_ + j];
    }
  return r;
}

CMat CMat::operator*(cdouble s) const {
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

CMat& CMat::operator+=(const CMat& o) {
  if (!same_shape(o)) throw std::invalid_argument("CMat+=: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (!same_shape(o)) throw std::invalid_argument("CMat-=: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cdouble s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CVec CMat::operator*(const CVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("CMat*vec: shape mismatch");
  CVec r(rows_, cdouble(0.0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += a_[i * cols_ + j] * v[j];
  return r;
}

CMat CMat::adjoint() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMat CMat::conj() const {
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

CMat CMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("CMat::inverse: not square");
  const std::size_t n = rows_;
  CMat aug(*this);
  CMat inv = CMat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(aug(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(aug(r, col));
      if (v > best) { best = v; piv = r; }
    }
    if (best < 1e-300) throw std::runtime_error("CMat::inverse: singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(aug(col, j), aug(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const cdouble d = aug(col, col);
    for (std::size_t j = 0; j < n; ++j) { aug(col, j) /= d; inv(col, j) /= d; }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cdouble f = aug(r, col);
      if (f == cdouble(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        aug(r, j) -= f * aug(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

cdouble CMat::trace() const {
  cdouble t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMat::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double CMat::max_abs() const {
  double best = 0.0;
  for (const auto& v : a_) best = std::max(best, std::abs(v));
  return best;
}

double CMat::frobenius() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

std::size_t rank_of_flattened(const std::vector<CMat>& mats, double rel_tol) {
  if (mats.empty()) return 0;
  const std::size_t ncols = mats[0].rows() * mats[0].cols();
  std::vector<std::vector<cdouble>> rows;
  rows.reserve(mats.size());
  double scale = 0.0;
  for (const auto& m : mats) {
    rows.push_back(m.data());
    scale = std::max(scale, m.max_abs());
  }
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;
  std::size_t rank = 0;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    double best = 0.0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const double v = std::abs(rows[r][col]);
      if (v > best) { best = v; piv = r; }
    }
    if (best <= tol) continue;
    std::swap(rows[rank], rows[piv]);
    const cdouble d = rows[rank][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const cdouble f = rows[r][col] / d;
      if (f == cdouble(0.0)) continue;
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
    ++lead;
  }
  (void)lead;
  return rank;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }
CMat anticommutator(const CMat& a, const CMat& b) { return a * b + b * a; }

CVec cvadd(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CVec cvsub(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CVec cvscale(cdouble s, const CVec& a) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

double cvnorm(const CVec& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

cdouble cvdot_conj(const CVec& a, const CVec& b) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace exsol
