#include "exsol/diffop.hpp"

#include <cmath>
#include <stdexcept>

namespace exsol {

MatDiffOp1 MatDiffOp1::zero(int n_vars, std::size_t dim, int degree_cap) {
  MatDiffOp1 op;
  op.n_vars = n_vars;
  op.dim = dim;
  for (int mu = 0; mu < 4; ++mu) op.A[mu] = MatPoly(n_vars, dim, degree_cap);
  op.B = MatPoly(n_vars, dim, degree_cap);
  return op;
}

MatDiffOp1 MatDiffOp1::identity_op(int n_vars, std::size_t dim, int degree_cap) {
  MatDiffOp1 op = zero(n_vars, dim, degree_cap);
  op.B = MatPoly::constant(n_vars, CMat::identity(dim), degree_cap);
  return op;
}

MatDiffOp1 MatDiffOp1::operator+(const MatDiffOp1& o) const {
  MatDiffOp1 r(*this);
  for (int mu = 0; mu < n_vars; ++mu) r.A[mu] = r.A[mu] + o.A[mu];
  r.B = r.B + o.B;
  return r;
}

MatDiffOp1 MatDiffOp1::operator-(const MatDiffOp1& o) const {
  MatDiffOp1 r(*this);
  for (int mu = 0; mu < n_vars; ++mu) r.A[mu] = r.A[mu] - o.A[mu];
  r.B = r.B - o.B;
  return r;
}

MatDiffOp1 MatDiffOp1::operator*(cdouble s) const {
  MatDiffOp1 r(*this);
  for (int mu = 0; mu < n_vars; ++mu) r.A[mu] = r.A[mu] * s;
  r.B = r.B * s;
  return r;
}

int MatDiffOp1::max_degree() const {
  int d = B.max_degree(1e-300);
  for (int mu = 0; mu < n_vars; ++mu) d = std::max(d, A[mu].max_degree(1e-300));
  return d;
}

double MatDiffOp1::max_coeff_abs() const {
  double m = B.max_coeff_abs();
  for (int mu = 0; mu < n_vars; ++mu) m = std::max(m, A[mu].max_coeff_abs());
  return m;
}

bool MatDiffOp1::scalar_A(double tol) const {
  for (int mu = 0; mu < n_vars; ++mu)
    if (!A[mu].scalar_coefficients(tol)) return false;
  return true;
}

CommutatorResult op_commutator(const MatDiffOp1& x, const MatDiffOp1& y) {
  if (x.n_vars != y.n_vars || x.dim != y.dim)
    throw std::invalid_argument("op_commutator: dimension mismatch");
  const int n = x.n_vars;
  const std::size_t d = x.dim;

  CommutatorResult res;
  res.first_order = MatDiffOp1::zero(n, d);

  // first-order part: coefficient of d_nu is
  //   sum_mu (A^x_mu dA^y_nu/dx_mu - A^y_mu dA^x_nu/dx_mu)
  //   + A^x_nu B^y - B^y A^x_nu + B^x A^y_nu - A^y_nu B^x
  for (int nu = 0; nu < n; ++nu) {
    MatPoly c(n, d);
    for (int mu = 0; mu < n; ++mu)
      c = c + x.A[mu] * y.A[nu].derivative(mu) - y.A[mu] * x.A[nu].derivative(mu);
    c = c + x.A[nu] * y.B - y.B * x.A[nu] + x.B * y.A[nu] - y.A[nu] * x.B;
    res.first_order.A[nu] = c;
  }

  // zero-order part
  {
    MatPoly b(n, d);
    for (int mu = 0; mu < n; ++mu)
      b = b + x.A[mu] * y.B.derivative(mu) - y.A[mu] * x.B.derivative(mu);
    b = b + x.B * y.B - y.B * x.B;
    res.first_order.B = b;
  }

  // symmetrized second-order remainder
  res.remainder_norm = 0.0;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      MatPoly r = x.A[mu] * y.A[nu] - y.A[mu] * x.A[nu] + x.A[nu] * y.A[mu] - y.A[nu] * x.A[mu];
      r = r * cdouble(0.5);
      res.remainder[mu][nu] = r;
      res.remainder_norm = std::max(res.remainder_norm, r.max_coeff_abs());
    }
  return res;
}

namespace {

CVec fd_partial(const FieldFn& field, const Vec4& x, int mu, double h) {
  Vec4 xp = x, xpp = x, xm = x, xmm = x;
  xp[mu] += h;
  xpp[mu] += 2 * h;
  xm[mu] -= h;
  xmm[mu] -= 2 * h;
  const CVec fpp = field(xpp), fp = field(xp), fm = field(xm), fmm = field(xmm);
  CVec r(field.m);
  for (int i = 0; i < field.m; ++i)
    r[i] = (-fpp[i] + 8.0 * fp[i] - 8.0 * fm[i] + fmm[i]) / (12.0 * h);
  return r;
}

double default_step(const Vec4& x) {
  double xmax = 0.0;
  for (double v : x) xmax = std::max(xmax, std::abs(v));
  return 1e-3 * std::max(1.0, xmax);
}

}  // namespace

CVec apply(const MatDiffOp1& op, const FieldFn& field, const Vec4& x, double fd_step) {
  const double h = fd_step > 0.0 ? fd_step : default_step(x);
  CVec out = op.B.eval(x) * field(x);
  for (int mu = 0; mu < op.n_vars; ++mu) {
    if (op.A[mu].is_zero()) continue;
    const CVec d = fd_partial(field, x, mu, h);
    const CVec term = op.A[mu].eval(x) * d;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
  }
  for (const auto& v : out)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("apply: non-finite field sample");
  return out;
}

LinOp1 to_linop(const MatDiffOp1& op) {
  LinOp1 l;
  l.n_vars = op.n_vars;
  l.dim = op.dim;
  l.xi = [op](const Vec4& x) {
    std::array<double, 4> xi{0, 0, 0, 0};
    for (int mu = 0; mu < op.n_vars; ++mu) {
      const CMat a = op.A[mu].eval(x);
      xi[mu] = a.rows() ? a(0, 0).real() : 0.0;
    }
    return xi;
  };
  l.eta = [op](const Vec4& x) { return op.B.eval(x); };
  return l;
}

CVec apply(const LinOp1& op, const FieldFn& field, const Vec4& x, double fd_step) {
  const double h = fd_step > 0.0 ? fd_step : default_step(x);
  const auto xi = op.xi(x);
  CVec out = op.eta(x) * field(x);
  for (int mu = 0; mu < op.n_vars; ++mu) {
    if (xi[mu] == 0.0) continue;
    const CVec d = fd_partial(field, x, mu, h);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += xi[mu] * d[i];
  }
  return out;
}

int AlgebraCatalog::index_of(const std::string& gname) const {
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == gname) return static_cast<int>(i);
  throw std::invalid_argument("AlgebraCatalog: unknown generator " + gname);
}

namespace {

/// flatten all polynomial coefficients of an operator into one vector keyed by
/// (slot, multi-index, entry); the key set is the union over all operators
std::map<std::tuple<int, MultiIndex, int>, cdouble> flatten(const MatDiffOp1& op) {
  std::map<std::tuple<int, MultiIndex, int>, cdouble> f;
  auto put = [&](int slot, const MatPoly& p) {
    for (const auto& [k, c] : p.terms())
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
          const cdouble v = c(i, j);
          if (v != cdouble(0.0)) f[{slot, k, int(i * c.cols() + j)}] = v;
        }
  };
  for (int mu = 0; mu < op.n_vars; ++mu) put(mu, op.A[mu]);
  put(op.n_vars, op.B);
  return f;
}

}  // namespace

std::pair<std::vector<cdouble>, double> expand_in_basis(const std::vector<MatDiffOp1>& gens,
                                                        const MatDiffOp1& op) {
  // collect the union of keys
  std::vector<std::map<std::tuple<int, MultiIndex, int>, cdouble>> flats;
  flats.reserve(gens.size() + 1);
  for (const auto& g : gens) flats.push_back(flatten(g));
  flats.push_back(flatten(op));
  std::map<std::tuple<int, MultiIndex, int>, int> keyidx;
  for (const auto& f : flats)
    for (const auto& [k, v] : f) keyidx.emplace(k, int(keyidx.size()));

  const std::size_t rows = keyidx.size(), cols = gens.size();
  CMat m(rows, cols);
  CVec rhs(rows, cdouble(0.0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [k, v] : flats[c]) m(keyidx[k], c) = v;
  for (const auto& [k, v] : flats.back()) rhs[keyidx[k]] = v;

  // normal equations (tiny systems, generators well-conditioned)
  CMat mh = m.adjoint();
  CMat gram = mh * m;
  CVec b = mh * rhs;
  double gscale = gram.max_abs();
  if (gscale == 0.0) throw std::runtime_error("expand_in_basis: empty generator basis");
  CMat gram_inv;
  try {
    gram_inv = gram.inverse();
  } catch (const std::exception&) {
    throw std::runtime_error("expand_in_basis: degenerate generator basis");
  }
  if (gram_inv.norm_inf() * gram.norm_inf() > 1e12)
    throw std::runtime_error("expand_in_basis: degenerate generator basis");
  CVec coeff = gram_inv * b;

  // residual
  double resid = 0.0;
  CVec fit(rows, cdouble(0.0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [k, v] : flats[c]) fit[keyidx[k]] += coeff[c] * v;
  for (std::size_t r = 0; r < rows; ++r) resid = std::max(resid, std::abs(fit[r] - rhs[r]));
  return {coeff, resid};
}

StructureReport structure_check(const AlgebraCatalog& cat, double tol) {
  StructureReport rep;
  rep.name = cat.name;
  const int n = static_cast<int>(cat.gens.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto comm = op_commutator(cat.gens[i], cat.gens[j]);
      auto [coeff, resid] = expand_in_basis(cat.gens, comm.first_order);
      // expected coefficients
      std::vector<cdouble> want(cat.gens.size(), 0.0);
      auto it = cat.expected.find({i, j});
      if (it != cat.expected.end())
        for (const auto& t : it->second) want[t.k] += t.coeff;
      else {
        it = cat.expected.find({j, i});
        if (it != cat.expected.end())
          for (const auto& t : it->second) want[t.k] -= t.coeff;
      }
      double dev = 0.0;
      for (std::size_t k = 0; k < want.size(); ++k) dev = std::max(dev, std::abs(coeff[k] - want[k]));
      rep.table.push_back({i, j, dev, resid, comm.remainder_norm});
      rep.max_coeff_deviation = std::max(rep.max_coeff_deviation, dev);
      rep.max_fit_residual = std::max(rep.max_fit_residual, resid);
      rep.max_remainder = std::max(rep.max_remainder, comm.remainder_norm);
    }
  rep.pass = rep.max_coeff_deviation <= tol && rep.max_fit_residual <= tol &&
             rep.max_remainder <= tol;
  return rep;
}

}  // namespace exsol
