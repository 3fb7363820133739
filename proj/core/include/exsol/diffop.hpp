#pragma once

#include "exsol/matpoly.hpp"
#include "exsol/field.hpp"

#include <functional>
#include <string>
#include <vector>
#include <optional>

namespace exsol {

/// First-order linear differential operator with matrix-valued polynomial
/// coefficients: Q = sum_mu A_mu(x) d_mu + B(x).
struct MatDiffOp1 {
  int n_vars = 4;
  std::size_t dim = 4;
  std::array<MatPoly, 4> A;
  MatPoly B;

  static MatDiffOp1 zero(int n_vars, std::size_t dim, int degree_cap = 8);
  static MatDiffOp1 identity_op(int n_vars, std::size_t dim, int degree_cap = 8);

  /// highest polynomial degree appearing in any coefficient
  int max_degree() const;

  MatDiffOp1 operator+(const MatDiffOp1& o) const;
  MatDiffOp1 operator-(const MatDiffOp1& o) const;
  MatDiffOp1 operator*(cdouble s) const;

  double max_coeff_abs() const;
  bool scalar_A(double tol = 1e-14) const;
};

struct CommutatorResult {
  MatDiffOp1 first_order;
  /// symmetrized second-order remainder R_{mu nu} (coefficient of d_mu d_nu);
  /// vanishes when either operand has scalar A-coefficients
  std::array<std::array<MatPoly, 4>, 4> remainder;
  double remainder_norm = 0.0;
};

/// Exact commutator [X,Y] via polynomial arithmetic.
/// Throws std::invalid_argument on dimension mismatch.
CommutatorResult op_commutator(const MatDiffOp1& x, const MatDiffOp1& y);

/// Evaluate Q psi at x with FD derivatives (4th-order central stencil).
CVec apply(const MatDiffOp1& op, const FieldFn& field, const Vec4& x, double fd_step = 0.0);

/// Non-polynomial first-order operator (closed-form coefficients), used for
/// conditional-symmetry Ansatz checks where the coefficients are not
/// polynomial in x.
struct LinOp1 {
  int n_vars = 4;
  std::size_t dim = 4;
  /// scalar coefficients xi_mu(x) of d_mu
  std::function<std::array<double, 4>(const Vec4&)> xi;
  /// matrix part eta(x)
  std::function<CMat(const Vec4&)> eta;
};

LinOp1 to_linop(const MatDiffOp1& op);
CVec apply(const LinOp1& op, const FieldFn& field, const Vec4& x, double fd_step = 0.0);

/// A named generator catalog plus its expected structure table.
struct AlgebraCatalog {
  struct TermRef {
    int k;         // generator index
    cdouble coeff;
  };
  std::string name;
  std::vector<std::string> gen_names;
  std::vector<MatDiffOp1> gens;
  /// expected[i][j] = expansion of [g_i, g_j]; antisymmetric under swap
  std::map<std::pair<int, int>, std::vector<TermRef>> expected;

  int index_of(const std::string& gname) const;
};

struct StructureReport {
  std::string name;
  double max_coeff_deviation = 0.0;   // fitted vs expected coefficients
  double max_fit_residual = 0.0;      // leftover after least-squares expansion
  double max_remainder = 0.0;         // second-order remainder norm
  bool pass = false;
  struct PairRow {
    int i, j;
    double coeff_deviation;
    double fit_residual;
    double remainder;
  };
  std::vector<PairRow> table;
};

/// Certify every ordered pair against the expected table. Least squares on
/// flattened polynomial coefficients; throws std::runtime_error if the
/// generator basis is numerically degenerate.
StructureReport structure_check(const AlgebraCatalog& cat, double tol = 1e-12);

/// Expand op in the catalog basis (least squares); returns coefficients and
/// fit residual.
std::pair<std::vector<cdouble>, double> expand_in_basis(const std::vector<MatDiffOp1>& gens,
                                                        const MatDiffOp1& op);

}  // namespace exsol
