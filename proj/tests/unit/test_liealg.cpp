#include <doctest.h>

#include "exsol/algebras.hpp"

#include <random>

using namespace exsol;

namespace {
const GammaRep& std_rep() {
  static const GammaRep rep = build_rep("standard");
  return rep;
}
}  // namespace

TEST_CASE("commutator of an operator with itself vanishes") {
  const auto j03 = op_J(0, 3, std_rep());
  const auto c = op_commutator(j03, j03);
  CHECK(c.first_order.max_coeff_abs() == 0.0);
  CHECK(c.remainder_norm == 0.0);
}

TEST_CASE("[P_0, J_03] = P_3 with zero remainder") {
  const auto p0 = op_P(0, std_rep());
  const auto j03 = op_J(0, 3, std_rep());
  const auto c = op_commutator(p0, j03);
  CHECK(c.remainder_norm == 0.0);
  auto [coeff, resid] = expand_in_basis({op_P(0, std_rep()), op_P(1, std_rep()),
                                         op_P(2, std_rep()), op_P(3, std_rep())},
                                        c.first_order);
  CHECK(resid < 1e-14);
  CHECK(std::abs(coeff[0]) < 1e-14);
  CHECK(std::abs(coeff[3] - cdouble(1.0)) < 1e-14);
}

TEST_CASE("dimension mismatch is rejected") {
  const auto p0 = op_P(0, std_rep());
  auto scalar = MatDiffOp1::zero(4, 1);
  CHECK_THROWS_AS(op_commutator(p0, scalar), std::invalid_argument);
}

TEST_CASE("certified catalogs close on their structure tables") {
  for (const auto& name : algebra_catalog_names()) {
    const auto cat = build_algebra_catalog(name);
    const auto rep = structure_check(cat);
    CAPTURE(name);
    CHECK(rep.max_remainder == 0.0);
    CHECK(rep.max_coeff_deviation <= 1e-12);
    CHECK(rep.max_fit_residual <= 1e-12);
    CHECK(rep.pass);
  }
}

TEST_CASE("[G_1, G_2] = 0 in the Galilei catalog") {
  const auto cat = catalog_galilei(1.0, std_rep());
  const auto c = op_commutator(cat.gens[cat.index_of("G1")], cat.gens[cat.index_of("G2")]);
  CHECK(c.first_order.max_coeff_abs() < 1e-14);
  CHECK(c.remainder_norm == 0.0);
}

TEST_CASE("Jacobi identity on random triples from each catalog") {
  for (const auto& name : algebra_catalog_names()) {
    const auto cat = build_algebra_catalog(name);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(cat.gens.size()) - 1);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const auto& x = cat.gens[pick(rng)];
      const auto& y = cat.gens[pick(rng)];
      const auto& z = cat.gens[pick(rng)];
      auto xy = op_commutator(x, y).first_order;
      auto yz = op_commutator(y, z).first_order;
      auto zx = op_commutator(z, x).first_order;
      auto total = op_commutator(xy, z).first_order + op_commutator(yz, x).first_order +
                   op_commutator(zx, y).first_order;
      worst = std::max(worst, total.max_coeff_abs());
    }
    CAPTURE(name);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("apply: identity operator returns the field") {
  FieldFn f{4, 4, [](const Vec4& x) {
              CVec v(4);
              for (int i = 0; i < 4; ++i) v[i] = std::sin(x[0] + i) * std::cos(x[1]);
              return v;
            }};
  const auto id = MatDiffOp1::identity_op(4, 4);
  const Vec4 x{0.3, -0.2, 0.9, 0.1};
  const CVec got = apply(id, f, x);
  const CVec want = f(x);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-14);
}

TEST_CASE("apply: P_0 on a plane wave gives -iE psi") {
  const double E = 1.7, p1 = 0.4, p2 = -0.3, p3 = 0.9;
  FieldFn f{4, 4, [=](const Vec4& x) {
              const cdouble ph = std::exp(-I_UNIT * (E * x[0] + p1 * x[1] + p2 * x[2] + p3 * x[3]));
              return CVec{ph, 0.5 * ph, -0.2 * ph, cdouble(0, 1) * ph};
            }};
  const auto p0 = op_P(0, std_rep());
  const Vec4 x{0.2, 0.4, -0.7, 0.25};
  const CVec got = apply(p0, f, x);
  const CVec val = f(x);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(got[i] - (-I_UNIT * E) * val[i]) < 1e-8);
}
