#include "exsol/algebras.hpp"

#include <stdexcept>

namespace exsol {

namespace {

MultiIndex unit_idx(int mu) {
  MultiIndex k{0, 0, 0, 0};
  k[mu] = 1;
  return k;
}

MatPoly xpoly(int mu, std::size_t dim, cdouble coeff = 1.0) {
  return MatPoly::monomial(4, dim, unit_idx(mu), coeff);
}

}  // namespace

MatDiffOp1 op_P(int mu, const GammaRep& rep) {
  (void)rep;
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[mu] = MatPoly::constant(4, CMat::identity(4) * cdouble(minkowski(mu)));
  return op;
}

MatDiffOp1 op_J(int mu, int nu, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[nu] = xpoly(mu, 4, minkowski(nu));
  op.A[mu] = op.A[mu] - xpoly(nu, 4, minkowski(mu));
  op.B = MatPoly::constant(4, rep.spin(mu, nu));
  return op;
}

MatDiffOp1 op_D(double conformal_k, const GammaRep& rep) {
  (void)rep;
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  for (int rho = 0; rho < 4; ++rho) op.A[rho] = xpoly(rho, 4);
  op.B = MatPoly::constant(4, CMat::identity(4) * cdouble(conformal_k));
  return op;
}

MatDiffOp1 op_K(int mu, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  // 2 x_mu x_rho d_rho
  for (int rho = 0; rho < 4; ++rho) {
    MultiIndex k{0, 0, 0, 0};
    k[mu] += 1;
    k[rho] += 1;
    op.A[rho].add_term(k, CMat::identity(4) * cdouble(2.0));
  }
  // -(x.x) d^mu
  for (int rho = 0; rho < 4; ++rho) {
    MultiIndex k{0, 0, 0, 0};
    k[rho] = 2;
    op.A[mu].add_term(k, CMat::identity(4) * cdouble(-minkowski(mu) * minkowski(rho)));
  }
  // 2 k x_mu + 2 S_{mu nu} x^nu, conformal weight k = 3/2
  op.B.add_term(unit_idx(mu), CMat::identity(4) * cdouble(3.0));
  for (int nu = 0; nu < 4; ++nu) {
    if (nu == mu) continue;
    op.B.add_term(unit_idx(nu), rep.spin(mu, nu) * cdouble(2.0 * minkowski(nu)));
  }
  return op;
}

MatDiffOp1 gal_P0(const GammaRep& rep) {
  (void)rep;
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[0] = MatPoly::constant(4, CMat::identity(4));
  return op;
}

MatDiffOp1 gal_Pa(int a, const GammaRep& rep) {
  (void)rep;
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[a] = MatPoly::constant(4, CMat::identity(4));
  return op;
}

MatDiffOp1 gal_J(int a, int b, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[b] = xpoly(a, 4);
  op.A[a] = op.A[a] - xpoly(b, 4);
  op.B = MatPoly::constant(4, rep.g[a] * rep.g[b] * cdouble(-0.5));
  return op;
}

MatDiffOp1 gal_G(int a, double m, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[a] = xpoly(0, 4);  // t d_a
  op.B.add_term(unit_idx(a), CMat::identity(4) * (cdouble(2.0 * m) * I_UNIT));
  op.B.add_term({0, 0, 0, 0}, (rep.g[0] + rep.g4) * rep.g[a] * cdouble(0.5));
  return op;
}

MatDiffOp1 gal_M(double m, const GammaRep& rep) {
  (void)rep;
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.B = MatPoly::constant(4, CMat::identity(4) * (cdouble(2.0 * m) * I_UNIT));
  return op;
}

MatDiffOp1 gal_D(const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[0] = xpoly(0, 4, 2.0);
  for (int a = 1; a < 4; ++a) op.A[a] = xpoly(a, 4);
  op.B = MatPoly::constant(4, CMat::identity(4) * cdouble(2.0) -
                                  rep.g[0] * rep.g4 * cdouble(0.5));
  return op;
}

MatDiffOp1 gal_A(double m, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  // t^2 d_t + t x_a d_a
  op.A[0].add_term({2, 0, 0, 0}, CMat::identity(4));
  for (int a = 1; a < 4; ++a) {
    MultiIndex k{1, 0, 0, 0};
    k[a] += 1;
    op.A[a].add_term(k, CMat::identity(4));
  }
  // 2t - (t/2) g0 g4 + i m x_a x_a + (1/2)(g0+g4) g_a x_a
  op.B.add_term(unit_idx(0), CMat::identity(4) * cdouble(2.0) - rep.g[0] * rep.g4 * cdouble(0.5));
  for (int a = 1; a < 4; ++a) {
    MultiIndex k{0, 0, 0, 0};
    k[a] = 2;
    op.B.add_term(k, CMat::identity(4) * (cdouble(m) * I_UNIT));
    op.B.add_term(unit_idx(a), (rep.g[0] + rep.g4) * rep.g[a] * cdouble(0.5));
  }
  return op;
}

MatDiffOp1 op_omega(int mu, int nu, double m, const GammaRep& rep) {
  MatDiffOp1 op = MatDiffOp1::zero(4, 4);
  op.A[nu] = op.A[nu] + MatPoly::constant(4, rep.g[mu] * (cdouble(0.5) * I_UNIT * minkowski(nu)));
  op.A[mu] = op.A[mu] - MatPoly::constant(4, rep.g[nu] * (cdouble(0.5) * I_UNIT * minkowski(mu)));
  op.B = MatPoly::constant(4, rep.spin(mu, nu) * cdouble(m));
  return op;
}

namespace {

struct Builder {
  AlgebraCatalog cat;
  void add(const std::string& name, MatDiffOp1 op) {
    if (op.max_degree() > 2)
      throw std::invalid_argument("algebra generator " + name + " exceeds degree cap 2");
    cat.gen_names.push_back(name);
    cat.gens.push_back(std::move(op));
  }
  void expect(const std::string& gi, const std::string& gj,
              std::initializer_list<std::pair<std::string, cdouble>> rhs) {
    const int i = cat.index_of(gi), j = cat.index_of(gj);
    std::vector<AlgebraCatalog::TermRef> terms;
    for (const auto& [name, c] : rhs) terms.push_back({cat.index_of(name), c});
    cat.expected[{i, j}] = std::move(terms);
  }
};

std::string Pn(int mu) { return "P" + std::to_string(mu); }
std::string Jn(int mu, int nu) { return "J" + std::to_string(mu) + std::to_string(nu); }
std::string Kn(int mu) { return "K" + std::to_string(mu); }
std::string Gn(int a) { return "G" + std::to_string(a); }

/// expected table of AP(1,3): [P_mu,P_nu]=0, [P_mu,J_ab]=g_{mu a}P_b - g_{mu b}P_a,
/// [J_mn,J_ab]=g_{mb}J_na + g_{na}J_mb - g_{ma}J_nb - g_{nb}J_ma
void add_poincare_expectations(Builder& b) {
  auto J_or_swap = [&](int m, int n) -> std::pair<std::string, double> {
    if (m < n) return {Jn(m, n), 1.0};
    return {Jn(n, m), -1.0};
  };
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int bb = a + 1; bb < 4; ++bb) {
        std::vector<std::pair<std::string, cdouble>> rhs;
        if (mu == a) rhs.push_back({Pn(bb), minkowski(mu)});
        if (mu == bb) rhs.push_back({Pn(a), -minkowski(mu)});
        std::initializer_list<std::pair<std::string, cdouble>> dummy{};
        (void)dummy;
        const int i = b.cat.index_of(Pn(mu)), j = b.cat.index_of(Jn(a, bb));
        std::vector<AlgebraCatalog::TermRef> terms;
        for (const auto& [name, c] : rhs) terms.push_back({b.cat.index_of(name), c});
        b.cat.expected[{i, j}] = std::move(terms);
      }
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n)
      for (int a = 0; a < 4; ++a)
        for (int bb = a + 1; bb < 4; ++bb) {
          if (std::make_pair(m, n) >= std::make_pair(a, bb)) continue;
          std::vector<AlgebraCatalog::TermRef> terms;
          auto put = [&](int mm, int nn, double g) {
            if (g == 0.0 || mm == nn) return;
            auto [nm, sgn] = J_or_swap(mm, nn);
            terms.push_back({b.cat.index_of(nm), g * sgn});
          };
          put(n, a, (m == bb) ? minkowski(m) : 0.0);
          put(m, bb, (n == a) ? minkowski(n) : 0.0);
          put(n, bb, (m == a) ? -minkowski(m) : 0.0);
          put(m, a, (n == bb) ? -minkowski(n) : 0.0);
          const int i = b.cat.index_of(Jn(m, n)), j = b.cat.index_of(Jn(a, bb));
          b.cat.expected[{i, j}] = std::move(terms);
        }
}

}  // namespace

AlgebraCatalog catalog_poincare_spinor(const GammaRep& rep) {
  Builder b;
  b.cat.name = "AP13-spinor";
  for (int mu = 0; mu < 4; ++mu) b.add(Pn(mu), op_P(mu, rep));
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.add(Jn(m, n), op_J(m, n, rep));
  add_poincare_expectations(b);
  return b.cat;
}

AlgebraCatalog catalog_extended_poincare(const GammaRep& rep) {
  Builder b;
  b.cat.name = "AP13-extended";
  for (int mu = 0; mu < 4; ++mu) b.add(Pn(mu), op_P(mu, rep));
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.add(Jn(m, n), op_J(m, n, rep));
  b.add("D", op_D(1.5, rep));
  add_poincare_expectations(b);
  for (int mu = 0; mu < 4; ++mu) b.expect(Pn(mu), "D", {{Pn(mu), 1.0}});
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.expect(Jn(m, n), "D", {});
  return b.cat;
}

AlgebraCatalog catalog_conformal_spinor(const GammaRep& rep) {
  Builder b;
  b.cat.name = "AC13-spinor";
  for (int mu = 0; mu < 4; ++mu) b.add(Pn(mu), op_P(mu, rep));
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.add(Jn(m, n), op_J(m, n, rep));
  b.add("D", op_D(1.5, rep));
  for (int mu = 0; mu < 4; ++mu) b.add(Kn(mu), op_K(mu, rep));
  add_poincare_expectations(b);
  for (int mu = 0; mu < 4; ++mu) {
    b.expect(Pn(mu), "D", {{Pn(mu), 1.0}});
    b.expect(Kn(mu), "D", {{Kn(mu), -1.0}});
  }
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.expect(Jn(m, n), "D", {});
  // [P_mu, K_nu] = 2 g_{mu nu} D - 2 J_{mu nu}
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      std::vector<std::pair<std::string, cdouble>> rhs;
      if (mu == nu)
        rhs.push_back({"D", 2.0 * minkowski(mu)});
      else if (mu < nu)
        rhs.push_back({Jn(mu, nu), -2.0});
      else
        rhs.push_back({Jn(nu, mu), 2.0});
      const int i = b.cat.index_of(Pn(mu)), j = b.cat.index_of(Kn(nu));
      std::vector<AlgebraCatalog::TermRef> terms;
      for (const auto& [name, c] : rhs) terms.push_back({b.cat.index_of(name), c});
      b.cat.expected[{i, j}] = std::move(terms);
    }
  // [K_mu, J_ab] = g_{mu a} K_b - g_{mu b} K_a ; [K_mu, K_nu] = 0
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int bb = a + 1; bb < 4; ++bb) {
        std::vector<AlgebraCatalog::TermRef> terms;
        if (mu == a) terms.push_back({b.cat.index_of(Kn(bb)), minkowski(mu)});
        if (mu == bb) terms.push_back({b.cat.index_of(Kn(a)), -minkowski(mu)});
        b.cat.expected[{b.cat.index_of(Kn(mu)), b.cat.index_of(Jn(a, bb))}] = std::move(terms);
      }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      b.expect(Kn(mu), Kn(nu), {});
  return b.cat;
}

AlgebraCatalog catalog_galilei(double m, const GammaRep& rep) {
  Builder b;
  b.cat.name = "AG2-galilei";
  b.add("P0", gal_P0(rep));
  for (int a = 1; a < 4; ++a) b.add(Pn(a), gal_Pa(a, rep));
  b.add(Jn(1, 2), gal_J(1, 2, rep));
  b.add(Jn(1, 3), gal_J(1, 3, rep));
  b.add(Jn(2, 3), gal_J(2, 3, rep));
  for (int a = 1; a < 4; ++a) b.add(Gn(a), gal_G(a, m, rep));
  b.add("M", gal_M(m, rep));
  b.add("D", gal_D(rep));
  b.add("A", gal_A(m, rep));

  auto Jname = [&](int a, int bb) { return Jn(std::min(a, bb), std::max(a, bb)); };
  auto Jsign = [&](int a, int bb) { return a < bb ? 1.0 : -1.0; };

  for (int a = 1; a < 4; ++a) {
    b.expect("P0", Pn(a), {});
    b.expect("P0", Gn(a), {{Pn(a), 1.0}});
    b.expect(Gn(a), "M", {});
    b.expect(Pn(a), "M", {});
    b.expect(Gn(a), "D", {{Gn(a), -1.0}});
    b.expect(Pn(a), "D", {{Pn(a), 1.0}});
    b.expect(Pn(a), "A", {{Gn(a), 1.0}});
    b.expect(Gn(a), "A", {});
    for (int c = a + 1; c < 4; ++c) {
      b.expect(Pn(a), Pn(c), {});
      b.expect(Gn(a), Gn(c), {});
      b.expect(Pn(a), Gn(c), {});
      b.expect(Pn(c), Gn(a), {});
    }
    b.expect(Pn(a), Gn(a), {{"M", 1.0}});
  }
  b.expect("P0", "M", {});
  b.expect("P0", "D", {{"P0", 2.0}});
  b.expect("P0", "A", {{"D", 1.0}});
  b.expect("M", "D", {});
  b.expect("M", "A", {});
  b.expect("D", "A", {{"A", 2.0}});
  // rotations
  const int JJ[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (auto [a, bb] : JJ) {
    b.expect("P0", Jname(a, bb), {});
    b.expect("M", Jname(a, bb), {});
    b.expect("D", Jname(a, bb), {});
    b.expect("A", Jname(a, bb), {});
    for (int c = 1; c < 4; ++c) {
      std::vector<std::pair<std::string, cdouble>> rp, rg;
      if (c == a) {
        rp.push_back({Pn(bb), 1.0});
        rg.push_back({Gn(bb), 1.0});
      }
      if (c == bb) {
        rp.push_back({Pn(a), -1.0});
        rg.push_back({Gn(a), -1.0});
      }
      const int i1 = b.cat.index_of(Pn(c)), j1 = b.cat.index_of(Jname(a, bb));
      std::vector<AlgebraCatalog::TermRef> t1, t2;
      for (const auto& [nm, cc] : rp) t1.push_back({b.cat.index_of(nm), cc});
      b.cat.expected[{i1, j1}] = std::move(t1);
      const int i2 = b.cat.index_of(Gn(c));
      for (const auto& [nm, cc] : rg) t2.push_back({b.cat.index_of(nm), cc});
      b.cat.expected[{i2, j1}] = std::move(t2);
    }
  }
  // [J_ab, J_cd] = d_bc J_ad - d_ac J_bd + d_ad J_bc - d_bd J_ac
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = u + 1; v < 3; ++v) {
      const int a = JJ[u][0], bb = JJ[u][1], c = JJ[v][0], dd = JJ[v][1];
      std::vector<AlgebraCatalog::TermRef> terms;
      auto put = [&](int mm, int nn, double coeff) {
        if (coeff == 0.0 || mm == nn) return;
        terms.push_back({b.cat.index_of(Jname(mm, nn)), coeff * Jsign(mm, nn)});
      };
      put(a, dd, bb == c ? 1.0 : 0.0);
      put(bb, dd, a == c ? -1.0 : 0.0);
      put(bb, c, a == dd ? 1.0 : 0.0);
      put(a, c, bb == dd ? -1.0 : 0.0);
      b.cat.expected[{b.cat.index_of(Jname(a, bb)), b.cat.index_of(Jname(c, dd))}] =
          std::move(terms);
    }
  return b.cat;
}

AlgebraCatalog catalog_poincare_scalar() {
  Builder b;
  b.cat.name = "AP13-scalar";
  auto scalar_P = [](int mu) {
    MatDiffOp1 op = MatDiffOp1::zero(4, 1);
    op.A[mu] = MatPoly::constant(4, CMat::identity(1) * cdouble(minkowski(mu)));
    return op;
  };
  auto scalar_J = [&](int mu, int nu) {
    MatDiffOp1 op = MatDiffOp1::zero(4, 1);
    op.A[nu] = MatPoly::monomial(4, 1, unit_idx(mu), minkowski(nu));
    op.A[mu] = op.A[mu] - MatPoly::monomial(4, 1, unit_idx(nu), minkowski(mu));
    return op;
  };
  for (int mu = 0; mu < 4; ++mu) b.add(Pn(mu), scalar_P(mu));
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.add(Jn(m, n), scalar_J(m, n));
  add_poincare_expectations(b);
  return b.cat;
}

AlgebraCatalog catalog_yme_conformal() {
  // 12 field components (color a = 0..2) x (Lorentz mu = 0..3), index a*4+mu.
  const std::size_t D = 12;
  auto kron_lorentz = [&](const std::function<cdouble(int, int)>& entry) {
    CMat m(D, D);
    for (int a = 0; a < 3; ++a)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) m(a * 4 + mu, a * 4 + nu) = entry(mu, nu);
    return m;
  };

  Builder b;
  b.cat.name = "AC13-yme";
  // P_mu = d_mu (lower index)
  for (int mu = 0; mu < 4; ++mu) {
    MatDiffOp1 op = MatDiffOp1::zero(4, D);
    op.A[mu] = MatPoly::constant(4, CMat::identity(D));
    b.add(Pn(mu), op);
  }
  // J_ab = x^a d_b - x^b d_a + matrix; matrix part of the M1 operator is the
  // negative of the Lie eta: (B A)_{mu} = -(A^{a} delta ...), see below
  for (int al = 0; al < 4; ++al)
    for (int be = al + 1; be < 4; ++be) {
      MatDiffOp1 op = MatDiffOp1::zero(4, D);
      op.A[be] = MatPoly::monomial(4, D, unit_idx(al), minkowski(al));
      op.A[al] = op.A[al] - MatPoly::monomial(4, D, unit_idx(be), minkowski(be));
      // Lie: eta_{(mu)} = A^{alpha} d_{mu beta} - A^{beta} d_{mu alpha}
      //   -> eta matrix M_{mu nu} = g_{alpha alpha} d_{nu alpha} d_{mu beta}
      //                            - g_{beta beta} d_{nu beta} d_{mu alpha}
      CMat M = kron_lorentz([&](int mu, int nu) -> cdouble {
        double v = 0.0;
        if (nu == al && mu == be) v += minkowski(al);
        if (nu == be && mu == al) v -= minkowski(be);
        return v;
      });
      op.B = MatPoly::constant(4, -M);
      b.add(Jn(al, be), op);
    }
  // D = x_mu d_mu - A (Lie) -> operator matrix part +I
  {
    MatDiffOp1 op = MatDiffOp1::zero(4, D);
    for (int rho = 0; rho < 4; ++rho) op.A[rho] = MatPoly::monomial(4, D, unit_idx(rho), 1.0);
    op.B = MatPoly::constant(4, CMat::identity(D));
    b.add("D", op);
  }
  // K_mu = 2 x^mu (x_rho d_rho) - (x.x) d_mu + eta-part
  for (int mu = 0; mu < 4; ++mu) {
    MatDiffOp1 op = MatDiffOp1::zero(4, D);
    for (int rho = 0; rho < 4; ++rho) {
      MultiIndex k{0, 0, 0, 0};
      k[mu] += 1;
      k[rho] += 1;
      op.A[rho].add_term(k, CMat::identity(D) * cdouble(2.0 * minkowski(mu)));
    }
    for (int rho = 0; rho < 4; ++rho) {
      MultiIndex k{0, 0, 0, 0};
      k[rho] = 2;
      op.A[mu].add_term(k, CMat::identity(D) * cdouble(-minkowski(rho)));
    }
    // Lie eta_{(rho)} = -2 x^mu A_rho + 2 g_mm A_mu x_rho
    //                   - 2 g_mm d_{rho mu} sum_nu g_nn x_nu A_nu
    // operator B = -eta, linear in x
    for (int nu = 0; nu < 4; ++nu) {
      CMat M(D, D);
      for (int a = 0; a < 3; ++a)
        for (int rho = 0; rho < 4; ++rho)
          for (int sg = 0; sg < 4; ++sg) {
            double v = 0.0;
            // coefficient of x_nu in eta_{(rho)} w.r.t. A_sg
            if (nu == mu && sg == rho) v += -2.0 * minkowski(mu);
            if (sg == mu && rho == nu) v += 2.0 * minkowski(mu);
            if (rho == mu && sg == nu) v += -2.0 * minkowski(nu);
            if (v != 0.0) M(a * 4 + rho, a * 4 + sg) += v;
          }
      if (M.max_abs() > 0.0) op.B.add_term(unit_idx(nu), -M);
    }
    b.add(Kn(mu), op);
  }

  add_poincare_expectations(b);
  for (int mu = 0; mu < 4; ++mu) {
    b.expect(Pn(mu), "D", {{Pn(mu), 1.0}});
    b.expect(Kn(mu), "D", {{Kn(mu), -1.0}});
  }
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) b.expect(Jn(m, n), "D", {});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      std::vector<AlgebraCatalog::TermRef> terms;
      if (mu == nu)
        terms.push_back({b.cat.index_of("D"), 2.0 * minkowski(mu)});
      else if (mu < nu)
        terms.push_back({b.cat.index_of(Jn(mu, nu)), -2.0});
      else
        terms.push_back({b.cat.index_of(Jn(nu, mu)), 2.0});
      b.cat.expected[{b.cat.index_of(Pn(mu)), b.cat.index_of(Kn(nu))}] = std::move(terms);
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int bb = a + 1; bb < 4; ++bb) {
        std::vector<AlgebraCatalog::TermRef> terms;
        if (mu == a) terms.push_back({b.cat.index_of(Kn(bb)), minkowski(mu)});
        if (mu == bb) terms.push_back({b.cat.index_of(Kn(a)), -minkowski(mu)});
        b.cat.expected[{b.cat.index_of(Kn(mu)), b.cat.index_of(Jn(a, bb))}] = std::move(terms);
      }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) b.expect(Kn(mu), Kn(nu), {});
  return b.cat;
}

std::vector<std::string> algebra_catalog_names() {
  return {"AP13-spinor", "AP13-extended", "AC13-spinor", "AG2-galilei", "AP13-scalar",
          "AC13-yme"};
}

AlgebraCatalog build_algebra_catalog(const std::string& name) {
  static const GammaRep std_rep = build_rep("standard");
  if (name == "AP13-spinor") return catalog_poincare_spinor(std_rep);
  if (name == "AP13-extended") return catalog_extended_poincare(std_rep);
  if (name == "AC13-spinor") return catalog_conformal_spinor(std_rep);
  if (name == "AG2-galilei") return catalog_galilei(1.0, std_rep);
  if (name == "AP13-scalar") return catalog_poincare_scalar();
  if (name == "AC13-yme") return catalog_yme_conformal();
  throw std::invalid_argument("unknown algebra catalog: " + name);
}

}  // namespace exsol
