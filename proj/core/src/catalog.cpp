#include "exsol/catalog.hpp"
#include "catalog_util.hpp"

#include <algorithm>

namespace exsol {

namespace detail {

double Tetrad::check() const {
  double dev = 0.0;
  dev = std::max(dev, std::abs(mdot(a, a) - 1.0));
  dev = std::max(dev, std::abs(mdot(b, b) + 1.0));
  dev = std::max(dev, std::abs(mdot(c, c) + 1.0));
  dev = std::max(dev, std::abs(mdot(d, d) + 1.0));
  dev = std::max(dev, std::abs(mdot(a, b)));
  dev = std::max(dev, std::abs(mdot(a, c)));
  dev = std::max(dev, std::abs(mdot(a, d)));
  dev = std::max(dev, std::abs(mdot(b, c)));
  dev = std::max(dev, std::abs(mdot(b, d)));
  dev = std::max(dev, std::abs(mdot(c, d)));
  return dev;
}

Tetrad random_tetrad(std::mt19937_64& rng, double amplitude) {
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  // Lorentz matrix L = exp(G),  G^mu_nu = w^{mu alpha} g_{alpha nu} with
  // antisymmetric w; generated from one boost and one rotation parameter set
  double w01 = u(rng), w02 = u(rng), w03 = u(rng);
  double w12 = u(rng), w13 = u(rng), w23 = u(rng);
  double G[4][4] = {{0, w01, w02, w03},
                    {w01, 0, w12, w13},
                    {w02, -w12, 0, w23},
                    {w03, -w13, -w23, 0}};
  // exponentiate by scaling and squaring on the 4x4 real matrix
  CMat g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = G[i][j];
  CMat L = expm(g);
  auto apply = [&](const Vec4& v) {
    Vec4 r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      cdouble s = 0.0;
      for (int j = 0; j < 4; ++j) s += L(i, j) * v[j];
      r[i] = s.real();
    }
    return r;
  };
  Tetrad t;
  t.a = apply(t.a);
  t.b = apply(t.b);
  t.c = apply(t.c);
  t.d = apply(t.d);
  return t;
}

double get_scalar(const Overrides& ov, const std::string& name, double fallback) {
  auto it = ov.scalars.find(name);
  return it == ov.scalars.end() ? fallback : it->second;
}

CVec get_chi(const Overrides& ov, const CVec& fallback) {
  if (ov.chi) {
    if (ov.chi->size() != 4) throw ConstraintError("chi must have 4 components");
    return *ov.chi;
  }
  return fallback;
}

Profile1D get_profile(const Overrides& ov, const std::string& name, Profile1D fallback) {
  auto it = ov.profiles.find(name);
  return it == ov.profiles.end() ? fallback : it->second;
}

double chi_bar_chi(const GammaRep& rep, const CVec& chi, bool require_positive) {
  const double v = rep.sandwich(chi, chi).real();
  if (require_positive && !(v > 0.0))
    throw ConstraintError("constraint violated: bar(chi) chi > 0 (got " + std::to_string(v) + ")");
  return v;
}

double chi_w2(const GammaRep& rep, const CVec& chi) {
  double w2 = 0.0;
  for (const auto& c : chi) w2 += std::norm(c);
  w2 += rep.sandwich(chi, rep.g4, chi).real();
  return w2;
}

const GammaRep& rep_standard() {
  static const GammaRep rep = build_rep("standard");
  return rep;
}

const GammaRep& rep_chiral() {
  static const GammaRep rep = build_rep("chiral");
  return rep;
}

FieldFn spinor_field(std::function<CVec(const Vec4&)> f) {
  return FieldFn{4, 4, std::move(f)};
}

Profile1D default_profile(int which) {
  switch (which % 3) {
    case 0: return Profile1D{[](double z) { return cdouble(std::sin(z)); }};
    case 1: return Profile1D{[](double z) { return cdouble(z * z); }};
    default: return Profile1D{[](double z) { return cdouble(std::exp(-z * z)); }};
  }
}

}  // namespace detail

// Family registrars, one per source file.
void register_dirac_power(std::vector<SolutionEntry>&);
void register_dirac_extended(std::vector<SolutionEntry>&);
void register_dirac_massive(std::vector<SolutionEntry>&);
void register_galilei(std::vector<SolutionEntry>&);
void register_dah(std::vector<SolutionEntry>&);
void register_yme(std::vector<SolutionEntry>&);
void register_misc(std::vector<SolutionEntry>&);

const std::vector<SolutionEntry>& solution_catalog() {
  static const std::vector<SolutionEntry> cat = [] {
    std::vector<SolutionEntry> v;
    register_dirac_power(v);
    register_dirac_extended(v);
    register_dirac_massive(v);
    register_galilei(v);
    register_dah(v);
    register_yme(v);
    register_misc(v);
    std::sort(v.begin(), v.end(),
              [](const SolutionEntry& x, const SolutionEntry& y) { return x.id < y.id; });
    return v;
  }();
  return cat;
}

std::vector<const SolutionEntry*> list_solutions(const CatalogFilter& f) {
  std::vector<const SolutionEntry*> out;
  for (const auto& e : solution_catalog()) {
    if (!f.equation.empty() && e.equation != f.equation) continue;
    if (!f.tier.empty() && e.tier != f.tier) continue;
    if (!f.provenance_substr.empty() &&
        e.provenance.find(f.provenance_substr) == std::string::npos)
      continue;
    out.push_back(&e);
  }
  return out;
}

const SolutionEntry& get_solution(const std::string& id) {
  for (const auto& e : solution_catalog())
    if (e.id == id) return e;
  throw NotFoundError("unknown solution id: " + id);
}

ResidualReport verify_entry(const SolutionEntry& entry, const Overrides& ov, SampleSpec spec,
                            std::optional<double> tol_override) {
  const SolutionInstance inst = entry.build(ov);
  spec.box = entry.box;
  spec.domain = inst.domain;
  const auto& eq = get_equation(entry.equation);
  ResidualReport rep =
      verify_field(eq, inst.field, inst.eq_params, spec, tol_override.value_or(entry.tol));
  rep.solution = entry.id;
  if (!inst.note.empty()) rep.note = rep.note.empty() ? inst.note : rep.note + "; " + inst.note;
  return rep;
}

}  // namespace exsol
