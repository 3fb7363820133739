#pragma once

#include "exsol/verify.hpp"
#include "exsol/specfun.hpp"

#include <optional>
#include <random>

namespace exsol {

struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Overridable inputs of a catalog entry. Entries ignore slots they do not
/// declare; scalar constraints are re-solved inside build().
struct Overrides {
  std::map<std::string, double> scalars;
  std::optional<CVec> chi;
  std::map<std::string, Profile1D> profiles;
  std::optional<std::function<double(double, double, double)>> harmonic;
  std::optional<std::function<cdouble(cdouble)>> analytic;
};

/// A bound field ready for verification.
struct SolutionInstance {
  FieldFn field;
  EqParams eq_params;
  std::function<bool(const Vec4&)> domain;  // admissible sampling points
  std::string note;
};

struct SolutionEntry {
  std::string id;
  std::string equation;
  std::string tier;        // "core" | "extended"
  std::string provenance;  // book label, e.g. "sec2.4 psi1"
  double tol = 1e-6;
  std::array<std::pair<double, double>, 4> box{
      {{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  std::vector<std::string> profile_slots;  // names of free profiles, if any
  std::function<SolutionInstance(const Overrides&)> build;
  /// draws admissible random parameters (scalars and chi) for the
  /// parameter-freedom property
  std::function<Overrides(std::mt19937_64&)> randomize;
};

struct CatalogFilter {
  std::string equation;  // empty = any
  std::string tier;      // empty = any
  std::string provenance_substr;
};

const std::vector<SolutionEntry>& solution_catalog();
std::vector<const SolutionEntry*> list_solutions(const CatalogFilter& f = {});
const SolutionEntry& get_solution(const std::string& id);

/// Verify one entry with its default (or overridden) parameters.
ResidualReport verify_entry(const SolutionEntry& entry, const Overrides& ov, SampleSpec spec,
                            std::optional<double> tol_override = {});

}  // namespace exsol
