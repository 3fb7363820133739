#pragma once

#include "exsol/jet.hpp"
#include "exsol/gamma.hpp"

#include <map>
#include <string>
#include <functional>
#include <stdexcept>

namespace exsol {

/// Fractional power of a value that must stay strictly positive.
struct BranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EqParams {
  std::map<std::string, double> scalars;
  const GammaRep* rep = nullptr;

  double get(const std::string& name, double fallback) const {
    auto it = scalars.find(name);
    return it == scalars.end() ? fallback : it->second;
  }
  double require(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw std::invalid_argument("missing equation parameter " + name);
    return it->second;
  }
};

struct EquationDef {
  std::string id;
  int n_vars = 4;
  int m = 4;        // field components
  int res_dim = 4;  // residual components
  bool needs_hess = false;
  std::function<CVec(const Jet2&, const EqParams&)> residual;
};

/// Registry lookup; throws std::invalid_argument for unknown ids.
const EquationDef& get_equation(const std::string& id);
std::vector<std::string> equation_ids();

/// Residual of the registered equation at x (FD jet of appropriate order).
CVec residual_at(const EquationDef& eq, const FieldFn& field, const EqParams& params,
                 const Vec4& x, double fd_step = 0.0);

/// s^p for s required positive (branch guard).
double positive_pow(double s, double p);

}  // namespace exsol
