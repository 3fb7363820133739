// Explicit solutions of the d'Alembert-Hamilton pair box u = eps N / u,
// du.du = eps, for N in {0,1,2,3} and both signs of eps.
#include "catalog_util.hpp"

namespace exsol {

using namespace detail;

namespace {

FieldFn scalar_field(std::function<double(const Vec4&)> f) {
  return FieldFn{4, 1, [f = std::move(f)](const Vec4& x) { return CVec{cdouble(f(x))}; }};
}

SolutionEntry dah_entry(const std::string& id, const std::string& prov, double eps, int N) {
  SolutionEntry e;
  e.id = id;
  e.equation = "dah-pair";
  e.tier = "core";
  e.provenance = prov;
  e.build = [eps, N](const Overrides&) {
    SolutionInstance inst;
    inst.eq_params.scalars = {{"eps", eps}, {"N", double(N)}};
    inst.domain = [](const Vec4&) { return true; };
    return inst;
  };
  e.randomize = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    Overrides ov;
    for (const char* s : {"t0", "t1", "t2", "t3"}) ov.scalars[s] = u(rng);
    return ov;
  };
  return e;
}

Vec4 shifted(const Overrides& ov, const Vec4& x) {
  return {x[0] + get_scalar(ov, "t0", 0.0), x[1] + get_scalar(ov, "t1", 0.0),
          x[2] + get_scalar(ov, "t2", 0.0), x[3] + get_scalar(ov, "t3", 0.0)};
}

}  // namespace

void register_dah(std::vector<SolutionEntry>& v) {
  {
    SolutionEntry e = dah_entry("dah/t", "sec2.1 eq84", 1.0, 0);
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      inst.field = scalar_field([ov](const Vec4& x) { return shifted(ov, x)[0]; });
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/tz", "sec2.1 eq85", 1.0, 1);
    e.box = {{{1.2, 2.2}, {-1.0, 1.0}, {-1.0, 1.0}, {-0.5, 0.5}}};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      inst.field = scalar_field([ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return std::sqrt(x[0] * x[0] - x[3] * x[3]);
      });
      inst.domain = [ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return x[0] * x[0] - x[3] * x[3] > 0.15;
      };
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/txz", "sec2.1 eq86", 1.0, 2);
    e.box = {{{1.7, 2.7}, {-0.6, 0.6}, {-1.0, 1.0}, {-0.5, 0.5}}};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      inst.field = scalar_field([ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return std::sqrt(x[0] * x[0] - x[1] * x[1] - x[3] * x[3]);
      });
      inst.domain = [ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return x[0] * x[0] - x[1] * x[1] - x[3] * x[3] > 0.15;
      };
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/minkowski", "sec2.1 eq87", 1.0, 3);
    e.box = {{{2.0, 3.0}, {-0.6, 0.6}, {-0.6, 0.6}, {-0.6, 0.6}}};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      inst.field = scalar_field([ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return std::sqrt(mdot(x, x));
      });
      inst.domain = [ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return mdot(x, x) > 0.15;
      };
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/wave", "sec2.1 eq88 line1", -1.0, 0);
    e.profile_slots = {"W1", "W2"};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      const Profile1D W1 = get_profile(ov, "W1", default_profile(0));
      const Profile1D W2 = get_profile(ov, "W2", default_profile(2));
      inst.field = scalar_field([W1, W2](const Vec4& x) {
        const double xi = x[0] + x[3];
        const double w1 = W1(xi).real();
        return x[1] * std::cos(w1) + x[2] * std::sin(w1) + W2(xi).real();
      });
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/cylwave", "sec2.1 eq89", -1.0, 1);
    e.profile_slots = {"W1", "W2"};
    e.box = {{{-0.8, 0.8}, {1.4, 2.6}, {1.4, 2.6}, {-0.8, 0.8}}};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      const Profile1D W1 = get_profile(ov, "W1", default_profile(0));
      const Profile1D W2 = get_profile(ov, "W2", default_profile(2));
      auto r2 = [W1, W2](const Vec4& x) {
        const double xi = x[0] + x[3];
        const double u1 = x[1] + W1(xi).real(), u2 = x[2] + W2(xi).real();
        return u1 * u1 + u2 * u2;
      };
      inst.field = scalar_field([r2](const Vec4& x) { return std::sqrt(r2(x)); });
      inst.domain = [r2](const Vec4& x) { return r2(x) > 0.3; };
      return inst;
    };
    v.push_back(e);
  }
  {
    SolutionEntry e = dah_entry("dah/r3", "sec2.1 eq90 final", -1.0, 2);
    e.box = {{{-0.8, 0.8}, {1.2, 2.2}, {-1.0, 1.0}, {-0.6, 0.6}}};
    auto base = e.build;
    e.build = [base](const Overrides& ov) {
      auto inst = base(ov);
      inst.field = scalar_field([ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
      });
      inst.domain = [ov](const Vec4& xx) {
        const Vec4 x = shifted(ov, xx);
        return x[1] * x[1] + x[2] * x[2] + x[3] * x[3] > 0.3;
      };
      return inst;
    };
    v.push_back(e);
  }
}

}  // namespace exsol
