#include <doctest.h>

#include "exsol/cmat.hpp"

#include <random>

using namespace exsol;

namespace {

CMat random_cmat(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cdouble(u(rng), u(rng));
  return m;
}

}  // namespace

TEST_CASE("matrix laws hold to 1e-14 relative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CMat a = random_cmat(rng, 4), b = random_cmat(rng, 4), c = random_cmat(rng, 4);
    // associativity
    CHECK(((a * b) * c - a * (b * c)).max_abs() < 1e-14 * a.max_abs() * b.max_abs() * c.max_abs() * 64);
    // distributivity
    CHECK((a * (b + c) - (a * b + a * c)).max_abs() < 1e-13);
    // adjoint anti-homomorphism
    CHECK(((a * b).adjoint() - b.adjoint() * a.adjoint()).max_abs() < 1e-14);
  }
}

TEST_CASE("inverse round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CMat a = random_cmat(rng, 4) + CMat::identity(4) * cdouble(2.0);
    CMat inv = a.inverse();
    CHECK(((a * inv) - CMat::identity(4)).max_abs() < 1e-12);
    CHECK(((inv * a) - CMat::identity(4)).max_abs() < 1e-12);
  }
}

TEST_CASE("rank of flattened matrices") {
  std::vector<CMat> mats;
  mats.push_back(CMat::identity(2));
  CMat b(2, 2, {0, 1, 0, 0});
  mats.push_back(b);
  mats.push_back(CMat::identity(2) * cdouble(3.0) + b * cdouble(-2.0));  // dependent
  CHECK(rank_of_flattened(mats) == 2);
}
