#include <catch_amalgamated.hpp>

#include "support.hpp"

// The graded dimensions of the prolongation against a direct count of
// polynomial tangent fields of each weight, solved at sampled model points.

using crjet::ExactMatrix;
using crjet::GaussianRational;
using crjet::QuadricModel;

namespace {

void compare(const QuadricModel& m, int max_weight, std::uint64_t seed) {
  const auto r = crjet::prolong_full(m);
  testing::Gen g(seed);
  for (int d = -2; d <= max_weight; ++d) {
    INFO("weight " << d);
    CHECK(testing::hol_dimension(m, d, g) == r.algebra.dim(d));
  }
}

}  // namespace

TEST_CASE("Heisenberg sphere", "[brute]") { compare(crjet::make_heisenberg().model, 4, 81); }

TEST_CASE("split signature hyperquadric", "[brute]") {
  const GaussianRational o(0), l(1);
  compare(QuadricModel(2, 1, {ExactMatrix{{l, o}, {o, -l}}}), 3, 82);
}

TEST_CASE("definite hyperquadric in C^3", "[brute]") {
  compare(QuadricModel(2, 1, {ExactMatrix::identity(2)}), 3, 83);
}

TEST_CASE("product of two spheres", "[brute]") {
  compare(crjet::extend_codim(crjet::make_heisenberg(), 1).model, 3, 84);
}

TEST_CASE("codimension two with paired forms", "[brute]") {
  compare(QuadricModel(2, 2, {crjet::detail::real_pair(2, 0, 1), crjet::detail::imag_pair(2, 0, 1)}), 3, 85);
}

TEST_CASE("codim5 in low weights", "[brute]") {
  const auto m = crjet::make_codim5().model;
  const auto r = crjet::prolong_full(m);
  testing::Gen g(86);
  for (int d = -2; d <= 0; ++d) {
    INFO("weight " << d);
    CHECK(testing::hol_dimension(m, d, g) == r.algebra.dim(d));
  }
}
