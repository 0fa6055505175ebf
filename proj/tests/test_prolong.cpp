#include <catch_amalgamated.hpp>

#include <map>

#include "support.hpp"

using crjet::ExactMatrix;
using crjet::GaussianRational;
using crjet::QuadricModel;
using crjet::Rational;

namespace {

using Dims = std::map<int, std::size_t>;

Dims dims_from(int lo, std::vector<std::size_t> v) {
  Dims out;
  for (std::size_t i = 0; i < v.size(); ++i) out[lo + static_cast<int>(i)] = v[i];
  return out;
}

// Im w = sum eps_a |z_a|^2
QuadricModel hyperquadric(const std::vector<int>& signs) {
  const std::size_t n = signs.size();
  ExactMatrix h(n, n);
  for (std::size_t a = 0; a < n; ++a) h(a, a) = GaussianRational(signs[a]);
  return {n, 1, {h}};
}

void check_structure(const crjet::ProlongationResult& r) {
  CHECK(crjet::check_grading(r.algebra));
  const auto jac = crjet::check_jacobi(r.algebra);
  CHECK(jac.ok());
  CHECK(jac.triples > 0);
  // the identity pair acts on g_d by -d
  const auto e = crjet::identity_pair(r);
  for (std::size_t b = 0; b < r.algebra.dimension(); ++b) {
    const auto v = r.algebra.bracket(e, crjet::SparseVector<Rational>{{b, Rational(1)}});
    const int d = r.algebra.degree_of(b);
    if (d == 0) {
      CHECK(v.empty());
    } else {
      REQUIRE(v.size() == 1);
      CHECK(v[0].first == b);
      CHECK(v[0].second == Rational(-d));
    }
  }
}

}  // namespace

TEST_CASE("jet order formula", "[prolong]") {
  CHECK(crjet::jet_order(0) == 1);
  CHECK(crjet::jet_order(2) == 2);
  CHECK(crjet::jet_order(4) == 3);
  CHECK(crjet::jet_order(6) == 4);
  CHECK(crjet::jet_order(7) == 4);
  CHECK_THROWS_AS(crjet::jet_order(-1), crjet::DegreeError);
}

TEST_CASE("steps must be taken in order", "[prolong]") {
  crjet::Prolongation p(crjet::build_levi_tanaka(crjet::make_heisenberg().model));
  CHECK_THROWS_AS(crjet::prolong_step(p, 1), crjet::SequencingError);
  CHECK_THROWS_AS(crjet::prolong_step(p, 0), crjet::SequencingError);
  CHECK_THROWS_AS(p.space(0), crjet::SequencingError);
  p.step(0);
  CHECK_THROWS_AS(crjet::prolong_step(p, 2), crjet::SequencingError);
  CHECK(crjet::prolong_step(p, 1).dim() == 2);
  CHECK(crjet::prolong_step(p, 2).dim() == 1);
  CHECK(crjet::prolong_step(p, 3).dim() == 0);
}

TEST_CASE("g0 of the Heisenberg model is u(1) plus grading", "[prolong]") {
  const auto g0 = crjet::compute_g0(crjet::build_levi_tanaka(crjet::make_heisenberg().model));
  CHECK(g0.dim() == 2);
  CHECK(g0.degree == 0);
}

TEST_CASE("Heisenberg prolongation is su(2,1)", "[prolong]") {
  const auto r = crjet::prolong_full(crjet::make_heisenberg().model);
  CHECK(r.dims == dims_from(-2, {1, 2, 2, 2, 1}));
  CHECK(r.algebra.dimension() == 8);
  CHECK(r.top_degree == 2);
  CHECK(r.jet_order == 2);
  CHECK(r.terminated);
  check_structure(r);
}

TEST_CASE("hyperquadrics of every signature give su(p+1, q+1)", "[prolong][property]") {
  testing::Gen g(41);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<int> signs(n);
    for (auto& s : signs) s = g.coin() ? 1 : -1;
    const auto r = crjet::prolong_full(hyperquadric(signs));
    CHECK(r.dims == dims_from(-2, {1, 2 * n, n * n + 1, 2 * n, 1}));
    CHECK(r.algebra.dimension() == (n + 2) * (n + 2) - 1);
    check_structure(r);
  }
}

TEST_CASE("the prolongation does not depend on the basis of equations", "[prolong][property]") {
  const auto m = crjet::make_codim4().model;
  const auto base = crjet::prolong_full(m).dims;
  testing::Gen g(42);
  // replace H_1 by H_1 + c H_2 and permute
  for (int t = 0; t < 2; ++t) {
    auto hs = m.hermitian();
    hs[0] += hs[1] * GaussianRational(Rational(g.integer(1, 3)));
    std::swap(hs[2], hs[3]);
    CHECK(crjet::prolong_full(QuadricModel(m.n(), m.k(), hs)).dims == base);
  }
}

TEST_CASE("codim5 regression", "[prolong]") {
  const auto r = crjet::prolong_full(crjet::make_codim5().model);
  CHECK(r.dims == dims_from(-2, {5, 8, 17, 20, 21, 16, 8, 4, 1}));
  CHECK(r.algebra.dimension() == 100);
  CHECK(r.top_degree == 6);
  CHECK(r.jet_order == 4);
  check_structure(r);
}

TEST_CASE("codim4 regression", "[prolong]") {
  const auto r = crjet::prolong_full(crjet::make_codim4().model);
  CHECK(r.dims == dims_from(-2, {4, 12, 23, 24, 15, 6, 1}));
  CHECK(r.algebra.dimension() == 85);
  CHECK(r.top_degree == 4);
  CHECK(r.jet_order == 3);
  check_structure(r);
}

TEST_CASE("adding a sphere factor adds su(2,1)", "[prolong]") {
  const auto r = crjet::prolong_full(crjet::extend_codim(crjet::make_codim5(), 1).model);
  CHECK(r.dims == dims_from(-2, {6, 10, 19, 22, 22, 16, 8, 4, 1}));
  CHECK(r.algebra.dimension() == 108);
  CHECK(r.top_degree == 6);
  const auto h = crjet::prolong_full(crjet::extend_codim(crjet::make_heisenberg(), 1).model);
  CHECK(h.dims == dims_from(-2, {2, 4, 4, 4, 2}));
}

TEST_CASE("a low cap reports nontermination", "[prolong]") {
  CHECK_THROWS_AS(crjet::prolong_full(crjet::make_codim5().model, 3), crjet::NonterminationError);
  CHECK_THROWS_AS(crjet::prolong_full(crjet::make_heisenberg().model, 2), crjet::NonterminationError);
  CHECK_NOTHROW(crjet::prolong_full(crjet::make_heisenberg().model, 3));
}

TEST_CASE("su_family(2) matches codim5 after reordering", "[prolong]") {
  const auto su = crjet::make_su_family(2);
  const auto moved = crjet::permute_equations(su.model, crjet::su2_to_codim5_equations());
  CHECK(moved == crjet::make_codim5().model);
  CHECK(crjet::prolong_full(su.model).dims == crjet::prolong_full(crjet::make_codim5().model).dims);
}
