// Acceptance checks. Usage: acceptance N [N ...]; with no arguments runs 1-10.
// Prints one PASS/FAIL line per criterion, preceded by detail lines.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

using crjet::GaussianRational;
using crjet::Rational;
using crjet::SparseVector;
using crjet::VectorField;

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}

  void check(const std::string& what, bool ok) {
    std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << what << "\n";
    ok_ = ok_ && ok;
  }
  void info(const std::string& what) { std::cout << "  [info] " << what << "\n"; }
  bool ok() const { return ok_; }
  int id() const { return id_; }

 private:
  int id_;
  bool ok_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string dims_str(const std::map<int, std::size_t>& dims) {
  std::string s = "(";
  for (const auto& [d, v] : dims) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + ")";
}

bool in_span(const std::vector<VectorField>& basis, const VectorField& f) {
  return crjet::real_span_coordinates(basis, f).has_value();
}

void criterion1(Criterion& c) {
  const auto m = crjet::make_codim5().model;
  const auto rep = crjet::validate(m);
  c.check("all five matrices Hermitian", rep.all_hermitian() && rep.hermitian.size() == 5);
  c.check("linearly independent over R", rep.independent);
  c.check("trivial common kernel", rep.trivial_common_kernel);
  const auto t = crjet::tumanov_search(m, 2);
  c.check("tumanov_search returns (0,0,1,0,0)", t && *t == std::vector<long>{0, 0, 1, 0, 0});
  c.check("det(H3) = 1", t && crjet::combination_determinant(m, *t) == GaussianRational(1));
}

void criterion2(Criterion& c) {
  const auto m = crjet::make_codim5().model;
  std::vector<crjet::Poly> p;
  for (std::size_t j = 0; j < 5; ++j) p.push_back(m.levi_form(j));
  const crjet::Poly q = p[0] * p[0] + p[1] * p[1] - p[3] * p[4] * GaussianRational(4);
  c.check("P1^2 + P2^2 - 4 P4 P5 = 0", q.is_zero());
}

void criterion3(Criterion& c) {
  const auto e = crjet::make_codim5();
  const auto ok = crjet::check_lemma_identities(e.model, e.field("X"), e.field("Y"), e.field("Z"), e.field("U"));
  for (std::size_t i = 0; i < ok.size(); ++i) c.check("identity " + std::to_string(i + 1), ok[i]);
  for (const char* f : {"X", "Y", "Z", "U"})
    c.check(std::string(f) + " is tangent", crjet::verify_hol(e.field(f), e.model).holds());
}

void criterion4(Criterion& c) {
  const auto e = crjet::make_codim5();
  const VectorField& t = e.field("T");
  c.check("T is tangent", crjet::verify_hol(t, e.model).holds());
  const auto w = crjet::weighted_degree(t);
  c.check("weighted_degree(T) = 6 (computed: " + (w ? std::to_string(*w) : std::string("inhomogeneous")) + ")",
          w == 6);
  c.check("ordinary_vanishing_order(T) = 3", crjet::ordinary_vanishing_order(t) == 3);
  c.check("T certifies a vanishing 2-jet", crjet::certify_jet_counterexample(t, e.model, 2));
}

void criterion5(Criterion& c) {
  const auto e = crjet::make_codim5();
  const auto r = crjet::prolong_full(e.model);
  c.info("dims " + dims_str(r.dims) + ", total " + std::to_string(r.algebra.dimension()));
  c.check("terminated", r.terminated);
  c.check("top degree 6", r.top_degree == 6);
  c.check("g6 != 0 and g7 = 0", r.algebra.dim(6) > 0 && r.algebra.dim(7) == 0);
  c.check("jet_order 4", r.jet_order == 4);
  const crjet::ComplexifiedAlgebra cx(r);
  const VectorField& t = e.field("T");
  c.check("T in span of realize_basis(6)", in_span(crjet::realize_basis(cx, 6), t));
  const auto w = crjet::weighted_degree(t);
  if (w && *w >= -2 && *w <= r.top_degree)
    c.info("T in span of realize_basis(" + std::to_string(*w) + "): " +
           (in_span(crjet::realize_basis(cx, *w), t) ? "yes" : "no"));
  const auto su = crjet::make_su_family(2);
  const VectorField s = crjet::permute_w(su.field("S"), crjet::su2_to_codim5_equations());
  c.info(std::string("weight 6 field of su_family(2), relabeled, in span of realize_basis(6): ") +
         (in_span(crjet::realize_basis(cx, 6), s) ? "yes" : "no"));
}

void criterion6(Criterion& c) {
  const auto e = crjet::make_codim4();
  const auto r = crjet::prolong_full(e.model);
  c.info("dims " + dims_str(r.dims) + ", total " + std::to_string(r.algebra.dimension()));
  const VectorField& f = e.field("F");
  c.check("displayed field is tangent", crjet::verify_hol(f, e.model).holds());
  c.check("top degree 4", r.top_degree == 4);
  c.check("jet_order 3", r.jet_order == 3);
  const auto basis = crjet::realize_basis(r, 4);
  c.check("displayed field in span of realize_basis(4)", in_span(basis, f));
  const VectorField& g = e.field("F_relabeled");
  c.info(std::string("field with w2 -> w3, w3 -> -w2: tangent ") +
         (crjet::verify_hol(g, e.model).holds() ? "yes" : "no") + ", in span " + (in_span(basis, g) ? "yes" : "no"));
}

void criterion7(Criterion& c) {
  const auto m = crjet::make_heisenberg().model;
  const auto r = crjet::prolong_full(m);
  c.check("dims (1,2,2,2,1), computed " + dims_str(r.dims),
          r.dims == std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
  c.check("total dimension 8 = dim su(2,1) = (n+2)^2 - 1", r.algebra.dimension() == 8);
  testing::Gen g(7);
  bool agree = true;
  std::size_t total = 0;
  for (int d = -2; d <= 4; ++d) {
    const std::size_t b = testing::hol_dimension(m, d, g);
    total += b;
    agree = agree && b == r.algebra.dim(d);
  }
  c.check("brute-force tangent field count agrees in weights -2..4 (total " + std::to_string(total) + ")",
          agree && total == 8);
}

void criterion8(Criterion& c) {
  c.check("make_so_family(3) == make_codim4()", crjet::make_so_family(3).model == crjet::make_codim4().model);
  c.check("make_su_family(2) == make_codim5() after reordering equations",
          crjet::permute_equations(crjet::make_su_family(2).model, crjet::su2_to_codim5_equations()) ==
              crjet::make_codim5().model);
}

void criterion9(Criterion& c) {
  const auto r = crjet::prolong_full(crjet::extend_codim(crjet::make_codim5(), 1).model);
  c.info("dims " + dims_str(r.dims) + ", total " + std::to_string(r.algebra.dimension()));
  c.check("top degree 6", r.top_degree == 6);
  c.check("jet_order 4", r.jet_order == 4);
}

void properties(Criterion& c, const crjet::CatalogEntry& e) {
  const auto r = crjet::prolong_full(e.model);
  const auto& g = r.algebra;
  const auto jac = crjet::check_jacobi(g);
  c.check(e.name + ": Jacobi on " + std::to_string(jac.triples) + " triples", jac.ok());
  const crjet::ComplexifiedAlgebra cx(r);
  std::vector<VectorField> fields;
  for (std::size_t t = 0; t < g.dimension(); ++t)
    fields.push_back(crjet::realize(SparseVector<Rational>{{t, Rational(1)}}, g.degree_of(t), cx));
  bool tangent = true;
  bool euler = true;
  const VectorField eu = crjet::euler_field(r.n(), r.k());
  for (std::size_t t = 0; t < fields.size(); ++t) {
    tangent = tangent && crjet::verify_hol(fields[t], e.model).holds();
    euler = euler && crjet::field_bracket(eu, fields[t]) == fields[t] * GaussianRational(g.degree_of(t));
  }
  c.check(e.name + ": every realized basis field tangent", tangent);
  c.check(e.name + ": [E, X_b] = b X_b", euler);
  // one global sign for all pairs
  std::optional<int> sign;
  bool compatible = true;
  for (std::size_t a = 0; a < fields.size() && compatible; ++a)
    for (std::size_t b = a + 1; b < fields.size() && compatible; ++b) {
      const VectorField lhs = crjet::field_bracket(fields[a], fields[b]);
      const auto& ab = g.bracket(a, b);
      const int d = g.degree_of(a) + g.degree_of(b);
      if (ab.empty() || d > r.top_degree) {
        compatible = lhs.is_zero();
        continue;
      }
      const VectorField rhs = crjet::realize(ab, d, cx);
      for (int s : {1, -1}) {
        if (sign && *sign != s) continue;
        if (lhs == rhs * GaussianRational(s)) {
          sign = s;
          break;
        }
        if (sign || s == -1) compatible = false;
      }
    }
  c.check(e.name + ": realization bracket-compatible with sigma = " + (sign ? std::to_string(*sign) : "?"),
          compatible && sign.has_value());
  c.check(e.name + ": jet_order " + std::to_string(r.jet_order) + " <= codim + 1",
          static_cast<std::size_t>(r.jet_order) <= e.model.k() + 1);
}

void criterion10(Criterion& c) {
  for (const auto& e : {crjet::make_heisenberg(), crjet::extend_codim(crjet::make_heisenberg(), 1), crjet::make_codim4(),
                        crjet::make_codim5(), crjet::make_su_family(2), crjet::extend_codim(crjet::make_codim5(), 1)})
    properties(c, e);
}

void criterion11(Criterion& c) {
  const auto r = crjet::prolong_full(crjet::make_so_family(4).model);
  c.info("dims " + dims_str(r.dims) + ", total " + std::to_string(r.algebra.dimension()));
  c.check("top degree 6", r.top_degree == 6);
  c.check("jet_order 4", r.jet_order == 4);
}

struct Entry {
  std::string title;
  double budget;  // seconds
  std::function<void(Criterion&)> body;
};

const std::map<int, Entry>& criteria() {
  static const std::map<int, Entry> s{
      {1, {"codim5 validation", 1, criterion1}},
      {2, {"codim5 polynomial identity", 1, criterion2}},
      {3, {"codim5 identities and tangency of X, Y, Z, U", 5, criterion3}},
      {4, {"codim5 field T", 10, criterion4}},
      {5, {"codim5 prolongation", 300, criterion5}},
      {6, {"codim4 example", 300, criterion6}},
      {7, {"sphere sanity", 5, criterion7}},
      {8, {"family coherence", 1, criterion8}},
      {9, {"codimension extension", 600, criterion9}},
      {10, {"property suites", 900, criterion10}},
      {11, {"so_family(4) prolongation", 1800, criterion11}},
  };
  return s;
}

bool run(int id) {
  const auto it = criteria().find(id);
  if (it == criteria().end()) {
    std::cout << "FAIL criterion " << id << ": unknown criterion\n";
    return false;
  }
  Criterion c(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second.body(c);
  } catch (const std::exception& e) {
    c.check(std::string("no exception (") + e.what() + ")", false);
  }
  const double secs = seconds_since(start);
  c.check("runtime " + std::to_string(secs) + " s within " + std::to_string(static_cast<int>(it->second.budget)) + " s",
          secs < it->second.budget);
  std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << it->second.title << "\n";
  return c.ok();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  bool all = true;
  for (int id : ids) all = run(id) && all;
  return all ? 0 : 1;
}
