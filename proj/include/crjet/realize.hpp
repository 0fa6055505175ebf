#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/linalg.hpp"
#include "crjet/poly.hpp"
#include "crjet/prolong.hpp"
#include "crjet/vector_field.hpp"

namespace crjet {

/// Realization is an anti-homomorphism:
/// field_bracket(realize(A), realize(B)) == kBracketSign * realize([A, B]).
inline constexpr int kBracketSign = -1;

/// Complexification of a prolongation with g_{-1} (x) C split by J.
///
/// Complex elements are sparse vectors over the real basis of g. The
/// i-eigenspace of J has basis eps_a = (e_a - i Je_a) / 2 and its conjugate
/// eps_bar_a = (e_a + i Je_a) / 2.
class ComplexifiedAlgebra {
 public:
  using Element = SparseVector<GaussianRational>;

  explicit ComplexifiedAlgebra(const ProlongationResult& r) : n_(r.n()), k_(r.k()), g_(r.algebra) {
    const std::size_t d = g_.dimension();
    eps_.resize(n_ * d);
    w_.resize(k_ * d);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t t = 0; t < d; ++t) eps_[a * d + t] = bracket(eps(a), unit(t));
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t t = 0; t < d; ++t) w_[j * d + t] = bracket(unit(g_.offset(-2) + j), unit(t));
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const GradedLieAlgebra& algebra() const { return g_; }

  static Element unit(std::size_t t) { return {{t, GaussianRational(1)}}; }

  Element eps(std::size_t a) const {
    const std::size_t off = g_.offset(-1);
    return {{off + a, GaussianRational(Rational(1, 2))}, {off + n_ + a, GaussianRational(Rational(0), Rational(-1, 2))}};
  }
  Element eps_bar(std::size_t a) const {
    const std::size_t off = g_.offset(-1);
    return {{off + a, GaussianRational(Rational(1, 2))}, {off + n_ + a, GaussianRational(Rational(0), Rational(1, 2))}};
  }

  /// J extended complex-linearly to g_{-1} (x) C; other degrees are rejected.
  Element apply_j(const Element& x) const {
    const std::size_t off = g_.offset(-1);
    Element out;
    for (const auto& [t, v] : x) {
      if (g_.degree_of(t) != -1) throw DegreeError("J is only defined on g-1");
      const std::size_t r = t - off;
      if (r < n_)
        axpy(out, v, Element{{off + n_ + r, GaussianRational(1)}});
      else
        axpy(out, v, Element{{off + r - n_, GaussianRational(-1)}});
    }
    return out;
  }

  /// Complex-bilinear bracket.
  Element bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, xa] : x)
      for (const auto& [b, yb] : y) {
        const GaussianRational c = xa * yb;
        for (const auto& [e, v] : g_.bracket(a, b)) axpy(out, c * GaussianRational(v), Element{{e, GaussianRational(1)}});
      }
    return out;
  }

  /// [eps_a, B_t] and [W_j, B_t] for basis elements B_t.
  const Element& eps_bracket(std::size_t a, std::size_t t) const { return eps_[a * g_.dimension() + t]; }
  const Element& w_bracket(std::size_t j, std::size_t t) const { return w_[j * g_.dimension() + t]; }

 private:
  std::size_t n_;
  std::size_t k_;
  GradedLieAlgebra g_;
  std::vector<Element> eps_;
  std::vector<Element> w_;
};

/// Holomorphic vector field of an element of g_b (sparse over the global
/// real basis), from the adjoint series
///   sum_m (-1)^m / m! ad(Z)^m X,  Z = sum z_a eps_a + sum w_j W_j,
/// keeping the eps-components in degree -1 and the W-components in degree -2.
inline VectorField realize(const SparseVector<Rational>& x, int degree, const ComplexifiedAlgebra& c) {
  const GradedLieAlgebra& g = c.algebra();
  if (degree < -2 || degree > g.top_degree()) throw DegreeError("degree " + std::to_string(degree) + " is outside the algebra");
  for (const auto& [t, v] : x)
    if (t >= g.dimension() || g.degree_of(t) != degree)
      throw DegreeError("element is not homogeneous of degree " + std::to_string(degree));

  const std::size_t n = c.n();
  const std::size_t k = c.k();
  VectorField out(n, k);
  const Variables vars = out.vars();
  std::map<std::size_t, Poly> cur;
  for (const auto& [t, v] : x) cur.emplace(t, Poly::constant(vars, GaussianRational(v)));

  const std::size_t off1 = g.offset(-1);
  const std::size_t off2 = g.offset(-2);
  const GaussianRational i = GaussianRational::i();
  Rational coeff(1);
  for (int m = 0; m <= degree + 2; ++m) {
    if (m > 0) coeff = -coeff / Rational(m);
    for (const auto& [t, p] : cur) {
      const int d = g.degree_of(t);
      if (d == -1) {
        const std::size_t r = t - off1;
        const GaussianRational s = r < n ? GaussianRational(coeff) : i * GaussianRational(coeff);
        out.z(r % n) += p * s;
      } else if (d == -2) {
        out.w(t - off2) += p * GaussianRational(coeff);
      }
    }
    if (m == degree + 2) break;
    std::map<std::size_t, Poly> next;
    auto add = [&](std::size_t s, const Poly& q) {
      auto it = next.try_emplace(s, vars).first;
      it->second += q;
    };
    for (const auto& [t, p] : cur) {
      for (std::size_t a = 0; a < n; ++a) {
        const auto& br = c.eps_bracket(a, t);
        if (br.empty()) continue;
        const Poly zp = p.times_variable(vars.z(a));
        for (const auto& [s, v] : br) add(s, zp * v);
      }
      for (std::size_t j = 0; j < k; ++j) {
        const auto& br = c.w_bracket(j, t);
        if (br.empty()) continue;
        const Poly wp = p.times_variable(vars.w(j));
        for (const auto& [s, v] : br) add(s, wp * v);
      }
    }
    std::erase_if(next, [](const auto& e) { return e.second.is_zero(); });
    cur = std::move(next);
  }
  return out;
}

inline VectorField realize(const SparseVector<Rational>& x, int degree, const ProlongationResult& r) {
  return realize(x, degree, ComplexifiedAlgebra(r));
}

/// Realizations of the basis of g_degree, in basis order.
inline std::vector<VectorField> realize_basis(const ComplexifiedAlgebra& c, int degree) {
  const GradedLieAlgebra& g = c.algebra();
  if (degree < -2 || degree > g.top_degree()) throw DegreeError("degree " + std::to_string(degree) + " is outside the algebra");
  std::vector<VectorField> out;
  for (std::size_t t = 0; t < g.dim(degree); ++t)
    out.push_back(realize(SparseVector<Rational>{{g.offset(degree) + t, Rational(1)}}, degree, c));
  return out;
}

inline std::vector<VectorField> realize_basis(const ProlongationResult& r, int degree) {
  return realize_basis(ComplexifiedAlgebra(r), degree);
}

}  // namespace crjet
