#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/linalg.hpp"
#include "crjet/poly.hpp"

namespace crjet {

/// Holomorphic polynomial vector field  sum_a f_a d/dz_a + sum_j g_j d/dw_j.
///
/// Components are Polys over Variables{n, k} that only involve z and w.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::size_t n, std::size_t k)
      : vars_{n, k}, z_(n, Poly(Variables{n, k})), w_(k, Poly(Variables{n, k})) {}

  std::size_t n() const { return vars_.n; }
  std::size_t k() const { return vars_.k; }
  const Variables& vars() const { return vars_; }

  const Poly& z(std::size_t a) const { return z_.at(a); }
  const Poly& w(std::size_t j) const { return w_.at(j); }
  Poly& z(std::size_t a) { return z_.at(a); }
  Poly& w(std::size_t j) { return w_.at(j); }

  /// Component by flat index: 0..n-1 are z targets, n..n+k-1 are w targets.
  const Poly& component(std::size_t c) const { return c < n() ? z_.at(c) : w_.at(c - n()); }
  Poly& component(std::size_t c) { return c < n() ? z_.at(c) : w_.at(c - n()); }
  std::size_t component_count() const { return n() + k(); }

  /// Adds coeff * z^z_exp w^w_exp to the component `target`.
  void add_term(std::size_t target, const GaussianRational& coeff, const std::vector<int>& z_exp,
                const std::vector<int>& w_exp) {
    if (z_exp.size() != n() || w_exp.size() != k()) throw DimensionError("field term exponent size mismatch");
    Exponent e(vars_.count(), 0);
    for (std::size_t a = 0; a < n(); ++a) e[vars_.z(a)] = z_exp[a];
    for (std::size_t j = 0; j < k(); ++j) e[vars_.w(j)] = w_exp[j];
    component(target).add_term(std::move(e), coeff);
  }

  bool is_zero() const {
    for (std::size_t c = 0; c < component_count(); ++c)
      if (!component(c).is_zero()) return false;
    return true;
  }

  bool is_holomorphic() const {
    for (std::size_t c = 0; c < component_count(); ++c)
      if (!component(c).is_holomorphic()) return false;
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    check(o);
    for (std::size_t c = 0; c < component_count(); ++c) component(c) += o.component(c);
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    check(o);
    for (std::size_t c = 0; c < component_count(); ++c) component(c) -= o.component(c);
    return *this;
  }
  VectorField& operator*=(const GaussianRational& s) {
    for (std::size_t c = 0; c < component_count(); ++c) component(c) *= s;
    return *this;
  }
  /// Multiplies every component by the polynomial `p`.
  VectorField& operator*=(const Poly& p) {
    for (std::size_t c = 0; c < component_count(); ++c) component(c) = component(c) * p;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const GaussianRational& s) { return a *= s; }
  friend VectorField operator*(const GaussianRational& s, VectorField a) { return a *= s; }
  friend VectorField operator*(const Poly& p, VectorField a) { return a *= p; }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.vars_ == b.vars_ && a.z_ == b.z_ && a.w_ == b.w_;
  }

  /// Same field in a larger (n', k') space; new variables are appended.
  VectorField embed(std::size_t n2, std::size_t k2) const {
    if (n2 < n() || k2 < k()) throw DimensionError("embedding into a smaller space");
    VectorField out(n2, k2);
    for (std::size_t c = 0; c < component_count(); ++c) {
      const std::size_t target = c < n() ? c : n2 + (c - n());
      for (const auto& [e, coeff] : component(c).terms()) {
        std::vector<int> ze(n2, 0), we(k2, 0);
        for (std::size_t a = 0; a < n(); ++a) ze[a] = e[vars_.z(a)];
        for (std::size_t j = 0; j < k(); ++j) we[j] = e[vars_.w(j)];
        out.add_term(target, coeff, ze, we);
      }
    }
    return out;
  }

  /// Canonical human-readable text, one "target: poly" line per nonzero component.
  std::string str() const {
    std::string out;
    for (std::size_t c = 0; c < component_count(); ++c) {
      if (component(c).is_zero()) continue;
      const std::string target = c < n() ? "z" + std::to_string(c + 1) : "w" + std::to_string(c - n() + 1);
      out += "d/d" + target + ": " + component(c).str() + "\n";
    }
    return out.empty() ? "0\n" : out;
  }

 private:
  void check(const VectorField& o) const {
    if (!(vars_ == o.vars_)) throw DimensionError("vector fields over different spaces");
  }

  Variables vars_;
  std::vector<Poly> z_;
  std::vector<Poly> w_;
};

/// Euler (grading) field  sum z_a d/dz_a + 2 sum w_j d/dw_j.
inline VectorField euler_field(std::size_t n, std::size_t k) {
  VectorField e(n, k);
  for (std::size_t a = 0; a < n; ++a) e.z(a) = Poly::variable(e.vars(), e.vars().z(a));
  for (std::size_t j = 0; j < k; ++j) e.w(j) = Poly::variable(e.vars(), e.vars().w(j)) * GaussianRational(2);
  return e;
}

/// X(p): derivatives are taken in z and w only; other slots act as constants.
inline Poly apply_field(const VectorField& x, const Poly& p) {
  if (!(x.vars() == p.vars())) throw DimensionError("field and polynomial over different spaces");
  Poly out(p.vars());
  for (std::size_t a = 0; a < x.n(); ++a)
    if (!x.z(a).is_zero()) out += x.z(a) * p.derivative(p.vars().z(a));
  for (std::size_t j = 0; j < x.k(); ++j)
    if (!x.w(j).is_zero()) out += x.w(j) * p.derivative(p.vars().w(j));
  return out;
}

/// [X, Y] = X o Y - Y o X on coordinate functions.
inline VectorField field_bracket(const VectorField& x, const VectorField& y) {
  if (!(x.vars() == y.vars())) throw DimensionError("bracket of fields over different spaces");
  VectorField out(x.n(), x.k());
  for (std::size_t c = 0; c < x.component_count(); ++c)
    out.component(c) = apply_field(x, y.component(c)) - apply_field(y, x.component(c));
  return out;
}

/// Weight with [z]=1, [w]=2, d/dz = -1, d/dw = -2. nullopt when the terms
/// disagree or the field is zero.
inline std::optional<int> weighted_degree(const VectorField& x) {
  std::optional<int> weight;
  const auto& v = x.vars();
  for (std::size_t c = 0; c < x.component_count(); ++c) {
    const int shift = c < x.n() ? -1 : -2;
    for (const auto& [e, coeff] : x.component(c).terms()) {
      int wt = shift;
      for (std::size_t a = 0; a < v.n; ++a) wt += e[v.z(a)];
      for (std::size_t j = 0; j < v.k; ++j) wt += 2 * e[v.w(j)];
      if (weight && *weight != wt) return std::nullopt;
      weight = wt;
    }
  }
  return weight;
}

/// Minimum ordinary total degree over all monomials of all components.
inline int ordinary_vanishing_order(const VectorField& x) {
  if (x.is_zero()) throw ArithmeticError("vanishing order of the zero field is undefined");
  auto best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t c = 0; c < x.component_count(); ++c)
    for (const auto& [e, coeff] : x.component(c).terms()) best = std::min(best, total_degree(e));
  return static_cast<int>(best);
}

/// Coefficient coordinates of `target` in the real span of `fields`, or
/// nullopt if it is not in that span.
inline std::optional<std::vector<Rational>> real_span_coordinates(const std::vector<VectorField>& fields,
                                                                  const VectorField& target) {
  // Rows are (component, monomial, re/im); columns are the spanning fields.
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  auto row_index = [&](std::size_t c, const Exponent& e) {
    auto [it, inserted] = row_of.try_emplace({c, e}, row_of.size());
    return it->second;
  };
  for (const auto& f : fields) {
    if (!(f.vars() == target.vars())) throw DimensionError("span membership over different spaces");
    for (std::size_t c = 0; c < f.component_count(); ++c)
      for (const auto& [e, coeff] : f.component(c).terms()) row_index(c, e);
  }
  for (std::size_t c = 0; c < target.component_count(); ++c)
    for (const auto& [e, coeff] : target.component(c).terms()) row_index(c, e);

  RationalMatrix a(2 * row_of.size(), fields.size());
  std::vector<Rational> b(2 * row_of.size());
  for (std::size_t col = 0; col < fields.size(); ++col)
    for (std::size_t c = 0; c < fields[col].component_count(); ++c)
      for (const auto& [e, coeff] : fields[col].component(c).terms()) {
        const std::size_t r = row_of.at({c, e});
        a(2 * r, col) = coeff.re();
        a(2 * r + 1, col) = coeff.im();
      }
  for (std::size_t c = 0; c < target.component_count(); ++c)
    for (const auto& [e, coeff] : target.component(c).terms()) {
      const std::size_t r = row_of.at({c, e});
      b[2 * r] = coeff.re();
      b[2 * r + 1] = coeff.im();
    }
  return solve(a, b);
}

}  // namespace crjet
