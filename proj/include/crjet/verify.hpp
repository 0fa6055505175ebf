#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/model.hpp"
#include "crjet/poly.hpp"
#include "crjet/vector_field.hpp"

namespace crjet {

/// Outcome of the tangency test; one residual per defining equation, as a
/// polynomial in z, zb and u.
struct TangencyCertificate {
  std::vector<Poly> residuals;
  bool verdict = false;

  bool holds() const { return verdict; }
};

/// Defining function rho_j = (w_j - wb_j) / (2i) - z H_j z^*.
inline Poly defining_function(const QuadricModel& m, std::size_t j) {
  const Variables v = m.vars();
  const Poly diff = Poly::variable(v, v.w(j)) - Poly::variable(v, v.wbar(j));
  return diff * GaussianRational(Rational(0), Rational(-1, 2)) - m.levi_form(j);
}

/// Restriction of a polynomial to M: w = u + i zHz^*, wb = u - i zHz^*.
inline Poly restrict_to_model(const QuadricModel& m, const Poly& p) {
  const Variables v = m.vars();
  Poly out = p;
  for (std::size_t j = 0; j < m.k(); ++j) {
    const Poly u = Poly::variable(v, v.u(j));
    const Poly q = m.levi_form(j) * GaussianRational::i();
    out = out.substitute(v.w(j), u + q).substitute(v.wbar(j), u - q);
  }
  return out;
}

/// Re(X rho_j) restricted to M, for every j; X is in hol(M, 0) iff all vanish.
inline TangencyCertificate verify_hol(const VectorField& x, const QuadricModel& m) {
  if (x.n() != m.n() || x.k() != m.k()) throw DimensionError("field and model dimensions differ");
  if (!x.is_holomorphic()) throw InputError("field has non-holomorphic components");
  TangencyCertificate cert;
  cert.verdict = true;
  for (std::size_t j = 0; j < m.k(); ++j) {
    Poly r = restrict_to_model(m, apply_field(x, defining_function(m, j)).real_part());
    if (!r.is_zero()) cert.verdict = false;
    cert.residuals.push_back(std::move(r));
  }
  return cert;
}

/// A nonzero tangent field vanishing to order j + 1 at the origin, so its flow
/// agrees with the identity to order j without being the identity.
inline bool certify_jet_counterexample(const VectorField& x, const QuadricModel& m, int j) {
  if (x.is_zero()) return false;
  if (!verify_hol(x, m).holds()) return false;
  return ordinary_vanishing_order(x) >= j + 1;
}

/// Identities between the fields X, Y, Z, U and the equation vector
/// P = (P_1, .., P_5) of the codimension 5 model, applied componentwise:
///   X(P) = i P_1 e_3, Y(P) = i P_2 e_3, Z(P) = i P_4 e_3, U(P) = i P_5 e_3,
///   P_1 (-Y(P)) + P_2 X(P) = 0,
///   P_1 X(P) + P_2 Y(P) + P_5 (-2 Z(P)) + P_4 (-2 U(P)) = 0,
///   P_2 (-2 Z(P)) + P_4 (2 Y(P)) = 0,
///   P_2 (-2 U(P)) + P_5 (2 Y(P)) = 0.
inline std::array<bool, 8> check_lemma_identities(const QuadricModel& m, const VectorField& x, const VectorField& y,
                                                  const VectorField& z, const VectorField& u) {
  if (m.k() != 5) throw DimensionError("identities are stated for five equations");
  const Variables v = m.vars();
  std::vector<Poly> p;
  for (std::size_t j = 0; j < 5; ++j) p.push_back(m.levi_form(j));
  using Vec = std::vector<Poly>;
  auto image = [&](const VectorField& f) {
    Vec out;
    for (const auto& pj : p) out.push_back(apply_field(f, pj));
    return out;
  };
  auto third = [&](const Poly& q) {
    Vec out(5, Poly(v));
    out[2] = q * GaussianRational::i();
    return out;
  };
  auto combo = [&](std::initializer_list<std::pair<Poly, Vec>> terms) {
    Vec out(5, Poly(v));
    for (const auto& [c, vec] : terms)
      for (std::size_t j = 0; j < 5; ++j) out[j] += c * vec[j];
    return std::all_of(out.begin(), out.end(), [](const Poly& q) { return q.is_zero(); });
  };
  const Vec xp = image(x), yp = image(y), zp = image(z), up = image(u);
  auto scaled = [](const Poly& q, long s) { return q * GaussianRational(s); };
  return {xp == third(p[0]),
          yp == third(p[1]),
          zp == third(p[3]),
          up == third(p[4]),
          combo({{scaled(p[0], -1), yp}, {p[1], xp}}),
          combo({{p[0], xp}, {p[1], yp}, {scaled(p[4], -2), zp}, {scaled(p[3], -2), up}}),
          combo({{scaled(p[1], -2), zp}, {scaled(p[3], 2), yp}}),
          combo({{scaled(p[1], -2), up}, {scaled(p[4], 2), yp}})};
}

}  // namespace crjet
