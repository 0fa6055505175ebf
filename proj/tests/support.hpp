#pragma once

// Generators and independent oracles shared by the test suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "crjet/crjet.hpp"

namespace testing {

using crjet::ExactMatrix;
using crjet::GaussianRational;
using crjet::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long range = 5, long max_den = 4) {
    return Rational(integer(-range, range), integer(1, max_den));
  }
  GaussianRational gaussian(long range = 5, long max_den = 4) {
    return {rational(range, max_den), rational(range, max_den)};
  }
  GaussianRational nonzero_gaussian() {
    for (;;) {
      GaussianRational g = gaussian();
      if (!g.is_zero()) return g;
    }
  }

  ExactMatrix matrix(std::size_t r, std::size_t c, long range = 3) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = coin() ? gaussian(range, 2) : GaussianRational();
    return m;
  }

  crjet::Poly poly(const crjet::Variables& v, int terms = 3, int max_exp = 2) {
    crjet::Poly p(v);
    for (int t = 0; t < terms; ++t) {
      crjet::Exponent e(v.count(), 0);
      for (auto& x : e) x = static_cast<std::int32_t>(integer(0, max_exp) * (coin() ? 1 : 0));
      p.add_term(std::move(e), gaussian(3, 2));
    }
    return p;
  }

  /// Holomorphic field with a few monomial terms in z and w.
  crjet::VectorField field(std::size_t n, std::size_t k, int terms = 3, int max_exp = 2) {
    crjet::VectorField f(n, k);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> ze(n), we(k);
      for (auto& x : ze) x = static_cast<int>(integer(0, max_exp));
      for (auto& x : we) x = static_cast<int>(integer(0, 1));
      f.add_term(static_cast<std::size_t>(integer(0, static_cast<long>(n + k) - 1)), gaussian(3, 2), ze, we);
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

/// A point of the quadric: z, its conjugate, u and w = u + i zHz^*.
struct ModelPoint {
  std::vector<GaussianRational> z, zbar, w;
};

inline GaussianRational hermitian_value(const ExactMatrix& h, const std::vector<GaussianRational>& z) {
  GaussianRational s;
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = 0; b < z.size(); ++b) s += h(a, b) * z[a] * z[b].conj();
  return s;
}

inline ModelPoint random_point(const crjet::QuadricModel& m, Gen& g, long range = 3) {
  ModelPoint p;
  for (std::size_t a = 0; a < m.n(); ++a) {
    p.z.push_back(GaussianRational(Rational(g.integer(-range, range)), Rational(g.integer(-range, range))));
    p.zbar.push_back(p.z.back().conj());
  }
  for (std::size_t j = 0; j < m.k(); ++j) {
    const GaussianRational q = hermitian_value(m.hermitian(j), p.z);
    p.w.push_back(GaussianRational(Rational(g.integer(-range, range))) + GaussianRational::i() * q);
  }
  return p;
}

/// Value at the point of the holomorphic monomial z^ze w^we.
inline GaussianRational monomial_value(const ModelPoint& p, const std::vector<int>& ze, const std::vector<int>& we) {
  GaussianRational v(1);
  for (std::size_t a = 0; a < ze.size(); ++a)
    for (int e = 0; e < ze[a]; ++e) v *= p.z[a];
  for (std::size_t j = 0; j < we.size(); ++j)
    for (int e = 0; e < we[j]; ++e) v *= p.w[j];
  return v;
}

/// Components of a field evaluated at the point, without going through Poly
/// evaluation: z-components first, then w-components.
inline std::vector<GaussianRational> field_value(const crjet::VectorField& f, const ModelPoint& p) {
  std::vector<GaussianRational> out(f.component_count());
  const auto& v = f.vars();
  for (std::size_t c = 0; c < f.component_count(); ++c)
    for (const auto& [e, coeff] : f.component(c).terms()) {
      std::vector<int> ze(f.n()), we(f.k());
      for (std::size_t a = 0; a < f.n(); ++a) ze[a] = e[v.z(a)];
      for (std::size_t j = 0; j < f.k(); ++j) we[j] = e[v.w(j)];
      out[c] += coeff * monomial_value(p, ze, we);
    }
  return out;
}

/// Re(X rho_j) at a point of M from the component values of X there:
/// X rho_j = g_j / (2i) - sum_a f_a (H_j zb)_a.
inline Rational tangency_value(const crjet::QuadricModel& m, const std::vector<GaussianRational>& x,
                               const ModelPoint& p, std::size_t j) {
  GaussianRational s = x[m.n() + j] * GaussianRational(Rational(0), Rational(-1, 2));
  const ExactMatrix& h = m.hermitian(j);
  for (std::size_t a = 0; a < m.n(); ++a) {
    GaussianRational d;
    for (std::size_t b = 0; b < m.n(); ++b) d += h(a, b) * p.zbar[b];
    s -= x[a] * d;
  }
  return s.re();
}

struct MonomialField {
  std::size_t target;
  std::vector<int> ze, we;
};

inline void compositions(std::size_t vars, int total, std::vector<int>& cur, std::size_t pos,
                         std::vector<std::vector<int>>& out) {
  if (pos + 1 == vars) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur[pos] = x;
    compositions(vars, total - x, cur, pos + 1, out);
  }
}

inline std::vector<std::vector<int>> exponents_of_degree(std::size_t vars, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  if (vars == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(vars);
  compositions(vars, total, cur, 0, out);
  return out;
}

/// Every monomial field z^a w^b d/dz_c or d/dw_j of weight `weight`.
inline std::vector<MonomialField> monomial_fields(std::size_t n, std::size_t k, int weight) {
  std::vector<MonomialField> out;
  for (std::size_t c = 0; c < n + k; ++c) {
    const int budget = weight + (c < n ? 1 : 2);  // |a| + 2|b|
    for (int wb = 0; 2 * wb <= budget; ++wb)
      for (const auto& ze : exponents_of_degree(n, budget - 2 * wb))
        for (const auto& we : exponents_of_degree(k, wb)) out.push_back({c, ze, we});
  }
  return out;
}

/// Real dimension of the weight-`weight` holomorphic polynomial fields whose
/// real part is tangent to M, from the linear conditions Re(X rho_j) = 0 at
/// random points of M. The unknowns are the real and imaginary parts of the
/// coefficient of every monomial field.
inline std::size_t hol_dimension(const crjet::QuadricModel& m, int weight, Gen& g) {
  const auto mons = monomial_fields(m.n(), m.k(), weight);
  const std::size_t unknowns = 2 * mons.size();
  if (unknowns == 0) return 0;
  crjet::RowReducer<Rational> rr(unknowns);
  const std::size_t points = unknowns + 8;
  for (std::size_t s = 0; s < points; ++s) {
    const ModelPoint p = random_point(m, g);
    std::vector<GaussianRational> mv(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) mv[i] = monomial_value(p, mons[i].ze, mons[i].we);
    for (std::size_t j = 0; j < m.k(); ++j) {
      std::vector<Rational> row(unknowns);
      for (std::size_t i = 0; i < mons.size(); ++i) {
        std::vector<GaussianRational> x(m.n() + m.k());
        x[mons[i].target] = mv[i];
        row[2 * i] = tangency_value(m, x, p, j);
        x[mons[i].target] = mv[i] * GaussianRational::i();
        row[2 * i + 1] = tangency_value(m, x, p, j);
      }
      rr.add_row(row);
    }
  }
  return unknowns - rr.rank();
}

}  // namespace testing
