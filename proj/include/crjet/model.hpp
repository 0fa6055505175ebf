#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/linalg.hpp"
#include "crjet/poly.hpp"

namespace crjet {

/// Quadric  Im w_j = z H_j z^*,  j = 1..k,  in C^{n+k}.
class QuadricModel {
 public:
  QuadricModel() = default;
  QuadricModel(std::size_t n, std::size_t k, std::vector<ExactMatrix> hermitian)
      : n_(n), k_(k), h_(std::move(hermitian)) {
    if (n_ == 0 || k_ == 0) throw DimensionError("quadric needs n >= 1 and k >= 1");
    if (h_.size() != k_) throw DimensionError("expected " + std::to_string(k_) + " matrices");
    for (const auto& m : h_)
      if (m.rows() != n_ || m.cols() != n_) throw DimensionError("matrices must be n x n");
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<ExactMatrix>& hermitian() const { return h_; }
  const ExactMatrix& hermitian(std::size_t j) const { return h_.at(j); }
  Variables vars() const { return {n_, k_}; }

  /// z H_j z^* = sum_ab H_ab z_a zb_b as a polynomial in z, zb.
  Poly levi_form(std::size_t j) const {
    const Variables v = vars();
    Poly p(v);
    const ExactMatrix& h = h_.at(j);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (h(a, b).is_zero()) continue;
        Exponent e(v.count(), 0);
        e[v.z(a)] += 1;
        e[v.zbar(b)] += 1;
        p.add_term(std::move(e), h(a, b));
      }
    return p;
  }

  friend bool operator==(const QuadricModel&, const QuadricModel&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<ExactMatrix> h_;
};

/// Outcome of the optional isotropy check "z H_j z^* = 0 for all j implies z = 0".
enum class Isotropy { holds, fails, undetermined };

inline const char* to_string(Isotropy i) {
  switch (i) {
    case Isotropy::holds: return "holds";
    case Isotropy::fails: return "fails";
    default: return "undetermined";
  }
}

struct ValidationReport {
  std::vector<bool> hermitian;
  bool independent = false;
  std::vector<Rational> dependency;  // nonzero real relation sum c_j H_j = 0 when dependent
  bool trivial_common_kernel = false;
  std::vector<GaussianRational> kernel_witness;  // nonzero common kernel vector when not trivial
  std::optional<std::vector<long>> tumanov;      // c with det(sum c_j H_j) != 0
  Isotropy isotropy = Isotropy::undetermined;
  std::vector<GaussianRational> isotropic_witness;
  std::vector<std::string> notes;

  bool all_hermitian() const {
    for (bool b : hermitian)
      if (!b) return false;
    return true;
  }
  /// The gating checks: Hermitian, independent, trivial common kernel.
  bool ok() const { return all_hermitian() && independent && trivial_common_kernel; }
};

/// det(sum c_j H_j).
inline GaussianRational combination_determinant(const QuadricModel& m, const std::vector<long>& c) {
  ExactMatrix sum(m.n(), m.n());
  for (std::size_t j = 0; j < m.k(); ++j)
    if (c.at(j) != 0) sum += m.hermitian(j) * GaussianRational(Rational(c[j]));
  return determinant(sum);
}

namespace detail {

// Enumerates integer vectors with |c_j| <= bound ordered by L1 norm, then by
// number of negative entries, then lexicographically descending. Stops when
// `visit` returns true.
inline bool enumerate_small_vectors(std::size_t k, long bound,
                                    const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> c(k, 0);
  std::function<bool(std::size_t, long, std::size_t)> rec = [&](std::size_t pos, long norm_left,
                                                                std::size_t neg_left) -> bool {
    if (pos == k) return norm_left == 0 && neg_left == 0 && visit(c);
    const long slots_left = static_cast<long>(k - pos - 1);
    for (long v = bound; v >= -bound; --v) {
      const long a = v < 0 ? -v : v;
      if (a > norm_left) continue;
      if (v < 0 && neg_left == 0) continue;
      const std::size_t neg_after = neg_left - (v < 0 ? 1 : 0);
      if (static_cast<long>(neg_after) > slots_left) continue;
      if (norm_left - a > bound * slots_left) continue;
      c[pos] = v;
      if (rec(pos + 1, norm_left - a, neg_after)) return true;
    }
    c[pos] = 0;
    return false;
  };
  for (long norm = 1; norm <= bound * static_cast<long>(k); ++norm)
    for (std::size_t neg = 0; neg <= k; ++neg)
      if (rec(0, norm, neg)) return true;
  return false;
}

inline bool positive_definite(const ExactMatrix& h) {
  for (std::size_t s = 1; s <= h.rows(); ++s) {
    ExactMatrix minor(s, s);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) minor(r, c) = h(r, c);
    const GaussianRational d = determinant(minor);
    if (d.re().sign() <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Integer c with |c_j| <= bound and det(sum c_j H_j) != 0, or nullopt.
/// Search order is deterministic; any returned c is certified by an exact determinant.
inline std::optional<std::vector<long>> tumanov_search(const QuadricModel& m, long bound) {
  std::optional<std::vector<long>> found;
  detail::enumerate_small_vectors(m.k(), bound, [&](const std::vector<long>& c) {
    if (combination_determinant(m, c).is_zero()) return false;
    found = c;
    return true;
  });
  return found;
}

namespace detail {

inline bool is_isotropic(const QuadricModel& m, const std::vector<GaussianRational>& z) {
  for (std::size_t j = 0; j < m.k(); ++j) {
    GaussianRational q;
    const auto& h = m.hermitian(j);
    for (std::size_t a = 0; a < m.n(); ++a)
      for (std::size_t b = 0; b < m.n(); ++b)
        if (!z[a].is_zero() && !z[b].is_zero() && !h(a, b).is_zero()) q += z[a] * h(a, b) * z[b].conj();
    if (!q.is_zero()) return false;
  }
  return true;
}

inline Isotropy isotropy_check(const QuadricModel& m, std::vector<GaussianRational>& witness) {
  const std::size_t n = m.n();
  // Isotropic vectors with entries in {0, 1, -1, i, -i}; unit vectors only for large n.
  const std::vector<GaussianRational> entries{GaussianRational(0), GaussianRational(1), GaussianRational(-1),
                                              GaussianRational::i(), -GaussianRational::i()};
  if (n <= 6) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<GaussianRational> z(n);
    while (true) {
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == entries.size()) idx[pos++] = 0;
      if (pos == n) break;
      for (std::size_t a = 0; a < n; ++a) z[a] = entries[idx[a]];
      if (is_isotropic(m, z)) {
        witness = z;
        return Isotropy::fails;
      }
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<GaussianRational> z(n);
      z[a] = GaussianRational(1);
      if (is_isotropic(m, z)) {
        witness = z;
        return Isotropy::fails;
      }
    }
  }
  // A definite combination rules out isotropic vectors.
  bool definite = false;
  enumerate_small_vectors(m.k(), 1, [&](const std::vector<long>& c) {
    ExactMatrix sum(n, n);
    for (std::size_t j = 0; j < m.k(); ++j) sum += m.hermitian(j) * GaussianRational(Rational(c[j]));
    definite = positive_definite(sum);
    return definite;
  });
  return definite ? Isotropy::holds : Isotropy::undetermined;
}

}  // namespace detail

/// Exact nondegeneracy checks. Hermitian symmetry, real linear independence
/// and a trivial common kernel gate the model; Tumanov and isotropy are
/// informational and skipped when `informational` is false.
inline ValidationReport validate(const QuadricModel& m, bool informational = true) {
  ValidationReport rep;
  const std::size_t n = m.n();
  const std::size_t k = m.k();
  for (const auto& h : m.hermitian()) rep.hermitian.push_back(conj_transpose(h) == h);

  // Real independence: columns are the flattened (re, im) parts of each H_j.
  RationalMatrix flat(2 * n * n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        flat(2 * (a * n + b), j) = m.hermitian(j)(a, b).re();
        flat(2 * (a * n + b) + 1, j) = m.hermitian(j)(a, b).im();
      }
  const auto relations = nullspace(flat);
  rep.independent = relations.empty();
  if (!rep.independent) rep.dependency = relations.front();

  // Common kernel: stack all H_j.
  ExactMatrix stacked(k * n, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) stacked(j * n + a, b) = m.hermitian(j)(a, b);
  const auto kernel = nullspace(stacked);
  rep.trivial_common_kernel = kernel.empty();
  if (!rep.trivial_common_kernel) rep.kernel_witness = kernel.front();

  if (informational && rep.all_hermitian()) {
    rep.tumanov = tumanov_search(m, 2);
    rep.isotropy = detail::isotropy_check(m, rep.isotropic_witness);
    if (rep.trivial_common_kernel && rep.isotropy == Isotropy::fails)
      rep.notes.push_back(
          "common kernel is trivial but an isotropic vector exists; only the kernel condition gates the model");
  }
  for (std::size_t j = 0; j < k; ++j)
    if (!rep.hermitian[j]) rep.notes.push_back("matrix H" + std::to_string(j + 1) + " is not Hermitian");
  return rep;
}

/// The graded nilpotent algebra g_{-2} + g_{-1} with complex structure J.
///
/// Real basis of g_{-1} is (e_1..e_n, Je_1..Je_n); g_{-2} has the standard basis
/// of R^k. The bracket of basis vectors r, s of g_{-1} is a k-vector.
class LeviTanakaAlgebra {
 public:
  LeviTanakaAlgebra() = default;
  LeviTanakaAlgebra(std::size_t n, std::size_t k, std::vector<Rational> bracket, RationalMatrix j)
      : n_(n), k_(k), bracket_(std::move(bracket)), j_(std::move(j)) {
    if (bracket_.size() != 4 * n_ * n_ * k_) throw DimensionError("bracket table size mismatch");
    if (j_.rows() != 2 * n_ || j_.cols() != 2 * n_) throw DimensionError("J must be 2n x 2n");
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t dim_m1() const { return 2 * n_; }
  std::size_t dim_m2() const { return k_; }

  const Rational& bracket(std::size_t r, std::size_t s, std::size_t j) const {
    return bracket_[(r * 2 * n_ + s) * k_ + j];
  }
  Rational& bracket(std::size_t r, std::size_t s, std::size_t j) { return bracket_[(r * 2 * n_ + s) * k_ + j]; }

  /// [X, Y]_j for arbitrary real vectors X, Y in g_{-1}.
  Rational bracket(const std::vector<Rational>& x, const std::vector<Rational>& y, std::size_t j) const {
    Rational out;
    for (std::size_t r = 0; r < dim_m1(); ++r) {
      if (x[r].is_zero()) continue;
      for (std::size_t s = 0; s < dim_m1(); ++s)
        if (!y[s].is_zero() && !bracket(r, s, j).is_zero()) out += x[r] * y[s] * bracket(r, s, j);
    }
    return out;
  }

  /// J as a matrix acting on coordinate columns.
  const RationalMatrix& complex_structure() const { return j_; }

  std::vector<Rational> apply_j(const std::vector<Rational>& x) const { return j_.apply(x); }

  /// Throws AlgebraError unless antisymmetry, J^2 = -1, [JX, JY] = [X, Y],
  /// [g_{-1}, g_{-1}] = g_{-2} and nondegeneracy all hold.
  void check() const {
    const std::size_t d = dim_m1();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t j = 0; j < k_; ++j)
          if (bracket(r, s, j) != -bracket(s, r, j)) throw AlgebraError("bracket is not antisymmetric");
    if (!(j_ * j_ == RationalMatrix::identity(d) * Rational(-1))) throw AlgebraError("J^2 != -1");
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        std::vector<Rational> x(d), y(d);
        x[r] = 1;
        y[s] = 1;
        const auto jx = apply_j(x);
        const auto jy = apply_j(y);
        for (std::size_t j = 0; j < k_; ++j)
          if (bracket(jx, jy, j) != bracket(r, s, j)) throw AlgebraError("[JX, JY] != [X, Y]");
      }
    RationalMatrix span(d * d, k_);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t j = 0; j < k_; ++j) span(r * d + s, j) = bracket(r, s, j);
    if (rank(span) != k_) throw AlgebraError("[g-1, g-1] does not span g-2");
    if (!degenerate_directions().empty()) throw AlgebraError("degenerate bracket: [X, g-1] = 0 for some X != 0");
  }

  /// Basis of {X : [X, g_{-1}] = 0}.
  std::vector<std::vector<Rational>> degenerate_directions() const {
    const std::size_t d = dim_m1();
    RationalMatrix ad(d * k_, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t j = 0; j < k_; ++j) ad(s * k_ + j, r) = bracket(r, s, j);
    return nullspace(ad);
  }

  friend bool operator==(const LeviTanakaAlgebra&, const LeviTanakaAlgebra&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Rational> bracket_;
  RationalMatrix j_;
};

namespace detail {

// Complex vector p in C^n of the real basis element r of g_{-1}.
inline std::vector<GaussianRational> complex_direction(std::size_t n, std::size_t r) {
  std::vector<GaussianRational> p(n);
  if (r < n)
    p[r] = GaussianRational(1);
  else
    p[r - n] = GaussianRational::i();
  return p;
}

// p H q^*.
inline GaussianRational hermitian_pairing(const std::vector<GaussianRational>& p, const ExactMatrix& h,
                                          const std::vector<GaussianRational>& q) {
  GaussianRational out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a].is_zero()) continue;
    for (std::size_t b = 0; b < q.size(); ++b)
      if (!q[b].is_zero() && !h(a, b).is_zero()) out += p[a] * h(a, b) * q[b].conj();
  }
  return out;
}

}  // namespace detail

/// Levi-Tanaka algebra of a nondegenerate quadric:
/// [(q,p), (q~,p~)]_j = 2i(-p H_j p~^* + p~ H_j p^*) = 4 Im(p H_j p~^*).
inline LeviTanakaAlgebra build_levi_tanaka(const QuadricModel& m) {
  const ValidationReport rep = validate(m, false);
  if (!rep.ok()) throw ValidationError("model fails nondegeneracy validation");
  const std::size_t n = m.n();
  const std::size_t k = m.k();
  const std::size_t d = 2 * n;
  std::vector<Rational> table(d * d * k);
  const GaussianRational two_i(Rational(0), Rational(2));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) {
      const auto p = detail::complex_direction(n, r);
      const auto q = detail::complex_direction(n, s);
      for (std::size_t j = 0; j < k; ++j) {
        const GaussianRational a = detail::hermitian_pairing(p, m.hermitian(j), q);
        const GaussianRational b = detail::hermitian_pairing(q, m.hermitian(j), p);
        const GaussianRational v = two_i * (b - a);
        if (!v.is_real()) throw InternalError("Levi bracket is not real");
        table[(r * d + s) * k + j] = v.re();
      }
    }
  RationalMatrix jm(d, d);
  for (std::size_t a = 0; a < n; ++a) {
    jm(n + a, a) = 1;   // J e_a = Je_a
    jm(a, n + a) = -1;  // J Je_a = -e_a
  }
  return {n, k, std::move(table), std::move(jm)};
}

/// Quadric with  Im w = 1/4 [J z, z],  i.e.
/// H_j(a, b) = 1/4 [J e_a, e_b]_j + i/4 [e_a, e_b]_j.
inline QuadricModel reconstruct_model(const LeviTanakaAlgebra& alg) {
  alg.check();
  const std::size_t n = alg.n();
  const std::size_t d = alg.dim_m1();
  const Rational quarter(1, 4);
  std::vector<ExactMatrix> hs;
  for (std::size_t j = 0; j < alg.k(); ++j) {
    ExactMatrix h(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Rational> ea(d);
      ea[a] = 1;
      const auto jea = alg.apply_j(ea);
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Rational> eb(d);
        eb[b] = 1;
        h(a, b) = GaussianRational(quarter * alg.bracket(jea, eb, j), quarter * alg.bracket(ea, eb, j));
      }
    }
    hs.push_back(std::move(h));
  }
  return {n, alg.k(), std::move(hs)};
}

}  // namespace crjet
