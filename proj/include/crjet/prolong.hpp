#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/linalg.hpp"
#include "crjet/model.hpp"

namespace crjet {

/// Graded Lie algebra g_{-2} + ... + g_top given by exact structure constants
/// in a basis ordered by degree.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;

  /// `dims[d + 2]` is dim g_d; `table[a * D + b]` is [B_a, B_b].
  GradedLieAlgebra(std::vector<std::size_t> dims, std::vector<SparseVector<Rational>> table)
      : dims_(std::move(dims)), table_(std::move(table)) {
    if (dims_.size() < 2) throw DimensionError("graded algebra needs degrees -2 and -1");
    offsets_.resize(dims_.size() + 1, 0);
    for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
    for (std::size_t i = 0; i < dims_.size(); ++i)
      for (std::size_t t = 0; t < dims_[i]; ++t) degree_of_.push_back(static_cast<int>(i) - 2);
    if (table_.size() != dimension() * dimension()) throw DimensionError("structure table size mismatch");
  }

  int top_degree() const { return static_cast<int>(dims_.size()) - 3; }
  std::size_t dimension() const { return offsets_.back(); }

  std::size_t dim(int d) const {
    if (d < -2 || d > top_degree()) return 0;
    return dims_[static_cast<std::size_t>(d + 2)];
  }
  /// Global index of the first basis element of degree d.
  std::size_t offset(int d) const {
    if (d < -2) return 0;
    if (d > top_degree()) return dimension();
    return offsets_[static_cast<std::size_t>(d + 2)];
  }
  int degree_of(std::size_t index) const { return degree_of_.at(index); }

  const SparseVector<Rational>& bracket(std::size_t a, std::size_t b) const {
    return table_.at(a * dimension() + b);
  }

  /// Bilinear extension to arbitrary elements.
  SparseVector<Rational> bracket(const SparseVector<Rational>& x, const SparseVector<Rational>& y) const {
    SparseVector<Rational> out;
    for (const auto& [a, xa] : x)
      for (const auto& [b, yb] : y) axpy(out, xa * yb, bracket(a, b));
    return out;
  }

  friend bool operator==(const GradedLieAlgebra&, const GradedLieAlgebra&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<int> degree_of_;
  std::vector<SparseVector<Rational>> table_;
};

/// Basis of one nonnegative degree g_d, each element stored as the pair
/// (phi: g_{-1} -> g_{d-1}, psi: g_{-2} -> g_{d-2}) flattened row-major:
/// phi(r, beta) at r * dim(d-1) + beta, then psi(j, gamma) after all of phi.
struct DegreeSpace {
  int degree = 0;
  std::size_t dim_prev = 0;   // dim g_{d-1}
  std::size_t dim_prev2 = 0;  // dim g_{d-2}
  std::size_t phi_size = 0;
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> free_columns;  // coordinates of a member = its entries here

  std::size_t psi_size = 0;

  std::size_t dim() const { return basis.size(); }
  std::size_t unknowns() const { return phi_size + psi_size; }
};

/// Tanaka prolongation computed degree by degree from a Levi-Tanaka algebra.
class Prolongation {
 public:
  explicit Prolongation(LeviTanakaAlgebra alg) : alg_(std::move(alg)) { alg_.check(); }

  const LeviTanakaAlgebra& levi_tanaka() const { return alg_; }
  std::size_t m1() const { return alg_.dim_m1(); }
  std::size_t m2() const { return alg_.dim_m2(); }

  /// Highest degree computed so far (-1 before g_0).
  int computed() const { return static_cast<int>(spaces_.size()) - 1; }

  std::size_t dim(int d) const {
    if (d == -2) return m2();
    if (d == -1) return m1();
    if (d < -2 || d > computed()) return 0;
    return spaces_[static_cast<std::size_t>(d)].dim();
  }

  const DegreeSpace& space(int d) const {
    if (d < 0 || d > computed()) throw SequencingError("degree " + std::to_string(d) + " not computed");
    return spaces_[static_cast<std::size_t>(d)];
  }

  /// [B_t, X_r] for basis t of g_d and basis r of g_{-1}, over the basis of g_{d-1}.
  std::vector<Rational> act_on_m1(int d, std::size_t t, std::size_t r) const {
    if (d <= -2) return {};
    if (d == -1) {
      std::vector<Rational> out(m2());
      for (std::size_t j = 0; j < m2(); ++j) out[j] = alg_.bracket(t, r, j);
      return out;
    }
    const DegreeSpace& sp = space(d);
    const auto& v = sp.basis.at(t);
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(r * sp.dim_prev);
    return {first, first + static_cast<std::ptrdiff_t>(sp.dim_prev)};
  }

  /// [B_t, W_j] for basis t of g_d and basis j of g_{-2}, over the basis of g_{d-2}.
  std::vector<Rational> act_on_m2(int d, std::size_t t, std::size_t j) const {
    if (d <= -1) return {};
    const DegreeSpace& sp = space(d);
    const auto& v = sp.basis.at(t);
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(sp.phi_size + j * sp.dim_prev2);
    return {first, first + static_cast<std::ptrdiff_t>(sp.dim_prev2)};
  }

  /// Computes g_i as the kernel of the Leibniz-rule system. Degree 0 also
  /// imposes phi J = J phi.
  const DegreeSpace& step(int i) {
    if (i != computed() + 1) throw SequencingError("prolongation degree " + std::to_string(i) + " requested out of order");
    const std::size_t n1 = m1();
    const std::size_t n2 = m2();
    const std::size_t d1 = dim(i - 1);
    const std::size_t d2 = dim(i - 2);
    const std::size_t d3 = dim(i - 3);
    const std::size_t phi_size = n1 * d1;
    const std::size_t unknowns = phi_size + n2 * d2;
    auto phi = [&](std::size_t r, std::size_t beta) { return r * d1 + beta; };
    auto psi = [&](std::size_t j, std::size_t gamma) { return phi_size + j * d2 + gamma; };

    // act1[beta][r]: [B_beta, X_r] in g_{i-2}; act2[beta][j]: [B_beta, W_j] in g_{i-3};
    // actc[gamma][r]: [C_gamma, X_r] in g_{i-3}.
    std::vector<std::vector<std::vector<Rational>>> act1(d1), act2(d1), actc(d2);
    for (std::size_t beta = 0; beta < d1; ++beta) {
      for (std::size_t r = 0; r < n1; ++r) act1[beta].push_back(act_on_m1(i - 1, beta, r));
      for (std::size_t j = 0; j < n2; ++j) act2[beta].push_back(act_on_m2(i - 1, beta, j));
    }
    for (std::size_t gamma = 0; gamma < d2; ++gamma)
      for (std::size_t r = 0; r < n1; ++r) actc[gamma].push_back(act_on_m1(i - 2, gamma, r));

    RowReducer<Rational> rr(unknowns);
    std::vector<std::pair<std::size_t, Rational>> row;
    auto push = [&] {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVector<Rational> merged;
      for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second += v;
        else
          merged.emplace_back(c, std::move(v));
        if (merged.back().second.is_zero()) merged.pop_back();
      }
      if (!merged.empty()) rr.add_row(merged);
      row.clear();
    };

    // psi([X_r, X_s]) = [phi X_r, X_s] - [phi X_s, X_r]
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t s = r + 1; s < n1; ++s)
        for (std::size_t gamma = 0; gamma < d2; ++gamma) {
          for (std::size_t j = 0; j < n2; ++j)
            if (!alg_.bracket(r, s, j).is_zero()) row.emplace_back(psi(j, gamma), alg_.bracket(r, s, j));
          for (std::size_t beta = 0; beta < d1; ++beta) {
            if (!act1[beta][s][gamma].is_zero()) row.emplace_back(phi(r, beta), -act1[beta][s][gamma]);
            if (!act1[beta][r][gamma].is_zero()) row.emplace_back(phi(s, beta), act1[beta][r][gamma]);
          }
          push();
        }

    // 0 = [phi X_r, W_j] - [psi W_j, X_r]
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t delta = 0; delta < d3; ++delta) {
          for (std::size_t beta = 0; beta < d1; ++beta)
            if (!act2[beta][j][delta].is_zero()) row.emplace_back(phi(r, beta), act2[beta][j][delta]);
          for (std::size_t gamma = 0; gamma < d2; ++gamma)
            if (!actc[gamma][r][delta].is_zero()) row.emplace_back(psi(j, gamma), -actc[gamma][r][delta]);
          push();
        }

    if (i == 0) {
      // Matrix of phi has entry (beta, r) = phi(r, beta); impose Phi J = J Phi.
      const RationalMatrix& jm = alg_.complex_structure();
      for (std::size_t beta = 0; beta < n1; ++beta)
        for (std::size_t r = 0; r < n1; ++r) {
          for (std::size_t s = 0; s < n1; ++s) {
            if (!jm(s, r).is_zero()) row.emplace_back(phi(s, beta), jm(s, r));
            if (!jm(beta, s).is_zero()) row.emplace_back(phi(r, s), -jm(beta, s));
          }
          push();
        }
    }

    DegreeSpace sp;
    sp.degree = i;
    sp.dim_prev = d1;
    sp.dim_prev2 = d2;
    sp.phi_size = phi_size;
    sp.psi_size = n2 * d2;
    sp.basis = rr.nullspace();
    sp.free_columns = rr.free_columns();
    if (i >= 1)
      for (const auto& v : sp.basis)
        if (std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(phi_size),
                        [](const Rational& x) { return x.is_zero(); }))
          throw InternalError("prolongation element with vanishing g-1 component");
    spaces_.push_back(std::move(sp));
    return spaces_.back();
  }

 private:
  LeviTanakaAlgebra alg_;
  std::vector<DegreeSpace> spaces_;
};

/// g_0: grading-preserving derivations of m commuting with J.
inline DegreeSpace compute_g0(const LeviTanakaAlgebra& alg) {
  Prolongation p(alg);
  return p.step(0);
}

/// Next positive degree of a partially computed prolongation.
inline const DegreeSpace& prolong_step(Prolongation& p, int i) {
  if (i < 1) throw SequencingError("prolong_step computes positive degrees; use compute_g0 for degree 0");
  if (p.computed() < i - 1) throw SequencingError("degrees below " + std::to_string(i) + " are missing");
  return p.step(i);
}

/// Jet determination order for top degree b: floor((b + 2) / 2).
inline int jet_order(int top_degree) {
  if (top_degree < 0) throw DegreeError("jet order needs a nonnegative top degree");
  return (top_degree + 2) / 2;
}

struct ProlongationResult {
  LeviTanakaAlgebra levi_tanaka;
  GradedLieAlgebra algebra;
  std::vector<DegreeSpace> spaces;  // degrees 0..top_degree
  std::map<int, std::size_t> dims;  // degree -> dimension, -2..top_degree
  int top_degree = 0;
  int jet_order = 0;
  bool terminated = false;

  std::size_t n() const { return levi_tanaka.n(); }
  std::size_t k() const { return levi_tanaka.k(); }
};

namespace detail {

// Assembles the full structure table from the degree spaces, deriving
// [g_i, g_j] for i, j >= 0 from [f, g](X) = [f, [g, X]] - [g, [f, X]].
class TableBuilder {
 public:
  explicit TableBuilder(const Prolongation& p) : p_(p) {
    top_ = p.computed();
    while (top_ >= 0 && p.dim(top_) == 0) --top_;
    for (int d = -2; d <= top_; ++d) dims_.push_back(p.dim(d));
    offsets_.assign(dims_.size() + 1, 0);
    for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
    total_ = offsets_.back();
    for (std::size_t i = 0; i < dims_.size(); ++i)
      for (std::size_t t = 0; t < dims_[i]; ++t) degree_.push_back(static_cast<int>(i) - 2);
    table_.resize(total_ * total_);
    done_.assign(total_ * total_, 0);
  }

  int top() const { return top_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  std::vector<SparseVector<Rational>> build() {
    for (int s = 0; s <= 2 * top_; ++s)
      for (int i = 0; i <= s / 2; ++i) {
        const int j = s - i;
        if (i > top_ || j > top_) continue;
        for (std::size_t ta = 0; ta < p_.dim(i); ++ta)
          for (std::size_t tb = (i == j ? ta + 1 : 0); tb < p_.dim(j); ++tb) {
            const std::size_t a = offset(i) + ta;
            const std::size_t b = offset(j) + tb;
            SparseVector<Rational> v = derive(a, b, s);
            SparseVector<Rational> neg = v;
            for (auto& e : neg) e.second = -e.second;
            set(a, b, std::move(v));
            set(b, a, std::move(neg));
          }
        if (i == s - i && i <= top_)
          for (std::size_t ta = 0; ta < p_.dim(i); ++ta) set(offset(i) + ta, offset(i) + ta, {});
      }
    for (std::size_t a = 0; a < total_; ++a)
      for (std::size_t b = 0; b < total_; ++b)
        if (!done_[a * total_ + b]) table_[a * total_ + b] = basis_bracket(a, b);
    return std::move(table_);
  }

 private:
  std::size_t offset(int d) const { return offsets_[static_cast<std::size_t>(d + 2)]; }

  void set(std::size_t a, std::size_t b, SparseVector<Rational> v) {
    table_[a * total_ + b] = std::move(v);
    done_[a * total_ + b] = 1;
  }

  static SparseVector<Rational> to_global(const std::vector<Rational>& local, std::size_t off) {
    SparseVector<Rational> out;
    for (std::size_t t = 0; t < local.size(); ++t)
      if (!local[t].is_zero()) out.emplace_back(off + t, local[t]);
    return out;
  }

  SparseVector<Rational> basis_bracket(std::size_t a, std::size_t b) const {
    const int da = degree_[a];
    const int db = degree_[b];
    const std::size_t ta = a - offset(da);
    const std::size_t tb = b - offset(db);
    if (da < 0 && db < 0) {
      if (da == -1 && db == -1) return to_global(p_.act_on_m1(-1, ta, tb), offset(-2));
      return {};
    }
    if (da >= 0 && db < 0) {
      if (db == -1) return da - 1 > top_ ? SparseVector<Rational>{} : to_global(p_.act_on_m1(da, ta, tb), offset(da - 1));
      return to_global(p_.act_on_m2(da, ta, tb), offset(da - 2));
    }
    if (da < 0 && db >= 0) {
      auto v = basis_bracket(b, a);
      for (auto& e : v) e.second = -e.second;
      return v;
    }
    if (!done_[a * total_ + b]) throw InternalError("structure constant requested before it was derived");
    return table_[a * total_ + b];
  }

  // [B_a, sum v_c B_c].
  SparseVector<Rational> bracket_with(std::size_t a, const SparseVector<Rational>& v) const {
    SparseVector<Rational> out;
    for (const auto& [c, coeff] : v) axpy(out, coeff, basis_bracket(a, c));
    return out;
  }

  SparseVector<Rational> derive(std::size_t a, std::size_t b, int s) const {
    const std::size_t n1 = p_.m1();
    const std::size_t n2 = p_.m2();
    const std::size_t dp = s - 1 <= top_ ? p_.dim(s - 1) : 0;
    const std::size_t dp2 = s - 2 <= top_ ? p_.dim(s - 2) : 0;
    std::vector<Rational> flat(n1 * dp + n2 * dp2);
    bool nonzero = false;
    auto image = [&](std::size_t z) {
      SparseVector<Rational> h = bracket_with(a, basis_bracket(b, z));
      axpy(h, Rational(-1), bracket_with(b, basis_bracket(a, z)));
      return h;
    };
    for (std::size_t r = 0; r < n1; ++r) {
      const auto h = image(offset(-1) + r);
      for (const auto& [c, v] : h) {
        if (degree_[c] != s - 1) throw InternalError("bracket image has the wrong degree");
        flat[r * dp + (c - offset(s - 1))] = v;
        nonzero = true;
      }
    }
    for (std::size_t j = 0; j < n2; ++j) {
      const auto h = image(offset(-2) + j);
      for (const auto& [c, v] : h) {
        if (degree_[c] != s - 2) throw InternalError("bracket image has the wrong degree");
        flat[n1 * dp + j * dp2 + (c - offset(s - 2))] = v;
        nonzero = true;
      }
    }
    if (s > top_) {
      if (nonzero) throw InternalError("bracket of degree " + std::to_string(s) + " is nonzero above the top degree");
      return {};
    }
    const DegreeSpace& sp = p_.space(s);
    SparseVector<Rational> out;
    std::vector<Rational> check(flat.size());
    for (std::size_t t = 0; t < sp.dim(); ++t) {
      const Rational& c = flat[sp.free_columns[t]];
      if (c.is_zero()) continue;
      out.emplace_back(offset(s) + t, c);
      for (std::size_t x = 0; x < check.size(); ++x)
        if (!sp.basis[t][x].is_zero()) check[x] += c * sp.basis[t][x];
    }
    if (check != flat) throw InternalError("bracket of degree " + std::to_string(s) + " is not in the prolongation");
    return out;
  }

  const Prolongation& p_;
  int top_ = -1;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<int> degree_;
  std::size_t total_ = 0;
  std::vector<SparseVector<Rational>> table_;
  std::vector<char> done_;
};

}  // namespace detail

/// Full prolongation with structure constants; stops after two consecutive
/// zero degrees. Throws NonterminationError if g_cap is still nonzero.
inline ProlongationResult prolong_full(const QuadricModel& m, int cap = 12) {
  LeviTanakaAlgebra alg = build_levi_tanaka(m);
  Prolongation p(alg);
  p.step(0);
  int i = 1;
  for (;; ++i) {
    if (i > cap) throw NonterminationError("prolongation nonzero up to degree " + std::to_string(cap));
    if (p.step(i).dim() == 0) break;
  }
  // m is generated by g_{-1}, so g_i = 0 forces g_{i+1} = 0.
  if (p.step(i + 1).dim() != 0) throw InternalError("prolongation skips a degree");

  detail::TableBuilder builder(p);
  ProlongationResult res;
  res.top_degree = builder.top();
  auto dims = builder.dims();
  res.algebra = GradedLieAlgebra(dims, builder.build());
  for (int d = -2; d <= res.top_degree; ++d) res.dims[d] = p.dim(d);
  for (int d = 0; d <= res.top_degree; ++d) res.spaces.push_back(p.space(d));
  res.jet_order = jet_order(res.top_degree);
  res.terminated = true;
  res.levi_tanaka = std::move(alg);
  return res;
}

/// The g_0 element (id, 2 id). With [f, X] = f(X) it acts on g_i by -i, so its
/// negative is the grading element.
inline SparseVector<Rational> identity_pair(const ProlongationResult& res) {
  const DegreeSpace& g0 = res.spaces.at(0);
  const std::size_t n1 = res.levi_tanaka.dim_m1();
  const std::size_t n2 = res.levi_tanaka.dim_m2();
  std::vector<Rational> flat(g0.phi_size + n2 * n2);
  for (std::size_t r = 0; r < n1; ++r) flat[r * n1 + r] = 1;
  for (std::size_t j = 0; j < n2; ++j) flat[g0.phi_size + j * n2 + j] = 2;
  SparseVector<Rational> out;
  std::vector<Rational> check(flat.size());
  const std::size_t off = res.algebra.offset(0);
  for (std::size_t t = 0; t < g0.dim(); ++t) {
    const Rational& c = flat[g0.free_columns[t]];
    if (c.is_zero()) continue;
    out.emplace_back(off + t, c);
    for (std::size_t x = 0; x < flat.size(); ++x) check[x] += c * g0.basis[t][x];
  }
  if (check != flat) throw InternalError("(id, 2 id) is not in g_0");
  return out;
}

struct JacobiReport {
  std::size_t triples = 0;
  std::size_t failures = 0;
  std::optional<std::array<std::size_t, 3>> first_failure;
  bool ok() const { return failures == 0; }
};

/// Exact Jacobi identity over all basis triples a < b < c.
inline JacobiReport check_jacobi(const GradedLieAlgebra& g) {
  JacobiReport rep;
  const std::size_t d = g.dimension();
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c, SparseVector<Rational>& acc) {
    for (const auto& [e, v] : g.bracket(a, b)) axpy(acc, v, g.bracket(e, c));
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        ++rep.triples;
        SparseVector<Rational> acc;
        nested(a, b, c, acc);
        nested(b, c, a, acc);
        nested(c, a, b, acc);
        if (!acc.empty()) {
          if (!rep.first_failure) rep.first_failure = std::array<std::size_t, 3>{a, b, c};
          ++rep.failures;
        }
      }
  return rep;
}

/// Antisymmetry and [g_c, g_d] in g_{c+d} for every basis pair.
inline bool check_grading(const GradedLieAlgebra& g) {
  const std::size_t d = g.dimension();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SparseVector<Rational> sum = g.bracket(a, b);
      axpy(sum, Rational(1), g.bracket(b, a));
      if (!sum.empty()) return false;
      const int target = g.degree_of(a) + g.degree_of(b);
      for (const auto& [c, v] : g.bracket(a, b))
        if (g.degree_of(c) != target) return false;
    }
  return true;
}

}  // namespace crjet
