#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/model.hpp"
#include "crjet/vector_field.hpp"

namespace crjet {

struct NamedField {
  std::string name;
  VectorField field;
};

struct CatalogEntry {
  std::string name;
  QuadricModel model;
  std::vector<NamedField> known_fields;
  int expected_top_degree = 0;
  int expected_jet_order = 0;

  const VectorField& field(const std::string& field_name) const {
    for (const auto& f : known_fields)
      if (f.name == field_name) return f.field;
    throw InputError("catalog entry " + name + " has no field " + field_name);
  }
  bool has_field(const std::string& field_name) const {
    for (const auto& f : known_fields)
      if (f.name == field_name) return true;
    return false;
  }
};

namespace detail {

// Hermitian matrix of  c z_a zb_b + conj(c) z_b zb_a.
inline ExactMatrix pair_form(std::size_t n, std::size_t a, std::size_t b, const GaussianRational& c) {
  ExactMatrix h(n, n);
  h(a, b) += c;
  h(b, a) += c.conj();
  return h;
}

// z_a zb_b + z_b zb_a
inline ExactMatrix real_pair(std::size_t n, std::size_t a, std::size_t b) {
  return pair_form(n, a, b, GaussianRational(1));
}

// -i z_a zb_b + i z_b zb_a
inline ExactMatrix imag_pair(std::size_t n, std::size_t a, std::size_t b) {
  return pair_form(n, a, b, GaussianRational(Rational(0), Rational(-1)));
}

// |z_a|^2
inline ExactMatrix norm_form(std::size_t n, std::size_t a) {
  ExactMatrix h(n, n);
  h(a, a) = GaussianRational(1);
  return h;
}

class FieldBuilder {
 public:
  FieldBuilder(std::size_t n, std::size_t k) : vars_{n, k} {}

  Poly z(std::size_t a) const { return Poly::variable(vars_, vars_.z(a)); }
  Poly w(std::size_t j) const { return Poly::variable(vars_, vars_.w(j)); }
  Poly c(const GaussianRational& v) const { return Poly::constant(vars_, v); }
  Poly c(long num, long den = 1) const { return c(GaussianRational(Rational(num, den))); }
  Poly ci(long num, long den = 1) const { return c(GaussianRational(Rational(0), Rational(num, den))); }

  /// p d/dz_a
  VectorField dz(std::size_t a, const Poly& p) const {
    VectorField f(vars_.n, vars_.k);
    f.z(a) = p;
    return f;
  }
  /// p d/dw_j
  VectorField dw(std::size_t j, const Poly& p) const {
    VectorField f(vars_.n, vars_.k);
    f.w(j) = p;
    return f;
  }

 private:
  Variables vars_;
};

}  // namespace detail

/// Im w = |z|^2 in C^2.
inline CatalogEntry make_heisenberg() {
  CatalogEntry e{"heisenberg", QuadricModel(1, 1, {detail::norm_form(1, 0)}), {}, 2, 2};
  detail::FieldBuilder b(1, 1);
  e.known_fields.push_back({"rotation", b.dz(0, b.ci(1) * b.z(0))});
  return e;
}

/// The codimension 5 model in C^9 with equations P_1..P_5.
inline CatalogEntry make_codim5() {
  const std::size_t n = 4;
  const std::size_t k = 5;
  QuadricModel m(n, k,
                 {detail::real_pair(n, 0, 1), detail::imag_pair(n, 0, 1),
                  detail::real_pair(n, 2, 1) + detail::real_pair(n, 3, 0), detail::norm_form(n, 0),
                  detail::norm_form(n, 1)});
  CatalogEntry e{"codim5", std::move(m), {}, 6, 4};
  detail::FieldBuilder b(n, k);
  const VectorField x = b.dz(2, b.ci(1) * b.z(0)) + b.dz(3, b.ci(1) * b.z(1));
  const VectorField y = b.dz(2, b.z(0)) + b.dz(3, b.c(-1) * b.z(1));
  const VectorField z = b.dz(3, b.ci(1) * b.z(0));
  const VectorField u = b.dz(2, b.ci(1) * b.z(1));
  const VectorField t = (b.c(-1, 2) * b.w(0) * b.w(0)) * y + (b.c(1, 2) * b.w(1) * b.w(1)) * y +
                        (b.w(0) * b.w(1)) * x + (b.c(-2) * b.w(1) * b.w(4)) * z +
                        (b.c(-2) * b.w(1) * b.w(3)) * u + (b.c(2) * b.w(3) * b.w(4)) * y;
  e.known_fields = {{"X", x}, {"Y", y}, {"Z", z}, {"U", u}, {"T", t}};
  return e;
}

/// so family: imaginary pairs (consecutive first, then the rest in
/// lexicographic order) plus  Im w' = sum z_j zb'_j + z'_j zb_j.
inline CatalogEntry make_so_family(int param) {
  if (param < 3) throw ParameterError("so family needs n >= 3");
  const auto p = static_cast<std::size_t>(param);
  const std::size_t n = 2 * p;
  std::vector<ExactMatrix> hs;
  for (std::size_t a = 0; a + 1 < p; ++a) hs.push_back(detail::imag_pair(n, a, a + 1));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t c = a + 2; c < p; ++c) hs.push_back(detail::imag_pair(n, a, c));
  ExactMatrix coupling(n, n);
  for (std::size_t a = 0; a < p; ++a) coupling = coupling + detail::real_pair(n, a, p + a);
  hs.push_back(std::move(coupling));
  const std::size_t k = hs.size();
  CatalogEntry e{"so_family(" + std::to_string(param) + ")", QuadricModel(n, k, std::move(hs)), {}, 2 * param - 2,
                 param};
  return e;
}

/// The codimension 4 model in C^10 (the so family at n = 3). "F" is the weight
/// 4 field exactly as displayed; it is tangent only after relabeling the
/// equations. "F_relabeled" is F with w_2 -> w_3, w_3 -> -w_2, which is tangent
/// to the model with its equations in the order above.
inline CatalogEntry make_codim4() {
  CatalogEntry e = make_so_family(3);
  e.name = "codim4";
  detail::FieldBuilder b(6, 4);
  auto build = [&](const std::vector<Poly>& w) {
    auto ww = [&](std::size_t i, std::size_t j) { return w[i] * w[j]; };
    const Poly i = b.ci(1);
    // z'_1, z'_2, z'_3 are slots 3, 4, 5
    return (b.c(-1) * ww(0, 2)) * (b.dz(3, i * b.z(2)) + b.dz(5, i * b.z(0))) +
           ww(1, 2) * (b.dz(3, i * b.z(1)) + b.dz(4, i * b.z(0))) +
           (b.c(-1) * ww(0, 1)) * (b.dz(4, i * b.z(2)) + b.dz(5, i * b.z(1))) + b.dz(3, i * ww(2, 2) * b.z(0)) +
           b.dz(4, i * ww(1, 1) * b.z(1)) + b.dz(5, i * ww(0, 0) * b.z(2));
  };
  e.known_fields = {{"F", build({b.w(0), b.w(1), b.w(2)})},
                    {"F_relabeled", build({b.w(0), b.w(2), b.c(-1) * b.w(1)})}};
  return e;
}

/// su family: real pairs, imaginary pairs, norms of z_1..z_m, plus
/// Im w' = sum z_j zb'_{m+1-j} + z'_{m+1-j} zb_j.
inline CatalogEntry make_su_family(int param) {
  if (param < 2) throw ParameterError("su family needs m >= 2");
  const auto p = static_cast<std::size_t>(param);
  const std::size_t n = 2 * p;
  std::vector<ExactMatrix> hs;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t c = a + 1; c < p; ++c) hs.push_back(detail::real_pair(n, a, c));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t c = a + 1; c < p; ++c) hs.push_back(detail::imag_pair(n, a, c));
  for (std::size_t a = 0; a < p; ++a) hs.push_back(detail::norm_form(n, a));
  ExactMatrix coupling(n, n);
  for (std::size_t j = 0; j < p; ++j) coupling = coupling + detail::real_pair(n, j, p + (p - 1 - j));
  hs.push_back(std::move(coupling));
  const std::size_t k = hs.size();
  CatalogEntry e{"su_family(" + std::to_string(param) + ")", QuadricModel(n, k, std::move(hs)), {}, 4 * param - 2,
                 2 * param};
  if (param == 2) {
    // Weight 6 field; z'_1, z'_2 are slots 2, 3 and w'_1 is slot 4.
    detail::FieldBuilder b(n, k);
    auto w = [&](std::size_t j) { return b.w(j); };
    const Poly a = b.c(-3) * w(0).pow(4) + b.c(-6) * w(0).pow(2) * w(1).pow(2) +
                   b.c(24) * w(0).pow(2) * w(2) * w(3) + b.c(-3) * w(1).pow(4) +
                   b.c(24) * w(1).pow(2) * w(2) * w(3) + b.c(-48) * w(2).pow(2) * w(3).pow(2);
    const Poly b1 = b.c(2) * w(0).pow(3) + b.c(2) * w(0) * w(1).pow(2) + b.c(-8) * w(0) * w(2) * w(3);
    const Poly b2 = b.c(2) * w(0).pow(2) * w(1) + b.c(2) * w(1).pow(3) + b.c(-8) * w(1) * w(2) * w(3);
    const Poly b3 = b.c(-4) * w(0).pow(2) * w(2) + b.c(-4) * w(1).pow(2) * w(2) + b.c(16) * w(2).pow(2) * w(3);
    const Poly b4 = b.c(-4) * w(0).pow(2) * w(3) + b.c(-4) * w(1).pow(2) * w(3) + b.c(16) * w(2) * w(3).pow(2);
    const VectorField s =
        b.dw(4, a) + b1 * (b.dw(4, b.c(2) * w(0)) + b.dz(2, b.z(0)) + b.dz(3, b.z(1))) +
        b2 * (b.dw(4, b.c(2) * w(1)) + b.dz(2, b.ci(-1) * b.z(0)) + b.dz(3, b.ci(1) * b.z(1))) +
        b3 * (b.dw(4, b.c(2) * w(3)) + b.dz(2, b.z(1))) + b4 * (b.dw(4, b.c(2) * w(2)) + b.dz(3, b.z(0)));
    e.known_fields = {{"S", s}};
  }
  return e;
}

/// Position in the codim5 equation list of each su_family(2) equation
/// (P1, P2, P4, P5, P3 in su order). The z variables correspond identically.
inline const std::vector<std::size_t>& su2_to_codim5_equations() {
  static const std::vector<std::size_t> perm{0, 1, 3, 4, 2};
  return perm;
}

/// Reorders the equations: equation j of `m` becomes equation perm[j].
inline QuadricModel permute_equations(const QuadricModel& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.k()) throw DimensionError("permutation size mismatch");
  std::vector<ExactMatrix> hs(m.k());
  for (std::size_t j = 0; j < m.k(); ++j) hs.at(perm[j]) = m.hermitian(j);
  return {m.n(), m.k(), std::move(hs)};
}

/// Renames w_j to w_perm[j] in a field.
inline VectorField permute_w(const VectorField& f, const std::vector<std::size_t>& perm) {
  if (perm.size() != f.k()) throw DimensionError("permutation size mismatch");
  VectorField out(f.n(), f.k());
  const Variables& v = f.vars();
  for (std::size_t c = 0; c < f.component_count(); ++c) {
    const std::size_t target = c < f.n() ? c : f.n() + perm[c - f.n()];
    for (const auto& [e, coeff] : f.component(c).terms()) {
      std::vector<int> ze(f.n()), we(f.k());
      for (std::size_t a = 0; a < f.n(); ++a) ze[a] = e[v.z(a)];
      for (std::size_t j = 0; j < f.k(); ++j) we[perm[j]] = e[v.w(j)];
      out.add_term(target, coeff, ze, we);
    }
  }
  return out;
}

/// Appends `extra` variables z_new, w_new with Im w_new = |z_new|^2.
inline CatalogEntry extend_codim(const CatalogEntry& e, int extra) {
  if (extra < 0) throw ParameterError("extra must be nonnegative");
  if (extra == 0) return e;
  const std::size_t x = static_cast<std::size_t>(extra);
  const std::size_t n = e.model.n() + x;
  const std::size_t k = e.model.k() + x;
  std::vector<ExactMatrix> hs;
  for (std::size_t j = 0; j < e.model.k(); ++j) {
    ExactMatrix h(n, n);
    for (std::size_t a = 0; a < e.model.n(); ++a)
      for (std::size_t b = 0; b < e.model.n(); ++b) h(a, b) = e.model.hermitian(j)(a, b);
    hs.push_back(std::move(h));
  }
  for (std::size_t t = 0; t < x; ++t) hs.push_back(detail::norm_form(n, e.model.n() + t));
  CatalogEntry out{e.name + "+" + std::to_string(extra), QuadricModel(n, k, std::move(hs)), {},
                   std::max(e.expected_top_degree, 2), std::max(e.expected_jet_order, 2)};
  for (const auto& f : e.known_fields) out.known_fields.push_back({f.name, f.field.embed(n, k)});
  return out;
}

inline std::vector<std::string> catalog_names() {
  return {"heisenberg", "codim5", "codim4", "so_family", "su_family"};
}

/// Entry by name; families read their parameter from `param`, and `extra`
/// appends sphere factors.
inline CatalogEntry catalog_entry(const std::string& name, std::optional<int> param = std::nullopt, int extra = 0) {
  CatalogEntry e;
  if (name == "heisenberg")
    e = make_heisenberg();
  else if (name == "codim5")
    e = make_codim5();
  else if (name == "codim4")
    e = make_codim4();
  else if (name == "so_family")
    e = make_so_family(param.value_or(3));
  else if (name == "su_family")
    e = make_su_family(param.value_or(2));
  else
    throw InputError("unknown catalog entry: " + name);
  return extend_codim(e, extra);
}

}  // namespace crjet
