#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crjet/error.hpp"
#include "crjet/model.hpp"
#include "crjet/prolong.hpp"
#include "crjet/vector_field.hpp"
#include "crjet/verify.hpp"

namespace crjet::json_io {

using nlohmann::json;

inline GaussianRational parse_scalar(const json& j) {
  if (!j.is_string()) throw ParseError("expected a scalar string such as \"(1/2)+(0)i\"");
  try {
    return GaussianRational::parse(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad scalar \"" + j.get<std::string>() + "\": " + e.what());
  }
}

inline std::size_t parse_count(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    throw ParseError(std::string("missing or invalid \"") + key + "\"");
  return j.at(key).get<std::size_t>();
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// ---- model ----

inline json to_json(const QuadricModel& m) {
  json hs = json::array();
  for (std::size_t j = 0; j < m.k(); ++j) {
    json rows = json::array();
    for (std::size_t a = 0; a < m.n(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < m.n(); ++b) row.push_back(m.hermitian(j)(a, b).str());
      rows.push_back(std::move(row));
    }
    hs.push_back(std::move(rows));
  }
  return {{"n", m.n()}, {"k", m.k()}, {"hermitian", std::move(hs)}};
}

/// Shape errors are reported as ParseError; Hermitian symmetry is not checked here.
inline QuadricModel model_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("model must be a JSON object");
  const std::size_t n = parse_count(j, "n");
  const std::size_t k = parse_count(j, "k");
  if (!j.contains("hermitian") || !j.at("hermitian").is_array()) throw ParseError("missing \"hermitian\" array");
  const json& hs = j.at("hermitian");
  if (hs.size() != k) throw ParseError("expected " + std::to_string(k) + " hermitian matrices");
  std::vector<ExactMatrix> mats;
  for (const json& h : hs) {
    if (!h.is_array() || h.size() != n) throw ParseError("each matrix needs n rows");
    ExactMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!h[a].is_array() || h[a].size() != n) throw ParseError("each row needs n entries");
      for (std::size_t b = 0; b < n; ++b) m(a, b) = parse_scalar(h[a][b]);
    }
    mats.push_back(std::move(m));
  }
  try {
    return {n, k, std::move(mats)};
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

// ---- fields ----

inline json to_json(const VectorField& f) {
  json terms = json::array();
  const Variables& v = f.vars();
  for (std::size_t c = 0; c < f.component_count(); ++c)
    for (const auto& [e, coeff] : f.component(c).terms()) {
      std::vector<int> ze(f.n()), we(f.k());
      for (std::size_t a = 0; a < f.n(); ++a) ze[a] = e[v.z(a)];
      for (std::size_t j = 0; j < f.k(); ++j) we[j] = e[v.w(j)];
      const std::string target = c < f.n() ? "z" + std::to_string(c + 1) : "w" + std::to_string(c - f.n() + 1);
      terms.push_back({{"target", target}, {"coeff", coeff.str()}, {"z_exp", ze}, {"w_exp", we}});
    }
  return {{"n", f.n()}, {"k", f.k()}, {"terms", std::move(terms)}};
}

inline VectorField field_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("field must be a JSON object");
  const std::size_t n = parse_count(j, "n");
  const std::size_t k = parse_count(j, "k");
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("missing \"terms\" array");
  VectorField f(n, k);
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("target") || !t.at("target").is_string()) throw ParseError("term needs a target");
    const std::string target = t.at("target").get<std::string>();
    std::size_t idx = 0;
    try {
      if (target.size() < 2 || (target[0] != 'z' && target[0] != 'w')) throw ParseError("bad target " + target);
      std::size_t pos = 0;
      const unsigned long num = std::stoul(target.substr(1), &pos);
      if (pos != target.size() - 1 || num == 0) throw ParseError("bad target " + target);
      idx = target[0] == 'z' ? num - 1 : n + num - 1;
      if ((target[0] == 'z' && num > n) || (target[0] == 'w' && num > k)) throw ParseError("target out of range " + target);
    } catch (const std::logic_error&) {
      throw ParseError("bad target " + target);
    }
    auto exps = [&](const char* key, std::size_t len) {
      if (!t.contains(key) || !t.at(key).is_array() || t.at(key).size() != len)
        throw ParseError(std::string("term needs \"") + key + "\" of length " + std::to_string(len));
      std::vector<int> out;
      for (const json& x : t.at(key)) {
        if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("exponents must be nonnegative integers");
        out.push_back(x.get<int>());
      }
      return out;
    };
    if (!t.contains("coeff")) throw ParseError("term needs a coeff");
    f.add_term(idx, parse_scalar(t.at("coeff")), exps("z_exp", n), exps("w_exp", k));
  }
  return f;
}

// ---- validation ----

inline json to_json(const ValidationReport& r) {
  json out;
  json herm = json::array();
  json bad = json::array();
  for (std::size_t j = 0; j < r.hermitian.size(); ++j) {
    herm.push_back(bool(r.hermitian[j]));
    if (!r.hermitian[j]) bad.push_back("H" + std::to_string(j + 1));
  }
  out["hermitian"] = std::move(herm);
  out["non_hermitian"] = std::move(bad);
  out["independent"] = r.independent;
  if (!r.dependency.empty()) {
    json dep = json::array();
    for (const auto& c : r.dependency) dep.push_back(c.str());
    out["dependency"] = std::move(dep);
  }
  out["trivial_common_kernel"] = r.trivial_common_kernel;
  if (!r.kernel_witness.empty()) {
    json w = json::array();
    for (const auto& c : r.kernel_witness) w.push_back(c.str());
    out["kernel_witness"] = std::move(w);
  }
  if (r.tumanov)
    out["tumanov"] = *r.tumanov;
  else
    out["tumanov"] = nullptr;
  out["isotropy"] = to_string(r.isotropy);
  if (!r.isotropic_witness.empty()) {
    json w = json::array();
    for (const auto& c : r.isotropic_witness) w.push_back(c.str());
    out["isotropic_witness"] = std::move(w);
  }
  out["notes"] = r.notes;
  out["ok"] = r.ok();
  return out;
}

// ---- prolongation ----

/// Structure constants as [a, b, c, value] for a < b with [B_a, B_b] having
/// coefficient value on B_c; the basis is listed by degree.
inline json to_json(const ProlongationResult& r) {
  json dims = json::object();
  for (const auto& [d, v] : r.dims) dims[std::to_string(d)] = v;
  const GradedLieAlgebra& g = r.algebra;
  json basis = json::array();
  for (std::size_t t = 0; t < g.dimension(); ++t) {
    const int d = g.degree_of(t);
    basis.push_back({{"index", t}, {"degree", d}, {"local", t - g.offset(d)}});
  }
  json sc = json::array();
  for (std::size_t a = 0; a < g.dimension(); ++a)
    for (std::size_t b = a + 1; b < g.dimension(); ++b)
      for (const auto& [c, v] : g.bracket(a, b)) sc.push_back({a, b, c, GaussianRational(v).str()});
  return {{"dims", std::move(dims)},
          {"top_degree", r.top_degree},
          {"jet_order", r.jet_order},
          {"terminated", r.terminated},
          {"dimension", g.dimension()},
          {"basis", std::move(basis)},
          {"structure_constants", std::move(sc)}};
}

// ---- certificates ----

inline json to_json(const TangencyCertificate& c) {
  json out = {{"verdict", c.verdict}};
  if (!c.verdict) {
    json res = json::array();
    for (const auto& p : c.residuals) res.push_back(p.str());
    out["residuals"] = std::move(res);
  }
  return out;
}

}  // namespace crjet::json_io
