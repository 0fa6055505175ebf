#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crjet/json_io.hpp"
#include "crjet/model.hpp"
#include "crjet/prolong.hpp"
#include "crjet/realize.hpp"
#include "crjet/verify.hpp"

namespace crjet {

/// A realized top-degree field and what was certified about it.
struct FieldCertificate {
  std::size_t basis_index = 0;
  VectorField field;
  TangencyCertificate tangency;
  int weighted_degree = 0;
  int vanishing_order = 0;
  std::vector<int> vanishing_jets;  // j with certify_jet_counterexample(field, model, j)
};

struct Report {
  std::string name;
  QuadricModel model;
  ValidationReport validation;
  std::optional<ProlongationResult> prolongation;
  std::vector<FieldCertificate> certificates;
  std::vector<std::string> notes;
  std::string conclusion;
  double seconds = 0;

  bool ok() const {
    if (!validation.ok() || !prolongation) return false;
    for (const auto& c : certificates)
      if (!c.tangency.holds()) return false;
    return true;
  }
};

/// validate -> prolong -> realize the top degree -> verify every realized
/// field -> certify vanishing jets j = 2 .. K-1 when the top degree exceeds 2.
inline Report build_report(const std::string& name, const QuadricModel& m, int cap = 12) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.name = name;
  rep.model = m;
  rep.validation = validate(m);
  if (!rep.validation.ok()) {
    rep.conclusion = "model fails validation";
    return rep;
  }
  rep.prolongation = prolong_full(m, cap);
  const ProlongationResult& pr = *rep.prolongation;
  const int top = pr.top_degree;
  const int jets = pr.jet_order;
  const ComplexifiedAlgebra c(pr);
  const auto fields = realize_basis(c, top);
  int best_vanishing = -1;
  for (std::size_t t = 0; t < fields.size(); ++t) {
    FieldCertificate fc;
    fc.basis_index = pr.algebra.offset(top) + t;
    fc.field = fields[t];
    fc.tangency = verify_hol(fields[t], m);
    fc.weighted_degree = weighted_degree(fields[t]).value_or(0);
    fc.vanishing_order = ordinary_vanishing_order(fields[t]);
    if (top > 2)
      for (int j = 2; j < jets; ++j)
        if (certify_jet_counterexample(fields[t], m, j)) {
          fc.vanishing_jets.push_back(j);
          best_vanishing = std::max(best_vanishing, j);
        }
    rep.certificates.push_back(std::move(fc));
  }
  const std::string k = std::to_string(jets);
  if (best_vanishing >= 2)
    rep.conclusion = "nontrivial automorphism with vanishing 2-jet; " + k + "-jet determination (" + k +
                     "-jet determined; largest certified vanishing jet " + std::to_string(best_vanishing) + ")";
  else
    rep.conclusion = k + "-jet determination (" + k + "-jet determined)";
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace json_io {

inline json to_json(const Report& r, bool with_timing = false) {
  json out;
  out["name"] = r.name;
  out["model"] = {{"n", r.model.n()}, {"k", r.model.k()}};
  out["validation"] = to_json(r.validation);
  if (r.prolongation) {
    json dims = json::object();
    for (const auto& [d, v] : r.prolongation->dims) dims[std::to_string(d)] = v;
    out["dims"] = std::move(dims);
    out["dimension"] = r.prolongation->algebra.dimension();
    out["top_degree"] = r.prolongation->top_degree;
    out["jet_order"] = r.prolongation->jet_order;
  }
  json certs = json::array();
  for (const auto& c : r.certificates)
    certs.push_back({{"basis_index", c.basis_index},
                     {"field", to_json(c.field)},
                     {"tangency", to_json(c.tangency)},
                     {"weighted_degree", c.weighted_degree},
                     {"vanishing_order", c.vanishing_order},
                     {"vanishing_jets", c.vanishing_jets}});
  out["certificates"] = std::move(certs);
  out["notes"] = r.notes;
  out["conclusion"] = r.conclusion;
  if (with_timing) out["timing_seconds"] = r.seconds;
  return out;
}

}  // namespace json_io

inline std::string to_text(const Report& r, bool with_timing = false) {
  std::string out = "model " + r.name + ": n = " + std::to_string(r.model.n()) + ", k = " + std::to_string(r.model.k()) + "\n";
  out += std::string("validation: ") + (r.validation.ok() ? "ok" : "failed") + "\n";
  if (r.prolongation) {
    out += "dims:";
    for (const auto& [d, v] : r.prolongation->dims) out += " g" + std::to_string(d) + "=" + std::to_string(v);
    out += "\ntotal dimension: " + std::to_string(r.prolongation->algebra.dimension()) + "\n";
    out += "top degree: " + std::to_string(r.prolongation->top_degree) + "\n";
    out += "jet order: " + std::to_string(r.prolongation->jet_order) + "\n";
  }
  std::size_t verified = 0;
  for (const auto& c : r.certificates) verified += c.tangency.holds() ? 1 : 0;
  out += "top degree fields tangent: " + std::to_string(verified) + "/" + std::to_string(r.certificates.size()) + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  out += "conclusion: " + r.conclusion + "\n";
  if (with_timing) out += "time: " + std::to_string(r.seconds) + " s\n";
  return out;
}

}  // namespace crjet
