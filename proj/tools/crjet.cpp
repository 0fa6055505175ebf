// crjet: validate quadric models, compute their Tanaka prolongation, realize
// and verify infinitesimal automorphisms, and report jet determination.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crjet/catalog.hpp"
#include "crjet/json_io.hpp"
#include "crjet/report.hpp"

namespace {

using crjet::json_io::json;

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kInternal = 3 };

struct ModelSource {
  std::string file;
  std::string catalog;
  std::optional<int> n;
  std::optional<int> m;
  int extra = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("model", file, "Model JSON file");
    cmd->add_option("--catalog", catalog, "Built-in model name (see 'crjet catalog')");
    cmd->add_option("--n", n, "Parameter of so_family");
    cmd->add_option("--m", m, "Parameter of su_family");
    cmd->add_option("--extra", extra, "Append this many sphere factors")->check(CLI::NonNegativeNumber);
  }

  std::optional<int> param() const { return catalog == "su_family" ? m : n; }

  crjet::CatalogEntry entry() const {
    if (catalog.empty()) throw crjet::InputError("no catalog entry given");
    return crjet::catalog_entry(catalog, param(), extra);
  }

  std::string name() const {
    if (!catalog.empty()) return entry().name;
    return std::filesystem::path(file).stem().string();
  }

  crjet::QuadricModel load() const {
    if (!catalog.empty() && !file.empty()) throw crjet::InputError("give either a model file or --catalog");
    if (!catalog.empty()) return entry().model;
    if (file.empty()) throw crjet::InputError("no model given");
    return crjet::json_io::model_from_json(read_json(file));
  }

  static json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw crjet::ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return crjet::json_io::parse_text(ss.str());
  }
};

struct Output {
  std::string out;
  bool text = false;
  bool timing = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--out", out, "Write output to this file");
    auto* j = cmd->add_flag("--json", "JSON output (default)");
    cmd->add_flag("--text", text, "Human-readable output")->excludes(j);
  }

  void emit(const std::string& body) const {
    if (out.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(out);
    if (!f) throw crjet::InputError("cannot write " + out);
    f << body;
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

std::string validation_text(const crjet::ValidationReport& r) {
  std::string s;
  for (std::size_t j = 0; j < r.hermitian.size(); ++j)
    s += "H" + std::to_string(j + 1) + (r.hermitian[j] ? " hermitian\n" : " NOT hermitian\n");
  s += std::string("independent: ") + (r.independent ? "yes" : "no") + "\n";
  s += std::string("trivial common kernel: ") + (r.trivial_common_kernel ? "yes" : "no") + "\n";
  s += "tumanov: ";
  if (r.tumanov) {
    for (std::size_t i = 0; i < r.tumanov->size(); ++i) s += (i ? "," : "") + std::to_string((*r.tumanov)[i]);
    s += "\n";
  } else {
    s += "none found\n";
  }
  s += std::string("isotropy: ") + crjet::to_string(r.isotropy) + "\n";
  for (const auto& n : r.notes) s += "note: " + n + "\n";
  s += std::string("result: ") + (r.ok() ? "ok" : "failed") + "\n";
  return s;
}

std::string prolongation_text(const crjet::ProlongationResult& r) {
  std::string s = "dims:";
  for (const auto& [d, v] : r.dims) s += " g" + std::to_string(d) + "=" + std::to_string(v);
  s += "\ntotal dimension: " + std::to_string(r.algebra.dimension());
  s += "\ntop degree: " + std::to_string(r.top_degree);
  s += "\njet order: " + std::to_string(r.jet_order) + "\n";
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Tanaka prolongation and jet determination for quadric CR models"};
  app.require_subcommand(1);

  ModelSource src;
  Output out;
  int max_degree = 12;
  int degree = 0;
  std::string field_file;
  std::string field_name;
  std::string catalog_name;

  auto* validate = app.add_subcommand("validate", "Check Hermitian symmetry, independence and nondegeneracy");
  src.add_to(validate);
  out.add_to(validate);

  auto* prolong = app.add_subcommand("prolong", "Compute the full prolongation with structure constants");
  src.add_to(prolong);
  out.add_to(prolong);
  prolong->add_option("--max-degree", max_degree, "Give up above this degree")->capture_default_str();

  auto* realize = app.add_subcommand("realize", "Realize the basis of one degree as vector fields");
  src.add_to(realize);
  out.add_to(realize);
  realize->add_option("--degree", degree, "Degree to realize")->required();
  realize->add_option("--max-degree", max_degree, "Give up above this degree")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check that a vector field is an infinitesimal automorphism");
  src.add_to(verify);
  out.add_to(verify);
  verify->add_option("--field", field_file, "Field JSON file");
  verify->add_option("--field-name", field_name, "Known field of the catalog entry");

  auto* report = app.add_subcommand("report", "Full pipeline with certificates");
  src.add_to(report);
  out.add_to(report);
  report->add_option("--max-degree", max_degree, "Give up above this degree")->capture_default_str();
  report->add_flag("--timing", out.timing, "Include wall-clock timing");

  auto* catalog = app.add_subcommand("catalog", "List built-in models or export one");
  catalog->add_option("name", catalog_name, "Entry to export");
  catalog->add_option("--n", src.n, "Parameter of so_family");
  catalog->add_option("--m", src.m, "Parameter of su_family");
  catalog->add_option("--extra", src.extra, "Append this many sphere factors")->check(CLI::NonNegativeNumber);
  catalog->add_option("--out", out.out, "Directory for model and field files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (*validate) {
    const auto m = src.load();
    const auto r = crjet::validate(m);
    if (out.text)
      out.emit(validation_text(r));
    else
      out.emit(crjet::json_io::to_json(r));
    return r.ok() ? kOk : kDomain;
  }

  if (*prolong) {
    const auto r = crjet::prolong_full(src.load(), max_degree);
    if (out.text)
      out.emit(prolongation_text(r));
    else
      out.emit(crjet::json_io::to_json(r));
    return kOk;
  }

  if (*realize) {
    const auto r = crjet::prolong_full(src.load(), max_degree);
    const auto fields = crjet::realize_basis(r, degree);
    if (out.text) {
      std::string s;
      for (std::size_t t = 0; t < fields.size(); ++t) s += "[" + std::to_string(t) + "]\n" + fields[t].str();
      out.emit(s);
    } else {
      json arr = json::array();
      for (const auto& f : fields) arr.push_back(crjet::json_io::to_json(f));
      out.emit(json{{"degree", degree}, {"fields", std::move(arr)}});
    }
    return kOk;
  }

  if (*verify) {
    const auto m = src.load();
    crjet::VectorField f;
    if (!field_file.empty())
      f = crjet::json_io::field_from_json(ModelSource::read_json(field_file));
    else if (!field_name.empty())
      f = src.entry().field(field_name);
    else
      throw crjet::InputError("give --field or --field-name");
    const auto cert = crjet::verify_hol(f, m);
    if (out.text) {
      std::string s = std::string("verdict: ") + (cert.holds() ? "tangent" : "not tangent") + "\n";
      if (!cert.holds())
        for (std::size_t j = 0; j < cert.residuals.size(); ++j)
          s += "residual " + std::to_string(j + 1) + ": " + cert.residuals[j].str() + "\n";
      out.emit(s);
    } else {
      out.emit(crjet::json_io::to_json(cert));
    }
    return cert.holds() ? kOk : kDomain;
  }

  if (*report) {
    const auto m = src.load();
    auto r = crjet::build_report(src.name(), m, max_degree);
    if (!r.validation.ok()) {
      std::cerr << "error: model fails validation; run 'crjet validate' for details\n";
      return kDomain;
    }
    if (src.catalog == "su_family" && src.param().value_or(2) == 2 && src.extra == 0)
      r.notes.push_back("equal to codim5 after reordering the equations as (1, 2, 4, 5, 3)");
    if (out.text)
      out.emit(crjet::to_text(r, out.timing));
    else
      out.emit(crjet::json_io::to_json(r, out.timing));
    return r.ok() ? kOk : kDomain;
  }

  if (*catalog) {
    if (catalog_name.empty()) {
      std::string s;
      for (const auto& n : crjet::catalog_names()) s += n + "\n";
      std::cout << s;
      return kOk;
    }
    const auto e = crjet::catalog_entry(catalog_name, catalog_name == "su_family" ? src.m : src.n, src.extra);
    if (out.out.empty()) {
      std::cout << crjet::json_io::to_json(e.model).dump(2) << "\n";
      return kOk;
    }
    namespace fs = std::filesystem;
    fs::create_directories(out.out);
    auto write = [](const fs::path& p, const json& j) {
      std::ofstream f(p);
      if (!f) throw crjet::InputError("cannot write " + p.string());
      f << j.dump(2) << "\n";
    };
    write(fs::path(out.out) / (catalog_name + ".json"), crjet::json_io::to_json(e.model));
    for (const auto& nf : e.known_fields)
      write(fs::path(out.out) / (catalog_name + "." + nf.name + ".field.json"), crjet::json_io::to_json(nf.field));
    return kOk;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const crjet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const crjet::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const crjet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
