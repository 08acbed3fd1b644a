#include "ringlab/cli.hpp"

#include "ringlab/catalog.hpp"
#include "ringlab/classifier.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/element_analysis.hpp"
#include "ringlab/error.hpp"
#include "ringlab/theorem_suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ringlab {

namespace {

struct RunConfig {
  std::string spec_path;
  std::string catalog_path;
  std::string label;
  bool json = false;
  bool elements = false;
  std::size_t threshold = BuildOptions{}.materialize_threshold;
  std::size_t count_limit = LatticeOptions{}.count_limit;
  unsigned jobs = 0;
  UscReading reading = UscReading::ExactlyOne;
  std::vector<std::string> theorems;

  BuildOptions build() const {
    BuildOptions o;
    o.materialize_threshold = threshold;
    return o;
  }
  ClassifyOptions classify() const {
    ClassifyOptions o;
    o.usc_reading = reading;
    o.lattice.count_limit = count_limit;
    return o;
  }
};

/// Bad input that maps to the usage exit status.
struct UsageError : Error {
  using Error::Error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("$", std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

RingHandle load_ring(const RunConfig& cfg) {
  return build(spec_from_json(read_json(cfg.spec_path)), cfg.build());
}

Catalog load_catalog(const RunConfig& cfg) {
  if (cfg.catalog_path.empty()) return default_catalog(cfg.build());
  return build_catalog(catalog_from_json(read_json(cfg.catalog_path)), cfg.build());
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string mark(bool b) { return b ? "yes" : "no"; }

// ---- commands ---------------------------------------------------------------

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const auto r = load_ring(cfg);
  const bool list = r->order() <= 64;
  if (cfg.json) {
    Json j = {{"name", display_name(r->spec())},
              {"order", r->order()},
              {"zero", r->label(r->zero())},
              {"one", r->label(r->one())},
              {"materialized", r->materialized()},
              {"spec", to_json(r->spec())}};
    if (list) j["elements"] = r->labels();
    print_json(out, j);
    return kExitOk;
  }
  out << "ring   " << display_name(r->spec()) << '\n'
      << "order  " << r->order() << '\n'
      << "zero   " << r->label(r->zero()) << '\n'
      << "one    " << r->label(r->one()) << '\n'
      << "tables " << (r->materialized() ? "materialized" : "lazy") << '\n';
  if (list)
    for (Elem a : r->elements()) out << "  " << std::setw(4) << a << "  " << r->label(a) << '\n';
  return kExitOk;
}

void print_classification_table(std::ostream& out, const Classification& c) {
  const Json j = to_json(c);
  for (const auto& [key, value] : j.items()) {
    if (key == "witnesses") continue;
    out << std::left << std::setw(22) << key << (value.is_boolean() ? mark(value.get<bool>())
                                                                   : value.get<std::string>())
        << '\n';
  }
  for (const auto& [field, labels] : c.witnesses) {
    out << "witness " << field << ':';
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  }
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto r = load_ring(cfg);
  const auto a = RingAnalysis::analyze(r, cfg.classify());
  if (cfg.json) {
    Json j = {{"ring", display_name(r->spec())}, {"order", r->order()},
              {"classification", to_json(a.cls)}};
    if (cfg.elements) {
      Json rows = Json::array();
      for (const auto& p : classify_element_summary(*r, a.inv, cfg.reading)) rows.push_back(to_json(*r, p));
      j["elements"] = rows;
    }
    print_json(out, j);
    return kExitOk;
  }
  out << display_name(r->spec()) << " (order " << r->order() << ")\n";
  print_classification_table(out, a.cls);
  if (cfg.elements) {
    out << '\n' << std::left << std::setw(24) << "element" << "clean  strong  uc   usc  decompositions\n";
    for (const auto& p : classify_element_summary(*r, a.inv, cfg.reading))
      out << std::setw(24) << r->label(p.element) << std::setw(7) << mark(p.is_clean)
          << std::setw(8) << mark(p.is_strongly_clean) << std::setw(5) << mark(p.is_uniquely_clean)
          << std::setw(5) << mark(p.is_usc) << p.clean.size() << '\n';
  }
  return kExitOk;
}

int cmd_element(const RunConfig& cfg, std::ostream& out) {
  const auto r = load_ring(cfg);
  const auto x = r->find_label(cfg.label);
  if (!x) throw UsageError("no element labelled '" + cfg.label + "' in " + display_name(r->spec()));
  const auto inv = InvariantCache::compute(*r);
  const auto p = profile_element(*r, inv, *x, cfg.reading);
  if (cfg.json) {
    print_json(out, to_json(*r, p));
    return kExitOk;
  }
  out << "element " << r->label(*x) << " of " << display_name(r->spec()) << '\n'
      << "clean " << mark(p.is_clean) << ", strongly clean " << mark(p.is_strongly_clean)
      << ", uniquely clean " << mark(p.is_uniquely_clean) << ", usc " << mark(p.is_usc) << '\n'
      << p.clean.size() << " decomposition" << (p.clean.size() == 1 ? "" : "s") << '\n';
  for (const auto& d : p.clean)
    out << "  e = " << r->label(d.idempotent) << "   u = " << r->label(d.unit)
        << (d.commuting ? "   commuting" : "") << '\n';
  return kExitOk;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  const auto catalog = load_catalog(cfg);
  static const char* columns[] = {"is_clean", "is_strongly_clean", "is_UC", "is_USC", "is_CUC",
                                  "is_CUSC",  "is_UUC",            "is_UUSC", "is_abelian"};
  if (cfg.json) {
    Json rings = Json::array();
    for (const auto& e : catalog.entries) {
      const auto a = RingAnalysis::analyze(e.ring, cfg.classify());
      rings.push_back({{"name", e.name},
                       {"order", e.ring->order()},
                       {"spec", to_json(*e.spec)},
                       {"classification", to_json(a.cls)}});
    }
    print_json(out, Json{{"rings", rings}});
    return kExitOk;
  }
  std::size_t width = 4;
  for (const auto& e : catalog.entries) width = std::max(width, e.name.size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "ring" << std::setw(7) << "order";
  for (const char* c : columns) out << std::setw(static_cast<int>(std::string_view(c).size() - 1)) << c + 3;
  out << '\n';
  for (const auto& e : catalog.entries) {
    const auto a = RingAnalysis::analyze(e.ring, cfg.classify());
    out << std::setw(static_cast<int>(width + 2)) << e.name << std::setw(7) << e.ring->order();
    for (const char* c : columns)
      out << std::setw(static_cast<int>(std::string_view(c).size() - 1)) << (*a.cls.get(c) ? "y" : "-");
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  for (const auto& id : cfg.theorems)
    if (!is_known_theorem(id)) throw UsageError("unknown theorem id: " + id);
  SuiteOptions opts;
  opts.jobs = cfg.jobs;
  opts.build = cfg.build();
  opts.classify = cfg.classify();
  const auto report = run_suite(load_catalog(cfg), cfg.theorems, opts);
  if (cfg.json) print_json(out, to_json(report));
  else out << to_table(report);
  return report.any_fail() ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite rings: construction, clean-type classification and theorem checks", "ringlab"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, UscReading> readings = {{"exact-one", UscReading::ExactlyOne},
                                                      {"at-most-one", UscReading::AtMostOne}};
  app.add_flag("--json", cfg.json, "Emit JSON instead of a table");
  app.add_option("--threshold", cfg.threshold, "Largest order with fully materialized tables")
      ->envname("RINGLAB_THRESHOLD")
      ->check(CLI::PositiveNumber);
  app.add_option("--count-limit", cfg.count_limit, "Cap on enumerated one-sided ideals")
      ->check(CLI::PositiveNumber);
  app.add_option("--usc-reading", cfg.reading, "exact-one or at-most-one")
      ->transform(CLI::CheckedTransformer(readings, CLI::ignore_case));

  auto* build_cmd = app.add_subcommand("build", "Build a ring from a spec file and list its elements");
  build_cmd->add_option("--spec", cfg.spec_path, "RingSpec JSON file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a ring");
  classify_cmd->add_option("--spec", cfg.spec_path, "RingSpec JSON file")->required();
  classify_cmd->add_flag("--elements", cfg.elements, "Append the per-element summary");

  auto* element_cmd = app.add_subcommand("element", "Decompositions of a single element");
  element_cmd->add_option("--spec", cfg.spec_path, "RingSpec JSON file")->required();
  element_cmd->add_option("--label", cfg.label, "Element label as printed by build")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Classify every ring of a catalog");
  catalog_cmd->add_option("--catalog", cfg.catalog_path, "Catalog manifest (default: built-in)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks over a catalog");
  verify_cmd->add_option("--catalog", cfg.catalog_path, "Catalog manifest (default: built-in)");
  verify_cmd->add_option("--theorem", cfg.theorems, "Check ids, comma separated")->delimiter(',');
  verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads (0: hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return cmd_build(cfg, out);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*element_cmd) return cmd_element(cfg, out);
    if (*catalog_cmd) return cmd_catalog(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const SpecError& e) {
    err << "ringlab: invalid spec at " << e.what() << '\n';
  } catch (const Error& e) {
    err << "ringlab: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace ringlab
