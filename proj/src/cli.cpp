#include "lieaid/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lieaid/report.hpp"

namespace lieaid::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  AidConfig aid;
  OutputFormat format = OutputFormat::text;
  bool skip_validate = false;
  bool timings = false;
  std::string target;       // extend --to
  std::string output_path;  // extend -o
  std::string candidates_path;
  std::string catalog_name;
};

StructureTable load_input(const std::string& input, bool skip_validate) {
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    if (!in) throw InputError("cannot open '" + input + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError("malformed JSON in '" + input + "': " + e.what());
    }
    return table_from_json(j, skip_validate);
  }
  return catalog(input);
}

json header(const RunConfig& cfg, const StructureTable& t) {
  json j;
  j["command"] = cfg.command;
  j["algebra"] = t.name();
  j["field"] = field_to_json(t.field());
  j["dim"] = t.dim();
  return j;
}

json aid_document(const RunConfig& cfg, const AidResult& res) {
  json j = report_to_json(res.report, cfg.timings);
  j["command"] = cfg.command;
  if (res.report.complete())
    j["aid_dim"] = res.report.aid_upper;
  else
    j["aid_dim"] = json::array({res.report.aid_lower, res.report.aid_upper});
  return j;
}

std::vector<Vector> load_candidates(const std::string& path, const StructureTable& t) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<Vector> out;
  try {
    json j = json::parse(in);
    if (!j.is_array()) throw InputError("candidate file must hold an array of flattened derivations");
    for (const auto& c : j) out.push_back(vector_from_json(t.field(), c));
  } catch (const json::exception& e) {
    throw InputError("malformed candidate file: " + std::string(e.what()));
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (out[c].size() != t.dim() * t.dim())
      throw InputError("candidate " + std::to_string(c + 1) + " does not have n^2 entries");
    if (!is_derivation(t, unflatten(out[c], t.dim())))
      throw InputError("candidate " + std::to_string(c + 1) + " is not a derivation");
  }
  return out;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto emit = [&](const json& doc) { out << emit_report(doc, cfg.format); };

  if (cfg.command == "catalog list") {
    emit(json{{"command", "catalog list"}, {"algebras", catalog_names()}});
    return ok;
  }
  if (cfg.command == "catalog show") {
    emit(to_json(catalog(cfg.catalog_name)));
    return ok;
  }

  if (cfg.command == "validate") {
    StructureTable t = load_input(cfg.input, true);
    json doc = header(cfg, t);
    auto bad = validate(t);
    doc["valid"] = !bad;
    if (bad) {
      doc["violation"] = json{{"i", bad->i}, {"j", bad->j}, {"k", bad->k}, {"value", vector_to_json(bad->value)}};
      emit(doc);
      err << "Jacobi identity fails on (" << bad->i << ", " << bad->j << ", " << bad->k << ")\n";
      return input_error;
    }
    emit(doc);
    return ok;
  }

  StructureTable t = load_input(cfg.input, cfg.skip_validate);

  if (cfg.command == "extend") {
    StructureTable big = extend_scalars(t, Field::parse(cfg.target));
    const std::string text = to_json(big).dump(2) + "\n";
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output_path);
      if (!f) throw InputError("cannot write '" + cfg.output_path + "'");
      f << text;
    }
    return ok;
  }

  if (cfg.command == "der" || cfg.command == "inn" || cfg.command == "center") {
    Subspace s = cfg.command == "der" ? compute_der(t) : cfg.command == "inn" ? compute_inn(t) : center(t);
    json doc = header(cfg, t);
    doc[cfg.command + "_dim"] = s.dim();
    doc["basis"] = subspace_to_json(s);
    emit(doc);
    return ok;
  }

  if (cfg.command == "out") {
    DerivationSpaces sp = compute_spaces(t);
    QuotientAlgebra q = build_quotient(sp.der, sp.inn, t, sp.complement_u.basis_vectors(), t.name() + "/out");
    json doc = header(cfg, t);
    doc["der_dim"] = sp.der.dim();
    doc["inn_dim"] = sp.inn.dim();
    doc["out"] = quotient_to_json(q);
    emit(doc);
    return ok;
  }

  if (cfg.command == "certify") {
    std::vector<Vector> cands;
    if (cfg.candidates_path.empty()) {
      DerivationSpaces sp = compute_spaces(t);
      ProbePlan plan;
      plan.seed = cfg.aid.seed;
      plan.budget = cfg.aid.probe_budget;
      plan.patience = cfg.aid.patience;
      cands = refine_candidates(sp, t, plan).v.basis_vectors();
    } else {
      cands = load_candidates(cfg.candidates_path, t);
    }
    json doc = header(cfg, t);
    doc["seed"] = cfg.aid.seed;
    doc["config"] = config_to_json(cfg.aid);
    json list = json::array();
    bool open = false;
    if (!cands.empty()) {
      SymbolicSystem sys = build_symbolic(t, cands);
      std::vector<CandidateVerdict> verdicts;
      const bool scan = cfg.aid.method == CertMethod::exhaustive ||
                        (cfg.aid.method == CertMethod::automatic && t.field().is_finite() &&
                         projective_point_count(t.field(), t.dim()) <= cfg.aid.scan_budget);
      if (scan) {
        verdicts = exhaustive_verify(sys, ScanOptions{cfg.aid.threads, cfg.aid.scan_budget, ScanKernel::automatic});
      } else {
        WitnessOptions w;
        w.grid_height = cfg.aid.grid_height;
        w.scan_budget = cfg.aid.scan_budget;
        w.threads = cfg.aid.threads;
        for (std::size_t c = 0; c < cands.size(); ++c)
          verdicts.push_back(certify_minors(sys, c, cfg.aid.minors_limit, w));
      }
      for (std::size_t c = 0; c < cands.size(); ++c) {
        open = open || verdicts[c].kind == VerdictKind::inconclusive;
        json v{{"derivation", vector_to_json(cands[c])},
               {"verdict", verdict_name(verdicts[c].kind)},
               {"method", verdicts[c].method}};
        if (verdicts[c].witness) v["witness"] = vector_to_json(*verdicts[c].witness);
        if (!verdicts[c].steps.empty()) {
          json steps = json::array();
          for (const auto& s : verdicts[c].steps) steps.push_back(json{{"r", s.r}, {"holds", s.holds}});
          v["minors"] = steps;
        }
        if (!verdicts[c].obstruction.empty()) v["obstruction"] = verdicts[c].obstruction;
        if (!verdicts[c].reason.empty()) v["reason"] = verdicts[c].reason;
        list.push_back(v);
      }
    }
    doc["candidates"] = list;
    emit(doc);
    return open ? inconclusive : ok;
  }

  AidResult res = compute_aid(t, cfg.aid);
  json doc = aid_document(cfg, res);
  const bool complete = res.report.complete();

  if (cfg.command == "caid") {
    Subspace caid = compute_caid(t, res.aid_lower);
    doc["caid_dim"] = caid.dim();
    doc["caid_basis"] = subspace_to_json(caid);
    if (!complete) doc["caid_note"] = "computed from the certified lower bound of AID";
  } else if (cfg.command == "sha") {
    if (complete) {
      QuotientAlgebra q =
          build_quotient(res.aid_upper, res.spaces.inn, t, res.candidates.basis_vectors(), t.name() + "/sha");
      doc["sha"] = quotient_to_json(q);
      doc["sha_dim"] = q.table.dim();
      doc["abelian"] = is_abelian(q);
    } else {
      doc["sha"] = nullptr;
      doc["sha_note"] = "AID is not fully certified";
    }
  }
  emit(doc);
  return complete ? ok : inconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost-inner derivations of Lie algebras given by structure constants", "lieaid"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.aid.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";
  std::string method = "auto";
  app.add_option("--seed", cfg.aid.seed, "Seed for random probes")->capture_default_str();
  app.add_option("--probe-budget", cfg.aid.probe_budget, "Maximum number of probes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--patience", cfg.aid.patience, "Stable random probes before refinement stops")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--minors-limit", cfg.aid.minors_limit, "Largest trimmed size for the minors method")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--scan-budget", cfg.aid.scan_budget, "Largest number of projective points to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--grid-height", cfg.aid.grid_height, "Height bound of the witness grid over Q and Q(i)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", cfg.aid.threads, "Scan threads")->check(CLI::PositiveNumber);
  app.add_option("--method", method, "Certification method")
      ->check(CLI::IsMember({"auto", "minors", "exhaustive"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--skip-validate", cfg.skip_validate, "Do not check the Jacobi identity on input");
  app.add_flag("--timings", cfg.timings, "Include wall-clock timings in reports");

  const std::vector<std::pair<std::string, std::string>> simple = {
      {"validate", "Check the Jacobi identity"},
      {"der", "Derivation algebra Der(g)"},
      {"inn", "Inner derivations Inn(g)"},
      {"center", "Centre of g"},
      {"aid", "Almost-inner derivations AID(g) with certification report"},
      {"caid", "Central almost-inner derivations"},
      {"sha", "The quotient AID(g)/Inn(g)"},
      {"out", "The quotient Der(g)/Inn(g)"},
      {"certify", "Certify candidate derivations"},
  };
  for (const auto& [name, help] : simple) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Structure-constant JSON file or catalog name")->required();
    sub->callback([&cfg, name = name] { cfg.command = name; });
    if (name == "certify")
      sub->add_option("--candidates", cfg.candidates_path, "JSON array of flattened derivations");
  }
  auto* extend = app.add_subcommand("extend", "Extend scalars of an algebra");
  extend->add_option("input", cfg.input, "Structure-constant JSON file or catalog name")->required();
  extend->add_option("--to", cfg.target, "Target field, e.g. GF(27) or Q(i)")->required();
  extend->add_option("-o,--output", cfg.output_path, "Output file (default: standard output)");
  extend->callback([&cfg] { cfg.command = "extend"; });

  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries")->callback([&cfg] { cfg.command = "catalog list"; });
  auto* show = cat->add_subcommand("show", "Print an entry as structure-constant JSON");
  show->add_option("name", cfg.catalog_name)->required();
  show->callback([&cfg] { cfg.command = "catalog show"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  cfg.aid.method = method == "minors" ? CertMethod::minors
                   : method == "exhaustive" ? CertMethod::exhaustive
                                            : CertMethod::automatic;

  try {
    return execute(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace lieaid::cli
