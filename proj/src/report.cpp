#include "lieaid/report.hpp"

#include <sstream>

namespace lieaid {

using nlohmann::json;

json vector_to_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Vector vector_from_json(Field f, const json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(x.is_string() ? Scalar::parse(f, x.get<std::string>()) : Scalar(f, x.get<long>()));
  return v;
}

json subspace_to_json(const Subspace& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(vector_to_json(s.basis().row(i)));
  return out;
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::certified: return "certified";
    case VerdictKind::refuted: return "refuted";
    case VerdictKind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

VerdictKind verdict_from_name(const std::string& s) {
  if (s == "certified") return VerdictKind::certified;
  if (s == "refuted") return VerdictKind::refuted;
  if (s == "inconclusive") return VerdictKind::inconclusive;
  throw InputError("unknown verdict '" + s + "'");
}

std::string method_name(CertMethod m) {
  switch (m) {
    case CertMethod::minors: return "minors";
    case CertMethod::exhaustive: return "exhaustive";
    case CertMethod::automatic: break;
  }
  return "auto";
}

CertMethod method_from_name(const std::string& s) {
  if (s == "minors") return CertMethod::minors;
  if (s == "exhaustive") return CertMethod::exhaustive;
  if (s == "auto") return CertMethod::automatic;
  throw InputError("unknown method '" + s + "'");
}

json verdict_to_json(const CandidateVerdict& v, std::span<const Scalar> derivation) {
  json j;
  j["derivation"] = vector_to_json(derivation);
  j["verdict"] = verdict_name(v.kind);
  j["method"] = v.method;
  if (!v.steps.empty()) {
    json steps = json::array();
    for (const auto& s : v.steps) {
      json sj{{"r", s.r}, {"holds", s.holds}, {"minors_tested", s.minors_tested}};
      if (!s.holds) sj["failing_minor"] = s.failing_minor;
      steps.push_back(sj);
    }
    j["minors"] = steps;
  }
  if (v.witness) j["witness"] = vector_to_json(*v.witness);
  if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.fails_at_r1) j["fails_at_r1"] = true;
  j["points"] = v.points;
  return j;
}

CandidateVerdict verdict_from_json(Field f, const json& j) {
  CandidateVerdict v;
  v.kind = verdict_from_name(j.at("verdict").get<std::string>());
  v.method = j.at("method").get<std::string>();
  if (j.contains("minors"))
    for (const auto& s : j["minors"]) {
      MinorsStep step;
      step.r = s.at("r").get<std::size_t>();
      step.holds = s.at("holds").get<bool>();
      step.minors_tested = s.at("minors_tested").get<std::size_t>();
      step.failing_minor = s.value("failing_minor", "");
      v.steps.push_back(std::move(step));
    }
  if (j.contains("witness")) v.witness = vector_from_json(f, j["witness"]);
  if (j.contains("obstruction")) v.obstruction = j["obstruction"].get<std::vector<std::string>>();
  v.reason = j.value("reason", "");
  v.fails_at_r1 = j.value("fails_at_r1", false);
  v.points = j.value("points", std::uint64_t{0});
  return v;
}

}  // namespace

json config_to_json(const AidConfig& c) {
  return json{{"seed", c.seed},
              {"probe_budget", c.probe_budget},
              {"patience", c.patience},
              {"minors_limit", c.minors_limit},
              {"scan_budget", c.scan_budget},
              {"grid_height", c.grid_height},
              {"method", method_name(c.method)}};
}

json report_to_json(const CertificationReport& r, bool timings) {
  json j;
  j["algebra"] = r.algebra;
  j["field"] = field_to_json(r.field);
  j["seed"] = r.config.seed;
  j["config"] = config_to_json(r.config);
  j["dims"] = json{{"der", r.der_dim},
                   {"inn", r.inn_dim},
                   {"complement", r.complement_dim},
                   {"refined", r.refined_dim},
                   {"aid_lower", r.aid_lower},
                   {"aid_upper", r.aid_upper}};
  j["complete"] = r.complete();
  j["probes"] = r.probes;
  j["refine_dims"] = r.refine_dims;
  json refs = json::array();
  for (const auto& ref : r.refutations)
    refs.push_back(json{{"candidate", vector_to_json(ref.candidate)},
                        {"witness", vector_to_json(ref.witness)},
                        {"method", ref.method},
                        {"v_dim_after", ref.v_dim_after}});
  j["refutations"] = refs;
  json cands = json::array();
  for (std::size_t c = 0; c < r.verdicts.size(); ++c) cands.push_back(verdict_to_json(r.verdicts[c], r.candidates[c]));
  j["candidates"] = cands;
  j["scan"] = json{{"points", r.points_scanned}, {"kernel", r.scan_kernel}};
  if (timings) j["timings"] = json{{"seconds", r.seconds}};
  return j;
}

CertificationReport report_from_json(const json& j) {
  try {
    CertificationReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.field = field_from_json(j.at("field"));
    const auto& c = j.at("config");
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.probe_budget = c.at("probe_budget").get<std::size_t>();
    r.config.patience = c.at("patience").get<std::size_t>();
    r.config.minors_limit = c.at("minors_limit").get<std::size_t>();
    r.config.scan_budget = c.at("scan_budget").get<std::uint64_t>();
    r.config.grid_height = c.at("grid_height").get<int>();
    r.config.method = method_from_name(c.at("method").get<std::string>());
    const auto& d = j.at("dims");
    r.der_dim = d.at("der").get<std::size_t>();
    r.inn_dim = d.at("inn").get<std::size_t>();
    r.complement_dim = d.at("complement").get<std::size_t>();
    r.refined_dim = d.at("refined").get<std::size_t>();
    r.aid_lower = d.at("aid_lower").get<std::size_t>();
    r.aid_upper = d.at("aid_upper").get<std::size_t>();
    r.probes = j.at("probes").get<std::size_t>();
    r.refine_dims = j.at("refine_dims").get<std::vector<std::size_t>>();
    for (const auto& ref : j.at("refutations"))
      r.refutations.push_back(Refutation{vector_from_json(r.field, ref.at("candidate")),
                                         vector_from_json(r.field, ref.at("witness")),
                                         ref.at("method").get<std::string>(), ref.at("v_dim_after").get<std::size_t>()});
    for (const auto& cand : j.at("candidates")) {
      r.candidates.push_back(vector_from_json(r.field, cand.at("derivation")));
      r.verdicts.push_back(verdict_from_json(r.field, cand));
    }
    r.points_scanned = j.at("scan").at("points").get<std::uint64_t>();
    r.scan_kernel = j.at("scan").at("kernel").get<std::string>();
    if (j.contains("timings")) r.seconds = j["timings"].at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

json quotient_to_json(const QuotientAlgebra& q) {
  json j;
  j["dim"] = q.table.dim();
  j["abelian"] = is_abelian(q);
  j["representatives_closed"] = q.reps_closed;
  json reps = json::array();
  for (const auto& r : q.coset_reps) reps.push_back(vector_to_json(r));
  j["coset_reps"] = reps;
  j["table"] = to_json(q.table);
  return j;
}

namespace {

void render(std::ostringstream& os, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& arr) {
    for (const auto& x : arr)
      if (x.is_structured()) return false;
    return true;
  };
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        os << pad << key << ":\n";
        render(os, v, indent + 1);
      } else if (v.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << key << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      const auto& v = value[i];
      if (v.is_structured() && !(v.is_array() && flat(v))) {
        os << pad << "- [" << i + 1 << "]\n";
        render(os, v, indent + 1);
      } else if (v.is_array()) {
        os << pad << "- [";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
        os << "]\n";
      } else {
        os << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(value) << "\n";
  }
}

}  // namespace

std::string emit_report(const json& doc, OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump(2) + "\n";
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace lieaid
