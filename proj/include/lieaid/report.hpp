#pragma once

// JSON and text rendering of pipeline results.

#include <string>

#include <json.hpp>

#include "lieaid/aidcert.hpp"
#include "lieaid/sha.hpp"

namespace lieaid {

enum class OutputFormat { text, json };

nlohmann::json vector_to_json(std::span<const Scalar> v);
Vector vector_from_json(Field f, const nlohmann::json& j);
nlohmann::json subspace_to_json(const Subspace& s);

std::string verdict_name(VerdictKind k);
nlohmann::json config_to_json(const AidConfig& c);

/// The certification report; timings only when requested so that reports
/// are reproducible byte for byte.
nlohmann::json report_to_json(const CertificationReport& r, bool timings = false);
CertificationReport report_from_json(const nlohmann::json& j);

nlohmann::json quotient_to_json(const QuotientAlgebra& q);

/// JSON documents are pretty-printed; text mode renders the same document
/// as indented "key: value" lines.
std::string emit_report(const nlohmann::json& doc, OutputFormat format);

}  // namespace lieaid
