#pragma once

#include <string>

#include <json.hpp>

#include "evoder/analysis.hpp"

namespace evoder {

using Json = nlohmann::ordered_json;

// JSON fragments. Indices are 1-based and every rational is a "p/q" string.
Json to_json(const Rational& value);
Json to_json(const RationalMatrix& matrix);
Json to_json(const TwinPartition& partition);
Json to_json(const ZeroCertificate& certificate);
Json to_json(const DerivationSpace& space);
Json to_json(const TypeMatch& match);
Json to_json(const TemplateCheck& check);
Json to_json(const LeibnizCheck& check);
Json conflicts_json(const std::vector<StructuralConflict>& conflicts);

/// The complete report with stable key order; identical analyses give identical bytes.
Json report_json(const Analysis& analysis);
std::string emit_report(const Analysis& analysis);

/// Serializes with the fixed indentation used by every command.
std::string dump(const Json& json);

/// Matrix as right-aligned columns of fractions, one row per line.
std::string format_aligned(const RationalMatrix& matrix, const std::string& indent = "  ");

}  // namespace evoder
