#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "etp/identities.hpp"
#include "etp/multipoly.hpp"

namespace etp {

enum class OutputFormat { text, json, csv, latex };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// "12*x^2-12", "x-1/2", "0". Uses `*` and `^` only, so the text re-parses
/// unambiguously.
std::string to_text(const MultiPoly& p);

/// "12x^{2}-12", "x-\frac{1}{2}". Unit coefficients are omitted.
std::string to_latex(const MultiPoly& p);

/// Family metadata carried by a PolyDocument.
struct PolyMetadata {
  std::string family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

/// PolyDocument:
///   {"vars": ["x","y"],
///    "terms": [{"coef": {"num": "12", "den": "1"}, "exp": [2, 0]}, ...],
///    "metadata": {"family": ..., ...}}
/// Terms are graded-lex descending with no zero coefficients.
nlohmann::ordered_json to_json(const MultiPoly& p, const PolyMetadata& meta = {});

/// Inverse of to_json. Accepts any term order and merges duplicates.
/// Throws std::invalid_argument on schema violations (bad vars, den <= 0,
/// non-decimal strings, negative exponents).
MultiPoly poly_from_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const GridResult& result);

/// "N passed, M failed".
std::string summary_line(const GridResult& result);

}  // namespace etp
