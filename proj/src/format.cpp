#include "etp/format.hpp"

#include <cctype>
#include <stdexcept>

namespace etp {

namespace {

using nlohmann::ordered_json;

std::string text_monomial(const Exponent& e) {
  std::string s;
  auto append = [&s](char var, std::uint32_t k) {
    if (k == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (k > 1) s += '^' + std::to_string(k);
  };
  append('x', e.ex);
  append('y', e.ey);
  return s;
}

std::string latex_monomial(const Exponent& e) {
  std::string s;
  auto append = [&s](char var, std::uint32_t k) {
    if (k == 0) return;
    s += var;
    if (k > 1) s += "^{" + std::to_string(k) + "}";
  };
  append('x', e.ex);
  append('y', e.ey);
  return s;
}

std::string latex_magnitude(const Rational& c) {
  if (c.is_integer()) return c.str();
  return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

template <typename MonomialFn, typename MagnitudeFn>
std::string render(const MultiPoly& p, MonomialFn monomial, MagnitudeFn magnitude, std::string_view times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const Rational abs_c = negative ? -c : c;
    const std::string mono = monomial(e);
    if (mono.empty()) {
      out += magnitude(abs_c);
    } else if (abs_c.is_one()) {
      out += mono;
    } else {
      out += magnitude(abs_c);
      out += times;
      out += mono;
    }
  }
  return out;
}

bool is_decimal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && s[0] == '-') i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

ordered_json params_json(const ParamList& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::string to_text(const MultiPoly& p) {
  return render(p, text_monomial, [](const Rational& c) { return c.str(); }, "*");
}

std::string to_latex(const MultiPoly& p) { return render(p, latex_monomial, latex_magnitude, ""); }

ordered_json to_json(const MultiPoly& p, const PolyMetadata& meta) {
  ordered_json doc;
  doc["vars"] = {"x", "y"};
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coef", {{"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}}},
                     {"exp", {e.ex, e.ey}}});
  }
  doc["terms"] = std::move(terms);
  ordered_json metadata = ordered_json::object();
  if (!meta.family.empty()) metadata["family"] = meta.family;
  for (const auto& [k, v] : meta.params.items()) metadata[k] = v;
  doc["metadata"] = std::move(metadata);
  return doc;
}

MultiPoly poly_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("PolyDocument must be a JSON object");
  if (!doc.contains("vars") || doc["vars"] != ordered_json({"x", "y"})) {
    throw std::invalid_argument("PolyDocument vars must be [\"x\", \"y\"]");
  }
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw std::invalid_argument("PolyDocument needs a terms array");

  MultiPoly p;
  for (const auto& term : doc["terms"]) {
    const auto& coef = term.at("coef");
    const auto& exp = term.at("exp");
    if (!coef.at("num").is_string() || !coef.at("den").is_string()) {
      throw std::invalid_argument("coefficients must be decimal strings");
    }
    const std::string num = coef["num"].get<std::string>();
    const std::string den = coef["den"].get<std::string>();
    if (!is_decimal(num, true) || !is_decimal(den, false)) throw std::invalid_argument("malformed coefficient");
    const BigInt d(den, 10);
    if (d < 1) throw std::invalid_argument("denominator must be >= 1");
    if (!exp.is_array() || exp.size() != 2 || !exp[0].is_number_unsigned() || !exp[1].is_number_unsigned()) {
      throw std::invalid_argument("exp must be two non-negative integers");
    }
    p.add_term(Exponent{exp[0].get<std::uint32_t>(), exp[1].get<std::uint32_t>()}, Rational(BigInt(num, 10), d));
  }
  return p;
}

ordered_json to_json(const IdentityReport& report) {
  return {{"id", std::string(identity_name(report.id))},
          {"params", params_json(report.params)},
          {"passed", report.passed},
          {"lhs", to_text(report.lhs)},
          {"rhs", to_text(report.rhs)},
          {"residual", to_json(report.residual)}};
}

ordered_json to_json(const GridResult& result) {
  ordered_json j;
  j["passed"] = result.passed;
  j["failed"] = result.failed;
  if (result.t7_variant) {
    j["t7_variant"] = std::string(t7_variant_name(*result.t7_variant));
    j["t7_verified"] = result.t7_verified;
  }
  ordered_json failures = ordered_json::array();
  for (const auto& f : result.failures) failures.push_back(to_json(f));
  j["failures"] = std::move(failures);
  return j;
}

std::string summary_line(const GridResult& result) {
  return std::to_string(result.passed) + " passed, " + std::to_string(result.failed) + " failed";
}

}  // namespace etp
