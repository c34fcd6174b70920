#include "etp/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace etp::cli {

namespace {

using nlohmann::ordered_json;

/// Thrown for any argument the commands reject; mapped to kExitUsage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

unsigned non_negative(std::int64_t value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be non-negative");
  if (value > 100000) throw UsageError(std::string(flag) + " is out of range");
  return static_cast<unsigned>(value);
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

FamilyKind parse_family_flag(const std::string& name) {
  const auto kind = parse_family(name);
  if (!kind) throw UsageError("unknown family '" + name + "'");
  return *kind;
}

OutputFormat parse_format_flag(const std::string& name) {
  const auto f = parse_output_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

void require_lambda_valid(const Rational& lambda) {
  if (lambda == Rational(1)) throw UsageError("--lambda must not be 1");
}

MultiPoly family_value(FamilyTable& fam, FamilyKind family, unsigned m, unsigned n, unsigned r,
                       const Rational& lambda) {
  switch (family) {
    case FamilyKind::TruncatedEuler: return fam.truncated_euler(m, n);
    case FamilyKind::TruncatedEulerNumber: return MultiPoly(fam.truncated_euler_number(m, n));
    case FamilyKind::HypergeomBernoulli: return fam.hypergeom_bernoulli(m, n);
    case FamilyKind::ClassicalBernoulli: return fam.bernoulli(n);
    case FamilyKind::ClassicalEuler: return fam.euler(n);
    case FamilyKind::FrobeniusEuler: return fam.frobenius_euler(n, r, lambda);
  }
  throw std::logic_error("unhandled family");
}

std::string latex_symbol(FamilyKind family, unsigned m, unsigned n, unsigned r, const Rational& lambda) {
  const std::string mn = "{" + std::to_string(m) + "," + std::to_string(n) + "}";
  const std::string sn = "{" + std::to_string(n) + "}";
  switch (family) {
    case FamilyKind::TruncatedEuler: return "E_" + mn + "(x)";
    case FamilyKind::TruncatedEulerNumber: return "E_" + mn;
    case FamilyKind::HypergeomBernoulli: return "B_" + mn + "(x)";
    case FamilyKind::ClassicalBernoulli: return "B_" + sn + "(x)";
    case FamilyKind::ClassicalEuler: return "E_" + sn + "(x)";
    case FamilyKind::FrobeniusEuler:
      return "H_" + sn + "^{(" + std::to_string(r) + ")}(x|" + to_latex(MultiPoly(lambda)) + ")";
  }
  return "";
}

ordered_json metadata_params(FamilyKind family, unsigned m, unsigned n, unsigned r, const Rational& lambda) {
  ordered_json p = ordered_json::object();
  if (family_uses_m(family)) p["m"] = m;
  p["n"] = n;
  if (family == FamilyKind::FrobeniusEuler) {
    p["r"] = r;
    p["lambda"] = lambda.str();
  }
  return p;
}

std::string csv_row(FamilyKind family, unsigned m, unsigned n, const std::string& value) {
  std::string row = family_uses_m(family) ? std::to_string(m) + "," : "";
  return row + std::to_string(n) + "," + value + "\n";
}

std::string csv_header(FamilyKind family) { return family_uses_m(family) ? "m,n,polynomial\n" : "n,polynomial\n"; }

std::string render_params(const ParamList& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

}  // namespace

CommandResult cmd_compute(FamilyTable& fam, const ComputeOptions& opts) {
  if (opts.family == FamilyKind::FrobeniusEuler) require_lambda_valid(opts.lambda);
  MultiPoly value = family_value(fam, opts.family, opts.m, opts.n, opts.r, opts.lambda);
  if (opts.at) value = MultiPoly(value.evaluate(*opts.at));

  CommandResult res;
  switch (opts.format) {
    case OutputFormat::text: res.out = to_text(value) + "\n"; break;
    case OutputFormat::latex: res.out = to_latex(value) + "\n"; break;
    case OutputFormat::csv:
      res.out = csv_header(opts.family) + csv_row(opts.family, opts.m, opts.n, to_text(value));
      break;
    case OutputFormat::json: {
      PolyMetadata meta{std::string(family_name(opts.family)),
                        metadata_params(opts.family, opts.m, opts.n, opts.r, opts.lambda)};
      if (opts.at) meta.params["at"] = opts.at->str();
      res.out = to_json(value, meta).dump(2) + "\n";
      break;
    }
  }
  return res;
}

CommandResult cmd_table(FamilyTable& fam, const TableOptions& opts) {
  if (opts.family == FamilyKind::FrobeniusEuler) require_lambda_valid(opts.lambda);
  const unsigned m_top = family_uses_m(opts.family) ? opts.m_max : 0;

  CommandResult res;
  std::ostringstream out;
  ordered_json docs = ordered_json::array();
  if (opts.format == OutputFormat::csv) out << csv_header(opts.family);
  for (unsigned m = 0; m <= m_top; ++m) {
    for (unsigned n = 0; n <= opts.n_max; ++n) {
      const MultiPoly value = family_value(fam, opts.family, m, n, opts.r, opts.lambda);
      switch (opts.format) {
        case OutputFormat::text:
          if (family_uses_m(opts.family)) out << "m=" << m << ' ';
          out << "n=" << n << ": " << to_text(value) << '\n';
          break;
        case OutputFormat::csv: out << csv_row(opts.family, m, n, to_text(value)); break;
        case OutputFormat::latex:
          out << latex_symbol(opts.family, m, n, opts.r, opts.lambda) << " = " << to_latex(value) << " \\\\\n";
          break;
        case OutputFormat::json:
          docs.push_back(to_json(value, PolyMetadata{std::string(family_name(opts.family)),
                                                     metadata_params(opts.family, m, n, opts.r, opts.lambda)}));
          break;
      }
    }
  }
  if (opts.format == OutputFormat::json) out << docs.dump(2) << '\n';
  res.out = out.str();
  return res;
}

CommandResult cmd_verify(FamilyTable& fam, const VerifyOptions& opts) {
  if (opts.format != OutputFormat::text && opts.format != OutputFormat::json) {
    throw UsageError("verify supports --format text or json");
  }
  for (const auto& lambda : opts.grid.lambdas) require_lambda_valid(lambda);
  const GridResult result = verify_grid(fam, opts.grid);

  CommandResult res;
  res.exit_code = result.failed == 0 ? kExitOk : kExitFailure;
  if (opts.format == OutputFormat::json) {
    res.out = to_json(result).dump(2) + "\n";
    return res;
  }
  std::ostringstream out;
  for (const auto& f : result.failures) {
    out << "FAIL " << identity_name(f.id) << ' ' << render_params(f.params) << '\n'
        << "  lhs:      " << to_text(f.lhs) << '\n'
        << "  rhs:      " << to_text(f.rhs) << '\n'
        << "  residual: " << to_text(f.residual) << '\n';
  }
  if (result.t7_variant) {
    out << "T7 sign variant: " << t7_variant_name(*result.t7_variant)
        << (result.t7_verified ? " (verified)" : " (neither variant verified)") << '\n';
  }
  out << summary_line(result) << '\n';
  res.out = out.str();
  return res;
}

CommandResult cmd_oracle_diff(FamilyTable& fam, const OracleDiffOptions& opts) {
  if (opts.format != OutputFormat::text && opts.format != OutputFormat::json) {
    throw UsageError("oracle-diff supports --format text or json");
  }
  std::size_t comparisons = 0;
  ordered_json disagreements = ordered_json::array();
  std::ostringstream out;
  for (unsigned m = 0; m <= opts.m_max; ++m) {
    for (unsigned n = 0; n <= opts.n_max; ++n) {
      ++comparisons;
      const MultiPoly recurrence = fam.truncated_euler(m, n);
      const MultiPoly oracle = truncated_euler_poly_oracle(m, n);
      if (recurrence == oracle) continue;
      disagreements.push_back(
          {{"m", m}, {"n", n}, {"recurrence", to_text(recurrence)}, {"oracle", to_text(oracle)}});
      out << "DIFF m=" << m << " n=" << n << '\n'
          << "  recurrence: " << to_text(recurrence) << '\n'
          << "  oracle:     " << to_text(oracle) << '\n';
    }
  }
  CommandResult res;
  res.exit_code = disagreements.empty() ? kExitOk : kExitFailure;
  if (opts.format == OutputFormat::json) {
    ordered_json j;
    j["comparisons"] = comparisons;
    j["disagreements"] = std::move(disagreements);
    res.out = j.dump(2) + "\n";
  } else {
    out << comparisons << " comparisons, " << disagreements.size() << " disagreements\n";
    res.out = out.str();
  }
  return res;
}

CommandResult run(FamilyTable& fam, const std::vector<std::string>& args) {
  CLI::App app{"Exact truncated Euler polynomial engine", "etp"};
  app.require_subcommand(1);

  std::string family_text;
  std::string format_text = "text";
  std::int64_t m = -1;
  std::int64_t n = -1;
  std::int64_t r = -1;
  std::string lambda_text;
  std::string at_text;
  std::int64_t m_max = -1;
  std::int64_t n_max = -1;
  std::string ids_text = "all";
  std::vector<std::string> lambda_list;
  std::int64_t r_max = 2;

  auto* compute = app.add_subcommand("compute", "Compute one family value");
  compute->add_option("--family", family_text, "Family name")->required();
  compute->add_option("--m", m, "Truncation order m");
  compute->add_option("--n", n, "Index n")->required();
  compute->add_option("--r", r, "Frobenius-Euler order r");
  compute->add_option("--lambda", lambda_text, "Frobenius-Euler parameter (p/q)");
  compute->add_option("--at", at_text, "Evaluate at this rational x");
  compute->add_option("--format", format_text, "text|json|csv|latex");

  auto* table = app.add_subcommand("table", "Tabulate a family over a grid");
  table->add_option("--family", family_text, "Family name")->required();
  table->add_option("--m-max", m_max, "Largest m");
  table->add_option("--n-max", n_max, "Largest n")->required();
  table->add_option("--r", r, "Frobenius-Euler order r");
  table->add_option("--lambda", lambda_text, "Frobenius-Euler parameter (p/q)");
  table->add_option("--format", format_text, "text|json|csv|latex");

  auto* verify = app.add_subcommand("verify", "Check identities over a parameter grid");
  verify->add_option("--ids", ids_text, "all, or a comma list of identity ids");
  verify->add_option("--m-max", m_max, "Largest m (default 3)");
  verify->add_option("--n-max", n_max, "Largest n (default 10)");
  verify->add_option("--lambda", lambda_list, "Comma list of lambda values (default -1,2,1/2)")->delimiter(',');
  verify->add_option("--r-max", r_max, "Largest Frobenius-Euler order (default 2)");
  verify->add_option("--format", format_text, "text|json");

  auto* oracle = app.add_subcommand("oracle-diff", "Compare the recurrence with the series oracle");
  oracle->add_option("--m-max", m_max, "Largest m")->required();
  oracle->add_option("--n-max", n_max, "Largest n")->required();
  oracle->add_option("--format", format_text, "text|json");

  std::vector<std::string> argv_store{"etp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  CommandResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitUsage;
    res.err = std::string(e.what()) + "\n" + "Run with --help for usage.\n";
    return res;
  }

  try {
    const OutputFormat format = parse_format_flag(format_text);
    if (compute->parsed()) {
      ComputeOptions o;
      o.family = parse_family_flag(family_text);
      o.format = format;
      o.n = non_negative(n, "--n");
      if (family_uses_m(o.family)) {
        if (m < 0 && compute->count("--m") == 0) throw UsageError("--m is required for family " + family_text);
        o.m = non_negative(m, "--m");
      }
      if (o.family == FamilyKind::FrobeniusEuler) {
        if (compute->count("--r") == 0 || lambda_text.empty()) {
          throw UsageError("frobenius-euler needs --r and --lambda");
        }
        o.r = non_negative(r, "--r");
        o.lambda = parse_rational_flag(lambda_text, "--lambda");
      }
      if (!at_text.empty()) o.at = parse_rational_flag(at_text, "--at");
      return cmd_compute(fam, o);
    }
    if (table->parsed()) {
      TableOptions o;
      o.family = parse_family_flag(family_text);
      o.format = format;
      o.n_max = non_negative(n_max, "--n-max");
      if (family_uses_m(o.family)) {
        if (table->count("--m-max") == 0) throw UsageError("--m-max is required for family " + family_text);
        o.m_max = non_negative(m_max, "--m-max");
      }
      if (o.family == FamilyKind::FrobeniusEuler) {
        if (table->count("--r") == 0 || lambda_text.empty()) throw UsageError("frobenius-euler needs --r and --lambda");
        o.r = non_negative(r, "--r");
        o.lambda = parse_rational_flag(lambda_text, "--lambda");
      }
      return cmd_table(fam, o);
    }
    if (verify->parsed()) {
      VerifyOptions o;
      o.format = format;
      o.grid.ids.clear();
      std::stringstream ss(ids_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto ids = parse_identity_ids(item);
        if (!ids) throw UsageError("unknown identity id '" + item + "'");
        o.grid.ids.insert(ids->begin(), ids->end());
      }
      if (o.grid.ids.empty()) throw UsageError("--ids is empty");
      if (verify->count("--m-max") != 0) o.grid.m_max = non_negative(m_max, "--m-max");
      if (verify->count("--n-max") != 0) o.grid.n_max = non_negative(n_max, "--n-max");
      o.grid.r_max = non_negative(r_max, "--r-max");
      if (!lambda_list.empty()) {
        o.grid.lambdas.clear();
        for (const auto& text : lambda_list) o.grid.lambdas.push_back(parse_rational_flag(text, "--lambda"));
      }
      return cmd_verify(fam, o);
    }
    OracleDiffOptions o;
    o.format = format;
    o.m_max = non_negative(m_max, "--m-max");
    o.n_max = non_negative(n_max, "--n-max");
    return cmd_oracle_diff(fam, o);
  } catch (const UsageError& e) {
    res.exit_code = kExitUsage;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
}

}  // namespace etp::cli
