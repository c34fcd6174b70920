#include "etp/identities.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "etp/combinatorics.hpp"

namespace etp {

namespace {

struct IdentityNameEntry {
  IdentityId id;
  std::string_view name;
  std::string_view short_name;
};

constexpr std::array<IdentityNameEntry, 18> kIdentityNames{{
    {IdentityId::T3_addition, "T3_addition", "T3"},
    {IdentityId::T4_numbers, "T4_numbers", "T4"},
    {IdentityId::T5_stirling_falling, "T5_stirling_falling", "T5"},
    {IdentityId::T6_stirling_rising, "T6_stirling_rising", "T6"},
    {IdentityId::T7_frobenius, "T7_frobenius", "T7"},
    {IdentityId::T8_hyperg_bernoulli, "T8_hyperg_bernoulli", "T8"},
    {IdentityId::C1_eq1, "C1_eq1", "C1_1"},
    {IdentityId::C1_eq2, "C1_eq2", "C1_2"},
    {IdentityId::C1_eq3, "C1_eq3", "C1_3"},
    {IdentityId::C1_eq202, "C1_eq202", "C1_202"},
    {IdentityId::C1_eq212, "C1_eq212", "C1_212"},
    {IdentityId::C1_eq222, "C1_eq222", "C1_222"},
    {IdentityId::T9_adjacent_m, "T9_adjacent_m", "T9"},
    {IdentityId::C2_eq302, "C2_eq302", "C2_302"},
    {IdentityId::C2_eq312, "C2_eq312", "C2_312"},
    {IdentityId::C2_eq322, "C2_eq322", "C2_322"},
    {IdentityId::L1_umbral_bernoulli, "L1_umbral_bernoulli", "L1_B"},
    {IdentityId::L1_umbral_euler, "L1_umbral_euler", "L1_E"},
}};

Rational binom_q(unsigned n, std::int64_t k) { return Rational(binomial(n, k)); }

Rational uint_q(unsigned v) { return Rational(static_cast<std::int64_t>(v)); }

std::string str(unsigned v) { return std::to_string(v); }

MultiPoly x_pow(unsigned k) { return MultiPoly::monomial(Rational(1), k, 0); }

MultiPoly y_pow(unsigned k) { return MultiPoly::monomial(Rational(1), 0, k); }

MultiPoly x_minus_1() { return MultiPoly::x() - MultiPoly(1); }

MultiPoly y_minus_1() { return MultiPoly::y() - MultiPoly(1); }

/// p(x) with x replaced by y.
MultiPoly in_y(const MultiPoly& p) { return p.substitute(Var::x, MultiPoly::y()); }

/// p(x) with x replaced by arg.
MultiPoly at(const MultiPoly& p, const MultiPoly& arg) { return p.substitute(Var::x, arg); }

MultiPoly classical(FamilyTable& fam, UmbralTarget target, unsigned k) {
  return target == UmbralTarget::Bernoulli ? fam.bernoulli(k) : fam.euler(k);
}

ParamList mn_params(unsigned m, unsigned n) { return {{"m", str(m)}, {"n", str(n)}}; }

}  // namespace

const std::vector<IdentityId>& all_identity_ids() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& e : kIdentityNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) {
  for (const auto& e : kIdentityNames) {
    if (e.id == id) return e.name;
  }
  return "unknown";
}

std::optional<std::vector<IdentityId>> parse_identity_ids(std::string_view name) {
  if (name == "all") return all_identity_ids();
  if (name == "C1") {
    return std::vector<IdentityId>{IdentityId::C1_eq1,   IdentityId::C1_eq2,   IdentityId::C1_eq3,
                                   IdentityId::C1_eq202, IdentityId::C1_eq212, IdentityId::C1_eq222};
  }
  if (name == "C2") return std::vector<IdentityId>{IdentityId::C2_eq302, IdentityId::C2_eq312, IdentityId::C2_eq322};
  if (name == "L1") return std::vector<IdentityId>{IdentityId::L1_umbral_bernoulli, IdentityId::L1_umbral_euler};
  for (const auto& e : kIdentityNames) {
    if (e.name == name || e.short_name == name) return std::vector<IdentityId>{e.id};
  }
  return std::nullopt;
}

IdentityReport IdentityReport::make(IdentityId id, ParamList params, MultiPoly lhs, MultiPoly rhs) {
  IdentityReport r;
  r.id = id;
  r.params = std::move(params);
  r.residual = lhs - rhs;
  r.passed = r.residual.is_zero();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

IdentityReport check_T3(FamilyTable& fam, unsigned m, unsigned n) {
  const MultiPoly lhs = at(fam.truncated_euler(m, n), MultiPoly::x() + MultiPoly::y());
  MultiPoly rhs;
  for (unsigned j = 0; j <= n; ++j) rhs += fam.truncated_euler(m, j) * y_pow(n - j) * binom_q(n, j);
  return IdentityReport::make(IdentityId::T3_addition, mn_params(m, n), lhs, rhs);
}

IdentityReport check_T4(FamilyTable& fam, unsigned m, unsigned n) {
  MultiPoly rhs;
  for (unsigned k = 0; k <= n; ++k) {
    rhs += x_pow(k) * (binom_q(n, k) * fam.truncated_euler_number(m, n - k));
  }
  return IdentityReport::make(IdentityId::T4_numbers, mn_params(m, n), fam.truncated_euler(m, n), rhs);
}

IdentityReport check_T5(FamilyTable& fam, unsigned m, unsigned n) {
  MultiPoly rhs;
  for (unsigned mu = 0; mu <= n; ++mu) {
    Rational weight(0);
    for (unsigned l = mu; l <= n; ++l) {
      weight += Rational(stirling2(l, mu)) * binom_q(n, l) * fam.truncated_euler_number(m, n - l);
    }
    if (!weight.is_zero()) rhs += falling_factorial_poly(mu) * weight;
  }
  return IdentityReport::make(IdentityId::T5_stirling_falling, mn_params(m, n), fam.truncated_euler(m, n), rhs);
}

IdentityReport check_T6(FamilyTable& fam, unsigned m, unsigned n) {
  MultiPoly rhs;
  for (unsigned mu = 0; mu <= n; ++mu) {
    const Rational point = -uint_q(mu);
    Rational weight(0);
    for (unsigned l = mu; l <= n; ++l) {
      weight += Rational(stirling2(l, mu)) * binom_q(n, l) * fam.truncated_euler(m, n - l).evaluate(point);
    }
    if (!weight.is_zero()) rhs += rising_factorial_poly(mu) * weight;
  }
  return IdentityReport::make(IdentityId::T6_stirling_rising, mn_params(m, n), fam.truncated_euler(m, n), rhs);
}

std::string_view t7_variant_name(T7Variant v) {
  return v == T7Variant::Statement ? "statement (-1)^(r-i)" : "proof-line (-lambda)^(r-i)";
}

IdentityReport check_T7(FamilyTable& fam, unsigned m, unsigned n, unsigned r, const Rational& lambda,
                        T7Variant variant) {
  if (lambda == Rational(1)) throw std::invalid_argument("check_T7 needs lambda != 1");
  const Rational scale = (Rational(1) - lambda).pow(r).inverse();
  const Rational sign_base = variant == T7Variant::Statement ? Rational(-1) : -lambda;

  MultiPoly rhs;
  for (unsigned mu = 0; mu <= n; ++mu) {
    const MultiPoly e = fam.truncated_euler(m, n - mu);
    Rational inner(0);
    for (unsigned i = 0; i <= r; ++i) {
      inner += binom_q(r, i) * sign_base.pow(r - i) * e.evaluate(uint_q(i));
    }
    const Rational weight = scale * binom_q(n, mu) * inner;
    if (!weight.is_zero()) rhs += fam.frobenius_euler(mu, r, lambda) * weight;
  }
  ParamList params{{"m", str(m)}, {"n", str(n)}, {"r", str(r)}, {"lambda", lambda.str()},
                   {"variant", std::string(variant == T7Variant::Statement ? "statement" : "proof-line")}};
  return IdentityReport::make(IdentityId::T7_frobenius, std::move(params), fam.truncated_euler(m, n), rhs);
}

IdentityReport check_T8(FamilyTable& fam, unsigned m, unsigned n) {
  const Rational half(1, 2);
  MultiPoly inner;
  for (unsigned j = 0; j <= n; ++j) {
    const MultiPoly term =
        fam.hypergeom_bernoulli(m, j) * y_pow(n - j) - in_y(fam.truncated_euler(m, j)) * x_pow(n - j) * half;
    inner += term * binom_q(n, j);
  }
  const MultiPoly lhs = inner * binom_q(n + m, n);

  MultiPoly rhs;
  for (unsigned j = 0; j <= n + m; ++j) {
    const MultiPoly e = fam.truncated_euler(m, j);
    if (e.is_zero()) continue;
    rhs += in_y(e) * fam.hypergeom_bernoulli(m, n + m - j) * (half * binom_q(n + m, j));
  }
  return IdentityReport::make(IdentityId::T8_hyperg_bernoulli, mn_params(m, n), lhs, rhs);
}

IdentityReport check_T9(FamilyTable& fam, unsigned m, unsigned n) {
  MultiPoly first;
  for (unsigned j = 0; j <= n; ++j) first += fam.truncated_euler(m + 1, n - j) * y_pow(j) * binom_q(n, j);

  // Empty when n = 0.
  MultiPoly second;
  for (unsigned j = 0; j + 1 <= n; ++j) {
    second += in_y(fam.truncated_euler(m, n - j - 1)) * x_pow(j) * binom_q(n - 1, j);
  }
  const Rational factor = Rational(2 * static_cast<std::int64_t>(n)) / uint_q(m + 1);
  const MultiPoly lhs = first * Rational(2) - second * factor;

  MultiPoly rhs;
  for (unsigned j = 0; j <= n; ++j) {
    rhs += fam.truncated_euler(m + 1, n - j) * in_y(fam.truncated_euler(m, j)) * binom_q(n, j);
  }
  return IdentityReport::make(IdentityId::T9_adjacent_m, mn_params(m, n), lhs, rhs);
}

IdentityReport check_C1(FamilyTable& fam, unsigned which, unsigned n) {
  const MultiPoly xm1 = x_minus_1();
  const MultiPoly ym1 = y_minus_1();
  const MultiPoly xym1 = MultiPoly::x() + MultiPoly::y() - MultiPoly(1);
  const ParamList params{{"n", str(n)}};
  MultiPoly lhs;
  MultiPoly rhs;

  switch (which) {
    case 1:
    case 2:
    case 3: {
      // sum C(n,j) E_j(y) (P_{n-j}(x-1) + P_{n-j}(x)) = 2 P_n(x+y-1), P = powers, B or E.
      auto basis = [&](unsigned k, const MultiPoly& arg) -> MultiPoly {
        if (which == 1) return arg.pow(k);
        return at(which == 2 ? fam.bernoulli(k) : fam.euler(k), arg);
      };
      for (unsigned j = 0; j <= n; ++j) {
        lhs += in_y(fam.euler(j)) * (basis(n - j, xm1) + basis(n - j, MultiPoly::x())) * binom_q(n, j);
      }
      rhs = basis(n, xym1) * Rational(2);
      break;
    }
    case 202:
    case 212:
    case 222: {
      // sum C(n,j) (B_j(x) Q_{n-j}(y) - j Q_{j-1}(y-1) x^{n-j}) = sum C(n,j) Q_j(y-1) B_{n-j}(x),
      // Q = powers (202), B (212) or E (222).
      auto basis = [&](unsigned k, const MultiPoly& arg) -> MultiPoly {
        if (which == 202) return arg.pow(k);
        return at(which == 212 ? fam.bernoulli(k) : fam.euler(k), arg);
      };
      for (unsigned j = 0; j <= n; ++j) {
        MultiPoly term = fam.bernoulli(j) * basis(n - j, MultiPoly::y());
        if (j >= 1) term -= basis(j - 1, ym1) * x_pow(n - j) * uint_q(j);
        lhs += term * binom_q(n, j);
        rhs += basis(j, ym1) * fam.bernoulli(n - j) * binom_q(n, j);
      }
      break;
    }
    default:
      throw std::invalid_argument("check_C1: unknown equation " + std::to_string(which));
  }
  const IdentityId id = which == 1     ? IdentityId::C1_eq1
                        : which == 2   ? IdentityId::C1_eq2
                        : which == 3   ? IdentityId::C1_eq3
                        : which == 202 ? IdentityId::C1_eq202
                        : which == 212 ? IdentityId::C1_eq212
                                       : IdentityId::C1_eq222;
  return IdentityReport::make(id, params, lhs, rhs);
}

IdentityReport check_C2(FamilyTable& fam, unsigned which, unsigned n) {
  if (which != 302 && which != 312 && which != 322) {
    throw std::invalid_argument("check_C2: unknown equation " + std::to_string(which));
  }
  // sum C(n,j) (2 P_{n-j}(x-1) y^j - E_{n-j}(y) P_j(x)) = sum C(n,j) P_{n-j}(x-1) E_j(y).
  auto basis = [&](unsigned k, const MultiPoly& arg) -> MultiPoly {
    if (which == 302) return arg.pow(k);
    return at(which == 312 ? fam.bernoulli(k) : fam.euler(k), arg);
  };
  const MultiPoly xm1 = x_minus_1();
  MultiPoly lhs;
  MultiPoly rhs;
  for (unsigned j = 0; j <= n; ++j) {
    const MultiPoly shifted = basis(n - j, xm1);
    lhs += (shifted * y_pow(j) * Rational(2) - in_y(fam.euler(n - j)) * basis(j, MultiPoly::x())) * binom_q(n, j);
    rhs += shifted * in_y(fam.euler(j)) * binom_q(n, j);
  }
  const IdentityId id = which == 302   ? IdentityId::C2_eq302
                        : which == 312 ? IdentityId::C2_eq312
                                       : IdentityId::C2_eq322;
  return IdentityReport::make(id, {{"n", str(n)}}, lhs, rhs);
}

MultiPoly expand_powers(const ShiftedPowerSum& sum, Var v) {
  MultiPoly r;
  for (const auto& term : sum) {
    if (term.coef.depends_on(v) || term.shift.depends_on(v)) {
      throw std::invalid_argument("shifted power term depends on the transfer variable");
    }
    r += term.coef * (MultiPoly::variable(v) + term.shift).pow(term.power);
  }
  return r;
}

MultiPoly expand_family(FamilyTable& fam, const ShiftedPowerSum& sum, Var v, UmbralTarget target) {
  MultiPoly r;
  for (const auto& term : sum) {
    if (term.coef.depends_on(v) || term.shift.depends_on(v)) {
      throw std::invalid_argument("shifted power term depends on the transfer variable");
    }
    r += term.coef * at(classical(fam, target, term.power), MultiPoly::variable(v) + term.shift);
  }
  return r;
}

UmbralReport umbral_transfer(FamilyTable& fam, const ShiftedPowerIdentity& identity, UmbralTarget target) {
  const IdentityId id =
      target == UmbralTarget::Bernoulli ? IdentityId::L1_umbral_bernoulli : IdentityId::L1_umbral_euler;
  UmbralReport report{IdentityReport::make(id, {{"stage", "premise"}}, expand_powers(identity.lhs, identity.variable),
                                           expand_powers(identity.rhs, identity.variable)),
                      std::nullopt};
  if (!report.premise.passed) return report;
  report.conclusion = IdentityReport::make(id, {{"stage", "conclusion"}},
                                           expand_family(fam, identity.lhs, identity.variable, target),
                                           expand_family(fam, identity.rhs, identity.variable, target));
  return report;
}

UmbralReport umbral_transfer(FamilyTable& fam, const std::vector<Rational>& a, const Rational& alpha,
                             const std::vector<Rational>& b, const Rational& beta, UmbralTarget target) {
  ShiftedPowerIdentity identity;
  identity.variable = Var::x;
  for (std::size_t k = 0; k < a.size(); ++k) {
    identity.lhs.push_back({MultiPoly(a[k]), MultiPoly(alpha), static_cast<unsigned>(k)});
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    identity.rhs.push_back({MultiPoly(b[k]), MultiPoly(beta), static_cast<unsigned>(k)});
  }
  return umbral_transfer(fam, identity, target);
}

const std::vector<unsigned>& umbral_sources() {
  static const std::vector<unsigned> sources{1, 202, 302};
  return sources;
}

ShiftedPowerIdentity transfer_premise(FamilyTable& fam, unsigned source, unsigned n) {
  const MultiPoly minus_one(-1);
  ShiftedPowerIdentity id;
  switch (source) {
    case 1:
      id.variable = Var::x;
      for (unsigned j = 0; j <= n; ++j) {
        const MultiPoly coef = in_y(fam.euler(j)) * binom_q(n, j);
        id.lhs.push_back({coef, minus_one, n - j});
        id.lhs.push_back({coef, MultiPoly(), n - j});
      }
      id.rhs.push_back({MultiPoly(2), y_minus_1(), n});
      return id;
    case 202:
      id.variable = Var::y;
      for (unsigned j = 0; j <= n; ++j) {
        id.lhs.push_back({fam.bernoulli(j) * binom_q(n, j), MultiPoly(), n - j});
        if (j >= 1) id.lhs.push_back({x_pow(n - j) * (-binom_q(n, j) * uint_q(j)), minus_one, j - 1});
        id.rhs.push_back({fam.bernoulli(n - j) * binom_q(n, j), minus_one, j});
      }
      return id;
    case 302:
      id.variable = Var::x;
      for (unsigned j = 0; j <= n; ++j) {
        id.lhs.push_back({y_pow(j) * (Rational(2) * binom_q(n, j)), minus_one, n - j});
        id.lhs.push_back({in_y(fam.euler(n - j)) * (-binom_q(n, j)), MultiPoly(), j});
        id.rhs.push_back({in_y(fam.euler(j)) * binom_q(n, j), minus_one, n - j});
      }
      return id;
    default:
      throw std::invalid_argument("transfer_premise: unknown source equation " + std::to_string(source));
  }
}

GridConfig GridConfig::defaults() {
  GridConfig c;
  c.ids.insert(all_identity_ids().begin(), all_identity_ids().end());
  return c;
}

std::vector<IdentityReport> run_identity(FamilyTable& fam, IdentityId id, const GridConfig& config,
                                         T7Variant variant) {
  std::vector<IdentityReport> out;
  auto each_mn = [&](auto check) {
    for (unsigned m = 0; m <= config.m_max; ++m) {
      for (unsigned n = 0; n <= config.n_max; ++n) out.push_back(check(fam, m, n));
    }
  };
  auto each_n = [&](auto check) {
    for (unsigned n = 0; n <= config.n_max; ++n) out.push_back(check(n));
  };

  switch (id) {
    case IdentityId::T3_addition: each_mn(check_T3); break;
    case IdentityId::T4_numbers: each_mn(check_T4); break;
    case IdentityId::T5_stirling_falling: each_mn(check_T5); break;
    case IdentityId::T6_stirling_rising: each_mn(check_T6); break;
    case IdentityId::T8_hyperg_bernoulli: each_mn(check_T8); break;
    case IdentityId::T9_adjacent_m: each_mn(check_T9); break;
    case IdentityId::T7_frobenius:
      for (const Rational& lambda : config.lambdas) {
        for (unsigned r = 0; r <= config.r_max; ++r) {
          for (unsigned m = 0; m <= config.m_max; ++m) {
            for (unsigned n = 0; n <= config.n_max; ++n) out.push_back(check_T7(fam, m, n, r, lambda, variant));
          }
        }
      }
      break;
    case IdentityId::C1_eq1: each_n([&](unsigned n) { return check_C1(fam, 1, n); }); break;
    case IdentityId::C1_eq2: each_n([&](unsigned n) { return check_C1(fam, 2, n); }); break;
    case IdentityId::C1_eq3: each_n([&](unsigned n) { return check_C1(fam, 3, n); }); break;
    case IdentityId::C1_eq202: each_n([&](unsigned n) { return check_C1(fam, 202, n); }); break;
    case IdentityId::C1_eq212: each_n([&](unsigned n) { return check_C1(fam, 212, n); }); break;
    case IdentityId::C1_eq222: each_n([&](unsigned n) { return check_C1(fam, 222, n); }); break;
    case IdentityId::C2_eq302: each_n([&](unsigned n) { return check_C2(fam, 302, n); }); break;
    case IdentityId::C2_eq312: each_n([&](unsigned n) { return check_C2(fam, 312, n); }); break;
    case IdentityId::C2_eq322: each_n([&](unsigned n) { return check_C2(fam, 322, n); }); break;
    case IdentityId::L1_umbral_bernoulli:
    case IdentityId::L1_umbral_euler: {
      const UmbralTarget target =
          id == IdentityId::L1_umbral_bernoulli ? UmbralTarget::Bernoulli : UmbralTarget::Euler;
      for (unsigned n = 0; n <= config.n_max; ++n) {
        for (unsigned source : umbral_sources()) {
          UmbralReport u = umbral_transfer(fam, transfer_premise(fam, source, n), target);
          IdentityReport r = u.conclusion ? std::move(*u.conclusion) : std::move(u.premise);
          r.params.insert(r.params.begin(), {{"n", str(n)}, {"source", str(source)}});
          out.push_back(std::move(r));
        }
      }
      break;
    }
  }
  return out;
}

GridResult verify_grid(FamilyTable& fam, const GridConfig& config) {
  for (const Rational& lambda : config.lambdas) {
    if (lambda == Rational(1)) throw std::invalid_argument("verify_grid: lambda = 1 is not allowed");
  }
  GridResult result;
  auto tally = [&result](std::vector<IdentityReport>& reports) {
    for (auto& r : reports) {
      if (r.passed) {
        ++result.passed;
      } else {
        ++result.failed;
        result.failures.push_back(std::move(r));
      }
    }
  };

  // std::set iterates in enum order, which fixes the report order.
  for (IdentityId id : config.ids) {
    if (id != IdentityId::T7_frobenius) {
      auto reports = run_identity(fam, id, config);
      tally(reports);
      continue;
    }
    auto statement = run_identity(fam, id, config, T7Variant::Statement);
    const bool statement_ok = std::all_of(statement.begin(), statement.end(), [](const auto& r) { return r.passed; });
    if (statement_ok) {
      result.t7_variant = T7Variant::Statement;
      result.t7_verified = true;
      tally(statement);
      continue;
    }
    auto proof = run_identity(fam, id, config, T7Variant::ProofLine);
    const bool proof_ok = std::all_of(proof.begin(), proof.end(), [](const auto& r) { return r.passed; });
    if (proof_ok) {
      result.t7_variant = T7Variant::ProofLine;
      result.t7_verified = true;
      tally(proof);
    } else {
      result.t7_variant = T7Variant::Statement;
      result.t7_verified = false;
      tally(statement);
    }
  }
  return result;
}

}  // namespace etp
