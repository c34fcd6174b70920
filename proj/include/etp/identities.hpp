#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etp/families.hpp"
#include "etp/multipoly.hpp"

namespace etp {

enum class IdentityId {
  T3_addition,
  T4_numbers,
  T5_stirling_falling,
  T6_stirling_rising,
  T7_frobenius,
  T8_hyperg_bernoulli,
  C1_eq1,
  C1_eq2,
  C1_eq3,
  C1_eq202,
  C1_eq212,
  C1_eq222,
  T9_adjacent_m,
  C2_eq302,
  C2_eq312,
  C2_eq322,
  L1_umbral_bernoulli,
  L1_umbral_euler,
};

/// Every id, in report order.
const std::vector<IdentityId>& all_identity_ids();
std::string_view identity_name(IdentityId id);

/// Accepts full names ("T3_addition"), short codes ("T3", "C1_202", "L1_E")
/// and the group names "C1", "C2", "L1". Unknown names yield nullopt.
std::optional<std::vector<IdentityId>> parse_identity_ids(std::string_view name);

using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one identity at one parameter point. passed is true exactly
/// when residual (lhs - rhs) is the zero polynomial.
struct IdentityReport {
  IdentityId id{};
  ParamList params;
  bool passed = false;
  MultiPoly lhs;
  MultiPoly rhs;
  MultiPoly residual;

  static IdentityReport make(IdentityId id, ParamList params, MultiPoly lhs, MultiPoly rhs);
};

IdentityReport check_T3(FamilyTable& fam, unsigned m, unsigned n);
IdentityReport check_T4(FamilyTable& fam, unsigned m, unsigned n);
IdentityReport check_T5(FamilyTable& fam, unsigned m, unsigned n);
IdentityReport check_T6(FamilyTable& fam, unsigned m, unsigned n);

/// Sign used inside the i-sum of the Frobenius-Euler expansion.
enum class T7Variant {
  Statement,  ///< (-1)^{r-i}
  ProofLine,  ///< (-lambda)^{r-i}
};
std::string_view t7_variant_name(T7Variant v);

/// Throws std::invalid_argument when lambda == 1.
IdentityReport check_T7(FamilyTable& fam, unsigned m, unsigned n, unsigned r, const Rational& lambda,
                        T7Variant variant = T7Variant::Statement);
IdentityReport check_T8(FamilyTable& fam, unsigned m, unsigned n);
IdentityReport check_T9(FamilyTable& fam, unsigned m, unsigned n);

/// which is one of 1, 2, 3, 202, 212, 222. Throws std::invalid_argument otherwise.
IdentityReport check_C1(FamilyTable& fam, unsigned which, unsigned n);
/// which is one of 302, 312, 322.
IdentityReport check_C2(FamilyTable& fam, unsigned which, unsigned n);

// Umbral transfer.

/// coef * (v + shift)^power, where v is the transfer variable. coef and shift
/// must not involve v.
struct ShiftedPower {
  MultiPoly coef;
  MultiPoly shift;
  unsigned power = 0;
};
using ShiftedPowerSum = std::vector<ShiftedPower>;

enum class UmbralTarget { Bernoulli, Euler };

/// Both sides of an identity written in shifted power bases.
struct ShiftedPowerIdentity {
  Var variable = Var::x;
  ShiftedPowerSum lhs;
  ShiftedPowerSum rhs;
};

/// sum coef * (v + shift)^power. Throws std::invalid_argument if a coef or
/// shift depends on v.
MultiPoly expand_powers(const ShiftedPowerSum& sum, Var v);
/// sum coef * P_power(v + shift) with P the chosen classical family.
MultiPoly expand_family(FamilyTable& fam, const ShiftedPowerSum& sum, Var v, UmbralTarget target);

struct UmbralReport {
  IdentityReport premise;
  /// Absent when the premise failed.
  std::optional<IdentityReport> conclusion;

  bool premise_passed() const { return premise.passed; }
  bool passed() const { return premise.passed && conclusion && conclusion->passed; }
};

UmbralReport umbral_transfer(FamilyTable& fam, const ShiftedPowerIdentity& identity, UmbralTarget target);

/// Scalar form: sum_k a_k (x+alpha)^k = sum_k b_k (x+beta)^k.
UmbralReport umbral_transfer(FamilyTable& fam, const std::vector<Rational>& a, const Rational& alpha,
                             const std::vector<Rational>& b, const Rational& beta, UmbralTarget target);

/// The premise equations fed through the transfer: 1 (giving 2 and 3),
/// 202 (giving 212 and 222) and 302 (giving 312 and 322), at index n.
ShiftedPowerIdentity transfer_premise(FamilyTable& fam, unsigned source, unsigned n);
const std::vector<unsigned>& umbral_sources();

// Grid verification.

struct GridConfig {
  std::set<IdentityId> ids;
  unsigned m_max = 3;
  unsigned n_max = 10;
  std::vector<Rational> lambdas{Rational(-1), Rational(2), Rational(1, 2)};
  unsigned r_max = 2;

  static GridConfig defaults();
};

struct GridResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<IdentityReport> failures;
  /// Set when T7 ran: the variant the counts above are based on, and whether
  /// it verified cleanly on the grid.
  std::optional<T7Variant> t7_variant;
  bool t7_verified = false;

  std::size_t total() const { return passed + failed; }
};

/// Runs every applicable (id, params) point. T7 is run with the statement
/// sign first; if any point fails, the proof-line sign is tried and, when it
/// verifies cleanly, its results are the ones counted. Throws
/// std::invalid_argument when a lambda equals 1.
GridResult verify_grid(FamilyTable& fam, const GridConfig& config);

/// All reports (passes included) for one id, in grid order; used by tests
/// that need the individual reports rather than the aggregate.
std::vector<IdentityReport> run_identity(FamilyTable& fam, IdentityId id, const GridConfig& config,
                                         T7Variant variant = T7Variant::Statement);

}  // namespace etp
