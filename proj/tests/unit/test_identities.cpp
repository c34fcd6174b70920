#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "etp/identities.hpp"
#include "support/oracles.hpp"

using etp::FamilySpec;
using etp::FamilyTable;
using etp::GridConfig;
using etp::IdentityId;
using etp::MultiPoly;
using etp::Rational;
using etp::T7Variant;
using etp::UmbralTarget;
using etp::testing::poly;

namespace {

const MultiPoly X = MultiPoly::x();
const MultiPoly Y = MultiPoly::y();

GridConfig only(std::initializer_list<IdentityId> ids, unsigned m_max = 3, unsigned n_max = 10) {
  GridConfig c = GridConfig::defaults();
  c.ids = ids;
  c.m_max = m_max;
  c.n_max = n_max;
  return c;
}

void expect_sound(const etp::IdentityReport& r) {
  EXPECT_EQ(r.passed, r.residual.terms().empty());
  EXPECT_EQ(r.residual, r.lhs - r.rhs);
}

}  // namespace

TEST(T3, Examples) {
  FamilyTable fam;
  EXPECT_TRUE(etp::check_T3(fam, 2, 4).passed);
  const auto r00 = etp::check_T3(fam, 0, 0);
  EXPECT_TRUE(r00.passed);
  EXPECT_EQ(r00.lhs, MultiPoly(1));
  const auto r31 = etp::check_T3(fam, 3, 1);
  EXPECT_TRUE(r31.passed);
  EXPECT_TRUE(r31.lhs.is_zero());
  EXPECT_EQ(etp::check_T3(fam, 2, 4).lhs, ((X + Y).pow(2) - MultiPoly(1)) * Rational(12));
}

TEST(T4, Examples) {
  FamilyTable fam;
  EXPECT_TRUE(etp::check_T4(fam, 2, 4).passed);
  EXPECT_TRUE(etp::check_T4(fam, 3, 2).passed);
  EXPECT_TRUE(etp::check_T4(fam, 3, 2).lhs.is_zero());
  EXPECT_TRUE(etp::check_T4(fam, 0, 2).passed);
}

TEST(T5, Examples) {
  FamilyTable fam;
  const auto r12 = etp::check_T5(fam, 1, 2);
  EXPECT_TRUE(r12.passed);
  EXPECT_EQ(r12.rhs, poly({{4, 1}, {-4, 0}}));
  EXPECT_EQ(etp::check_T5(fam, 1, 1).rhs, MultiPoly(2));
  EXPECT_TRUE(etp::check_T5(fam, 2, 1).rhs.is_zero());
}

TEST(T6, Examples) {
  FamilyTable fam;
  EXPECT_EQ(etp::check_T6(fam, 1, 1).rhs, MultiPoly(2));
  const auto r12 = etp::check_T6(fam, 1, 2);
  EXPECT_TRUE(r12.passed);
  EXPECT_EQ(r12.rhs, poly({{4, 1}, {-4, 0}}));
  EXPECT_TRUE(etp::check_T6(fam, 3, 2).passed);
}

TEST(T7, TrivialPoints) {
  FamilyTable fam;
  for (auto v : {T7Variant::Statement, T7Variant::ProofLine}) {
    const auto r = etp::check_T7(fam, 0, 0, 0, Rational(2), v);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.lhs, MultiPoly(1));
    const auto z = etp::check_T7(fam, 2, 1, 1, Rational(2), v);
    EXPECT_TRUE(z.passed);
    EXPECT_TRUE(z.lhs.is_zero());
  }
  EXPECT_THROW(etp::check_T7(fam, 1, 1, 1, Rational(1)), std::invalid_argument);
}

TEST(T7, SignVariantsPinned) {
  FamilyTable fam;
  const auto stmt = etp::check_T7(fam, 1, 1, 1, Rational(-1), T7Variant::Statement);
  EXPECT_FALSE(stmt.passed);
  EXPECT_FALSE(stmt.residual.is_zero());
  EXPECT_TRUE(etp::check_T7(fam, 1, 1, 1, Rational(-1), T7Variant::ProofLine).passed);
  EXPECT_FALSE(etp::check_T7(fam, 0, 1, 1, Rational(2), T7Variant::Statement).passed);
  EXPECT_TRUE(etp::check_T7(fam, 0, 1, 1, Rational(2), T7Variant::ProofLine).passed);

  const GridConfig config = only({IdentityId::T7_frobenius});
  const auto statement = etp::run_identity(fam, IdentityId::T7_frobenius, config, T7Variant::Statement);
  const auto proof = etp::run_identity(fam, IdentityId::T7_frobenius, config, T7Variant::ProofLine);
  EXPECT_EQ(proof.size(), 396U);
  EXPECT_TRUE(std::any_of(statement.begin(), statement.end(), [](const auto& r) { return !r.passed; }));
  EXPECT_TRUE(std::all_of(proof.begin(), proof.end(), [](const auto& r) { return r.passed; }));
  // The two signs agree when r = 0.
  for (const auto& r : statement) {
    if (r.params[2].second == "0") EXPECT_TRUE(r.passed);
  }
}

TEST(T8, Examples) {
  FamilyTable fam;
  EXPECT_TRUE(etp::check_T8(fam, 0, 1).passed);
  EXPECT_TRUE(etp::check_T8(fam, 0, 0).passed);
  EXPECT_TRUE(etp::check_T8(fam, 1, 2).passed);
}

TEST(T9, Examples) {
  FamilyTable fam;
  EXPECT_TRUE(etp::check_T9(fam, 0, 1).passed);
  const auto r00 = etp::check_T9(fam, 0, 0);
  EXPECT_TRUE(r00.passed);
  EXPECT_TRUE(r00.lhs.is_zero());
  EXPECT_TRUE(etp::check_T9(fam, 2, 4).passed);
}

TEST(C1, Examples) {
  FamilyTable fam;
  const auto r = etp::check_C1(fam, 1, 2);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.rhs, (X + Y - MultiPoly(1)).pow(2) * Rational(2));
  EXPECT_EQ(etp::check_C1(fam, 1, 0).rhs, MultiPoly(2));
  EXPECT_TRUE(etp::check_C1(fam, 202, 1).passed);
  EXPECT_THROW(etp::check_C1(fam, 4, 1), std::invalid_argument);
}

TEST(C2, Examples) {
  FamilyTable fam;
  EXPECT_TRUE(etp::check_C2(fam, 302, 1).passed);
  const auto r0 = etp::check_C2(fam, 302, 0);
  EXPECT_TRUE(r0.passed);
  EXPECT_EQ(r0.rhs, MultiPoly(1));
  EXPECT_TRUE(etp::check_C2(fam, 322, 2).passed);
  EXPECT_THROW(etp::check_C2(fam, 1, 1), std::invalid_argument);
}

TEST(Umbral, ScalarExamples) {
  FamilyTable fam;
  for (auto target : {UmbralTarget::Bernoulli, UmbralTarget::Euler}) {
    const auto shift = etp::umbral_transfer(fam, {0, 1}, Rational(0), {-1, 1}, Rational(1), target);
    EXPECT_TRUE(shift.premise_passed());
    EXPECT_TRUE(shift.passed());
    const auto bad = etp::umbral_transfer(fam, {1}, Rational(0), {2}, Rational(0), target);
    EXPECT_FALSE(bad.premise_passed());
    EXPECT_FALSE(bad.conclusion.has_value());
    EXPECT_FALSE(bad.passed());
  }
}

TEST(Umbral, PremisesReproduceDerivedEquations) {
  FamilyTable fam;
  for (unsigned n = 0; n <= 8; ++n) {
    // Premise 1 transferred to Bernoulli is C1_2, to Euler is C1_3.
    const auto premise = etp::transfer_premise(fam, 1, n);
    const auto b = etp::umbral_transfer(fam, premise, UmbralTarget::Bernoulli);
    const auto e = etp::umbral_transfer(fam, premise, UmbralTarget::Euler);
    ASSERT_TRUE(b.passed()) << n;
    ASSERT_TRUE(e.passed()) << n;
    EXPECT_EQ(b.conclusion->lhs - b.conclusion->rhs, etp::check_C1(fam, 2, n).residual);
    EXPECT_EQ(b.conclusion->rhs, etp::check_C1(fam, 2, n).rhs);
    EXPECT_EQ(e.conclusion->rhs, etp::check_C1(fam, 3, n).rhs);
  }
}

TEST(Umbral, RejectsCoefficientsInTransferVariable) {
  FamilyTable fam;
  const etp::ShiftedPowerSum bad{{X, MultiPoly(), 1}};
  EXPECT_THROW(etp::expand_powers(bad, etp::Var::x), std::invalid_argument);
}

TEST(Umbral, ConsistencyOnGrid) {
  FamilyTable fam;
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned source : etp::umbral_sources()) {
      const auto premise = etp::transfer_premise(fam, source, n);
      for (auto target : {UmbralTarget::Bernoulli, UmbralTarget::Euler}) {
        const auto u = etp::umbral_transfer(fam, premise, target);
        EXPECT_TRUE(u.premise_passed());
        if (u.premise_passed()) EXPECT_TRUE(u.passed()) << source << " n=" << n;
      }
    }
  }
}

TEST(CrossCheck, T8AtZeroAgreesWithC1Eq1) {
  FamilyTable fam;
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(etp::check_T8(fam, 0, n).passed, etp::check_C1(fam, 1, n).passed);
  }
  // Under a Euler perturbation both flip together for the affected n.
  fam.inject({etp::FamilyKind::ClassicalEuler}, 2, etp::classical_euler_poly(2) + MultiPoly(1));
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(etp::check_T8(fam, 0, n).passed, etp::check_C1(fam, 1, n).passed) << n;
  }
  EXPECT_FALSE(etp::check_C1(fam, 1, 2).passed);
}

TEST(Grid, DefaultGridIsClean) {
  FamilyTable fam;
  const auto result = etp::verify_grid(fam, GridConfig::defaults());
  EXPECT_EQ(result.failed, 0U);
  EXPECT_GT(result.passed, 0U);
  ASSERT_TRUE(result.t7_variant.has_value());
  EXPECT_EQ(*result.t7_variant, T7Variant::ProofLine);
  EXPECT_TRUE(result.t7_verified);
}

TEST(Grid, SingleT3Point) {
  FamilyTable fam;
  const auto result = etp::verify_grid(fam, only({IdentityId::T3_addition}, 0, 0));
  EXPECT_EQ(result.total(), 1U);
  EXPECT_EQ(result.passed, 1U);
  EXPECT_FALSE(result.t7_variant.has_value());
}

TEST(Grid, RejectsLambdaOne) {
  FamilyTable fam;
  GridConfig c = only({IdentityId::T7_frobenius});
  c.lambdas = {Rational(1)};
  EXPECT_THROW(etp::verify_grid(fam, c), std::invalid_argument);
}

TEST(Grid, ReportsAreSound) {
  FamilyTable fam;
  fam.inject(FamilySpec::truncated_euler(2), 5, etp::truncated_euler_poly(2, 5) + X);
  const auto config = GridConfig::defaults();
  for (IdentityId id : config.ids) {
    for (const auto& r : etp::run_identity(fam, id, config)) expect_sound(r);
  }
}

TEST(Grid, CorruptedFamilyIsReported) {
  FamilyTable fam;
  fam.inject(FamilySpec::truncated_euler(1), 3, etp::truncated_euler_poly(1, 3) + MultiPoly(1));
  const auto result = etp::verify_grid(fam, only({IdentityId::T3_addition}));
  EXPECT_GT(result.failed, 0U);
  for (const auto& f : result.failures) EXPECT_FALSE(f.residual.is_zero());
}

TEST(Grid, DeterministicOrder) {
  FamilyTable a;
  FamilyTable b;
  a.inject(FamilySpec::hypergeom_bernoulli(1), 4, MultiPoly(3));
  b.inject(FamilySpec::hypergeom_bernoulli(1), 4, MultiPoly(3));
  (void)b.truncated_euler(4, 14);  // different cache warm-up
  const auto ra = etp::verify_grid(a, GridConfig::defaults());
  const auto rb = etp::verify_grid(b, GridConfig::defaults());
  ASSERT_EQ(ra.failures.size(), rb.failures.size());
  for (std::size_t i = 0; i < ra.failures.size(); ++i) {
    EXPECT_EQ(ra.failures[i].id, rb.failures[i].id);
    EXPECT_EQ(ra.failures[i].params, rb.failures[i].params);
    EXPECT_EQ(ra.failures[i].residual, rb.failures[i].residual);
  }
}

// Perturb the constant term of every family value the default grid reads and
// record which perturbations go unnoticed. The constant term of B_{m,k} only
// meets E_{m,m+j}(y) = 2 C(m+j,j) y^j (j < m), where the two sides of T8
// cancel; so B_{m,k} with k > n_max - m is invisible for m >= 1.
TEST(Mutation, ConstantTermBlindSpotIsTopBernoulli) {
  const GridConfig config = GridConfig::defaults();
  std::vector<std::pair<FamilySpec, unsigned>> targets;
  for (unsigned m = 0; m <= config.m_max + 1; ++m) {
    for (unsigned n = 0; n <= config.n_max; ++n) targets.emplace_back(FamilySpec::truncated_euler(m), n);
  }
  for (unsigned m = 0; m <= config.m_max; ++m) {
    for (unsigned n = 0; n <= config.n_max; ++n) targets.emplace_back(FamilySpec::hypergeom_bernoulli(m), n);
  }
  for (const Rational& lambda : config.lambdas) {
    for (unsigned r = 0; r <= config.r_max; ++r) {
      for (unsigned n = 0; n <= config.n_max; ++n) targets.emplace_back(FamilySpec::frobenius_euler(r, lambda), n);
    }
  }

  std::set<std::tuple<int, unsigned, unsigned>> undetected;
  FamilyTable fam;
  for (const auto& [spec, n] : targets) {
    fam.clear_injections();
    fam.inject(spec, n, fam.get(spec, n) + MultiPoly(1));
    if (etp::verify_grid(fam, config).failed == 0) {
      undetected.emplace(static_cast<int>(spec.kind), spec.m, n);
    }
  }
  const int hb = static_cast<int>(etp::FamilyKind::HypergeomBernoulli);
  std::set<std::tuple<int, unsigned, unsigned>> expected;
  for (unsigned m = 1; m <= config.m_max; ++m) {
    for (unsigned k = config.n_max - m + 1; k <= config.n_max; ++k) expected.emplace(hb, m, k);
  }
  EXPECT_EQ(undetected, expected);
}
