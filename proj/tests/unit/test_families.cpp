#include <gtest/gtest.h>

#include <thread>

#include "etp/combinatorics.hpp"
#include "etp/families.hpp"
#include "support/oracles.hpp"

using etp::FamilySpec;
using etp::FamilyTable;
using etp::MultiPoly;
using etp::Rational;
using etp::Var;
using etp::testing::poly;

namespace {

const MultiPoly X = MultiPoly::x();

}  // namespace

TEST(TruncatedEuler, WorkedExample) {
  EXPECT_EQ(etp::truncated_euler_poly(2, 0), MultiPoly());
  EXPECT_EQ(etp::truncated_euler_poly(2, 1), MultiPoly());
  EXPECT_EQ(etp::truncated_euler_poly(2, 2), MultiPoly(2));
  EXPECT_EQ(etp::truncated_euler_poly(2, 3), X * Rational(6));
  EXPECT_EQ(etp::truncated_euler_poly(2, 4), poly({{12, 2}, {-12, 0}}));
  EXPECT_EQ(etp::truncated_euler_poly(2, 5), poly({{20, 3}, {-60, 1}, {-20, 0}}));
  EXPECT_EQ(etp::truncated_euler_poly(3, 1), MultiPoly());
}

TEST(TruncatedEuler, E26MatchesIndependentOracleNotFactoredDisplay) {
  const MultiPoly expected = poly({{30, 4}, {-180, 2}, {-120, 1}, {150, 0}});
  EXPECT_EQ(etp::testing::truncated_euler_by_coefficients(2, 6), expected);
  EXPECT_EQ(etp::truncated_euler_poly(2, 6), expected);
  EXPECT_EQ(etp::truncated_euler_poly_oracle(2, 6), expected);
  const MultiPoly displayed = (X + MultiPoly(1)) * poly({{1, 3}, {-5, 2}, {-1, 1}, {9, 0}}) * Rational(30);
  EXPECT_NE(etp::truncated_euler_poly(2, 6), displayed);
}

TEST(TruncatedEuler, FrozenHigherValues) {
  EXPECT_EQ(etp::truncated_euler_poly(3, 7), poly({{70, 4}, {-280, 1}, {-70, 0}}));
  EXPECT_EQ(etp::truncated_euler_poly(0, 10),
            poly({{1, 10}, {-5, 9}, {30, 7}, {-126, 5}, {255, 3}, {-155, 1}}));
}

TEST(TruncatedEulerOracle, Examples) {
  EXPECT_EQ(etp::truncated_euler_poly_oracle(2, 4), poly({{12, 2}, {-12, 0}}));
  EXPECT_EQ(etp::truncated_euler_poly_oracle(0, 0), MultiPoly(1));
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(etp::truncated_euler_poly_oracle(1, n),
              (X - MultiPoly(1)).pow(n - 1) * Rational(2 * static_cast<std::int64_t>(n)));
  }
}

TEST(TruncatedEulerOracle, AgreesWithRecurrenceAndCoefficientOracle) {
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 0; n <= 12; ++n) {
      const MultiPoly rec = etp::truncated_euler_poly(m, n);
      EXPECT_EQ(rec, etp::truncated_euler_poly_oracle(m, n)) << m << "," << n;
      EXPECT_EQ(rec, etp::testing::truncated_euler_by_coefficients(m, n)) << m << "," << n;
    }
  }
}

TEST(TruncatedEulerNumber, Examples) {
  EXPECT_EQ(etp::truncated_euler_number(2, 4), Rational(-12));
  EXPECT_EQ(etp::truncated_euler_number(2, 2), Rational(2));
  EXPECT_EQ(etp::truncated_euler_number(3, 0), Rational(0));
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 0; n <= 12; ++n) {
      EXPECT_EQ(etp::truncated_euler_number(m, n), etp::poly_eval(etp::truncated_euler_poly(m, n), 0, 0));
    }
  }
}

TEST(ClosedFormM1, Examples) {
  EXPECT_EQ(etp::closed_form_m1(1), MultiPoly(2));
  EXPECT_EQ(etp::closed_form_m1(2), poly({{4, 1}, {-4, 0}}));
  EXPECT_EQ(etp::closed_form_m1(4), poly({{8, 3}, {-24, 2}, {24, 1}, {-8, 0}}));
  EXPECT_THROW(etp::closed_form_m1(0), std::invalid_argument);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(etp::truncated_euler_poly(1, n), etp::closed_form_m1(n));
  EXPECT_EQ(etp::truncated_euler_poly(1, 0), MultiPoly());
}

TEST(TruncatedEuler, DegreeAndLeadingCoefficient) {
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = m; n <= 12; ++n) {
      const MultiPoly e = etp::truncated_euler_poly(m, n);
      EXPECT_EQ(e.degree(Var::y), -1 + (e.is_zero() ? 0 : 1));
      EXPECT_EQ(e.degree(Var::x), static_cast<int>(n - m));
      EXPECT_EQ(e.coeff(n - m), Rational(2 * etp::binomial(n, m)) * (m == 0 ? Rational(1, 2) : Rational(1)));
    }
  }
}

TEST(TruncatedEuler, DerivativeLaw) {
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 1; n <= 12; ++n) {
      EXPECT_EQ(etp::truncated_euler_poly(m, n).derivative(Var::x),
                etp::truncated_euler_poly(m, n - 1) * Rational(static_cast<std::int64_t>(n)));
    }
  }
}

TEST(HypergeomBernoulli, Examples) {
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(etp::hypergeom_bernoulli_poly(0, n), (X - MultiPoly(1)).pow(n));
  EXPECT_EQ(etp::hypergeom_bernoulli_poly(1, 1), poly({{1, 1}, {Rational(-1, 2), 0}}));
  EXPECT_EQ(etp::hypergeom_bernoulli_poly(1, 2), poly({{1, 2}, {-1, 1}, {Rational(1, 6), 0}}));
  EXPECT_EQ(etp::hypergeom_bernoulli_poly(2, 3), poly({{1, 3}, {-1, 2}, {Rational(1, 6), 1}, {Rational(1, 90), 0}}));
  EXPECT_EQ(etp::hypergeom_bernoulli_poly(3, 4),
            poly({{1, 4}, {-1, 3}, {Rational(3, 20), 2}, {Rational(1, 40), 1}, {Rational(1, 5600), 0}}));
}

TEST(ClassicalBernoulli, Examples) {
  EXPECT_EQ(etp::classical_bernoulli_poly(0), MultiPoly(1));
  EXPECT_EQ(etp::classical_bernoulli_poly(1), poly({{1, 1}, {Rational(-1, 2), 0}}));
  EXPECT_EQ(etp::classical_bernoulli_poly(3), poly({{1, 3}, {Rational(-3, 2), 2}, {Rational(1, 2), 1}}));
  for (unsigned n = 0; n <= 12; ++n) {
    EXPECT_EQ(etp::classical_bernoulli_poly(n), etp::bernoulli_poly_from_gf(n));
    EXPECT_EQ(etp::classical_bernoulli_poly(n), etp::hypergeom_bernoulli_poly(1, n));
  }
}

TEST(ClassicalEuler, Examples) {
  EXPECT_EQ(etp::classical_euler_poly(0), MultiPoly(1));
  EXPECT_EQ(etp::classical_euler_poly(1), poly({{1, 1}, {Rational(-1, 2), 0}}));
  EXPECT_EQ(etp::classical_euler_poly(2), poly({{1, 2}, {-1, 1}}));
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(etp::classical_euler_poly(n), etp::euler_poly_from_gf(n));
}

TEST(FrobeniusEuler, Examples) {
  for (const Rational& lambda : {Rational(-1), Rational(2), Rational(1, 2), Rational(-7, 3)}) {
    for (unsigned r = 0; r <= 3; ++r) EXPECT_EQ(etp::frobenius_euler_poly(0, r, lambda), MultiPoly(1));
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(etp::frobenius_euler_poly(n, 0, lambda), X.pow(n));
  }
  EXPECT_EQ(etp::frobenius_euler_poly(1, 1, Rational(-1)), poly({{1, 1}, {Rational(-1, 2), 0}}));
  EXPECT_EQ(etp::frobenius_euler_poly(2, 2, Rational(1, 2)), poly({{1, 2}, {-8, 1}, {20, 0}}));
  EXPECT_EQ(etp::frobenius_euler_poly(3, 1, Rational(2)), poly({{1, 3}, {3, 2}, {9, 1}, {13, 0}}));
  EXPECT_THROW(etp::frobenius_euler_poly(2, 1, Rational(1)), std::invalid_argument);
  EXPECT_THROW(FamilySpec::frobenius_euler(1, Rational(1)), std::invalid_argument);
}

TEST(FrobeniusEuler, LambdaMinusOneCollapsesToEuler) {
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(etp::frobenius_euler_poly(n, 1, Rational(-1)), etp::classical_euler_poly(n));
  }
}

TEST(FamilyTable, CacheHitsEqualFreshComputation) {
  FamilyTable warm;
  // Populate in descending order, then read back in ascending order.
  (void)warm.truncated_euler(3, 12);
  (void)warm.hypergeom_bernoulli(2, 5);
  (void)warm.hypergeom_bernoulli(2, 11);
  for (unsigned n = 0; n <= 12; ++n) {
    FamilyTable fresh;
    EXPECT_EQ(warm.truncated_euler(3, n), fresh.truncated_euler(3, n));
    EXPECT_EQ(warm.hypergeom_bernoulli(2, n), fresh.hypergeom_bernoulli(2, n));
  }
}

TEST(FamilyTable, CanonicalAliases) {
  FamilyTable fam;
  const FamilySpec euler{etp::FamilyKind::ClassicalEuler, 5, 3, Rational(9)};
  EXPECT_EQ(euler.canonical(), FamilySpec::truncated_euler(0));
  EXPECT_EQ(fam.get(euler, 4), fam.truncated_euler(0, 4));
  EXPECT_EQ(fam.get({etp::FamilyKind::ClassicalBernoulli}, 4), fam.hypergeom_bernoulli(1, 4));
  EXPECT_EQ(fam.get({etp::FamilyKind::TruncatedEulerNumber, 2}, 4), MultiPoly(-12));
}

TEST(FamilyTable, InjectionOverridesOneValue) {
  FamilyTable fam;
  const MultiPoly original = fam.truncated_euler(2, 4);
  fam.inject(FamilySpec::truncated_euler(2), 4, original + MultiPoly(1));
  EXPECT_EQ(fam.truncated_euler(2, 4), original + MultiPoly(1));
  EXPECT_EQ(fam.truncated_euler_number(2, 4), Rational(-11));
  // Higher values still come from the true prefix.
  EXPECT_EQ(fam.truncated_euler(2, 6), etp::truncated_euler_poly_oracle(2, 6));
  // Classical aliases share the injected slot.
  fam.inject({etp::FamilyKind::ClassicalEuler}, 3, MultiPoly(7));
  EXPECT_EQ(fam.truncated_euler(0, 3), MultiPoly(7));
  fam.clear_injections();
  EXPECT_EQ(fam.truncated_euler(2, 4), original);
}

TEST(FamilyTable, ConcurrentAccess) {
  FamilyTable fam;
  std::vector<std::thread> workers;
  std::vector<MultiPoly> results(8);
  for (unsigned i = 0; i < 8; ++i) {
    workers.emplace_back([&, i] { results[i] = fam.truncated_euler(i % 4, 12 - i); });
  }
  for (auto& w : workers) w.join();
  for (unsigned i = 0; i < 8; ++i) EXPECT_EQ(results[i], etp::truncated_euler_poly_oracle(i % 4, 12 - i));
}

TEST(FamilyNames, RoundTrip) {
  for (auto kind : {etp::FamilyKind::TruncatedEuler, etp::FamilyKind::TruncatedEulerNumber,
                    etp::FamilyKind::HypergeomBernoulli, etp::FamilyKind::ClassicalBernoulli,
                    etp::FamilyKind::ClassicalEuler, etp::FamilyKind::FrobeniusEuler}) {
    EXPECT_EQ(etp::parse_family(etp::family_name(kind)), kind);
  }
  EXPECT_FALSE(etp::parse_family("bogus").has_value());
}
