#include "etp/families.hpp"

#include <array>
#include <stdexcept>

#include "etp/combinatorics.hpp"
#include "etp/series.hpp"

namespace etp {

namespace {

struct FamilyNameEntry {
  FamilyKind kind;
  std::string_view name;
};

constexpr std::array<FamilyNameEntry, 6> kFamilyNames{{
    {FamilyKind::TruncatedEuler, "truncated-euler"},
    {FamilyKind::TruncatedEulerNumber, "truncated-euler-number"},
    {FamilyKind::HypergeomBernoulli, "hypergeom-bernoulli"},
    {FamilyKind::ClassicalBernoulli, "bernoulli"},
    {FamilyKind::ClassicalEuler, "euler"},
    {FamilyKind::FrobeniusEuler, "frobenius-euler"},
}};

void require_lambda(const Rational& lambda) {
  if (lambda == Rational(1)) throw std::invalid_argument("Frobenius-Euler polynomials need lambda != 1");
}

// (m!/t^m) (e^t - sum_{j<m} t^j/j!): coefficient of t^k is m!/(k+m)!.
TruncSeries stripped_bernoulli_denominator(unsigned m, unsigned order) {
  TruncSeries s(order);
  const BigInt m_fact = factorial(m);
  for (unsigned k = 0; k <= order; ++k) s[k] = MultiPoly(Rational(m_fact, factorial(k + m)));
  return s;
}

// Recurrence step for E_{m,n}, n >= m, given the full prefix E_{m,0..n-1}.
// At m = 0 the j = n term of the sum is E_{0,n} itself, so it moves to the
// left-hand side and halves the result.
MultiPoly truncated_euler_step(unsigned m, unsigned n, const std::vector<MultiPoly>& prefix) {
  const unsigned k = n - m;
  MultiPoly value = MultiPoly::monomial(Rational(2 * binomial(n, k)), k);
  for (unsigned j = 0; j <= k && j < n; ++j) {
    if (!prefix[j].is_zero()) value -= prefix[j] * Rational(binomial(n, j));
  }
  if (m == 0) value *= Rational(1, 2);
  return value;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& e : kFamilyNames) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (const auto& e : kFamilyNames) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

bool family_uses_m(FamilyKind kind) {
  return kind == FamilyKind::TruncatedEuler || kind == FamilyKind::TruncatedEulerNumber ||
         kind == FamilyKind::HypergeomBernoulli;
}

FamilySpec FamilySpec::frobenius_euler(unsigned r, const Rational& lambda) {
  require_lambda(lambda);
  return {FamilyKind::FrobeniusEuler, 0, r, lambda};
}

FamilySpec FamilySpec::canonical() const {
  switch (kind) {
    case FamilyKind::TruncatedEuler:
    case FamilyKind::TruncatedEulerNumber:
      return truncated_euler(m);
    case FamilyKind::ClassicalEuler:
      return truncated_euler(0);
    case FamilyKind::HypergeomBernoulli:
      return hypergeom_bernoulli(m);
    case FamilyKind::ClassicalBernoulli:
      return hypergeom_bernoulli(1);
    case FamilyKind::FrobeniusEuler:
      return frobenius_euler(r, lambda);
  }
  throw std::logic_error("unhandled FamilyKind");
}

MultiPoly truncated_euler_poly_oracle(unsigned m, unsigned n) {
  TruncSeries numerator = exp_series(MultiPoly::x(), n);
  // Multiply by t^m: shift coefficients up and drop what falls past order n.
  TruncSeries shifted(n);
  for (unsigned k = 0; k + m <= n; ++k) shifted[k + m] = numerator[k];
  shifted *= Rational(BigInt(2), factorial(m));
  const TruncSeries quotient = series_mul(shifted, series_inverse(truncated_exp_tail(m, n)));
  return coeff_egf(quotient, n);
}

MultiPoly euler_poly_from_gf(unsigned n) {
  TruncSeries denominator = exp_series(MultiPoly(1), n);
  denominator[0] += MultiPoly(1);
  TruncSeries numerator = exp_series(MultiPoly::x(), n);
  numerator *= Rational(2);
  return coeff_egf(series_mul(numerator, series_inverse(denominator)), n);
}

MultiPoly bernoulli_poly_from_gf(unsigned n) {
  // (e^t - 1)/t = sum_k t^k/(k+1)!
  TruncSeries denominator(n);
  for (unsigned k = 0; k <= n; ++k) denominator[k] = MultiPoly(Rational(BigInt(1), factorial(k + 1)));
  return coeff_egf(series_mul(exp_series(MultiPoly::x(), n), series_inverse(denominator)), n);
}

MultiPoly closed_form_m1(unsigned n) {
  if (n == 0) throw std::invalid_argument("closed_form_m1 needs n >= 1");
  return (MultiPoly::x() - MultiPoly(1)).pow(n - 1) * Rational(2 * static_cast<std::int64_t>(n));
}

void FamilyTable::extend(const FamilySpec& key, unsigned n) {
  auto& values = cache_[key];
  if (values.size() > n) return;

  switch (key.kind) {
    case FamilyKind::TruncatedEuler: {
      while (values.size() <= n) {
        const auto next = static_cast<unsigned>(values.size());
        values.push_back(next < key.m ? MultiPoly() : truncated_euler_step(key.m, next, values));
      }
      return;
    }
    case FamilyKind::HypergeomBernoulli: {
      const TruncSeries q =
          series_mul(exp_series(MultiPoly::x(), n), series_inverse(stripped_bernoulli_denominator(key.m, n)));
      values.clear();
      for (unsigned k = 0; k <= n; ++k) values.push_back(coeff_egf(q, k));
      return;
    }
    case FamilyKind::FrobeniusEuler: {
      // ((e^t - lambda)/(1 - lambda))^{-1} has constant term 1.
      TruncSeries base = exp_series(MultiPoly(1), n);
      base[0] -= MultiPoly(key.lambda);
      base *= (Rational(1) - key.lambda).inverse();
      const TruncSeries inv = series_inverse(base);
      TruncSeries acc = exp_series(MultiPoly::x(), n);
      for (unsigned i = 0; i < key.r; ++i) acc = series_mul(acc, inv);
      values.clear();
      for (unsigned k = 0; k <= n; ++k) values.push_back(coeff_egf(acc, k));
      return;
    }
    default:
      throw std::logic_error("extend: non-canonical family key");
  }
}

const MultiPoly& FamilyTable::lookup(const FamilySpec& key, unsigned n) {
  if (auto it = injected_.find({key, n}); it != injected_.end()) return it->second;
  extend(key, n);
  return cache_[key][n];
}

MultiPoly FamilyTable::truncated_euler(unsigned m, unsigned n) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return lookup(FamilySpec::truncated_euler(m), n);
}

Rational FamilyTable::truncated_euler_number(unsigned m, unsigned n) {
  return truncated_euler(m, n).evaluate(Rational(0));
}

MultiPoly FamilyTable::hypergeom_bernoulli(unsigned m, unsigned n) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return lookup(FamilySpec::hypergeom_bernoulli(m), n);
}

MultiPoly FamilyTable::frobenius_euler(unsigned n, unsigned r, const Rational& lambda) {
  const FamilySpec key = FamilySpec::frobenius_euler(r, lambda);
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return lookup(key, n);
}

MultiPoly FamilyTable::get(const FamilySpec& spec, unsigned n) {
  if (spec.kind == FamilyKind::TruncatedEulerNumber) return MultiPoly(truncated_euler_number(spec.m, n));
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return lookup(spec.canonical(), n);
}

void FamilyTable::inject(const FamilySpec& spec, unsigned n, MultiPoly value) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  injected_[{spec.canonical(), n}] = std::move(value);
}

void FamilyTable::clear_injections() {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  injected_.clear();
}

FamilyTable& default_families() {
  static FamilyTable table;
  return table;
}

MultiPoly truncated_euler_poly(unsigned m, unsigned n) { return default_families().truncated_euler(m, n); }

Rational truncated_euler_number(unsigned m, unsigned n) {
  return default_families().truncated_euler_number(m, n);
}

MultiPoly hypergeom_bernoulli_poly(unsigned m, unsigned n) { return default_families().hypergeom_bernoulli(m, n); }

MultiPoly classical_bernoulli_poly(unsigned n) { return default_families().bernoulli(n); }

MultiPoly classical_euler_poly(unsigned n) { return default_families().euler(n); }

MultiPoly frobenius_euler_poly(unsigned n, unsigned r, const Rational& lambda) {
  return default_families().frobenius_euler(n, r, lambda);
}

}  // namespace etp
