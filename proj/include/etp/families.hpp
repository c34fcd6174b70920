#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "etp/multipoly.hpp"
#include "etp/rational.hpp"

namespace etp {

enum class FamilyKind {
  TruncatedEuler,
  TruncatedEulerNumber,
  HypergeomBernoulli,
  ClassicalBernoulli,
  ClassicalEuler,
  FrobeniusEuler,
};

/// CLI spelling, e.g. "truncated-euler".
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

/// Whether the family is indexed by m (as opposed to n alone).
bool family_uses_m(FamilyKind kind);

/// A sequence family and its parameters. m applies to the truncated Euler
/// and hypergeometric Bernoulli kinds; r and lambda to Frobenius-Euler only.
struct FamilySpec {
  FamilyKind kind = FamilyKind::TruncatedEuler;
  unsigned m = 0;
  unsigned r = 0;
  Rational lambda{0};

  static FamilySpec truncated_euler(unsigned m) { return {FamilyKind::TruncatedEuler, m, 0, Rational(0)}; }
  static FamilySpec hypergeom_bernoulli(unsigned m) { return {FamilyKind::HypergeomBernoulli, m, 0, Rational(0)}; }
  /// Throws std::invalid_argument when lambda == 1.
  static FamilySpec frobenius_euler(unsigned r, const Rational& lambda);

  /// Classical kinds map onto the family they are a special case of:
  /// Euler is TruncatedEuler at m=0, Bernoulli is HypergeomBernoulli at m=1,
  /// and the number family shares the polynomial cache. Unused parameters are
  /// zeroed so that equal families compare equal.
  FamilySpec canonical() const;

  friend auto operator<=>(const FamilySpec& a, const FamilySpec& b) {
    return std::tie(a.kind, a.m, a.r, a.lambda) <=> std::tie(b.kind, b.m, b.r, b.lambda);
  }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// E_{m,n}(x) from the generating function 2 t^m/m! e^{xt} / (e^t + 1 - sum_{j<m} t^j/j!)
/// by direct series division. Uncached and independent of the recurrence.
MultiPoly truncated_euler_poly_oracle(unsigned m, unsigned n);

/// E_n(x) straight from 2 e^{xt} / (e^t + 1), sharing no code path with the
/// truncated family.
MultiPoly euler_poly_from_gf(unsigned n);

/// B_n(x) straight from t e^{xt} / (e^t - 1), with the factor t cancelled
/// against the denominator before inversion.
MultiPoly bernoulli_poly_from_gf(unsigned n);

/// 2 n (x-1)^{n-1}. Throws std::invalid_argument for n = 0.
MultiPoly closed_form_m1(unsigned n);

/// Memoised family values, one monotone prefix per canonical FamilySpec.
///
/// Truncated Euler values come from the recurrence
///   E_{m,n+m}(x) = 2 C(n+m,n) x^n - sum_{j<=n} C(n+m,j) E_{m,j}(x),
/// with E_{m,n} = 0 for n < m. Hypergeometric Bernoulli and Frobenius-Euler
/// values come from series division. Every public getter is guarded by one
/// mutex, so a table can be shared between threads.
///
/// inject() overrides a single stored value. Lookups (including the ones the
/// identity checks make) return the override; the recurrence itself keeps
/// using the true prefix. This exists so tests can corrupt one value and
/// confirm the checkers notice.
class FamilyTable {
 public:
  MultiPoly truncated_euler(unsigned m, unsigned n);
  Rational truncated_euler_number(unsigned m, unsigned n);
  MultiPoly hypergeom_bernoulli(unsigned m, unsigned n);
  MultiPoly bernoulli(unsigned n) { return hypergeom_bernoulli(1, n); }
  MultiPoly euler(unsigned n) { return truncated_euler(0, n); }
  /// Throws std::invalid_argument when lambda == 1.
  MultiPoly frobenius_euler(unsigned n, unsigned r, const Rational& lambda);

  /// Value of family `spec` at index n. The number kind returns a constant.
  MultiPoly get(const FamilySpec& spec, unsigned n);

  void inject(const FamilySpec& spec, unsigned n, MultiPoly value);
  void clear_injections();

 private:
  const MultiPoly& lookup(const FamilySpec& key, unsigned n);
  void extend(const FamilySpec& key, unsigned n);

  std::recursive_mutex mutex_;
  std::map<FamilySpec, std::vector<MultiPoly>> cache_;
  std::map<std::pair<FamilySpec, unsigned>, MultiPoly> injected_;
};

/// The process-wide table used by the free functions below.
FamilyTable& default_families();

MultiPoly truncated_euler_poly(unsigned m, unsigned n);
Rational truncated_euler_number(unsigned m, unsigned n);
MultiPoly hypergeom_bernoulli_poly(unsigned m, unsigned n);
MultiPoly classical_bernoulli_poly(unsigned n);
MultiPoly classical_euler_poly(unsigned n);
MultiPoly frobenius_euler_poly(unsigned n, unsigned r, const Rational& lambda);

}  // namespace etp
