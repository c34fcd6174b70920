#pragma once

#include <vector>

#include "etp/multipoly.hpp"

namespace etp {

/// Power series in t modulo t^(order+1) with MultiPoly coefficients.
///
/// coeffs()[n] is the plain coefficient of t^n. EGF normalisation (the n!
/// factor) is applied only when extracting with coeff_egf.
class TruncSeries {
 public:
  /// Zero series of the given order.
  explicit TruncSeries(unsigned order);
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit TruncSeries(std::vector<MultiPoly> coeffs);

  /// 1 + 0 t + ... + 0 t^order.
  static TruncSeries identity(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& operator[](unsigned n) const { return coeffs_.at(n); }
  MultiPoly& operator[](unsigned n) { return coeffs_.at(n); }

  /// Drops the coefficients above new_order (new_order <= order()).
  TruncSeries truncated(unsigned new_order) const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Rational& scalar);

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// sum_n u^n/n! t^n.
TruncSeries exp_series(const MultiPoly& u, unsigned order);

/// e^t + 1 - sum_{j<m} t^j/j!.
TruncSeries truncated_exp_tail(unsigned m, unsigned order);

/// Cauchy product. Throws std::invalid_argument when orders differ.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse. The constant coefficient must be a nonzero
/// rational constant; anything else throws std::domain_error.
TruncSeries series_inverse(const TruncSeries& a);

/// n! times the coefficient of t^n. Throws std::out_of_range past the order.
MultiPoly coeff_egf(const TruncSeries& a, unsigned n);

}  // namespace etp
