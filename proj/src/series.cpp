#include "etp/series.hpp"

#include <stdexcept>
#include <string>

#include "etp/combinatorics.hpp"

namespace etp {

TruncSeries::TruncSeries(unsigned order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

TruncSeries::TruncSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries needs at least one coefficient");
}

TruncSeries TruncSeries::identity(unsigned order) {
  TruncSeries s(order);
  s.coeffs_[0] = MultiPoly(1);
  return s;
}

TruncSeries TruncSeries::truncated(unsigned new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated: new order exceeds current order");
  return TruncSeries(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncSeries exp_series(const MultiPoly& u, unsigned order) {
  TruncSeries s(order);
  MultiPoly term(1);
  s[0] = term;
  for (unsigned n = 1; n <= order; ++n) {
    term = term * u * Rational(1, n);
    s[n] = term;
  }
  return s;
}

TruncSeries truncated_exp_tail(unsigned m, unsigned order) {
  TruncSeries s = exp_series(MultiPoly(1), order);
  s[0] += MultiPoly(1);
  for (unsigned j = 0; j < m && j <= order; ++j) s[j] -= MultiPoly(Rational(BigInt(1), factorial(j)));
  return s;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series_mul: order mismatch (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
  TruncSeries r(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncSeries series_inverse(const TruncSeries& a) {
  const MultiPoly& lead = a[0];
  if (lead.is_zero() || !lead.is_constant()) {
    throw std::domain_error("series_inverse: constant coefficient is not a nonzero rational");
  }
  const Rational inv_lead = lead.constant_term().inverse();
  TruncSeries b(a.order());
  b[0] = MultiPoly(inv_lead);
  for (unsigned n = 1; n <= a.order(); ++n) {
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (!a[k].is_zero()) acc += a[k] * b[n - k];
    }
    b[n] = acc * (-inv_lead);
  }
  return b;
}

MultiPoly coeff_egf(const TruncSeries& a, unsigned n) {
  if (n > a.order()) {
    throw std::out_of_range("coeff_egf: index " + std::to_string(n) + " exceeds order " + std::to_string(a.order()));
  }
  return a[n] * Rational(factorial(n));
}

}  // namespace etp
