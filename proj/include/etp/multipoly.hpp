#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "etp/rational.hpp"

namespace etp {

enum class Var { x, y };

/// Exponent pair of the monomial x^ex * y^ey.
struct Exponent {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;

  std::uint32_t total() const { return ex + ey; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic, descending: higher total degree first, then higher
/// power of x.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.ex > b.ex;
  }
};

/// Sparse polynomial in x and y over Rational.
///
/// The term map never holds a zero coefficient, so the zero polynomial is the
/// empty map and operator== is semantic equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexDescending>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly x();
  static MultiPoly y();
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Rational& coef, std::uint32_t ex, std::uint32_t ey = 0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^ex y^ey (zero when absent).
  Rational coeff(std::uint32_t ex, std::uint32_t ey = 0) const;

  /// Adds delta to one coefficient, keeping the map canonical.
  void add_term(const Exponent& e, const Rational& delta);

  /// -1 for the zero polynomial.
  int degree(Var v) const;
  int total_degree() const;

  bool depends_on(Var v) const { return degree(v) > 0; }
  bool is_constant() const { return !depends_on(Var::x) && !depends_on(Var::y); }
  /// Constant term; meaningful as "the value" only when is_constant().
  Rational constant_term() const { return coeff(0, 0); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned exponent) const;

  Rational evaluate(const Rational& x_val, const Rational& y_val = Rational(0)) const;

  /// Simultaneous substitution of s for the variable v.
  MultiPoly substitute(Var v, const MultiPoly& s) const;

  /// Exchanges the roles of x and y.
  MultiPoly swap_vars() const;

  MultiPoly derivative(Var v) const;

 private:
  TermMap terms_;
};

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
Rational poly_eval(const MultiPoly& p, const Rational& x_val, const Rational& y_val);
MultiPoly poly_substitute_x(const MultiPoly& p, const MultiPoly& s);

}  // namespace etp
