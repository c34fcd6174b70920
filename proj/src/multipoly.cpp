#include "etp/multipoly.hpp"

#include <algorithm>
#include <vector>

namespace etp {

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, constant);
}

MultiPoly::MultiPoly(std::int64_t constant) : MultiPoly(Rational(constant)) {}

MultiPoly MultiPoly::x() { return monomial(Rational(1), 1, 0); }

MultiPoly MultiPoly::y() { return monomial(Rational(1), 0, 1); }

MultiPoly MultiPoly::variable(Var v) { return v == Var::x ? x() : y(); }

MultiPoly MultiPoly::monomial(const Rational& coef, std::uint32_t ex, std::uint32_t ey) {
  MultiPoly p;
  p.add_term(Exponent{ex, ey}, coef);
  return p;
}

Rational MultiPoly::coeff(std::uint32_t ex, std::uint32_t ey) const {
  const auto it = terms_.find(Exponent{ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& delta) {
  if (delta.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, delta);
  if (inserted) return;
  it->second += delta;
  if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max<int>(d, static_cast<int>(v == Var::x ? e.ex : e.ey));
  }
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(Exponent{ea.ex + eb.ex, ea.ey + eb.ey}, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const Rational& x_val, const Rational& y_val) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) sum += c * x_val.pow(e.ex) * y_val.pow(e.ey);
  return sum;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& s) const {
  // Powers of s are built once up to the largest exponent needed.
  const int top = degree(v);
  if (top <= 0) return *this;
  std::vector<MultiPoly> powers{MultiPoly(1)};
  powers.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * s);

  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    const std::uint32_t k = v == Var::x ? e.ex : e.ey;
    const Exponent rest = v == Var::x ? Exponent{0, e.ey} : Exponent{e.ex, 0};
    r += monomial(c, rest.ex, rest.ey) * powers[k];
  }
  return r;
}

MultiPoly MultiPoly::swap_vars() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.ey, e.ex}, c);
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    const std::uint32_t k = v == Var::x ? e.ex : e.ey;
    if (k == 0) continue;
    const Exponent d = v == Var::x ? Exponent{k - 1, e.ey} : Exponent{e.ex, k - 1};
    r.add_term(d, c * Rational(static_cast<std::int64_t>(k)));
  }
  return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

Rational poly_eval(const MultiPoly& p, const Rational& x_val, const Rational& y_val) {
  return p.evaluate(x_val, y_val);
}

MultiPoly poly_substitute_x(const MultiPoly& p, const MultiPoly& s) { return p.substitute(Var::x, s); }

}  // namespace etp
