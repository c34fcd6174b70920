#include "etp/combinatorics.hpp"

namespace etp {

namespace {

class PascalTriangle {
 public:
  BigInt at(unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t r = rows_.size();
      std::vector<BigInt> row(r + 1, BigInt(1));
      for (std::size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

PascalTriangle& pascal() {
  static PascalTriangle triangle;
  return triangle;
}

}  // namespace

BigInt binomial(unsigned n, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(n)) return BigInt(0);
  return pascal().at(n, static_cast<unsigned>(k));
}

BigInt factorial(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

StirlingTable::StirlingTable() : rows_{{BigInt(1)}} {}

BigInt StirlingTable::at(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(n);
  return rows_[n][k];
}

unsigned StirlingTable::capacity() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<unsigned>(rows_.size() - 1);
}

void StirlingTable::grow_to(unsigned n) {
  while (rows_.size() <= n) {
    const std::size_t r = rows_.size();
    const auto& prev = rows_.back();
    std::vector<BigInt> row(r + 1, BigInt(0));
    for (std::size_t k = 1; k <= r; ++k) {
      const BigInt carried = k < r ? BigInt(prev[k] * static_cast<unsigned long>(k)) : BigInt(0);
      row[k] = carried + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

BigInt stirling2(unsigned n, unsigned k) {
  static StirlingTable table;
  return table.at(n, k);
}

MultiPoly falling_factorial_poly(unsigned mu) {
  MultiPoly r(1);
  for (unsigned i = 0; i < mu; ++i) r *= MultiPoly::x() - MultiPoly(static_cast<std::int64_t>(i));
  return r;
}

MultiPoly rising_factorial_poly(unsigned mu) {
  MultiPoly r(1);
  for (unsigned i = 0; i < mu; ++i) r *= MultiPoly::x() + MultiPoly(static_cast<std::int64_t>(i));
  return r;
}

}  // namespace etp
