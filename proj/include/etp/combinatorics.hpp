#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "etp/multipoly.hpp"
#include "etp/rational.hpp"

namespace etp {

/// C(n, k); zero when k < 0 or k > n. Backed by a process-wide Pascal
/// triangle that grows on demand under a lock.
BigInt binomial(unsigned n, std::int64_t k);

BigInt factorial(unsigned n);

/// Triangle of Stirling numbers of the second kind, grown lazily by
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
///
/// Rows are appended whole while the lock is held, so a reader never sees a
/// partially built row.
class StirlingTable {
 public:
  StirlingTable();

  /// S(n, k); zero for k > n.
  BigInt at(unsigned n, unsigned k);

  unsigned capacity() const;

 private:
  void grow_to(unsigned n);

  mutable std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

/// S(n, k) from the process-wide table.
BigInt stirling2(unsigned n, unsigned k);

/// x (x-1) ... (x-mu+1); 1 when mu = 0.
MultiPoly falling_factorial_poly(unsigned mu);

/// x (x+1) ... (x+mu-1); 1 when mu = 0.
MultiPoly rising_factorial_poly(unsigned mu);

}  // namespace etp
