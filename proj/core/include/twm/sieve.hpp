// Shared sieve utilities: smallest-prime-factor table, prime lists,
// squarefree flags.
#pragma once

#include <cstdint>
#include <vector>

namespace twm {

// Linear sieve producing spf[n] = smallest prime factor of n (spf[1] = 1).
struct SpfTable {
  std::vector<std::uint32_t> spf;
  std::vector<std::uint32_t> primes;

  explicit SpfTable(std::uint64_t n_max);
  std::uint64_t size() const { return spf.size() - 1; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf[n] == n; }
};

std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// squarefree[n] for 0 <= n <= n_max (squarefree[0] = false).
std::vector<bool> squarefree_flags(std::uint64_t n_max);

bool is_squarefree_by_trial(std::uint64_t n);

}  // namespace twm
