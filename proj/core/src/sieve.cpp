#include "twm/sieve.hpp"

#include "twm/common.hpp"

namespace twm {

SpfTable::SpfTable(std::uint64_t n_max) {
  if (n_max < 1) throw Error(errc::invalid_argument, "SpfTable: n_max >= 1 required");
  spf.assign(n_max + 1, 0);
  spf[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i > n_max / p) break;
      spf[p * i] = p;
    }
  }
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return primes;
}

std::vector<bool> squarefree_flags(std::uint64_t n_max) {
  std::vector<bool> sf(n_max + 1, true);
  sf[0] = false;
  for (std::uint64_t p = 2; p * p <= n_max; ++p) {
    const std::uint64_t p2 = p * p;
    for (std::uint64_t m = p2; m <= n_max; m += p2) sf[m] = false;
  }
  return sf;
}

bool is_squarefree_by_trial(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

}  // namespace twm
