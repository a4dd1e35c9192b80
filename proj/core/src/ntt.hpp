// Exact integer polynomial arithmetic via number-theoretic transforms over a
// fixed set of 30-bit primes, with Garner/CRT reconstruction into __int128.
//
// Residue arithmetic is exact for any coefficient size; only the final CRT
// reconstruction needs the true value inside the signed range implied by the
// prime product.  crt_signed() refuses (throws) instead of wrapping when a
// balanced digit falls outside the provably safe window.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace twm::detail {

inline constexpr int kNttPrimeCount = 5;
// All satisfy 2^23 | p-1, so transforms up to length 2^23 are available.
inline constexpr std::uint32_t kNttPrimes[kNttPrimeCount] = {
    998244353u,   // 119 * 2^23 + 1
    754974721u,   //  45 * 2^24 + 1
    469762049u,   //   7 * 2^26 + 1
    167772161u,   //   5 * 2^25 + 1
    880803841u};  // 105 * 2^23 + 1
inline constexpr std::uint32_t kNttRoots[kNttPrimeCount] = {3u, 11u, 3u, 3u, 26u};
inline constexpr std::size_t kNttMaxLength = std::size_t{1} << 23;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// In-place radix-2 transform; a.size() must be a power of two <= kNttMaxLength.
void ntt_inplace(std::vector<std::uint32_t>& a, int prime_idx, bool invert);

// Truncated product of two residue polynomials modulo kNttPrimes[prime_idx]:
// returns the first n_keep coefficients of a*b.
std::vector<std::uint32_t> multiply_mod_truncated(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    std::size_t n_keep, int prime_idx);

// Largest |v| for which crt_signed is guaranteed exact.
__int128 crt_safe_bound();

// Reconstructs the signed integer with the given residues; throws
// Error(errc::overflow) if the balanced top digit exceeds the safe window.
__int128 crt_signed(const std::array<std::uint32_t, kNttPrimeCount>& residues);

}  // namespace twm::detail
