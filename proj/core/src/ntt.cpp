#include "ntt.hpp"

#include <algorithm>
#include <utility>

#include "twm/common.hpp"

namespace twm::detail {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

void ntt_inplace(std::vector<std::uint32_t>& a, int prime_idx, bool invert) {
  const std::uint64_t p = kNttPrimes[prime_idx];
  const std::uint64_t g = kNttRoots[prime_idx];
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0 || n > kNttMaxLength)
    throw Error(errc::invalid_argument, "ntt length must be a power of two <= 2^23");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t wlen = pow_mod(g, (p - 1) / len, p);
    if (invert) wlen = pow_mod(wlen, p - 2, p);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = w * a[i + j + len / 2] % p;
        a[i + j] = static_cast<std::uint32_t>(u + v < p ? u + v : u + v - p);
        a[i + j + len / 2] = static_cast<std::uint32_t>(u >= v ? u - v : u + p - v);
        w = w * wlen % p;
      }
    }
  }

  if (invert) {
    const std::uint64_t n_inv = pow_mod(n % p, p - 2, p);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * n_inv % p);
  }
}

std::vector<std::uint32_t> multiply_mod_truncated(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
    std::size_t n_keep, int prime_idx) {
  const std::uint64_t p = kNttPrimes[prime_idx];
  const std::size_t da = std::min(a.size(), n_keep);
  const std::size_t db = std::min(b.size(), n_keep);
  if (da == 0 || db == 0) return std::vector<std::uint32_t>(n_keep, 0);

  std::size_t need = da + db - 1;
  std::size_t len = 1;
  while (len < need) len <<= 1;
  if (len > kNttMaxLength)
    throw Error(errc::overflow,
                "polynomial too long for the available transform length (2^23)");

  std::vector<std::uint32_t> fa(a.begin(), a.begin() + da);
  fa.resize(len, 0);
  std::vector<std::uint32_t> fb(b.begin(), b.begin() + db);
  fb.resize(len, 0);

  ntt_inplace(fa, prime_idx, false);
  ntt_inplace(fb, prime_idx, false);
  for (std::size_t i = 0; i < len; ++i)
    fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * fb[i] % p);
  ntt_inplace(fa, prime_idx, true);

  fa.resize(n_keep, 0);
  return fa;
}

namespace {

struct CrtTables {
  // pm[i] = p_0 * ... * p_{i-1}  (i <= 4; all fit easily in __int128)
  __int128 prefix[kNttPrimeCount];
  // inv_prefix[i] = (prefix[i])^{-1} mod p_i
  std::uint64_t inv_prefix[kNttPrimeCount];
  __int128 digit_window;  // |balanced top digit| must stay <= this

  CrtTables() {
    prefix[0] = 1;
    for (int i = 1; i < kNttPrimeCount; ++i)
      prefix[i] = prefix[i - 1] * kNttPrimes[i - 1];
    for (int i = 0; i < kNttPrimeCount; ++i) {
      const std::uint64_t p = kNttPrimes[i];
      std::uint64_t pref_mod = 1;
      for (int j = 0; j < i; ++j) pref_mod = pref_mod * (kNttPrimes[j] % p) % p;
      inv_prefix[i] = pow_mod(pref_mod, p - 2, p);
    }
    const __int128 i128_max = (~__uint128_t{0}) >> 1;
    digit_window = i128_max / prefix[kNttPrimeCount - 1] - 1;
  }
};

const CrtTables& crt_tables() {
  static const CrtTables t;
  return t;
}

}  // namespace

__int128 crt_safe_bound() {
  const CrtTables& t = crt_tables();
  // |v| <= (window-1)*M4 is always representable with |top digit| <= window.
  return (t.digit_window - 1) * t.prefix[kNttPrimeCount - 1];
}

__int128 crt_signed(const std::array<std::uint32_t, kNttPrimeCount>& residues) {
  const CrtTables& t = crt_tables();
  // Garner mixed-radix digits.
  std::uint64_t digits[kNttPrimeCount];
  for (int i = 0; i < kNttPrimeCount; ++i) {
    const std::uint64_t p = kNttPrimes[i];
    std::uint64_t cur = 0, mult = 1;
    for (int j = 0; j < i; ++j) {
      cur = (cur + digits[j] % p * mult) % p;
      mult = mult * (kNttPrimes[j] % p) % p;
    }
    std::uint64_t r = residues[i] % p;
    std::uint64_t diff = r >= cur ? r - cur : r + p - cur;
    digits[i] = diff * t.inv_prefix[i] % p;
  }

  const int last = kNttPrimeCount - 1;
  const std::uint64_t p_last = kNttPrimes[last];
  __int128 top = digits[last];
  if (top > static_cast<__int128>(p_last / 2)) top -= p_last;  // balanced digit
  if (top > t.digit_window || top < -t.digit_window)
    throw Error(errc::overflow,
                "CRT reconstruction out of the exact-arithmetic range; "
                "reduce n_max");

  __int128 value = 0;
  for (int i = 0; i < last; ++i)
    value += static_cast<__int128>(digits[i]) * t.prefix[i];
  value += top * t.prefix[last];
  return value;
}

}  // namespace twm::detail
