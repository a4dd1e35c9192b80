#include "twm/modform.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <string>

#include "ntt.hpp"
#include "twm/common.hpp"
#include "twm/sieve.hpp"

namespace twm {

namespace {

// Sparse Euler product prod(1-q^n) = sum_k (-1)^k q^{k(3k-1)/2} as residues.
std::vector<std::uint32_t> pentagonal_series_mod(std::size_t n_keep, int prime_idx) {
  const std::uint32_t p = detail::kNttPrimes[prime_idx];
  std::vector<std::uint32_t> e(n_keep, 0);
  if (n_keep > 0) e[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t g1 = k * (3 * k - 1) / 2;
    const std::int64_t g2 = k * (3 * k + 1) / 2;
    if (g1 >= static_cast<std::int64_t>(n_keep)) break;
    const std::uint32_t coeff = (k % 2 == 1) ? p - 1 : 1;  // (-1)^k mod p
    e[g1] = coeff;
    if (g2 < static_cast<std::int64_t>(n_keep)) e[g2] = coeff;
  }
  return e;
}

long double lambda_from_tau(__int128 tau, std::uint64_t n) {
  const long double nl = static_cast<long double>(n);
  return static_cast<long double>(tau) / powl(nl, 5.5L);
}

void le_put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void le_put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t le_get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}
std::uint64_t le_get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

EigenformCoefficients expand_delta_coefficients(std::uint64_t n_max) {
  if (n_max < 1) throw Error(errc::invalid_argument, "expand_delta_coefficients: n_max >= 1 required");

  // A priori range check: Deligne gives |tau(n)| <= d(n) n^{11/2}, so the CRT
  // reconstruction is provably exact as long as that bound sits inside the
  // safe window.  Past it we refuse instead of wrapping.
  {
    const auto d = divisor_counts(n_max);
    long double worst = 0.0L;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const long double b = static_cast<long double>(d[n]) * powl(static_cast<long double>(n), 5.5L);
      if (b > worst) worst = b;
    }
    const long double safe = static_cast<long double>(detail::crt_safe_bound());
    if (!(2.0L * worst < safe))
      throw Error(errc::overflow,
                  "expand_delta_coefficients: tau(n) for n_max=" + std::to_string(n_max) +
                      " exceeds the exact-arithmetic range; reduce n_max");
  }

  const std::size_t n_keep = static_cast<std::size_t>(n_max);  // tau(n) = [q^{n-1}] E^24
  std::array<std::vector<std::uint32_t>, detail::kNttPrimeCount> e24;
  for (int i = 0; i < detail::kNttPrimeCount; ++i) {
    // E^24 = (E^16)(E^8) via binary exponentiation, truncating after every
    // multiplication; all arithmetic on residues mod the i-th prime.
    auto e1 = pentagonal_series_mod(n_keep, i);
    auto e2 = detail::multiply_mod_truncated(e1, e1, n_keep, i);
    auto e4 = detail::multiply_mod_truncated(e2, e2, n_keep, i);
    auto e8 = detail::multiply_mod_truncated(e4, e4, n_keep, i);
    auto e16 = detail::multiply_mod_truncated(e8, e8, n_keep, i);
    e24[i] = detail::multiply_mod_truncated(e16, e8, n_keep, i);
  }

  EigenformCoefficients out;
  out.weight = 12;
  out.n_max = n_max;
  out.lambda.assign(n_max + 1, 0.0);
  out.lambda[1] = 1.0;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    std::array<std::uint32_t, detail::kNttPrimeCount> res;
    for (int i = 0; i < detail::kNttPrimeCount; ++i) res[i] = e24[i][n - 1];
    const __int128 tau = detail::crt_signed(res);
    out.lambda[n] = static_cast<double>(lambda_from_tau(tau, n));
  }
  return out;
}

EigenformCoefficients coefficients_from_prime_eigenvalues(
    int weight, const std::map<std::uint64_t, double>& prime_lambdas,
    std::uint64_t n_max) {
  if (weight <= 0 || weight % 2 != 0)
    throw Error(errc::invalid_argument, "coefficients_from_prime_eigenvalues: weight must be even positive");
  if (n_max < 1) throw Error(errc::invalid_argument, "n_max >= 1 required");

  SpfTable spf(n_max);
  EigenformCoefficients out;
  out.weight = weight;
  out.n_max = n_max;
  out.lambda.assign(n_max + 1, 0.0);
  out.lambda[1] = 1.0;

  for (std::uint32_t p : spf.primes) {
    auto it = prime_lambdas.find(p);
    if (it == prime_lambdas.end())
      throw Error(errc::invalid_argument,
                  "missing prime eigenvalue lambda(" + std::to_string(p) + ")");
    if (!(std::abs(it->second) <= 2.0))
      throw Error(errc::invalid_argument,
                  "lambda(" + std::to_string(p) + ") violates the Deligne bound |lambda(p)| <= 2");
    out.lambda[p] = it->second;
  }

  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = spf.spf[n];
    if (n == p) continue;  // prime, already set
    std::uint64_t q = p, m = n / p;
    while (m % p == 0) {
      q *= p;
      m /= p;
    }
    if (m == 1) {
      // prime power: lambda(p^{j+1}) = lambda(p) lambda(p^j) - lambda(p^{j-1})
      out.lambda[n] = out.lambda[p] * out.lambda[n / p] - out.lambda[n / p / p];
    } else {
      out.lambda[n] = out.lambda[m] * out.lambda[q];
    }
  }
  return out;
}

std::vector<std::uint32_t> divisor_counts(std::uint64_t n_max) {
  if (n_max < 1) throw Error(errc::invalid_argument, "divisor_counts: n_max >= 1 required");
  std::vector<std::uint32_t> d(n_max + 1, 0);
  for (std::uint64_t i = 1; i <= n_max; ++i)
    for (std::uint64_t j = i; j <= n_max; j += i) ++d[j];
  return d;
}

double deligne_divisor_constant() {
  static double cached = 0.0;
  static std::once_flag once;
  std::call_once(once, [] {
    const std::uint64_t scan_to = 1000000;
    const auto d = divisor_counts(scan_to);
    double best = 0.0;
    for (std::uint64_t n = 1; n <= scan_to; ++n) {
      const double v = d[n] / std::pow(static_cast<double>(n), 0.3);
      if (v > best) best = v;
    }
    cached = best;
  });
  return cached;
}

void save_coefficients(const EigenformCoefficients& c, const std::filesystem::path& file) {
  std::string blob;
  blob.reserve(16 + 8 * c.n_max);
  blob += "TWM1";
  le_put_u32(blob, static_cast<std::uint32_t>(c.weight));
  le_put_u64(blob, c.n_max);
  for (std::uint64_t n = 1; n <= c.n_max; ++n) {
    std::uint64_t bits;
    static_assert(sizeof(double) == 8);
    std::memcpy(&bits, &c.lambda[n], 8);
    le_put_u64(blob, bits);
  }
  std::ofstream f(file, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(errc::io, "cannot open cache file for writing: " + file.string());
  f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!f) throw Error(errc::io, "short write to cache file: " + file.string());
}

EigenformCoefficients load_coefficients(const std::filesystem::path& file) {
  std::ifstream f(file, std::ios::binary);
  if (!f) throw Error(errc::io, "cannot open cache file: " + file.string());
  std::string blob((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (blob.size() < 16 || blob.compare(0, 4, "TWM1") != 0)
    throw Error(errc::cache_corrupt, "bad magic in cache file: " + file.string());
  const auto* p = reinterpret_cast<const unsigned char*>(blob.data());
  EigenformCoefficients c;
  c.weight = static_cast<int>(le_get_u32(p + 4));
  c.n_max = le_get_u64(p + 8);
  if (blob.size() != 16 + 8 * c.n_max)
    throw Error(errc::cache_corrupt, "truncated cache file: " + file.string());
  c.lambda.assign(c.n_max + 1, 0.0);
  for (std::uint64_t n = 1; n <= c.n_max; ++n) {
    const std::uint64_t bits = le_get_u64(p + 16 + 8 * (n - 1));
    std::memcpy(&c.lambda[n], &bits, 8);
  }
  return c;
}

std::filesystem::path coefficient_cache_path(const std::filesystem::path& dir,
                                             int weight, std::uint64_t n_max) {
  return dir / ("coeffs_w" + std::to_string(weight) + "_n" + std::to_string(n_max) + ".twm");
}

EigenformCoefficients cached_delta_coefficients(const std::filesystem::path& dir,
                                                std::uint64_t n_max) {
  const auto path = coefficient_cache_path(dir, 12, n_max);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    EigenformCoefficients c = load_coefficients(path);
    if (c.weight == 12 && c.n_max == n_max) return c;
    throw Error(errc::cache_corrupt, "cache file key mismatch: " + path.string());
  }
  EigenformCoefficients c = expand_delta_coefficients(n_max);
  std::filesystem::create_directories(dir, ec);
  save_coefficients(c, path);
  return c;
}

}  // namespace twm
