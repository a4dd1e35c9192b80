// Normalized Hecke eigenvalue tables lambda_f(n) for a full-level eigenform.
//
// The concrete realization is the weight-12 discriminant form: tau(n) is
// expanded exactly in integer arithmetic from q * prod(1-q^n)^24 and only the
// final normalization tau(n)/n^(11/2) happens in floating point.  A generic
// construction fills a table from prescribed prime eigenvalues through the
// Hecke recursion and multiplicativity.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

namespace twm {

struct EigenformCoefficients {
  int weight = 0;                 // kappa, even
  std::uint64_t n_max = 0;
  std::vector<double> lambda;     // lambda[1..n_max]; lambda[0] unused

  double operator()(std::uint64_t n) const { return lambda[n]; }
};

// lambda_Delta(n) = tau(n)/n^(11/2) for n <= n_max, tau exact.
// Throws Error(errc::overflow) when n_max is large enough that tau(n) could
// exceed the exact-arithmetic layer's range.
EigenformCoefficients expand_delta_coefficients(std::uint64_t n_max);

// Generic eigenform table from prime eigenvalues; every prime <= n_max must
// be present and satisfy |lambda(p)| <= 2.
EigenformCoefficients coefficients_from_prime_eigenvalues(
    int weight, const std::map<std::uint64_t, double>& prime_lambdas,
    std::uint64_t n_max);

// Exact divisor-count table d(1..n_max) by sieve.
std::vector<std::uint32_t> divisor_counts(std::uint64_t n_max);

// max_{n <= 10^6} d(n)/n^0.3 — the constant behind the certified truncation
// tail bound d(n) <= C * n^0.3.  Scanned once per process.
double deligne_divisor_constant();

// --- cache file: "TWM1" magic, LE u32 weight, LE u64 n_max, then n_max LE
// --- doubles (lambda[1..n_max]).
void save_coefficients(const EigenformCoefficients& c,
                       const std::filesystem::path& file);
EigenformCoefficients load_coefficients(const std::filesystem::path& file);
std::filesystem::path coefficient_cache_path(const std::filesystem::path& dir,
                                             int weight, std::uint64_t n_max);
// Load from cache if present, else expand and store.
EigenformCoefficients cached_delta_coefficients(const std::filesystem::path& dir,
                                                std::uint64_t n_max);

}  // namespace twm
