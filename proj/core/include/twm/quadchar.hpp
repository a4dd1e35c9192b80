// Quadratic characters via the Kronecker symbol, the 8d twist family,
// Gauss-type sums G_k(n) in closed form and by brute force, and a numerical
// check of the twisted Poisson summation identity.
//
// G_k(n) for odd n is
//   ((1-i)/2 + (-1|n)(1+i)/2) * sum_{a mod n} (a|n) e(ak/n),
// and factors over prime powers with a five-case table driven by the p-adic
// valuation of k.  Even n is rejected: the identity is stated for odd n only.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "twm/bump.hpp"
#include "twm/sieve.hpp"

namespace twm {

// Total Kronecker symbol (a|n) with the standard conventions at 2, -1, 0.
// Precondition: not both a = 0 and n = 0.
int kronecker_symbol(long long a, long long n);

bool is_fundamental_discriminant(long long d);  // d != 0 required

struct TwistDiscriminant {
  std::int64_t d_odd = 0;  // odd, squarefree, positive
  std::int64_t value = 0;  // 8 * d_odd, a fundamental discriminant
};

// Validates d_odd (odd, squarefree by trial factorization) and forms 8*d_odd.
TwistDiscriminant make_twist_discriminant(std::int64_t d_odd);

// All d odd squarefree positive with 8d <= X, ascending, by sieve.
std::vector<TwistDiscriminant> enumerate_twists(double X);

// All fundamental discriminants d with 0 < |d| <= X (both signs), ascending
// by |d|.  Used by the full-family statistics.
std::vector<std::int64_t> enumerate_fundamental_discriminants(double X);

struct GaussSumValue {
  std::complex<double> value;
};

// k = 0 is allowed; the infinite valuation is carried as std::nullopt.
GaussSumValue gauss_sum_closed_form(long long k, long long n);

// Direct O(n) summation; oracle scale n <= 10^6.
GaussSumValue gauss_sum_bruteforce(long long k, long long n);

// Brute-force G_k(n) for every k in [k_lo, k_hi] sharing one character/root
// table; used by the self-test over large (k, n) grids.
std::vector<GaussSumValue> gauss_sum_bruteforce_range(long long k_lo,
                                                      long long k_hi,
                                                      long long n);

// |LHS - RHS| of the Poisson identity for the catalog bump F at scale Z.
double poisson_identity_check(long long n, double Z, Bump F);

// chi_{8d}(j) for j = 1..n_len written into out[1..n_len] (out[0] = 0);
// sieved by complete multiplicativity from values at primes.
void chi_8d_table(std::int64_t value_8d, std::uint64_t n_len,
                  const SpfTable& spf, std::int8_t* out);

}  // namespace twm
