#include "twm/quadchar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twm/common.hpp"

namespace twm {

namespace {

// (a|2)^e contribution: (a|2) = 0 for even a, +1 for a = ±1 mod 8, else -1.
int kronecker_two_part(long long a, int e) {
  if (e == 0) return 1;
  if (a % 2 == 0) return 0;
  if (e % 2 == 0) return 1;
  const int am8 = static_cast<int>(((a % 8) + 8) % 8);
  return (am8 == 1 || am8 == 7) ? 1 : -1;
}

}  // namespace

int kronecker_symbol(long long a, long long n) {
  if (a == 0 && n == 0)
    throw Error(errc::invalid_argument, "kronecker_symbol(0, 0) is undefined");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;  // (a|-1)
  }
  if (n % 2 == 0) {
    int e = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++e;
    }
    const int two = kronecker_two_part(a, e);
    if (two == 0) return 0;
    result *= two;
  }
  // n odd positive from here; binary Jacobi.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const int nm8 = static_cast<int>(n % 8);
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 0) throw Error(errc::invalid_argument, "is_fundamental_discriminant(0)");
  const long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree_by_trial(static_cast<std::uint64_t>(std::llabs(d)));
  if (m4 == 0) {
    const long long m = d / 4;
    const long long mm4 = ((m % 4) + 4) % 4;
    if (mm4 != 2 && mm4 != 3) return false;
    return is_squarefree_by_trial(static_cast<std::uint64_t>(std::llabs(m)));
  }
  return false;
}

TwistDiscriminant make_twist_discriminant(std::int64_t d_odd) {
  if (d_odd <= 0 || d_odd % 2 == 0)
    throw Error(errc::invalid_argument,
                "twist discriminant requires odd positive d, got " + std::to_string(d_odd));
  if (!is_squarefree_by_trial(static_cast<std::uint64_t>(d_odd)))
    throw Error(errc::invalid_argument,
                "twist discriminant requires squarefree d, got " + std::to_string(d_odd));
  return TwistDiscriminant{d_odd, 8 * d_odd};
}

std::vector<TwistDiscriminant> enumerate_twists(double X) {
  if (!(X >= 8.0)) throw Error(errc::invalid_argument, "enumerate_twists: X >= 8 required");
  const auto limit = static_cast<std::uint64_t>(std::floor(X / 8.0 + 1e-9));
  // mark odd multiples of p^2 for odd p
  std::vector<bool> bad(limit + 1, false);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    const std::uint64_t p2 = p * p;
    for (std::uint64_t m = p2; m <= limit; m += 2 * p2) bad[m] = true;
  }
  std::vector<TwistDiscriminant> out;
  out.reserve(static_cast<std::size_t>(0.42 * static_cast<double>(limit)) + 4);
  for (std::uint64_t d = 1; d <= limit; d += 2)
    if (!bad[d])
      out.push_back(TwistDiscriminant{static_cast<std::int64_t>(d),
                                      static_cast<std::int64_t>(8 * d)});
  return out;
}

std::vector<std::int64_t> enumerate_fundamental_discriminants(double X) {
  if (!(X >= 1.0)) throw Error(errc::invalid_argument, "X >= 1 required");
  const auto limit = static_cast<std::uint64_t>(std::floor(X + 1e-9));
  const auto sf = squarefree_flags(limit);
  std::vector<std::int64_t> out;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    for (int sign = 1; sign >= -1; sign -= 2) {
      const std::int64_t d = sign * static_cast<std::int64_t>(m);
      const long long m4 = ((d % 4) + 4) % 4;
      if (m4 == 1 && sf[m]) out.push_back(d);
      if (m4 == 0) {
        const std::int64_t q = d / 4;
        const long long q4 = ((q % 4) + 4) % 4;
        if ((q4 == 2 || q4 == 3) && sf[static_cast<std::uint64_t>(std::llabs(q))])
          out.push_back(d);
      }
    }
  }
  return out;
}

GaussSumValue gauss_sum_closed_form(long long k, long long n) {
  if (n <= 0 || n % 2 == 0)
    throw Error(errc::invalid_argument, "gauss_sum: n must be odd positive");

  // alpha = v_p(k); nullopt encodes the k = 0 (infinite valuation) case.
  double value = 1.0;
  long long rem = n;
  for (long long p = 3; p * p <= rem; p += 2) {
    if (rem % p) continue;
    int beta = 0;
    long long pbeta = 1;
    while (rem % p == 0) {
      rem /= p;
      ++beta;
      pbeta *= p;
    }
    std::optional<int> alpha;
    long long k_red = k;
    if (k != 0) {
      int v = 0;
      while (k_red % p == 0) {
        k_red /= p;
        ++v;
      }
      alpha = v;
    }
    double factor;
    if (!alpha || beta <= *alpha) {
      factor = (beta % 2 == 0) ? static_cast<double>(pbeta - pbeta / p)  // phi(p^beta)
                               : 0.0;
    } else if (beta == *alpha + 1) {
      const double palpha = static_cast<double>(pbeta / p);
      factor = (beta % 2 == 0)
                   ? -palpha
                   : kronecker_symbol(k_red, p) * palpha * std::sqrt(static_cast<double>(p));
    } else {
      factor = 0.0;
    }
    if (factor == 0.0) return GaussSumValue{{0.0, 0.0}};
    value *= factor;
  }
  if (rem > 1) {
    const long long p = rem;  // single remaining prime, beta = 1
    std::optional<int> alpha;
    long long k_red = k;
    if (k != 0) {
      int v = 0;
      while (k_red % p == 0) {
        k_red /= p;
        ++v;
      }
      alpha = v;
    }
    double factor;
    if (!alpha || 1 <= *alpha) {
      factor = 0.0;  // beta = 1 <= alpha, odd
    } else {
      // beta = 1 = alpha + 1 (alpha = 0), odd case
      factor = kronecker_symbol(k_red, p) * std::sqrt(static_cast<double>(p));
    }
    if (factor == 0.0) return GaussSumValue{{0.0, 0.0}};
    value *= factor;
  }
  return GaussSumValue{{value, 0.0}};
}

std::vector<GaussSumValue> gauss_sum_bruteforce_range(long long k_lo, long long k_hi,
                                                      long long n) {
  if (n <= 0 || n % 2 == 0)
    throw Error(errc::invalid_argument, "gauss_sum: n must be odd positive");
  if (n > 1000000)
    throw Error(errc::invalid_argument, "gauss_sum_bruteforce: oracle scale is n <= 10^6");
  if (k_hi < k_lo) throw Error(errc::invalid_argument, "empty k range");

  std::vector<int> chi(static_cast<std::size_t>(n));
  for (long long a = 0; a < n; ++a) chi[static_cast<std::size_t>(a)] = kronecker_symbol(a, n);
  std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
  for (long long a = 0; a < n; ++a) {
    const double t = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(n);
    root[static_cast<std::size_t>(a)] = {std::cos(t), std::sin(t)};
  }
  const std::complex<double> eps_factor =
      kronecker_symbol(-1, n) == 1 ? std::complex<double>(1.0, 0.0)
                                   : std::complex<double>(0.0, -1.0);

  std::vector<GaussSumValue> out;
  out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (long long k = k_lo; k <= k_hi; ++k) {
    const long long kr = ((k % n) + n) % n;
    std::complex<double> sum = 0.0;
    long long idx = 0;
    for (long long a = 0; a < n; ++a) {
      if (chi[static_cast<std::size_t>(a)] != 0) {
        const auto& r = root[static_cast<std::size_t>(idx)];
        if (chi[static_cast<std::size_t>(a)] > 0)
          sum += r;
        else
          sum -= r;
      }
      idx += kr;
      if (idx >= n) idx -= n;
    }
    out.push_back(GaussSumValue{eps_factor * sum});
  }
  return out;
}

GaussSumValue gauss_sum_bruteforce(long long k, long long n) {
  return gauss_sum_bruteforce_range(k, k, n)[0];
}

double poisson_identity_check(long long n, double Z, Bump F) {
  if (n <= 0 || n % 2 == 0)
    throw Error(errc::invalid_argument, "poisson_identity_check: n must be odd positive");
  if (!(Z > 0)) throw Error(errc::invalid_argument, "poisson_identity_check: Z > 0 required");

  // LHS: sum over odd d >= 1 with d/Z inside the support of F.
  const double d_end = Z * bump_support_end(F);
  KahanSum lhs;
  for (long long d = 1; static_cast<double>(d) < d_end; d += 2)
    lhs.add(kronecker_symbol(d, n) * bump_eval(F, static_cast<double>(d) / Z));

  // RHS: (Z/2n)(2|n) sum_k (-1)^k G_k(n) Fhat(kZ/2n); k-cutoff doubled until
  // two successive partial values differ by < 1e-12.
  const double pref = Z / (2.0 * static_cast<double>(n)) * kronecker_symbol(2, n);
  const double step = Z / (2.0 * static_cast<double>(n));
  auto term = [&](long long k) -> double {
    const auto g = gauss_sum_closed_form(k, n);
    if (g.value.real() == 0.0) return 0.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * g.value.real() * bump_fourier_cs(F, static_cast<double>(k) * step);
  };

  double partial = term(0);
  long long covered = 0;
  long long target = 8;
  double rhs_prev = 0.0, rhs_cur = 0.0;
  for (;;) {
    for (long long k = covered + 1; k <= target; ++k) partial += term(k) + term(-k);
    covered = target;
    rhs_prev = rhs_cur;
    rhs_cur = pref * partial;
    if (covered > 8 && std::abs(rhs_cur - rhs_prev) < 1e-12) break;
    if (covered > (1 << 20))
      throw Error(errc::no_convergence, "poisson_identity_check: k-tail did not stabilize");
    target *= 2;
  }
  return std::abs(lhs.value() - rhs_cur);
}

void chi_8d_table(std::int64_t value_8d, std::uint64_t n_len, const SpfTable& spf,
                  std::int8_t* out) {
  if (n_len > spf.size())
    throw Error(errc::invalid_argument, "chi_8d_table: spf table too short");
  out[0] = 0;
  if (n_len >= 1) out[1] = 1;
  for (std::uint64_t j = 2; j <= n_len; ++j) {
    const std::uint32_t p = spf.spf[j];
    if (j == p) {
      out[j] = static_cast<std::int8_t>(
          kronecker_symbol(value_8d, static_cast<long long>(p)));
    } else {
      // (8d | .) is completely multiplicative in the lower argument
      out[j] = static_cast<std::int8_t>(out[p] * out[j / p]);
    }
  }
}

}  // namespace twm
