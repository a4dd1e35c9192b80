#include "twm/bump.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "twm/common.hpp"
#include "twm/quadrature.hpp"

namespace twm {

double bump_eval(Bump f, double x) {
  const double end = bump_support_end(f);
  if (x <= 0.0 || x >= end) return 0.0;
  return std::exp(-1.0 / (x * (end - x)));
}

double bump_support_end(Bump f) { return f == Bump::a ? 1.0 : 2.0; }

double bump_integral(Bump f) {
  static double cached[2];
  static std::once_flag once[2];
  const int idx = f == Bump::a ? 0 : 1;
  std::call_once(once[idx], [&] {
    cached[idx] = integrate([f](double x) { return bump_eval(f, x); }, 0.0,
                            bump_support_end(f), 1e-12);
  });
  return cached[idx];
}

double bump_fourier_cs(Bump f, double y) {
  const double end = bump_support_end(f);
  const double two_pi_y = 2.0 * M_PI * y;
  auto integrand = [f, two_pi_y](double x) {
    return (std::cos(two_pi_y * x) + std::sin(two_pi_y * x)) * bump_eval(f, x);
  };
  return integrate_oscillatory(integrand, 0.0, end, std::abs(y), 1e-12);
}

const char* bump_name(Bump f) { return f == Bump::a ? "bump_a" : "bump_b"; }

Bump bump_from_name(std::string_view name) {
  if (name == "bump_a" || name == "a") return Bump::a;
  if (name == "bump_b" || name == "b") return Bump::b;
  throw Error(errc::invalid_argument,
              "unknown test function '" + std::string(name) +
                  "' (catalog: bump_a, bump_b)");
}

}  // namespace twm
