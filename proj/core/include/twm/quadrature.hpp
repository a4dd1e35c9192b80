// Adaptive Gauss–Kronrod (G7,K15) quadrature on a finite interval.
#pragma once

#include <functional>

namespace twm {

// Integrates f over [a,b] to absolute tolerance abs_tol.  Throws
// Error(errc::no_convergence) naming the worst subinterval if the interval
// stack is exhausted before the local error estimates sum below abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

// Same, but pre-splits [a,b] into panels short enough that an integrand with
// oscillation frequency |freq| (cycles per unit) is slowly varying on each.
double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double freq, double abs_tol);

}  // namespace twm
