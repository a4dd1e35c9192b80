// Shared error type and compensated/deterministic summation helpers.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twm {

enum class errc {
  invalid_argument,   // bad parameter range / violated precondition
  overflow,           // exact-arithmetic width exceeded
  truncation,         // coefficient table too short for a certified cutoff
  no_convergence,     // continued fraction / quadrature / cutoff failed
  cache_corrupt,      // bad magic or short read in a cache file
  io,                 // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Kahan–Neumaier compensated accumulator.  The Dirichlet-series sums have
// ~1e5 terms of mixed sign, so plain summation loses digits we later assert.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Folds values pairwise in a fixed balanced tree.  The result depends only on
// the input order, never on thread count, so reductions stay reproducible.
double pairwise_fold(std::span<const double> values);

}  // namespace twm
