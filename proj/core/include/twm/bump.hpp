// Fixed catalog of smooth compactly supported test functions and their
// cosine+sine transform.  A fixed catalog keeps every expected output of the
// summation-formula checks reproducible.
#pragma once

#include <string_view>

namespace twm {

enum class Bump {
  a,  // exp(-1/(x(1-x))) on (0,1), extended by 0
  b,  // exp(-1/(x(2-x))) on (0,2), extended by 0
};

double bump_eval(Bump f, double x);
double bump_support_end(Bump f);  // support is (0, end)

// integral of f over its support (the Mellin value F~(1)), abs tol 1e-12
double bump_integral(Bump f);

// \int (cos(2 pi x y) + sin(2 pi x y)) f(x) dx over the support
double bump_fourier_cs(Bump f, double y);

const char* bump_name(Bump f);
Bump bump_from_name(std::string_view name);  // throws on unknown name

}  // namespace twm
