#include "twm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "twm/common.hpp"

namespace twm {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (odd-indexed Kronrod nodes).  Standard QUADPACK constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    res_k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
  }
  res_k *= h;
  res_g *= h;
  const double err = std::abs(res_k - res_g);
  return {res_k, err};
}

struct Panel {
  double a, b, integral, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

double adaptive(const std::function<double(double)>& f, double a, double b,
                double abs_tol, int max_panels) {
  std::priority_queue<Panel> heap;
  PanelResult r = gk15(f, a, b);
  heap.push({a, b, r.integral, r.err});
  double total = r.integral;
  double total_err = r.err;
  int panels = 1;
  while (total_err > abs_tol && panels < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at ulp resolution
    PanelResult left = gk15(f, worst.a, mid);
    PanelResult right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, mid, left.integral, left.err});
    heap.push({mid, worst.b, right.integral, right.err});
    ++panels;
  }
  if (total_err > abs_tol) {
    const Panel& worst = heap.top();
    std::ostringstream os;
    os << "quadrature did not reach abs_tol=" << abs_tol << "; error estimate "
       << total_err << ", worst subinterval [" << worst.a << ", " << worst.b
       << "] with local error " << worst.err;
    throw Error(errc::no_convergence, os.str());
  }
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(b > a)) return 0.0;
  return adaptive(f, a, b, abs_tol, 1 << 16);
}

double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double freq, double abs_tol) {
  if (!(b > a)) return 0.0;
  const double cycles = std::abs(freq) * (b - a);
  int n_panels = 1 + static_cast<int>(std::min(2.0e5, 2.0 * cycles));
  const double h = (b - a) / n_panels;
  const double panel_tol = abs_tol / n_panels;
  double total = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    const double pa = a + i * h;
    const double pb = i + 1 == n_panels ? b : pa + h;
    total += adaptive(f, pa, pb, panel_tol, 1 << 10);
  }
  return total;
}

}  // namespace twm
