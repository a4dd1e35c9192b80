#include "twm/common.hpp"

namespace twm {

double pairwise_fold(std::span<const double> values) {
  // Bottom-up halving: combine [v0+v1, v2+v3, ...] until one value is left.
  // Matches a fixed binary tree over the input order.
  if (values.empty()) return 0.0;
  std::vector<double> buf(values.begin(), values.end());
  std::size_t n = buf.size();
  while (n > 1) {
    std::size_t m = 0;
    for (std::size_t i = 0; i + 1 < n; i += 2) buf[m++] = buf[i] + buf[i + 1];
    if (n % 2) buf[m++] = buf[n - 1];
    n = m;
  }
  return buf[0];
}

}  // namespace twm
