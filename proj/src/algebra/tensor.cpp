#include "s2det/tensor.hpp"

namespace s2det {

EdgePartition build_E(int d) {
  if (d < 1 || 2 * d > kMaxVertices) throw InputError("E_d needs 1 <= d <= " + std::to_string(kMaxVertices / 2));
  const int n = 2 * d;
  EdgePartition p(d, n);
  for (int k = 1; k <= d; ++k) {
    const int a = 2 * k - 1;
    const int b = 2 * k;
    for (int s = 1; s < k; ++s) {
      p.set_color(edge_index(2 * s - 1, a, n), k - 1);
      p.set_color(edge_index(2 * s - 1, b, n), s - 1);
      p.set_color(edge_index(2 * s, a, n), s - 1);
      p.set_color(edge_index(2 * s, b, n), k - 1);
    }
    p.set_color(edge_index(a, b, n), k - 1);
  }
  return p;
}

}  // namespace s2det
