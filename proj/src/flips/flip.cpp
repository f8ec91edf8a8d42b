#include <string>

#include "s2det/errors.hpp"
#include "s2det/flips.hpp"

namespace s2det {

EdgePartition flip(const EdgePartition& p, const Face& face) {
  if (!is_homogeneous_cycle_free(p)) throw InputError("flip needs a homogeneous cycle-free partition");
  const auto idx = face.edge_indices(p.n());
  const int d = p.d();
  const std::array<int, 3> original{p.color(idx[0]), p.color(idx[1]), p.color(idx[2])};

  EdgePartition survivor;
  int survivors = 0;
  EdgePartition candidate = p;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const int differing = (a != original[0]) + (b != original[1]) + (c != original[2]);
        if (differing < 2) continue;
        candidate.set_color(idx[0], a);
        candidate.set_color(idx[1], b);
        candidate.set_color(idx[2], c);
        if (is_homogeneous(candidate) && is_cycle_free(candidate)) {
          ++survivors;
          survivor = candidate;
        }
      }
    }
  }
  if (survivors != 1) {
    throw LemmaViolation("face-flip uniqueness violated: " + std::to_string(survivors) + " partners for " +
                         describe(p) + " on face (" + std::to_string(face.x) + "," + std::to_string(face.y) + "," +
                         std::to_string(face.z) + ")");
  }
  return survivor;
}

}  // namespace s2det
