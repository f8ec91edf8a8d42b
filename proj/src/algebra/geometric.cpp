#include "s2det/geometric.hpp"

#include "s2det/det.hpp"

namespace s2det {

Matrix<Rational> face_system(const TensorInput<Rational>& x) {
  if (x.d() != 2 || x.n() != 4) throw InputError("the face system is defined for d=2 inputs on K_4");
  const auto faces = all_faces(4);
  Matrix<Rational> m(2 * faces.size(), x.edge_count(), Rational(0));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto [xy, xz, yz] = faces[f].edge_indices(4);
    for (int c = 0; c < 2; ++c) {
      const std::size_t row = 2 * f + c;
      m(row, xy) = x.at(xy, c);
      m(row, yz) = x.at(yz, c);
      m(row, xz) = -x.at(xz, c);
    }
  }
  return m;
}

GeometricResult geometric_check_d2(const TensorInput<Rational>& x, const SignatureTable& table) {
  GeometricResult result;
  result.det_zero = sgn(det_eval(x, table)) == 0;
  result.lambda_witness = kernel_vector(RationalField{}, face_system(x));
  result.lambda_exists = result.lambda_witness.has_value();
  return result;
}

TensorInput<Rational> quadrilateral_input(std::span<const std::array<Rational, 2>, 4> points) {
  TensorInput<Rational> x(2, 4, Rational(0));
  for (Edge e : edge_list(4)) {
    const std::size_t idx = edge_index(e.i, e.j, 4);
    for (int c = 0; c < 2; ++c) x.at(idx, c) = points[e.j - 1][c] - points[e.i - 1][c];
  }
  return x;
}

}  // namespace s2det
