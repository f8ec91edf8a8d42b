#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "s2det/field.hpp"
#include "s2det/flips.hpp"
#include "s2det/tensor.hpp"

namespace s2det {

struct GeometricResult {
  bool det_zero = false;
  bool lambda_exists = false;
  // λ per edge in lexicographic order, not all zero, when one exists.
  std::optional<std::vector<Rational>> lambda_witness;
};

// For d = 2: does some nonzero (λ_e) satisfy λ_xy v_xy + λ_yz v_yz + λ_zx v_zx = 0 on
// every face (with v_zx = -v_xz), and does the determinant vanish?
GeometricResult geometric_check_d2(const TensorInput<Rational>& x, const SignatureTable& table);

// The 8 x 6 coefficient matrix of the face system.
Matrix<Rational> face_system(const TensorInput<Rational>& x);

// v_{i,j} = P_j - P_i for four points in the plane.
TensorInput<Rational> quadrilateral_input(std::span<const std::array<Rational, 2>, 4> points);

}  // namespace s2det
