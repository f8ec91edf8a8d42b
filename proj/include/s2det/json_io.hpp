#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "s2det/field.hpp"
#include "s2det/flips.hpp"
#include "s2det/partition.hpp"
#include "s2det/tensor.hpp"

namespace s2det {

// {"d": d, "n": n, "colors": [...]} with 0-based colors in lexicographic edge order.
nlohmann::json partition_to_json(const EdgePartition& p);
EdgePartition partition_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
EdgePartition read_partition_file(const std::filesystem::path& path);

// JSON array of partition objects, each with an extra "sign": +1 or -1.
std::vector<Anchor> anchors_from_json(const nlohmann::json& j);

// {"d", "field": "rational"|"gfp", "p"?, "vectors": [[coordinate strings] per edge]}.
struct VectorInput {
  int d = 0;
  int n = 0;
  bool rational = true;
  std::uint64_t modulus = 0;
  TensorInput<Rational> values{1, 2, Rational(0)};
};

// A partition object is also accepted and read as its basis-valued input.
VectorInput vector_input_from_json(const nlohmann::json& j);
nlohmann::json vector_input_to_json(const TensorInput<Rational>& x);

// Upper-triangular matrix of class labels: row i lists e_c for each edge (i, j), j > i.
std::string partition_matrix_text(const EdgePartition& p);

}  // namespace s2det
