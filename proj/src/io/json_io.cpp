#include "s2det/json_io.hpp"

#include <cmath>
#include <fstream>

#include "s2det/errors.hpp"

namespace s2det {

namespace {

int vertex_count_for(std::size_t edges) {
  for (int n = 2; n <= kMaxVertices; ++n)
    if (edge_count(n) == edges) return n;
  throw InputError(std::to_string(edges) + " entries is not the edge count of a complete graph");
}

template <class T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

nlohmann::json partition_to_json(const EdgePartition& p) {
  std::vector<int> colors(p.colors().begin(), p.colors().end());
  return {{"d", p.d()}, {"n", p.n()}, {"colors", colors}};
}

EdgePartition partition_from_json(const nlohmann::json& j) {
  const int d = get_field<int>(j, "d");
  const int n = get_field<int>(j, "n");
  const auto colors = get_field<std::vector<int>>(j, "colors");
  return EdgePartition::from_colors(d, n, colors);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

EdgePartition read_partition_file(const std::filesystem::path& path) {
  return partition_from_json(read_json_file(path));
}

std::vector<Anchor> anchors_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("anchor file must hold a JSON array");
  std::vector<Anchor> anchors;
  for (const auto& item : j) {
    const int sign = get_field<int>(item, "sign");
    if (sign != 1 && sign != -1) throw InputError("anchor sign must be +1 or -1");
    anchors.push_back({partition_from_json(item), sign});
  }
  return anchors;
}

VectorInput vector_input_from_json(const nlohmann::json& j) {
  VectorInput in;
  if (j.is_object() && j.contains("colors")) {
    const EdgePartition p = partition_from_json(j);
    in.d = p.d();
    in.n = p.n();
    in.values = basis_tensor(RationalField{}, p);
    return in;
  }
  in.d = get_field<int>(j, "d");
  const std::string field = j.is_object() && j.contains("field") ? get_field<std::string>(j, "field") : "rational";
  if (field == "rational") {
    in.rational = true;
  } else if (field == "gfp") {
    in.rational = false;
    in.modulus = j.contains("p") ? get_field<std::uint64_t>(j, "p") : PrimeField::kDefaultModulus;
    PrimeField check(in.modulus);
  } else {
    throw InputError("field must be \"rational\" or \"gfp\"");
  }
  if (!j.contains("vectors") || !j.at("vectors").is_array()) throw InputError("missing \"vectors\" array");
  const auto& vectors = j.at("vectors");
  in.n = vertex_count_for(vectors.size());
  in.values = TensorInput<Rational>(in.d, in.n, Rational(0));
  for (std::size_t e = 0; e < vectors.size(); ++e) {
    const auto& v = vectors[e];
    if (!v.is_array() || v.size() != static_cast<std::size_t>(in.d)) {
      throw InputError("vector " + std::to_string(e) + " must have " + std::to_string(in.d) + " coordinates");
    }
    for (int c = 0; c < in.d; ++c) {
      const auto& coord = v[c];
      if (coord.is_string()) {
        in.values.at(e, c) = parse_rational(coord.get<std::string>());
      } else if (coord.is_number_integer()) {
        in.values.at(e, c) = Rational(coord.get<long>());
      } else {
        throw InputError("coordinates must be strings \"a/b\" or integers");
      }
    }
  }
  return in;
}

nlohmann::json vector_input_to_json(const TensorInput<Rational>& x) {
  nlohmann::json vectors = nlohmann::json::array();
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    nlohmann::json v = nlohmann::json::array();
    for (int c = 0; c < x.d(); ++c) v.push_back(to_string(x.at(e, c)));
    vectors.push_back(v);
  }
  return {{"d", x.d()}, {"field", "rational"}, {"vectors", vectors}};
}

std::string partition_matrix_text(const EdgePartition& p) {
  const std::string blank(p.d() >= 10 ? 3 : 2, '.');
  std::string out;
  for (int i = 1; i < p.n(); ++i) {
    for (int j = 2; j <= p.n(); ++j) {
      if (j > 2) out += ' ';
      std::string cell = j > i ? "e" + std::to_string(p.color(i, j) + 1) : blank;
      cell.resize(blank.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace s2det
