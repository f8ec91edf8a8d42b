#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "s2det/flips.hpp"
#include "s2det/symmetry.hpp"
#include "s2det/tree_shape.hpp"

namespace s2det {

// One tabulated representative P_label of the d = 3 orbits.
struct AppendixEntry {
  int label = 0;
  EdgePartition partition;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  std::array<TreeShape, 3> types{};
};

struct AppendixData {
  int d = 0;
  std::vector<AppendixEntry> representatives;
};

// Throws InputError on malformed JSON.
AppendixData parse_appendix(std::string_view json);
// The 19 representatives shipped with the library.
const AppendixData& appendix_data();

struct AppendixMatch {
  int label = 0;
  std::uint32_t orbit = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  std::array<TreeShape, 3> types{};
};

struct AppendixReport {
  std::vector<AppendixMatch> matches;
  std::vector<std::string> mismatches;
  std::size_t orbits_hit = 0;

  bool pass() const { return mismatches.empty(); }
};

// Locates every representative in the orbit table and compares orbit size,
// stabilizer order and tree-shape triple; every orbit must be hit exactly once.
AppendixReport match_appendix(const OrbitTable& table, const PartitionSet& set, const AppendixData& data);

struct EpsilonReport {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;  // at most 10

  bool pass() const { return violations == 0; }
};

// Random (σ, τ, i): the signature of (σ,τ)*P_i must be +1 exactly when τ is even.
EpsilonReport epsilon_formula_check(const SignatureTable& table, const AppendixData& data, std::uint64_t samples,
                                    std::uint64_t seed);
// d = 2, all 48 group elements: signature((σ,τ)*E_2) = sign(σ) sign(τ).
EpsilonReport epsilon_d2_sweep(const SignatureTable& table);

// d = 3: the tabulated representatives at +1. Otherwise E_d at +1.
std::vector<Anchor> default_anchors(int d);

// Cycle-free enumeration, flip graph and 2-coloring under the given anchors.
// Throws CertificateFailure when no consistent signature exists.
SignatureTable signature_table(const FlipGraph& graph, std::span<const Anchor> anchors);
SignatureTable signature_table(int d);

}  // namespace s2det
