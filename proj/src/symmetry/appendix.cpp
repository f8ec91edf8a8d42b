#include "s2det/appendix.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "s2det/appendix_json.hpp"
#include "s2det/errors.hpp"
#include "s2det/tensor.hpp"

namespace s2det {

AppendixData parse_appendix(std::string_view json) {
  AppendixData data;
  try {
    const auto doc = nlohmann::json::parse(json);
    data.d = doc.at("d").get<int>();
    if (data.d != 3) throw InputError("tabulated representatives are for d=3");
    for (const auto& rep : doc.at("representatives")) {
      AppendixEntry entry;
      entry.label = rep.at("label").get<int>();
      std::vector<std::vector<Edge>> classes;
      for (const auto& cls : rep.at("classes")) {
        std::vector<Edge> edges;
        for (const auto& e : cls) edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>()});
        classes.push_back(std::move(edges));
      }
      if (static_cast<int>(classes.size()) != data.d) throw InputError("representative with wrong class count");
      entry.partition = EdgePartition::from_classes(2 * data.d, classes);
      entry.orbit_size = rep.at("orbit_size").get<std::uint64_t>();
      entry.stabilizer_order = rep.at("stabilizer_order").get<std::uint64_t>();
      const auto& types = rep.at("types");
      if (types.size() != 3) throw InputError("representative with wrong type count");
      for (std::size_t c = 0; c < 3; ++c) entry.types[c] = tree_shape_from_string(types[c].get<std::string>());
      data.representatives.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representative data: ") + e.what());
  }
  return data;
}

const AppendixData& appendix_data() {
  static const AppendixData data = parse_appendix(detail::kAppendixJson);
  return data;
}

namespace {

std::string label_name(int label) { return "P" + std::to_string(label); }

std::string types_string(const std::array<TreeShape, 3>& t) {
  return "(" + std::string(to_string(t[0])) + "," + std::string(to_string(t[1])) + "," + std::string(to_string(t[2])) +
         ")";
}

}  // namespace

AppendixReport match_appendix(const OrbitTable& table, const PartitionSet& set, const AppendixData& data) {
  AppendixReport report;
  if (table.d != data.d || set.d() != data.d) {
    report.mismatches.push_back("orbit table is for d=" + std::to_string(table.d) + ", data for d=" +
                                std::to_string(data.d));
    return report;
  }
  const std::uint64_t group = group_order(data.d);
  std::set<std::uint32_t> hit;
  for (const AppendixEntry& entry : data.representatives) {
    const std::string name = label_name(entry.label);
    const EdgePartition& p = entry.partition;
    if (!is_homogeneous(p)) report.mismatches.push_back(name + " is not homogeneous");
    if (!is_cycle_free(p)) report.mismatches.push_back(name + " has a cycle");
    const auto idx = set.find(p);
    if (!idx) {
      report.mismatches.push_back(name + " is not in the partition set");
      continue;
    }
    AppendixMatch match;
    match.label = entry.label;
    match.orbit = table.orbit_of[*idx];
    match.orbit_size = table.orbits[match.orbit].size;
    match.stabilizer_order = stabilizer(p).size();
    for (int c = 0; c < 3; ++c) match.types[c] = class_shape(p, c);
    if (match.orbit_size != entry.orbit_size) {
      report.mismatches.push_back(name + ": orbit size " + std::to_string(match.orbit_size) + ", expected " +
                                  std::to_string(entry.orbit_size));
    }
    if (match.stabilizer_order != entry.stabilizer_order) {
      report.mismatches.push_back(name + ": stabilizer order " + std::to_string(match.stabilizer_order) +
                                  ", expected " + std::to_string(entry.stabilizer_order));
    }
    if (match.orbit_size * match.stabilizer_order != group) {
      report.mismatches.push_back(name + ": orbit size times stabilizer order is not " + std::to_string(group));
    }
    if (match.types != entry.types) {
      report.mismatches.push_back(name + ": shapes " + types_string(match.types) + ", expected " +
                                  types_string(entry.types));
    }
    if (!hit.insert(match.orbit).second) {
      report.mismatches.push_back(name + " lies in orbit " + std::to_string(match.orbit) +
                                  ", already hit by another representative");
    }
    report.matches.push_back(match);
  }
  report.orbits_hit = hit.size();
  if (hit.size() != table.orbits.size()) {
    report.mismatches.push_back(std::to_string(hit.size()) + " of " + std::to_string(table.orbits.size()) +
                                " orbits hit");
  }
  return report;
}

EpsilonReport epsilon_formula_check(const SignatureTable& table, const AppendixData& data, std::uint64_t samples,
                                    std::uint64_t seed) {
  if (table.d() != data.d) throw InputError("signature table and representatives differ in d");
  if (data.representatives.empty()) throw InputError("no representatives to sample");
  EpsilonReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, data.representatives.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const AppendixEntry& entry = data.representatives[pick(rng)];
    const Permutation sigma = random_permutation(2 * data.d, rng);
    const Permutation tau = random_permutation(data.d, rng);
    const int expected = tau.is_even() ? 1 : -1;
    const int got = table.sign_or_zero(act(PermPair{sigma, tau}, entry.partition));
    ++report.samples;
    if (got != expected) {
      ++report.violations;
      if (report.witnesses.size() < 10) {
        report.witnesses.push_back(label_name(entry.label) + " sigma=" + sigma.to_cycle_string() +
                                   " tau=" + tau.to_cycle_string() + " sign=" + std::to_string(got));
      }
    }
  }
  return report;
}

EpsilonReport epsilon_d2_sweep(const SignatureTable& table) {
  if (table.d() != 2) throw InputError("the exhaustive sweep is for d=2");
  EpsilonReport report;
  const EdgePartition p0 = build_E(2);
  for (const Permutation& sigma : all_permutations(4)) {
    for (const Permutation& tau : all_permutations(2)) {
      const int expected = sigma.sign() * tau.sign();
      const int got = table.sign_or_zero(act(PermPair{sigma, tau}, p0));
      ++report.samples;
      if (got != expected) {
        ++report.violations;
        if (report.witnesses.size() < 10) {
          report.witnesses.push_back("sigma=" + sigma.to_cycle_string() + " tau=" + tau.to_cycle_string() +
                                     " sign=" + std::to_string(got));
        }
      }
    }
  }
  return report;
}

std::vector<Anchor> default_anchors(int d) {
  std::vector<Anchor> anchors;
  if (d == 3) {
    for (const AppendixEntry& entry : appendix_data().representatives) anchors.push_back({entry.partition, 1});
  } else {
    anchors.push_back({build_E(d), 1});
  }
  return anchors;
}

SignatureTable signature_table(const FlipGraph& graph, std::span<const Anchor> anchors) {
  auto result = check_bipartite(graph, anchors);
  if (auto* table = std::get_if<SignatureTable>(&result)) return std::move(*table);
  if (auto* odd = std::get_if<OddCycleWitness>(&result)) {
    throw CertificateFailure("flip sign alternation: odd cycle of length " + std::to_string(odd->cycle.size()));
  }
  const auto& conflict = std::get<AnchorConflict>(result);
  throw CertificateFailure("flip sign alternation: anchors " + std::to_string(conflict.first) + " and " +
                           std::to_string(conflict.second) + " disagree");
}

SignatureTable signature_table(int d) {
  auto set = std::make_shared<const PartitionSet>(enumerate(d, true));
  const FlipGraph graph = build_flip_graph(set);
  const auto anchors = default_anchors(d);
  return signature_table(graph, anchors);
}

}  // namespace s2det
