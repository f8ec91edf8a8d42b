#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "s2det/appendix.hpp"
#include "s2det/certificate.hpp"
#include "s2det/det.hpp"
#include "s2det/errors.hpp"
#include "s2det/flips.hpp"
#include "s2det/json_io.hpp"
#include "s2det/parallel.hpp"
#include "s2det/partition_set.hpp"
#include "s2det/rank.hpp"
#include "s2det/relations.hpp"
#include "s2det/symmetry.hpp"
#include "s2det/tensor.hpp"

namespace {

using namespace s2det;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Globals {
  int threads = 0;
  bool timing = false;
};

Globals globals;

class Stopwatch {
 public:
  void stamp(Certificate& c) const {
    if (globals.timing) c.wall_time = std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

int emit(const Certificate& c) {
  std::cout << c.dump() << '\n';
  return c.pass ? 0 : 1;
}

std::vector<int> one_based(const ColorTriple& t) { return {t[0] + 1, t[1] + 1, t[2] + 1}; }

json codes_of(const PartitionSet& set, const std::vector<std::uint32_t>& nodes) {
  json out = json::array();
  for (std::uint32_t v : nodes) out.push_back(set.code(v));
  return out;
}

std::shared_ptr<const PartitionSet> cycle_free_set(int d, bool allow_infeasible = false) {
  return std::make_shared<const PartitionSet>(enumerate(d, EnumerateOptions{true, allow_infeasible}));
}

std::vector<Anchor> load_anchors(int d, const std::string& file) {
  if (file.empty()) return default_anchors(d);
  auto anchors = anchors_from_json(read_json_file(file));
  for (const Anchor& a : anchors)
    if (a.partition.d() != d) throw InputError("anchor partition is not for d=" + std::to_string(d));
  return anchors;
}

// --- stages shared by the single commands and certify-all ---

Certificate stage_enumerate(int d, std::shared_ptr<const PartitionSet>& cycle_free) {
  Stopwatch watch;
  Certificate c;
  c.command = "enumerate";
  c.parameters = {{"d", d}};
  const PartitionSet all = enumerate(d, false);
  cycle_free = cycle_free_set(d);
  const std::uint64_t expected = homogeneous_partition_count(d);
  c.numbers = {{"homogeneous", all.size()}, {"cycle_free", cycle_free->size()}, {"multinomial", expected}};
  if (all.size() != expected) c.fail("homogeneous partition count equals the multinomial coefficient");
  for (std::size_t i = 0; i < cycle_free->size(); ++i) {
    const EdgePartition p = cycle_free->member(i);
    for (int col = 0; col < d; ++col) {
      if (class_components(p, col) != 1) {
        c.fail("every class of a homogeneous cycle-free partition of K_{2d} is a spanning tree");
        c.witnesses = partition_to_json(p);
        break;
      }
    }
    if (!c.pass) break;
  }
  watch.stamp(c);
  return c;
}

struct GraphChecks {
  bool bipartite = true;
  bool connected = true;
};

Certificate stage_flip_graph(const FlipGraph& graph, const std::vector<Anchor>& anchors, const GraphChecks& checks,
                             std::optional<SignatureTable>& table) {
  Stopwatch watch;
  Certificate c;
  c.command = "flip-graph";
  const std::uint64_t nodes = graph.nodes().size();
  const std::uint64_t edges = nodes * graph.faces().size() / 2;
  c.parameters = {{"d", graph.nodes().d()}, {"anchors", anchors.size()}};
  c.numbers = {{"nodes", nodes}, {"degree", graph.faces().size()}, {"flip_edges", edges}};
  json witnesses = json::object();

  if (checks.connected) {
    const ConnectivityReport conn = check_connected(graph);
    c.numbers["components"] = conn.components;
    witnesses["component_representatives"] = codes_of(graph.nodes(), conn.representatives);
    // A single component means the flip group acts transitively, which bounds the top dimension by 1.
    c.numbers["transitive"] = conn.components == 1;
    if (conn.components == 1) c.numbers["dimension_upper_bound"] = 1;
  }

  if (checks.bipartite) {
    auto result = check_bipartite(graph, anchors);
    if (auto* t = std::get_if<SignatureTable>(&result)) {
      const auto& b = t->bipartition();
      c.numbers["bipartite"] = true;
      c.numbers["class_sizes"] = {b.plus, b.minus};
      std::uint64_t alternating = 0;
      for (std::uint32_t u = 0; u < nodes; ++u)
        for (std::uint32_t v : graph.graph().neighbors(u))
          if (u < v && t->sign_at(u) == -t->sign_at(v)) ++alternating;
      c.numbers["alternating_edges"] = alternating;
      if (alternating != edges) c.fail("every flip negates the signature");
      std::uint64_t anchored = 0;
      for (const Anchor& a : anchors) anchored += t->sign(a.partition) == a.sign ? 1 : 0;
      c.numbers["anchors_honoured"] = anchored;
      if (anchored != anchors.size()) c.fail("anchored signs are honoured");
      table.emplace(std::move(*t));
    } else if (auto* odd = std::get_if<OddCycleWitness>(&result)) {
      c.numbers["bipartite"] = false;
      witnesses["odd_cycle"] = codes_of(graph.nodes(), odd->cycle);
      c.fail("flip graph is bipartite (signature existence)");
    } else {
      const auto& conflict = std::get<AnchorConflict>(result);
      c.numbers["bipartite"] = true;
      witnesses["anchor_conflict"] = {{"first", graph.nodes().code(conflict.first)},
                                      {"second", graph.nodes().code(conflict.second)},
                                      {"path", codes_of(graph.nodes(), conflict.path)}};
      c.fail("anchors are consistent with the signature");
    }
  }
  c.witnesses = witnesses;
  watch.stamp(c);
  return c;
}

std::string alias_of(const PartitionSet& set, const OrbitTable& table, std::uint32_t orbit) {
  if (set.d() != 3) return "";
  for (const AppendixEntry& e : appendix_data().representatives) {
    auto idx = set.find(e.partition);
    if (idx && table.orbit_of[*idx] == orbit) return "P" + std::to_string(e.label);
  }
  return "";
}

Certificate stage_orbits(const PartitionSet& set, const OrbitTable& table) {
  Stopwatch watch;
  Certificate c;
  c.command = "orbits";
  c.parameters = {{"d", set.d()}};
  const std::uint64_t group = group_order(set.d());
  std::uint64_t total = 0;
  json sizes = json::array();
  for (const Orbit& o : table.orbits) {
    total += o.size;
    sizes.push_back(o.size);
    if (o.size * o.stabilizer.size() != group) c.fail("orbit size times stabilizer order equals the group order");
  }
  c.numbers = {{"orbits", table.orbits.size()}, {"members", total}, {"group_order", group}, {"orbit_sizes", sizes}};
  if (total != set.size()) c.fail("orbit sizes sum to the partition count");
  watch.stamp(c);
  return c;
}

std::string orbit_csv(const PartitionSet& set, const OrbitTable& table) {
  std::ostringstream out;
  out << "orbit_id,rep_code,size,stab_order,type1,type2,type3,alias\n";
  for (std::size_t k = 0; k < table.orbits.size(); ++k) {
    const Orbit& o = table.orbits[k];
    out << k + 1 << ',' << o.representative_code << ',' << o.size << ',' << o.stabilizer.size();
    for (int col = 0; col < 3; ++col) out << ',' << (col < static_cast<int>(o.types.size()) ? to_string(o.types[col]) : "");
    out << ',' << alias_of(set, table, static_cast<std::uint32_t>(k)) << '\n';
  }
  return out.str();
}

Certificate stage_appendix(const PartitionSet& set, const OrbitTable& table) {
  Stopwatch watch;
  Certificate c;
  c.command = "verify-appendix";
  const AppendixReport report = match_appendix(table, set, appendix_data());
  c.numbers = {{"representatives", report.matches.size()}, {"orbits_hit", report.orbits_hit},
               {"orbits", table.orbits.size()}};
  json matches = json::array();
  for (const AppendixMatch& m : report.matches) {
    matches.push_back({{"label", m.label},
                       {"orbit", m.orbit + 1},
                       {"orbit_size", m.orbit_size},
                       {"stabilizer_order", m.stabilizer_order},
                       {"types", {to_string(m.types[0]), to_string(m.types[1]), to_string(m.types[2])}}});
  }
  c.numbers["matches"] = matches;
  if (!report.pass()) {
    c.witnesses = report.mismatches;
    c.fail("tabulated orbit representatives, sizes and stabilizers");
  }
  watch.stamp(c);
  return c;
}

Certificate stage_epsilon(const SignatureTable& table, std::uint64_t samples, std::uint64_t seed) {
  Stopwatch watch;
  Certificate c;
  c.command = "epsilon-formula";
  c.parameters = {{"d", table.d()}};
  EpsilonReport report;
  if (table.d() == 3) {
    c.parameters["samples"] = samples;
    c.parameters["seed"] = seed;
    report = epsilon_formula_check(table, appendix_data(), samples, seed);
  } else if (table.d() == 2) {
    report = epsilon_d2_sweep(table);
  } else {
    throw InputError("the signature formula is tabulated for d=2 and d=3 only");
  }
  c.numbers = {{"checked", report.samples}, {"violations", report.violations}};
  if (!report.pass()) {
    c.witnesses = report.witnesses;
    c.fail(table.d() == 3 ? "signature of (sigma,tau)*P_i is +1 exactly for even tau"
                          : "signature of (sigma,tau)*E_2 is sign(sigma)sign(tau)");
  }
  watch.stamp(c);
  return c;
}

Certificate stage_det_E(const SignatureTable& table) {
  Stopwatch watch;
  Certificate c;
  c.command = "det";
  const int d = table.d();
  c.parameters = {{"d", d}, {"input", "E_" + std::to_string(d)}};
  const Rational value = det_eval(basis_tensor(RationalField{}, build_E(d)), table);
  c.numbers = {{"value", to_string(value)}};
  if (value != 1) c.fail("determinant of E_d is 1");
  watch.stamp(c);
  return c;
}

json instance_json(const RelationInstance& inst, int sum) {
  return {{"face", {inst.face.x, inst.face.y, inst.face.z}},
          {"colors", one_based(inst.colors)},
          {"context", partition_to_json(inst.context)},
          {"sum", sum}};
}

Certificate stage_relations(const SignatureTable& table, std::optional<std::uint64_t> sample, std::uint64_t seed) {
  Stopwatch watch;
  Certificate c;
  c.command = "verify-relations";
  c.parameters = {{"d", table.d()}, {"mode", sample ? "sample" : "full"}};
  SweepMode mode = FullSweep{};
  if (sample) {
    c.parameters["sample"] = *sample;
    c.parameters["seed"] = seed;
    mode = SampledSweep{*sample, seed};
  }
  const RelationReport report = verify_relations(table, mode);
  c.numbers = {{"instances", report.instances}, {"violations", report.violations}, {"active", report.active}};
  if (!sample) c.numbers["expected_instances"] = relation_instance_count(table.d());
  if (report.violations != 0) {
    c.witnesses = {{"index", report.first_violation_index},
                   {"instance", instance_json(*report.first_violation, report.first_violation_sum)}};
    c.fail("face relations vanish under the signed partition sum");
  }
  if (!sample && report.instances != relation_instance_count(table.d())) c.fail("full sweep covers every instance");
  watch.stamp(c);
  return c;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item != "bipartite" && item != "connected") throw InputError("unknown check '" + item + "'");
    out.push_back(item);
  }
  return out;
}

// --- commands ---

int run_enumerate(int d, bool cycle_free, bool count_only, const std::string& out, bool allow) {
  const PartitionSet set = enumerate(d, EnumerateOptions{cycle_free, allow});
  if (count_only) {
    std::cout << set.size() << '\n';
    return 0;
  }
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw InputError("cannot write " + out);
  }
  std::ostream& sink = out.empty() ? std::cout : file;
  for (std::size_t i = 0; i < set.size(); ++i) sink << partition_to_json(set.member(i)).dump() << '\n';
  if (!out.empty()) std::cout << set.size() << '\n';
  return 0;
}

int run_flip(int d, const std::string& file, const std::vector<int>& face) {
  const EdgePartition p = read_partition_file(file);
  if (p.d() != d) throw InputError("partition is for d=" + std::to_string(p.d()));
  if (face.size() != 3) throw InputError("--face takes three vertices");
  const Face f = Face::make(face[0], face[1], face[2]);
  if (f.z > p.n()) throw InputError("face does not lie in K_" + std::to_string(p.n()));
  std::cout << partition_to_json(flip(p, f)).dump() << '\n';
  return 0;
}

int run_flip_graph(int d, const std::string& checks, const std::string& anchor_file) {
  GraphChecks which{false, false};
  for (const auto& item : split_checks(checks)) (item == "bipartite" ? which.bipartite : which.connected) = true;
  const auto anchors = load_anchors(d, anchor_file);
  const FlipGraph graph = build_flip_graph(cycle_free_set(d));
  std::optional<SignatureTable> table;
  return emit(stage_flip_graph(graph, anchors, which, table));
}

int run_orbits(int d, const std::string& out) {
  const auto set = cycle_free_set(d);
  const OrbitTable table = orbits(*set);
  const std::string csv = orbit_csv(*set, table);
  if (out.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream file(out);
  if (!file) throw InputError("cannot write " + out);
  file << csv;
  return emit(stage_orbits(*set, table));
}

int run_verify_appendix(std::uint64_t samples, std::uint64_t seed) {
  const auto set = cycle_free_set(3);
  const OrbitTable table = orbits(*set);
  int status = emit(stage_appendix(*set, table));
  const SignatureTable signs = signature_table(build_flip_graph(set), default_anchors(3));
  status = std::max(status, emit(stage_epsilon(signs, samples, seed)));
  return status;
}

int run_signature(int d, const std::string& file, const std::string& anchor_file) {
  const EdgePartition p = read_partition_file(file);
  if (p.d() != d) throw InputError("partition is for d=" + std::to_string(p.d()));
  const auto anchors = load_anchors(d, anchor_file);
  const SignatureTable table = signature_table(build_flip_graph(cycle_free_set(d)), anchors);
  std::cout << table.sign(p) << '\n';
  return 0;
}

int run_det(const std::string& file) {
  const VectorInput in = vector_input_from_json(read_json_file(file));
  if (in.n != 2 * in.d) throw InputError("inputs must have one vector per edge of K_{2d}");
  const SignatureTable table = signature_table(in.d);
  if (in.rational) {
    std::cout << to_string(det_eval(in.values, table)) << '\n';
  } else {
    const PrimeField field(in.modulus);
    TensorInput<Residue> x(in.d, in.n, field.zero());
    for (std::size_t e = 0; e < in.values.edge_count(); ++e)
      for (int c = 0; c < in.d; ++c) x.at(e, c) = field.from_rational(in.values.at(e, c));
    std::cout << to_string(det_eval(field, x, table)) << '\n';
  }
  return 0;
}

int run_verify_relations(int d, std::optional<std::uint64_t> sample, std::optional<std::uint64_t> seed) {
  if (sample && !seed) throw InputError("--sample requires --seed");
  return emit(stage_relations(signature_table(d), sample, seed.value_or(0)));
}

int run_rank(int d, std::uint64_t p) {
  Stopwatch watch;
  Certificate c;
  c.command = "rank";
  c.parameters = {{"d", d}, {"p", p}};
  const RankReport r = rank_certify(d, PrimeField(p));
  c.numbers = {{"generators", r.generators}, {"relations", r.relations}, {"rank", r.rank}, {"dimension", r.dimension}};
  if (r.dimension != 1) c.fail("the quotient by the face relations is one-dimensional");
  watch.stamp(c);
  return emit(c);
}

int run_emat(int d, const std::string& format) {
  const EdgePartition e = build_E(d);
  if (format == "partition" || format == "all") std::cout << partition_to_json(e).dump() << '\n';
  if (format == "vectors") std::cout << vector_input_to_json(basis_tensor(RationalField{}, e)).dump() << '\n';
  if (format == "text" || format == "all") std::cout << partition_matrix_text(e);
  return 0;
}

int run_certify_all(int d, std::uint64_t seed, std::optional<std::uint64_t> sample, std::uint64_t epsilon_samples) {
  int status = 0;
  std::shared_ptr<const PartitionSet> set;
  status = std::max(status, emit(stage_enumerate(d, set)));
  const FlipGraph graph = build_flip_graph(set);
  std::optional<SignatureTable> table;
  status = std::max(status, emit(stage_flip_graph(graph, default_anchors(d), GraphChecks{}, table)));
  const OrbitTable orbit_table = orbits(*set);
  status = std::max(status, emit(stage_orbits(*set, orbit_table)));
  if (d == 3) status = std::max(status, emit(stage_appendix(*set, orbit_table)));
  if (!table) return 1;
  if (d == 2 || d == 3) status = std::max(status, emit(stage_epsilon(*table, epsilon_samples, seed)));
  status = std::max(status, emit(stage_det_E(*table)));
  if (d >= 2) status = std::max(status, emit(stage_relations(*table, sample, seed)));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous cycle-free edge partitions of K_{2d}: enumeration, flips, signatures and Det"};
  app.require_subcommand(1);
  app.add_option("--threads", globals.threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", globals.timing, "Add wall_time to certificates");

  int d = 0;
  bool cycle_free = false;
  bool count_only = false;
  bool allow = false;
  std::string out;
  std::string partition_file;
  std::string anchor_file;
  std::string input_file;
  std::string checks = "bipartite,connected";
  std::string format = "all";
  std::vector<int> face;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> opt_seed;
  std::optional<std::uint64_t> sample;
  std::uint64_t p = PrimeField::kDefaultModulus;

  auto* cmd_enum = app.add_subcommand("enumerate", "Homogeneous (optionally cycle-free) partitions of K_{2d}");
  cmd_enum->add_option("--d", d, "Color count")->required();
  cmd_enum->add_flag("--cycle-free", cycle_free, "Keep only partitions whose classes are forests");
  cmd_enum->add_flag("--count-only", count_only, "Print only the count");
  cmd_enum->add_option("--out", out, "Write JSONL here instead of standard output");
  cmd_enum->add_flag("--allow-infeasible", allow, "Permit d > 3");

  auto* cmd_flip = app.add_subcommand("flip", "Flip a partition across a face");
  cmd_flip->add_option("--d", d, "Color count")->required();
  cmd_flip->add_option("--partition", partition_file, "Partition JSON file")->required();
  cmd_flip->add_option("--face", face, "Three face vertices")->required()->expected(3);

  auto* cmd_graph = app.add_subcommand("flip-graph", "Build the flip graph and certify it");
  cmd_graph->add_option("--d", d, "Color count")->required();
  cmd_graph->add_option("--check", checks, "Comma list of bipartite, connected");
  cmd_graph->add_option("--anchors", anchor_file, "JSON array of partitions with a sign");

  auto* cmd_orbits = app.add_subcommand("orbits", "Orbits under vertex and color relabelling");
  cmd_orbits->add_option("--d", d, "Color count")->required();
  cmd_orbits->add_option("--out", out, "CSV output file");

  auto* cmd_appendix = app.add_subcommand("verify-appendix", "Check the tabulated d=3 representatives");
  cmd_appendix->add_option("--samples", samples, "Random group elements for the signature formula");
  cmd_appendix->add_option("--seed", seed, "Random seed")->required();

  auto* cmd_sig = app.add_subcommand("signature", "Signature of a partition");
  cmd_sig->add_option("--d", d, "Color count")->required();
  cmd_sig->add_option("--partition", partition_file, "Partition JSON file")->required();
  cmd_sig->add_option("--anchors", anchor_file, "JSON array of partitions with a sign");

  auto* cmd_det = app.add_subcommand("det", "Evaluate the signed partition sum on vectors");
  cmd_det->add_option("--input", input_file, "Vector-input or partition JSON file")->required();

  auto* cmd_rel = app.add_subcommand("verify-relations", "Sweep the face relations");
  cmd_rel->add_option("--d", d, "Color count")->required();
  cmd_rel->add_option("--sample", sample, "Check this many random instances instead of all");
  cmd_rel->add_option("--seed", opt_seed, "Random seed for --sample");

  auto* cmd_rank = app.add_subcommand("rank", "Dimension of generators modulo relations over GF(p)");
  cmd_rank->add_option("--d", d, "Color count (1 or 2)")->required();
  cmd_rank->add_option("--p", p, "Prime modulus");

  auto* cmd_emat = app.add_subcommand("emat", "Print the generator E_d");
  cmd_emat->add_option("--d", d, "Color count")->required();
  cmd_emat->add_option("--format", format, "all, text, partition or vectors")
      ->check(CLI::IsMember({"all", "text", "partition", "vectors"}));

  auto* cmd_all = app.add_subcommand("certify-all", "Run every certificate for d");
  cmd_all->add_option("--d", d, "Color count")->required();
  cmd_all->add_option("--seed", seed, "Random seed")->required();
  cmd_all->add_option("--sample", sample, "Sample the relation sweep instead of running it in full");
  cmd_all->add_option("--samples", samples, "Random group elements for the signature formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (globals.threads > 0) par::set_threads(globals.threads);
    if (*cmd_enum) return run_enumerate(d, cycle_free, count_only, out, allow);
    if (*cmd_flip) return run_flip(d, partition_file, face);
    if (*cmd_graph) return run_flip_graph(d, checks, anchor_file);
    if (*cmd_orbits) return run_orbits(d, out);
    if (*cmd_appendix) return run_verify_appendix(samples, seed);
    if (*cmd_sig) return run_signature(d, partition_file, anchor_file);
    if (*cmd_det) return run_det(input_file);
    if (*cmd_rel) return run_verify_relations(d, sample, opt_seed);
    if (*cmd_rank) return run_rank(d, p);
    if (*cmd_emat) return run_emat(d, format);
    if (*cmd_all) return run_certify_all(d, seed, sample, samples);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const LemmaViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return 1;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
