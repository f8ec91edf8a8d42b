// Serial reference kernels against their OpenMP counterparts.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "s2det/appendix.hpp"
#include "s2det/det.hpp"
#include "s2det/flips.hpp"
#include "s2det/parallel.hpp"
#include "s2det/partition_set.hpp"
#include "s2det/relations.hpp"
#include "s2det/tensor.hpp"

using namespace s2det;

namespace {

double best_of(int reps, const std::function<void()>& run) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& kernel, double serial, double parallel, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", kernel.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

TensorInput<Rational> random_input(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  TensorInput<Rational> x(d, 2 * d, Rational(0));
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    for (int c = 0; c < d; ++c) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      x.at(e, c) = v;
    }
  }
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings"};
  int d = 3;
  int reps = 3;
  int threads = 0;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  app.add_option("--d", d, "dimension")->check(CLI::Range(2, 3));
  app.add_option("--reps", reps, "repetitions, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--samples", samples, "sampled relation instances");
  app.add_option("--seed", seed, "seed for random inputs and sampling");
  CLI11_PARSE(app, argc, argv);
  par::set_threads(threads);

  std::printf("d=%d threads=%d reps=%d\n", d, par::max_threads(), reps);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial_s", "omp_s", "speedup");

  {
    std::optional<PartitionSet> a, b;
    const double s = best_of(reps, [&] { a.emplace(reference::enumerate(d, true)); });
    const double p = best_of(reps, [&] { b.emplace(enumerate(d, true)); });
    report("enumerate", s, p, std::ranges::equal(a->flat_colors(), b->flat_colors()));
  }

  const auto set = std::make_shared<const PartitionSet>(enumerate(d, true));
  {
    std::optional<FlipGraph> a, b;
    const double s = best_of(reps, [&] { a.emplace(reference::build_flip_graph(set)); });
    const double p = best_of(reps, [&] { b.emplace(build_flip_graph(set)); });
    report("flip_graph", s, p, std::ranges::equal(a->graph().adjacency(), b->graph().adjacency()));
  }

  const SignatureTable& table = signature_table(d);
  {
    std::mt19937_64 rng(seed);
    const auto x = random_input(d, rng);
    const RationalField q;
    Rational a, b;
    const double s = best_of(reps, [&] { a = reference::det_eval(q, x, table); });
    const double p = best_of(reps, [&] { b = det_eval(x, table); });
    report("det_eval_rational", s, p, a == b);
  }
  {
    const PrimeField f;
    std::mt19937_64 rng(seed + 1);
    TensorInput<Residue> x(d, 2 * d, Residue{0});
    for (std::size_t e = 0; e < x.edge_count(); ++e)
      for (int c = 0; c < d; ++c) x.at(e, c) = Residue{rng() % f.modulus()};
    Residue a{}, b{};
    const double s = best_of(reps, [&] { a = reference::det_eval(f, x, table); });
    const double p = best_of(reps, [&] { b = det_eval(f, x, table); });
    report("det_eval_gfp", s, p, a.value == b.value);
  }
  {
    RelationReport a, b;
    const SampledSweep mode{samples, seed};
    const double s = best_of(reps, [&] { a = reference::verify_relations(table, mode); });
    const double p = best_of(reps, [&] { b = verify_relations(table, mode); });
    report("relations_sampled", s, p, a.instances == b.instances && a.violations == b.violations);
  }
  return 0;
}
