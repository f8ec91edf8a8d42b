#include "s2det/relations.hpp"

#include <algorithm>
#include <random>

#include "s2det/errors.hpp"

namespace s2det {

namespace {

struct Layout {
  int d = 0;
  int n = 0;
  std::size_t edges = 0;
  int target = 0;
  std::vector<Face> faces;
  std::vector<ColorTriple> multisets;
  std::vector<std::vector<ColorTriple>> orders;
  std::vector<std::array<std::size_t, 3>> face_edges;
  std::vector<std::vector<std::size_t>> others;
  std::vector<std::uint64_t> weight;
  std::uint64_t contexts = 1;

  explicit Layout(int colors) : d(colors), n(2 * colors) {
    if (d < 1 || n > kMaxVertices) throw InputError("relation sweep needs 1 <= d <= " + std::to_string(kMaxVertices / 2));
    if (!code_fits(d, n)) throw InputError("partition codes for d=" + std::to_string(d) + " exceed 64 bits");
    edges = edge_count(n);
    target = static_cast<int>(edges) / d;
    faces = all_faces(n);
    multisets = color_multisets(d);
    for (const auto& m : multisets) orders.push_back(arrangements(m));
    for (const Face& f : faces) {
      const auto fe = f.edge_indices(n);
      face_edges.push_back(fe);
      std::vector<std::size_t> rest;
      for (std::size_t e = 0; e < edges; ++e)
        if (e != fe[0] && e != fe[1] && e != fe[2]) rest.push_back(e);
      others.push_back(std::move(rest));
    }
    weight.assign(edges, 1);
    for (std::size_t e = edges - 1; e-- > 0;) weight[e] = weight[e + 1] * static_cast<std::uint64_t>(d);
    for (std::size_t k = 0; k + 3 < edges; ++k) contexts *= static_cast<std::uint64_t>(d);
  }

  std::uint64_t tasks() const { return faces.size() * multisets.size(); }
};

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

struct Draw {
  std::size_t face;
  std::size_t multiset;
  std::array<std::uint8_t, kMaxEdges> colors{};
};

Draw draw(const Layout& layout, std::mt19937_64& rng) {
  Draw out{};
  out.face = std::uniform_int_distribution<std::size_t>(0, layout.faces.size() - 1)(rng);
  out.multiset = std::uniform_int_distribution<std::size_t>(0, layout.multisets.size() - 1)(rng);
  std::uniform_int_distribution<int> color(0, layout.d - 1);
  for (std::size_t e : layout.others[out.face]) out.colors[e] = static_cast<std::uint8_t>(color(rng));
  return out;
}

RelationInstance make_instance(const Layout& layout, std::size_t face, std::size_t multiset,
                               const std::array<std::uint8_t, kMaxEdges>& colors) {
  EdgePartition context(layout.d, layout.n);
  for (std::size_t e : layout.others[face]) context.set_color(e, colors[e]);
  return RelationInstance{layout.faces[face], layout.multisets[multiset], context};
}

struct Outcome {
  bool active = false;
  int sum = 0;
};

// Counts and base code are those of the context edges alone.
Outcome evaluate(const Layout& layout, const SignatureTable& table, std::size_t face, std::size_t multiset,
                 const std::array<int, kMaxColors>& counts, std::uint64_t base) {
  const ColorTriple& m = layout.multisets[multiset];
  std::array<int, kMaxColors> total = counts;
  for (std::uint8_t c : m) ++total[c];
  for (int c = 0; c < layout.d; ++c)
    if (total[c] != layout.target) return {};
  Outcome out;
  const auto& fe = layout.face_edges[face];
  const auto& set = table.nodes();
  for (const ColorTriple& arr : layout.orders[multiset]) {
    const std::uint64_t code = base + arr[0] * layout.weight[fe[0]] + arr[1] * layout.weight[fe[1]] +
                               arr[2] * layout.weight[fe[2]];
    if (auto idx = set.find_code(code)) {
      out.active = true;
      out.sum += table.sign_at(*idx);
    }
  }
  return out;
}

struct Partial {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::uint64_t active = 0;
  std::optional<std::uint64_t> first;
  int first_sum = 0;
  std::size_t first_face = 0;
  std::size_t first_multiset = 0;
  std::array<std::uint8_t, kMaxEdges> first_colors{};

  void record(const Outcome& o, std::uint64_t index, std::size_t face, std::size_t multiset,
              const std::array<std::uint8_t, kMaxEdges>& colors) {
    ++instances;
    if (o.active) ++active;
    if (o.sum == 0) return;
    ++violations;
    if (!first || index < *first) {
      first = index;
      first_sum = o.sum;
      first_face = face;
      first_multiset = multiset;
      first_colors = colors;
    }
  }

  void merge(const Partial& other) {
    instances += other.instances;
    violations += other.violations;
    active += other.active;
    if (other.first && (!first || *other.first < *first)) {
      first = other.first;
      first_sum = other.first_sum;
      first_face = other.first_face;
      first_multiset = other.first_multiset;
      first_colors = other.first_colors;
    }
  }
};

RelationReport finish(const Layout& layout, const Partial& p) {
  RelationReport report;
  report.instances = p.instances;
  report.violations = p.violations;
  report.active = p.active;
  if (p.first) {
    report.first_violation = make_instance(layout, p.first_face, p.first_multiset, p.first_colors);
    report.first_violation_index = *p.first;
    report.first_violation_sum = p.first_sum;
  }
  return report;
}

Partial sweep_task(const Layout& layout, const SignatureTable& table, std::uint64_t task) {
  const std::size_t face = task / layout.multisets.size();
  const std::size_t multiset = task % layout.multisets.size();
  const auto& rest = layout.others[face];
  const std::uint8_t top = static_cast<std::uint8_t>(layout.d - 1);
  std::array<std::uint8_t, kMaxEdges> colors{};
  std::array<int, kMaxColors> counts{};
  counts[0] = static_cast<int>(rest.size());
  std::uint64_t base = 0;
  Partial partial;
  const std::uint64_t first_index = task * layout.contexts;
  for (std::uint64_t ctx = 0; ctx < layout.contexts; ++ctx) {
    partial.record(evaluate(layout, table, face, multiset, counts, base), first_index + ctx, face, multiset, colors);
    // Odometer step over the context digits, last edge least significant.
    for (std::size_t k = rest.size(); k-- > 0;) {
      const std::size_t e = rest[k];
      --counts[colors[e]];
      if (colors[e] < top) {
        ++colors[e];
        ++counts[colors[e]];
        base += layout.weight[e];
        break;
      }
      base -= static_cast<std::uint64_t>(top) * layout.weight[e];
      colors[e] = 0;
      ++counts[0];
    }
  }
  return partial;
}

Partial sample_block(const Layout& layout, const SignatureTable& table, const SampledSweep& mode,
                     std::uint64_t block) {
  auto rng = block_rng(mode.seed, block);
  const std::uint64_t begin = block * kSampleBlock;
  const std::uint64_t end = std::min(mode.count, begin + kSampleBlock);
  Partial partial;
  for (std::uint64_t index = begin; index < end; ++index) {
    const Draw dr = draw(layout, rng);
    std::array<int, kMaxColors> counts{};
    std::uint64_t base = 0;
    for (std::size_t e : layout.others[dr.face]) {
      ++counts[dr.colors[e]];
      base += dr.colors[e] * layout.weight[e];
    }
    partial.record(evaluate(layout, table, dr.face, dr.multiset, counts, base), index, dr.face, dr.multiset,
                   dr.colors);
  }
  return partial;
}

void check_table(const SignatureTable& table) {
  if (table.nodes().n() != 2 * table.nodes().d()) throw InputError("relation sweep needs partitions of K_{2d}");
}

void check_sampling(const Layout& layout) {
  if (layout.faces.empty()) throw InputError("K_" + std::to_string(layout.n) + " has no faces to sample");
}

}  // namespace

std::vector<EdgePartition> RelationInstance::expand() const {
  const auto fe = face.edge_indices(context.n());
  std::vector<EdgePartition> out;
  for (const ColorTriple& arr : arrangements(colors)) {
    EdgePartition p = context;
    for (int k = 0; k < 3; ++k) p.set_color(fe[k], arr[k]);
    out.push_back(p);
  }
  return out;
}

std::vector<ColorTriple> color_multisets(int d) {
  std::vector<ColorTriple> out;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b)
      for (int c = b; c < d; ++c)
        out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});
  return out;
}

std::vector<ColorTriple> arrangements(const ColorTriple& sorted) {
  ColorTriple t = sorted;
  std::sort(t.begin(), t.end());
  std::vector<ColorTriple> out;
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::uint64_t relation_instance_count(int d) {
  const Layout layout(d);
  return layout.tasks() * layout.contexts;
}

void for_each_relation_instance(int d, const SweepMode& mode,
                                const std::function<void(const RelationInstance&, std::uint64_t)>& visit) {
  const Layout layout(d);
  if (std::holds_alternative<FullSweep>(mode)) {
    std::uint64_t index = 0;
    for (std::size_t f = 0; f < layout.faces.size(); ++f) {
      const auto& rest = layout.others[f];
      for (std::size_t m = 0; m < layout.multisets.size(); ++m) {
        for (std::uint64_t ctx = 0; ctx < layout.contexts; ++ctx) {
          std::array<std::uint8_t, kMaxEdges> colors{};
          std::uint64_t code = ctx;
          for (std::size_t k = rest.size(); k-- > 0;) {
            colors[rest[k]] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(d));
            code /= static_cast<std::uint64_t>(d);
          }
          visit(make_instance(layout, f, m, colors), index++);
        }
      }
    }
    return;
  }
  const auto& sample = std::get<SampledSweep>(mode);
  if (sample.count == 0) return;
  check_sampling(layout);
  const std::uint64_t blocks = (sample.count + kSampleBlock - 1) / kSampleBlock;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    auto rng = block_rng(sample.seed, b);
    const std::uint64_t end = std::min(sample.count, (b + 1) * kSampleBlock);
    for (std::uint64_t index = b * kSampleBlock; index < end; ++index) {
      const Draw dr = draw(layout, rng);
      visit(make_instance(layout, dr.face, dr.multiset, dr.colors), index);
    }
  }
}

RelationReport verify_relations(const SignatureTable& table, const SweepMode& mode) {
  check_table(table);
  const Layout layout(table.d());
  std::vector<Partial> partials;
  if (std::holds_alternative<FullSweep>(mode)) {
    partials.resize(layout.tasks());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::uint64_t t = 0; t < layout.tasks(); ++t) partials[t] = sweep_task(layout, table, t);
  } else {
    const auto& sample = std::get<SampledSweep>(mode);
    if (sample.count > 0) check_sampling(layout);
    const std::uint64_t blocks = (sample.count + kSampleBlock - 1) / kSampleBlock;
    partials.resize(blocks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::uint64_t b = 0; b < blocks; ++b) partials[b] = sample_block(layout, table, sample, b);
  }
  Partial total;
  for (const auto& p : partials) total.merge(p);
  return finish(layout, total);
}

namespace reference {

RelationReport verify_relations(const SignatureTable& table, const SweepMode& mode) {
  check_table(table);
  RelationReport report;
  for_each_relation_instance(table.d(), mode, [&](const RelationInstance& inst, std::uint64_t index) {
    ++report.instances;
    int sum = 0;
    bool active = false;
    for (const EdgePartition& p : inst.expand()) {
      if (table.nodes().contains(p)) active = true;
      sum += table.sign_or_zero(p);
    }
    if (active) ++report.active;
    if (sum != 0) {
      if (report.violations == 0) {
        report.first_violation = inst;
        report.first_violation_index = index;
        report.first_violation_sum = sum;
      }
      ++report.violations;
    }
  });
  return report;
}

}  // namespace reference

}  // namespace s2det
