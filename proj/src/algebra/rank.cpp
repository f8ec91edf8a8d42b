#include "s2det/rank.hpp"

#include "s2det/errors.hpp"
#include "s2det/linear_algebra.hpp"
#include "s2det/relations.hpp"

namespace s2det {

RankReport rank_certify(int d, const PrimeField& field) {
  if (d < 1 || d > 2) throw InputError("rank certification is only feasible for d = 1 or d = 2");
  RankReport report;
  report.d = d;
  report.modulus = field.modulus();
  report.generators = 1;
  for (std::size_t e = 0; e < edge_count(2 * d); ++e) report.generators *= static_cast<std::uint64_t>(d);
  report.relations = relation_instance_count(d);
  Matrix<Residue> m(report.relations, report.generators, field.zero());
  for_each_relation_instance(d, FullSweep{}, [&](const RelationInstance& inst, std::uint64_t row) {
    for (const EdgePartition& p : inst.expand()) {
      auto& cell = m(row, canonical_code(p));
      cell = field.add(cell, field.one());
    }
  });
  report.rank = rank(field, std::move(m));
  report.dimension = report.generators - report.rank;
  return report;
}

}  // namespace s2det
