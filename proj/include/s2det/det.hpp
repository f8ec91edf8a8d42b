#pragma once

#include "s2det/field.hpp"
#include "s2det/flips.hpp"
#include "s2det/tensor.hpp"

namespace s2det {

// Σ_P ε(P) Π_e v_e[color_P(e)] over the signature table's node set.
// Members are swept in code order in fixed blocks, reusing shared edge-prefix products.
Rational det_eval(const TensorInput<Rational>& x, const SignatureTable& table);
Residue det_eval(const PrimeField& field, const TensorInput<Residue>& x, const SignatureTable& table);

// The printed 12-monomial polynomial in α = first and β = second coordinates (d = 2, n = 4).
Rational det2_explicit(const TensorInput<Rational>& x);
Residue det2_explicit(const PrimeField& field, const TensorInput<Residue>& x);

// det2_explicit(X) == kExplicitDet2Sign * det_eval(X) for every X.
inline constexpr int kExplicitDet2Sign = -1;

// Some color occupies at least n edges, so the generator is not homogeneous and evaluates to 0.
bool zero_by_multiplicity(const EdgePartition& p);
// Throws InputError unless x is basis-valued.
bool zero_by_multiplicity(const TensorInput<Rational>& x);

namespace reference {

// One full product per member, no prefix sharing, single-threaded.
template <class Field>
typename Field::value_type det_eval(const Field& field, const TensorInput<typename Field::value_type>& x,
                                    const SignatureTable& table) {
  const auto& set = table.nodes();
  if (x.d() != set.d() || x.n() != set.n()) throw InputError("input size differs from the partition set");
  auto total = field.zero();
  for (std::size_t m = 0; m < set.size(); ++m) {
    auto term = field.one();
    const auto colors = set.colors(m);
    for (std::size_t e = 0; e < colors.size(); ++e) term = field.mul(term, x.at(e, colors[e]));
    total = table.sign_at(static_cast<std::uint32_t>(m)) > 0 ? field.add(total, term) : field.sub(total, term);
  }
  return total;
}

}  // namespace reference

}  // namespace s2det
