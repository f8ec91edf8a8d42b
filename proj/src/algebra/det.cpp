#include "s2det/det.hpp"

#include <algorithm>
#include <array>

namespace s2det {

namespace {

constexpr std::size_t kBlock = 2048;

void check_sizes(int d, int n, const SignatureTable& table) {
  if (d != table.nodes().d() || n != table.nodes().n()) {
    throw InputError("input is for d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                     " but the partition set is for d=" + std::to_string(table.nodes().d()) +
                     ", n=" + std::to_string(table.nodes().n()));
  }
}

std::size_t block_count(std::size_t members) { return (members + kBlock - 1) / kBlock; }

// Sum of signed monomials of members [begin, end) with prefix reuse between neighbours.
template <class Value, class Mul>
Value block_sum(const SignatureTable& table, std::size_t begin, std::size_t end, const Value& one,
                const std::vector<Value>& coords, int d, Mul mul, Value zero) {
  const auto& set = table.nodes();
  const std::size_t edges = set.edge_count();
  std::vector<Value> prefix(edges + 1, one);
  Value plus = zero;
  Value minus = zero;
  std::span<const std::uint8_t> previous;
  for (std::size_t m = begin; m < end; ++m) {
    const auto colors = set.colors(m);
    std::size_t k = 0;
    if (!previous.empty()) {
      while (k < edges && colors[k] == previous[k]) ++k;
    }
    for (std::size_t e = k; e < edges; ++e) prefix[e + 1] = mul(prefix[e], coords[e * d + colors[e]]);
    previous = colors;
    if (table.sign_at(static_cast<std::uint32_t>(m)) > 0) {
      plus = plus + prefix[edges];
    } else {
      minus = minus + prefix[edges];
    }
  }
  return plus - minus;
}

struct ModValue {
  std::uint64_t v;
  const PrimeField* field;
  ModValue operator+(const ModValue& o) const { return {field->add({v}, {o.v}).value, field}; }
  ModValue operator-(const ModValue& o) const { return {field->sub({v}, {o.v}).value, field}; }
};

struct Factor {
  int coord;  // 0 = α, 1 = β
  int i;
  int j;
};

struct Monomial {
  int sign;
  std::array<Factor, 6> factors;
};

constexpr Factor a(int i, int j) { return {0, i, j}; }
constexpr Factor b(int i, int j) { return {1, i, j}; }

constexpr std::array<Monomial, 12> kDet2Terms{{
    {+1, {a(1, 2), a(2, 3), a(3, 4), b(1, 3), b(2, 4), b(1, 4)}},
    {+1, {a(1, 2), b(2, 3), a(3, 4), b(1, 3), b(2, 4), a(1, 4)}},
    {+1, {a(1, 2), b(2, 3), b(3, 4), a(1, 3), a(2, 4), b(1, 4)}},
    {+1, {b(1, 2), b(2, 3), a(3, 4), a(1, 3), a(2, 4), b(1, 4)}},
    {+1, {b(1, 2), a(2, 3), b(3, 4), b(1, 3), a(2, 4), a(1, 4)}},
    {+1, {b(1, 2), a(2, 3), b(3, 4), a(1, 3), b(2, 4), a(1, 4)}},
    {-1, {b(1, 2), b(2, 3), b(3, 4), a(1, 3), a(2, 4), a(1, 4)}},
    {-1, {b(1, 2), a(2, 3), b(3, 4), a(1, 3), a(2, 4), b(1, 4)}},
    {-1, {b(1, 2), a(2, 3), a(3, 4), b(1, 3), b(2, 4), a(1, 4)}},
    {-1, {a(1, 2), a(2, 3), b(3, 4), b(1, 3), b(2, 4), a(1, 4)}},
    {-1, {a(1, 2), b(2, 3), a(3, 4), a(1, 3), b(2, 4), b(1, 4)}},
    {-1, {a(1, 2), b(2, 3), a(3, 4), b(1, 3), a(2, 4), b(1, 4)}},
}};

template <class Field>
typename Field::value_type explicit_det2(const Field& field, const TensorInput<typename Field::value_type>& x) {
  if (x.d() != 2 || x.n() != 4) throw InputError("the explicit formula needs d=2 inputs on K_4");
  auto total = field.zero();
  for (const Monomial& m : kDet2Terms) {
    auto term = field.one();
    for (const Factor& f : m.factors) term = field.mul(term, x.at(edge_index(f.i, f.j, 4), f.coord));
    total = m.sign > 0 ? field.add(total, term) : field.sub(total, term);
  }
  return total;
}

}  // namespace

Rational det_eval(const TensorInput<Rational>& x, const SignatureTable& table) {
  check_sizes(x.d(), x.n(), table);
  const int d = x.d();
  const std::size_t edges = x.edge_count();
  // Clear denominators edge by edge so the sweep multiplies integers only.
  std::vector<mpz_class> coords(edges * d);
  mpz_class scale = 1;
  for (std::size_t e = 0; e < edges; ++e) {
    mpz_class l = 1;
    for (int c = 0; c < d; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.at(e, c).get_den_mpz_t());
    for (int c = 0; c < d; ++c) coords[e * d + c] = x.at(e, c).get_num() * (l / x.at(e, c).get_den());
    scale *= l;
  }
  const std::size_t members = table.nodes().size();
  const std::size_t blocks = block_count(members);
  std::vector<mpz_class> partial(blocks);
  const auto mul = [](const mpz_class& p, const mpz_class& q) -> mpz_class { return p * q; };
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const std::size_t begin = blk * kBlock;
    const std::size_t end = std::min(members, begin + kBlock);
    partial[blk] = block_sum<mpz_class>(table, begin, end, mpz_class(1), coords, d, mul, mpz_class(0));
  }
  mpz_class sum = 0;
  for (const auto& p : partial) sum += p;
  Rational result(sum, scale);
  result.canonicalize();
  return result;
}

Residue det_eval(const PrimeField& field, const TensorInput<Residue>& x, const SignatureTable& table) {
  check_sizes(x.d(), x.n(), table);
  const int d = x.d();
  std::vector<ModValue> coords;
  coords.reserve(x.coords().size());
  for (Residue r : x.coords()) coords.push_back({r.value % field.modulus(), &field});
  const std::size_t members = table.nodes().size();
  const std::size_t blocks = block_count(members);
  std::vector<ModValue> partial(blocks, ModValue{0, &field});
  const auto mul = [&field](const ModValue& p, const ModValue& q) -> ModValue {
    return {field.mul({p.v}, {q.v}).value, &field};
  };
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const std::size_t begin = blk * kBlock;
    const std::size_t end = std::min(members, begin + kBlock);
    partial[blk] = block_sum<ModValue>(table, begin, end, ModValue{1, &field}, coords, d, mul, ModValue{0, &field});
  }
  Residue sum = field.zero();
  for (const auto& p : partial) sum = field.add(sum, {p.v});
  return sum;
}

Rational det2_explicit(const TensorInput<Rational>& x) { return explicit_det2(RationalField{}, x); }

Residue det2_explicit(const PrimeField& field, const TensorInput<Residue>& x) { return explicit_det2(field, x); }

bool zero_by_multiplicity(const EdgePartition& p) {
  const auto sizes = p.class_sizes();
  return std::any_of(sizes.begin(), sizes.end(), [&](int s) { return s >= p.n(); });
}

bool zero_by_multiplicity(const TensorInput<Rational>& x) {
  const auto p = as_partition(RationalField{}, x);
  if (!p) throw InputError("multiplicity test needs a basis-valued input");
  return zero_by_multiplicity(*p);
}

}  // namespace s2det
