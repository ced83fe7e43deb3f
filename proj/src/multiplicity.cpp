#include "multlab/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace multlab {

MixedType::MixedType(std::vector<int> entries) : a_(std::move(entries)) {
  for (int e : a_) {
    if (e < 0) throw AlgebraError("mixed type entries must be non-negative");
  }
}

MixedType MixedType::ones(std::size_t r) { return MixedType(std::vector<int>(r, 1)); }

int MixedType::total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

std::vector<BigInt> FunctionSampler::sample(const std::vector<GridPoint>& points) {
  std::vector<BigInt> out;
  out.reserve(points.size());
  for (const GridPoint& p : points) out.push_back(f_(p));
  return out;
}

namespace {

// Every point of base + prod [0, extent_i).
std::vector<GridPoint> box(const GridPoint& base, const std::vector<int>& extent) {
  std::vector<GridPoint> out;
  GridPoint offset(base.size(), 0);
  for (;;) {
    GridPoint p(base.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = base[i] + offset[i];
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < offset.size() && ++offset[i] == extent[i]) offset[i++] = 0;
    if (i == offset.size()) break;
  }
  return out;
}

using SampleMap = std::map<GridPoint, BigInt>;

BigInt difference_from(const SampleMap& values, const GridPoint& base, const std::vector<int>& order) {
  BigInt total = 0;
  std::vector<int> extent(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) extent[i] = order[i] + 1;
  for (const GridPoint& p : box(base, extent)) {
    BigInt coeff = 1;
    int sign = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int step = p[i] - base[i];
      coeff *= binomial(order[i], step);
      sign += order[i] - step;
    }
    const BigInt& v = values.at(p);
    if (sign % 2) total -= coeff * v;
    else total += coeff * v;
  }
  return total;
}

SampleMap sample_box(GridSampler& f, const GridPoint& base, const std::vector<int>& extent) {
  auto points = box(base, extent);
  auto values = f.sample(points);
  SampleMap out;
  for (std::size_t i = 0; i < points.size(); ++i) out.emplace(std::move(points[i]), std::move(values[i]));
  return out;
}

}  // namespace

BigInt mixed_difference(GridSampler& f, const GridPoint& base, const std::vector<int>& order) {
  if (base.size() != f.arity() || order.size() != f.arity()) {
    throw AlgebraError("difference order does not match the sampler arity");
  }
  std::vector<int> extent(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) extent[i] = order[i] + 1;
  return difference_from(sample_box(f, base, extent), base, order);
}

DifferenceTable stabilize(GridSampler& f, const MixedType& order, const StabilizationPolicy& policy,
                          int initial_base) {
  const std::size_t r = f.arity();
  if (order.size() != r) throw AlgebraError("difference order does not match the sampler arity");
  if (policy.window < 1 || policy.max_rounds < 1) throw AlgebraError("invalid stabilization policy");
  const int start = policy.initial_base.value_or(initial_base);
  if (start < 0) throw AlgebraError("stabilization base must be non-negative");

  DifferenceTable table;
  table.order = order.entries();
  table.window = policy.window;
  GridPoint base(r, start);
  std::vector<int> extent(r);
  for (std::size_t i = 0; i < r; ++i) extent[i] = order[i] + policy.window;
  const std::vector<int> shifts(r, policy.window);

  auto advance = [&] {
    for (int& b : base) b = b == 0 ? 1 : 2 * b;
  };

  for (int round = 1; round <= policy.max_rounds; ++round) {
    table.rounds = round;
    table.base = base;
    SampleMap values = sample_box(f, base, extent);
    table.samples.assign(values.begin(), values.end());

    bool stable = true;
    BigInt first = difference_from(values, base, table.order);
    for (const GridPoint& shifted : box(base, shifts)) {
      if (difference_from(values, shifted, table.order) != first) {
        stable = false;
        break;
      }
    }
    table.result = first;
    if (!stable) {
      advance();
      continue;
    }
    if (!policy.confirm_doubling) {
      table.stable = true;
      return table;
    }
    GridPoint doubled = base;
    for (int& b : doubled) b = b == 0 ? 1 : 2 * b;
    if (mixed_difference(f, doubled, table.order) == first) {
      table.stable = true;
      table.confirmed_at = doubled;
      return table;
    }
    advance();
  }
  throw StabilizationError("finite differences did not stabilize within " +
                               std::to_string(policy.max_rounds) + " rounds",
                           table);
}

namespace {

std::size_t common_dim(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw AlgebraError("at least one ideal is required");
  for (const MonomialIdeal& i : ideals) {
    if (i.dim() != ideals.front().dim()) throw AlgebraError("ideals live in different dimensions");
  }
  return ideals.front().dim();
}

}  // namespace

DifferenceTable mixed_multiplicity_table(const std::vector<MonomialIdeal>& ideals,
                                         const MixedType& type, const EngineOptions& options) {
  const std::size_t d = common_dim(ideals);
  if (type.size() != ideals.size()) throw AlgebraError("mixed type length differs from the ideal count");
  if (type.total() != static_cast<int>(d)) {
    throw AlgebraError("mixed type must sum to the dimension " + std::to_string(d));
  }
  std::map<MonomialIdeal, int> merged;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (type[i] == 0) continue;
    if (!is_m_primary(ideals[i])) throw AlgebraError("mixed multiplicity needs m-primary ideals");
    merged[ideals[i]] += type[i];
  }
  std::vector<MonomialIdeal> distinct;
  std::vector<int> order;
  for (auto& [ideal, a] : merged) {
    distinct.push_back(ideal);
    order.push_back(a);
  }
  ProductLengthSampler sampler(std::move(distinct), options.cache);
  return stabilize(sampler, MixedType(order), options.policy, std::max<int>(2, static_cast<int>(d)));
}

BigInt mixed_multiplicity(const std::vector<MonomialIdeal>& ideals, const MixedType& type,
                          const EngineOptions& options) {
  return mixed_multiplicity_table(ideals, type, options).result;
}

BigInt mixed_multiplicity(const std::vector<MonomialIdeal>& slots, const EngineOptions& options) {
  return mixed_multiplicity(slots, MixedType::ones(slots.size()), options);
}

BigInt hilbert_samuel(const MonomialIdeal& ideal, const EngineOptions& options) {
  return mixed_multiplicity({ideal}, MixedType{static_cast<int>(ideal.dim())}, options);
}

BigInt hyperplane_section_multiplicity(const std::vector<MonomialIdeal>& slots, int k,
                                       const EngineOptions& options) {
  const std::size_t d = common_dim(slots);
  if (k < 1 || k > static_cast<int>(d) - 1) {
    throw AlgebraError("number of general linear forms must lie in [1, d-1]");
  }
  if (slots.size() != d - static_cast<std::size_t>(k)) {
    throw AlgebraError("expected d - k ideals for a section by k linear forms");
  }
  std::vector<MonomialIdeal> padded(static_cast<std::size_t>(k), MonomialIdeal::maximal(d));
  padded.insert(padded.end(), slots.begin(), slots.end());
  return mixed_multiplicity(padded, options);
}

}  // namespace multlab
