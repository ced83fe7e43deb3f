#include "multlab/buchsbaum_rim.hpp"

#include "multlab/length.hpp"

#include <algorithm>

namespace multlab {

DirectSumModule::DirectSumModule(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw AlgebraError("a direct sum needs at least one summand");
  for (const MonomialIdeal& i : ideals_) {
    if (i.dim() != ideals_.front().dim()) throw AlgebraError("summands live in different dimensions");
    if (!has_finite_colength(i)) throw AlgebraError("summand " + to_string(i) + " is not m-primary");
  }
}

bool DirectSumModule::contained_in_mF() const {
  return std::none_of(ideals_.begin(), ideals_.end(), [](const MonomialIdeal& i) { return i.is_unit(); });
}

bool DirectSumModule::is_free() const {
  return std::all_of(ideals_.begin(), ideals_.end(), [](const MonomialIdeal& i) { return i.is_unit(); });
}

std::string to_string(const DirectSumModule& module) {
  std::string out;
  for (std::size_t i = 0; i < module.rank(); ++i) {
    if (i) out += ';';
    out += to_string(module[i]);
  }
  return out;
}

BigInt quotient_length(const DirectSumModule& module) {
  BigInt total = 0;
  for (const MonomialIdeal& i : module.ideals()) total += colength(i);
  return total;
}

std::vector<std::vector<int>> compositions(int total, std::size_t parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> a(parts, 0);
  // Recursive fill; the last part takes whatever remains.
  auto fill = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == parts) {
      a[i] = left;
      out.push_back(a);
      return;
    }
    for (int k = left; k >= 0; --k) {
      a[i] = k;
      self(self, i + 1, left - k);
    }
  };
  fill(fill, 0, total);
  return out;
}

ModuleLengthSampler::ModuleLengthSampler(const DirectSumModule& module, LengthCache* cache)
    : rank_(module.rank()), products_(module.ideals(), cache) {}

std::vector<BigInt> ModuleLengthSampler::sample(const std::vector<GridPoint>& points) {
  std::vector<GridPoint> grid;
  std::vector<std::size_t> offsets;
  for (const GridPoint& p : points) {
    if (p.size() != 1 || p[0] < 0) throw AlgebraError("module lengths are sampled at n >= 0");
    offsets.push_back(grid.size());
    for (auto& a : compositions(p[0], rank_)) grid.push_back(std::move(a));
  }
  offsets.push_back(grid.size());
  std::vector<BigInt> lengths = products_.sample(grid);
  std::vector<BigInt> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = offsets[i]; j < offsets[i + 1]; ++j) out[i] += lengths[j];
  }
  return out;
}

BigInt module_colength(const DirectSumModule& module, int n, LengthCache* cache) {
  if (n < 0) throw AlgebraError("n must be non-negative");
  ModuleLengthSampler sampler(module, cache);
  return sampler.sample({GridPoint{n}}).front();
}

CompositionCount composition_count(int d, int r) {
  if (d < 1 || r < 1) throw AlgebraError("composition_count needs d, r >= 1");
  return {binomial(d + r - 1, r - 1), binomial(d + r - 1, r)};
}

DifferenceTable br_direct_table(const DirectSumModule& module, const EngineOptions& options) {
  if (module.is_free()) throw AlgebraError("br is undefined for E = F");
  const int d = static_cast<int>(module.dim());
  const int order = d + static_cast<int>(module.rank()) - 1;
  ModuleLengthSampler sampler(module, options.cache);
  DifferenceTable table = stabilize(sampler, MixedType{order}, options.policy, std::max(2, d));
  if (table.result <= 0) {
    throw AlgebraError("module length grows with degree below d + r - 1");
  }
  return table;
}

BigInt br_direct(const DirectSumModule& module, const EngineOptions& options) {
  return br_direct_table(module, options).result;
}

MixedBreakdown br_via_mixed_terms(const DirectSumModule& module, const EngineOptions& options) {
  if (module.is_free()) throw AlgebraError("br is undefined for E = F");
  MixedBreakdown out;
  out.total = 0;
  for (auto& a : compositions(static_cast<int>(module.dim()), module.rank())) {
    bool touches_free = false;
    for (std::size_t i = 0; i < a.size(); ++i) touches_free |= a[i] > 0 && module[i].is_unit();
    // lambda(R / R^{n_i} ...) does not depend on n_i, so such a term vanishes.
    BigInt term = touches_free ? BigInt(0) : mixed_multiplicity(module.ideals(), MixedType(a), options);
    out.total += term;
    out.terms.emplace_back(std::move(a), std::move(term));
  }
  return out;
}

BigInt br_via_mixed(const DirectSumModule& module, const EngineOptions& options) {
  return br_via_mixed_terms(module, options).total;
}

DirectSumModule scale_by_m(const DirectSumModule& module) {
  const MonomialIdeal m = MonomialIdeal::maximal(module.dim());
  std::vector<MonomialIdeal> scaled;
  for (const MonomialIdeal& i : module.ideals()) scaled.push_back(product(m, i));
  return DirectSumModule(std::move(scaled));
}

}  // namespace multlab
