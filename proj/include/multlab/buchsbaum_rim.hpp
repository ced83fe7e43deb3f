#ifndef MULTLAB_BUCHSBAUM_RIM_HPP
#define MULTLAB_BUCHSBAUM_RIM_HPP

#include "multlab/bigint.hpp"
#include "multlab/ideal.hpp"
#include "multlab/multiplicity.hpp"

#include <utility>
#include <vector>

namespace multlab {

/// E = I_1 + ... + I_r as a submodule of F = R^r, one ideal per summand.
class DirectSumModule {
 public:
  /// Needs r >= 1, a common dimension and finite colength in every slot
  /// (the unit ideal is allowed and stands for a free summand).
  explicit DirectSumModule(std::vector<MonomialIdeal> ideals);

  std::size_t rank() const { return ideals_.size(); }
  std::size_t dim() const { return ideals_.front().dim(); }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  const MonomialIdeal& operator[](std::size_t i) const { return ideals_[i]; }

  /// Every summand lies in m, i.e. E is inside mF.
  bool contained_in_mF() const;
  /// E = F.
  bool is_free() const;

  friend bool operator==(const DirectSumModule&, const DirectSumModule&) = default;

 private:
  std::vector<MonomialIdeal> ideals_;
};

std::string to_string(const DirectSumModule& module);

/// lambda(F/E) = sum of the colengths.
BigInt quotient_length(const DirectSumModule& module);

/// lambda(F^n / E^n) = sum over |a| = n of lambda(R / prod I_i^{a_i}).
BigInt module_colength(const DirectSumModule& module, int n, LengthCache* cache = nullptr);

/// n -> lambda(F^n / E^n) as a one-variable sampler.  All compositions of
/// a batch go to one shared product sampler.
class ModuleLengthSampler final : public GridSampler {
 public:
  ModuleLengthSampler(const DirectSumModule& module, LengthCache* cache);
  std::size_t arity() const override { return 1; }
  std::vector<BigInt> sample(const std::vector<GridPoint>& points) override;

 private:
  std::size_t rank_;
  ProductSampler products_;
};

/// All (a_1, ..., a_parts) with non-negative entries summing to `total`,
/// in lexicographically decreasing order.
std::vector<std::vector<int>> compositions(int total, std::size_t parts);

struct CompositionCount {
  /// C(d+r-1, r-1): the number of mixed terms in br.
  BigInt count;
  /// (d+r-1)! / (r! (d-1)!) = d * count / r.
  BigInt c;
};

CompositionCount composition_count(int d, int r);

/// br(E) as (d+r-1)! times the leading coefficient of n -> lambda(F^n/E^n).
DifferenceTable br_direct_table(const DirectSumModule& module, const EngineOptions& options = {});
BigInt br_direct(const DirectSumModule& module, const EngineOptions& options = {});

struct MixedBreakdown {
  BigInt total;
  /// One entry per composition of d, in the order of compositions().
  /// Terms that put positive weight on a free summand are zero.
  std::vector<std::pair<std::vector<int>, BigInt>> terms;
};

/// br(E) as the sum of e(I_1^[a_1], ..., I_r^[a_r]) over compositions of d.
MixedBreakdown br_via_mixed_terms(const DirectSumModule& module, const EngineOptions& options = {});
BigInt br_via_mixed(const DirectSumModule& module, const EngineOptions& options = {});

/// mE = mI_1 + ... + mI_r.
DirectSumModule scale_by_m(const DirectSumModule& module);

}  // namespace multlab

#endif  // MULTLAB_BUCHSBAUM_RIM_HPP
