#ifndef MULTLAB_MULTIPLICITY_HPP
#define MULTLAB_MULTIPLICITY_HPP

#include "multlab/bigint.hpp"
#include "multlab/ideal.hpp"
#include "multlab/length.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multlab {

/// Type (a_1, ..., a_r) of a mixed multiplicity: one non-negative entry
/// per ideal, summing to the ambient dimension.
class MixedType {
 public:
  MixedType() = default;
  explicit MixedType(std::vector<int> entries);
  MixedType(std::initializer_list<int> entries) : MixedType(std::vector<int>(entries)) {}

  /// (1, ..., 1) of length r.
  static MixedType ones(std::size_t r);

  std::size_t size() const { return a_.size(); }
  int operator[](std::size_t i) const { return a_[i]; }
  int total() const;
  const std::vector<int>& entries() const { return a_; }

  friend bool operator==(const MixedType&, const MixedType&) = default;

 private:
  std::vector<int> a_;
};

/// How leading coefficients are certified.  Samples are taken on the box
/// base + [0, order_i + window - 1]; the table is stable when the order-th
/// difference agrees at every base + s, s in [0, window)^r.  On failure
/// every base coordinate is doubled.  A stable value is re-confirmed at
/// the doubled base when `confirm_doubling` is set.
struct StabilizationPolicy {
  /// Defaults to max(2, d) when unset.
  std::optional<int> initial_base;
  int window = 2;
  int max_rounds = 6;
  bool confirm_doubling = true;
};

/// One round's worth of finite-difference state.
struct DifferenceTable {
  std::vector<int> base;
  std::vector<int> order;
  int window = 2;
  std::vector<std::pair<GridPoint, BigInt>> samples;
  BigInt result;
  bool stable = false;
  int rounds = 0;
  /// Base at which the doubled re-confirmation ran (empty if none).
  std::vector<int> confirmed_at;
};

/// No stable value within the round budget.  Never a wrong answer.
class StabilizationError : public std::runtime_error {
 public:
  StabilizationError(const std::string& message, DifferenceTable last)
      : std::runtime_error(message), last_(std::move(last)) {}
  const DifferenceTable& last_table() const { return last_; }

 private:
  DifferenceTable last_;
};

/// A function on the non-negative integer grid, evaluated in batches.
class GridSampler {
 public:
  virtual ~GridSampler() = default;
  virtual std::size_t arity() const = 0;
  virtual std::vector<BigInt> sample(const std::vector<GridPoint>& points) = 0;
};

/// Adapts a plain callable (used for synthetic polynomials and tests).
class FunctionSampler final : public GridSampler {
 public:
  FunctionSampler(std::size_t arity, std::function<BigInt(const GridPoint&)> f)
      : arity_(arity), f_(std::move(f)) {}
  std::size_t arity() const override { return arity_; }
  std::vector<BigInt> sample(const std::vector<GridPoint>& points) override;

 private:
  std::size_t arity_;
  std::function<BigInt(const GridPoint&)> f_;
};

/// lambda(R / prod I_i^{n_i}) as a GridSampler.
class ProductLengthSampler final : public GridSampler {
 public:
  ProductLengthSampler(std::vector<MonomialIdeal> ideals, LengthCache* cache)
      : sampler_(std::move(ideals), cache) {}
  std::size_t arity() const override { return sampler_.arity(); }
  std::vector<BigInt> sample(const std::vector<GridPoint>& points) override {
    return sampler_.sample(points);
  }

 private:
  ProductSampler sampler_;
};

/// Mixed forward difference Delta_1^{a_1} ... Delta_r^{a_r} at `base`,
/// from values on base + prod [0, a_i].
BigInt mixed_difference(GridSampler& f, const GridPoint& base, const std::vector<int>& order);

/// Finds a base where the order-th mixed difference has settled.
/// `initial_base` is the default base when the policy leaves it unset.
DifferenceTable stabilize(GridSampler& f, const MixedType& order, const StabilizationPolicy& policy,
                          int initial_base = 2);

struct EngineOptions {
  StabilizationPolicy policy;
  LengthCache* cache = nullptr;
};

/// e(I): d-th difference of n -> lambda(R/I^n).  Requires is_m_primary.
BigInt hilbert_samuel(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// e(I_1^[a_1], ..., I_r^[a_r]).  Slots with a_i = 0 are dropped before
/// sampling and equal ideals are merged; every remaining ideal must be
/// m-primary.
BigInt mixed_multiplicity(const std::vector<MonomialIdeal>& ideals, const MixedType& type,
                          const EngineOptions& options = {});

/// Same, returning the certified difference table (over the reduced,
/// merged ideal list).
DifferenceTable mixed_multiplicity_table(const std::vector<MonomialIdeal>& ideals,
                                         const MixedType& type, const EngineOptions& options = {});

/// e(I_1, ..., I_d) with each ideal listed once per slot: type (1, ..., 1).
BigInt mixed_multiplicity(const std::vector<MonomialIdeal>& slots, const EngineOptions& options = {});

/// Multiplicity of the images of `slots` modulo k general linear forms,
/// realized as e(m, ..., m, slots...) with m repeated k times.  Needs
/// slots.size() == d - k and 1 <= k <= d - 1.
BigInt hyperplane_section_multiplicity(const std::vector<MonomialIdeal>& slots, int k,
                                       const EngineOptions& options = {});

}  // namespace multlab

#endif  // MULTLAB_MULTIPLICITY_HPP
