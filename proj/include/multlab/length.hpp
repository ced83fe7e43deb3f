#ifndef MULTLAB_LENGTH_HPP
#define MULTLAB_LENGTH_HPP

#include "multlab/bigint.hpp"
#include "multlab/ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace multlab {

using GridPoint = std::vector<int>;

/// Dense staircase of an ideal with finite colength.
///
/// One variable is the height axis; over every exponent vector v of the
/// remaining d-1 variables we store the least k such that x^v x_axis^k
/// lies in the ideal.  Cells outside the stored box have height 0.  The
/// colength is the sum of the heights, and multiplying by an ideal is a
/// min-plus update over its generators, so products of powers never need
/// their (huge) generator lists.
class Staircase {
 public:
  /// The unit ideal.
  Staircase(std::size_t d, std::size_t axis);

  static Staircase of(const MonomialIdeal& ideal, std::size_t axis);

  /// Staircase of (this ideal) * ideal.
  Staircase times(const MonomialIdeal& ideal) const;

  BigInt colength() const;

  std::size_t dim() const { return dim_; }
  std::size_t axis() const { return axis_; }
  /// Box of the non-axis variables, in increasing variable order.
  const std::vector<Exponent>& bounds() const { return bounds_; }
  std::span<const Exponent> heights() const { return heights_; }

  /// Height over a full exponent vector (its axis entry is ignored).
  Exponent height(std::span<const Exponent> v) const;

 private:
  std::size_t dim_;
  std::size_t axis_;
  std::vector<Exponent> bounds_;
  std::vector<Exponent> heights_;  // row-major over bounds_
};

/// Cells allowed in a single staircase before a product is refused.
inline constexpr std::size_t kMaxStaircaseCells = std::size_t{1} << 28;

/// Box volume above which colength() switches to the staircase sweep.
inline constexpr std::uint64_t kSweepThreshold = 100000;

/// lambda(R/I) by testing every point of prod [0, b_i).
BigInt colength_naive(const MonomialIdeal& ideal);
/// lambda(R/I) from the height staircase.
BigInt colength_sweep(const MonomialIdeal& ideal);
/// lambda(R/I); requires finite colength (the unit ideal gives 0).
BigInt colength(const MonomialIdeal& ideal);

std::uint64_t box_volume(const MonomialIdeal& ideal);

/// Height axis minimizing the stored box for prod ideals[i]^{n_i}.
std::size_t best_axis(const std::vector<MonomialIdeal>& ideals, std::span<const int> n);

/// Thread-safe memo of lambda(R / prod I_i^{n_i}).  Keys are canonical:
/// factors with n_i = 0 are dropped and equal ideals are merged, so the
/// same product reached through different ideal lists shares an entry.
class LengthCache {
 public:
  bool lookup(const std::string& key, BigInt& out) const;
  void insert(const std::string& key, const BigInt& value);
  std::size_t size() const;
  void clear();

  static std::string key(const std::vector<MonomialIdeal>& ideals, std::span<const int> n);

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, BigInt> table_;
};

/// lambda(R / prod ideals[i]^{n[i]}).  All ideals must have finite
/// colength and share one dimension; all-zero n gives 0.
BigInt colength_of_product(const std::vector<MonomialIdeal>& ideals, std::span<const int> n,
                           LengthCache* cache = nullptr);

/// Evaluates lambda(R / prod I_i^{n_i}) on batches of grid points,
/// sharing partial products along a lexicographic prefix tree.
class ProductSampler {
 public:
  explicit ProductSampler(std::vector<MonomialIdeal> ideals, LengthCache* cache = nullptr);

  std::size_t arity() const { return ideals_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }

  std::vector<BigInt> sample(const std::vector<GridPoint>& points);
  BigInt operator()(const GridPoint& point) { return sample({point}).front(); }

 private:
  void descend(std::size_t level, const Staircase& prefix, std::span<const std::size_t> order,
               const std::vector<GridPoint>& points, std::vector<BigInt>& out) const;

  std::vector<MonomialIdeal> ideals_;
  std::size_t dim_;
  LengthCache* cache_;
};

}  // namespace multlab

#endif  // MULTLAB_LENGTH_HPP
