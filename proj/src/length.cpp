#include "multlab/length.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace multlab {

namespace {

constexpr Exponent kUnset = std::numeric_limits<Exponent>::max();

std::vector<Exponent> project(std::span<const Exponent> v, std::size_t axis) {
  std::vector<Exponent> out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != axis) out.push_back(v[j]);
  }
  return out;
}

std::size_t cell_count(const std::vector<Exponent>& bounds) {
  std::size_t cells = 1;
  for (Exponent b : bounds) {
    if (__builtin_mul_overflow(cells, static_cast<std::size_t>(b), &cells) ||
        cells > kMaxStaircaseCells) {
      throw AlgebraError("product ideal too large for the staircase counter");
    }
  }
  return cells;
}

void check_same_dim(const std::vector<MonomialIdeal>& ideals) {
  for (const MonomialIdeal& i : ideals) {
    if (i.dim() != ideals.front().dim()) throw AlgebraError("ideals live in different dimensions");
    if (!has_finite_colength(i)) throw AlgebraError("ideal is not m-primary");
  }
}

}  // namespace

Staircase::Staircase(std::size_t d, std::size_t axis)
    : dim_(d), axis_(axis), bounds_(d == 0 ? 0 : d - 1, 0) {
  if (d == 0 || axis >= d) throw AlgebraError("invalid staircase axis");
  heights_.assign(cell_count(bounds_), 0);
}

Staircase Staircase::of(const MonomialIdeal& ideal, std::size_t axis) {
  return Staircase(ideal.dim(), axis).times(ideal);
}

Staircase Staircase::times(const MonomialIdeal& ideal) const {
  if (ideal.dim() != dim_) throw AlgebraError("dimension mismatch in staircase product");
  const auto ideal_box = project(box_bounds(ideal), axis_);
  const std::size_t k = dim_ - 1;

  Staircase out(dim_, axis_);
  for (std::size_t j = 0; j < k; ++j) out.bounds_[j] = checked_add(bounds_[j], ideal_box[j]);
  out.heights_.assign(cell_count(out.bounds_), kUnset);

  if (k == 0) {
    Exponent best = kUnset;
    for (const Monomial& g : ideal.gens()) best = std::min(best, checked_add(g[axis_], heights_[0]));
    out.heights_[0] = best;
    return out;
  }

  std::vector<std::size_t> new_stride(k, 1), old_stride(k, 1);
  for (std::size_t j = k - 1; j > 0; --j) {
    new_stride[j - 1] = new_stride[j] * static_cast<std::size_t>(out.bounds_[j]);
    old_stride[j - 1] = old_stride[j] * static_cast<std::size_t>(bounds_[j]);
  }
  const std::size_t last = k - 1;
  std::vector<Exponent> v(k);

  for (const Monomial& g : ideal.gens()) {
    const auto gp = project(g.exponents(), axis_);
    bool empty = false;
    for (std::size_t j = 0; j < k; ++j) empty |= gp[j] >= out.bounds_[j];
    if (empty) continue;
    // Every height is at most the sum of the axis bounds, which fit in
    // Exponent because box_bounds did; adding g[axis] can still overflow.
    const Exponent lift = g[axis_];
    const std::size_t run = static_cast<std::size_t>(out.bounds_[last] - gp[last]);
    const std::size_t old_run = bounds_[last] > 0 ? static_cast<std::size_t>(bounds_[last]) : 0;
    for (std::size_t j = 0; j < last; ++j) v[j] = gp[j];
    for (;;) {
      bool inside = old_run > 0;
      std::size_t old_base = 0, new_base = 0;
      for (std::size_t j = 0; j < last; ++j) {
        const Exponent u = v[j] - gp[j];
        if (u >= bounds_[j]) inside = false;
        else old_base += static_cast<std::size_t>(u) * old_stride[j];
        new_base += static_cast<std::size_t>(v[j]) * new_stride[j];
      }
      Exponent* dst = out.heights_.data() + new_base + static_cast<std::size_t>(gp[last]);
      std::size_t t = 0;
      if (inside) {
        const Exponent* src = heights_.data() + old_base;
        const std::size_t m = std::min(run, old_run);
        for (; t < m; ++t) {
          Exponent cand;
          if (__builtin_add_overflow(lift, src[t], &cand)) throw AlgebraError("exponent overflow");
          dst[t] = std::min(dst[t], cand);
        }
      }
      for (; t < run; ++t) dst[t] = std::min(dst[t], lift);

      std::size_t j = last;
      while (j > 0) {
        --j;
        if (++v[j] < out.bounds_[j]) break;
        v[j] = gp[j];
        if (j == 0) {
          j = k;  // odometer wrapped
          break;
        }
      }
      if (j == k || last == 0) break;
    }
  }
  return out;
}

BigInt Staircase::colength() const {
  __int128 total = 0;
  for (Exponent h : heights_) total += h;
  // Fits: at most 2^28 cells of at most 2^31 each.
  BigInt out = static_cast<std::int64_t>(total);
  return out;
}

Exponent Staircase::height(std::span<const Exponent> v) const {
  if (v.size() != dim_) throw AlgebraError("dimension mismatch in staircase lookup");
  const auto p = project(v, axis_);
  std::size_t index = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] >= bounds_[j]) return 0;
    index = index * static_cast<std::size_t>(bounds_[j]) + static_cast<std::size_t>(p[j]);
  }
  return heights_[index];
}

std::uint64_t box_volume(const MonomialIdeal& ideal) {
  std::uint64_t volume = 1;
  for (Exponent b : box_bounds(ideal)) {
    if (__builtin_mul_overflow(volume, static_cast<std::uint64_t>(b), &volume)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return volume;
}

BigInt colength_naive(const MonomialIdeal& ideal) {
  const auto bounds = box_bounds(ideal);
  if (ideal.is_unit()) return 0;
  const std::size_t d = ideal.dim();
  std::vector<Exponent> v(d, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (!contains(ideal, Monomial(v))) ++count;
    std::size_t i = 0;
    while (i < d && ++v[i] == bounds[i]) v[i++] = 0;
    if (i == d) break;
  }
  return BigInt(count);
}

std::size_t best_axis(const std::vector<MonomialIdeal>& ideals, std::span<const int> n) {
  if (ideals.empty()) throw AlgebraError("no ideals given");
  const std::size_t d = ideals.front().dim();
  std::vector<std::int64_t> extent(d, 0);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto b = box_bounds(ideals[i]);
    for (std::size_t j = 0; j < d; ++j) extent[j] += static_cast<std::int64_t>(n[i]) * b[j];
  }
  return static_cast<std::size_t>(std::max_element(extent.begin(), extent.end()) - extent.begin());
}

BigInt colength_sweep(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  const int one = 1;
  return Staircase::of(ideal, best_axis({ideal}, std::span<const int>(&one, 1))).colength();
}

BigInt colength(const MonomialIdeal& ideal) {
  if (!has_finite_colength(ideal)) throw AlgebraError("colength of a non m-primary ideal is infinite");
  return box_volume(ideal) <= kSweepThreshold ? colength_naive(ideal) : colength_sweep(ideal);
}

bool LengthCache::lookup(const std::string& key, BigInt& out) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void LengthCache::insert(const std::string& key, const BigInt& value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t LengthCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

void LengthCache::clear() {
  std::lock_guard lock(mutex_);
  table_.clear();
}

std::string LengthCache::key(const std::vector<MonomialIdeal>& ideals, std::span<const int> n) {
  std::map<MonomialIdeal, long> merged;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (n[i] > 0 && !ideals[i].is_unit()) merged[ideals[i]] += n[i];
  }
  std::string out = std::to_string(ideals.empty() ? 0 : ideals.front().dim());
  for (const auto& [ideal, power] : merged) {
    out += ';';
    out += to_string(ideal);
    out += '^';
    out += std::to_string(power);
  }
  return out;
}

BigInt colength_of_product(const std::vector<MonomialIdeal>& ideals, std::span<const int> n,
                           LengthCache* cache) {
  if (ideals.size() != n.size()) throw AlgebraError("one exponent per ideal is required");
  ProductSampler sampler(ideals, cache);
  return sampler(GridPoint(n.begin(), n.end()));
}

ProductSampler::ProductSampler(std::vector<MonomialIdeal> ideals, LengthCache* cache)
    : ideals_(std::move(ideals)), dim_(0), cache_(cache) {
  if (ideals_.empty()) throw AlgebraError("a product needs at least one ideal");
  check_same_dim(ideals_);
  dim_ = ideals_.front().dim();
}

std::vector<BigInt> ProductSampler::sample(const std::vector<GridPoint>& points) {
  std::vector<BigInt> out(points.size());
  std::vector<std::size_t> missing;
  std::vector<std::string> keys(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const GridPoint& n = points[p];
    if (n.size() != ideals_.size()) throw AlgebraError("grid point has the wrong arity");
    if (std::any_of(n.begin(), n.end(), [](int e) { return e < 0; })) {
      throw AlgebraError("grid points must be non-negative");
    }
    if (cache_) {
      keys[p] = LengthCache::key(ideals_, n);
      if (cache_->lookup(keys[p], out[p])) continue;
    }
    missing.push_back(p);
  }
  if (missing.empty()) return out;

  GridPoint extent(ideals_.size(), 0);
  for (std::size_t p : missing) {
    for (std::size_t i = 0; i < extent.size(); ++i) extent[i] = std::max(extent[i], points[p][i]);
  }
  std::sort(missing.begin(), missing.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  descend(0, Staircase(dim_, best_axis(ideals_, extent)), missing, points, out);

  if (cache_) {
    for (std::size_t p : missing) cache_->insert(keys[p], out[p]);
  }
  return out;
}

void ProductSampler::descend(std::size_t level, const Staircase& prefix,
                             std::span<const std::size_t> order,
                             const std::vector<GridPoint>& points,
                             std::vector<BigInt>& out) const {
  if (level == ideals_.size()) {
    BigInt value = prefix.colength();
    for (std::size_t p : order) out[p] = value;
    return;
  }
  Staircase current = prefix;
  int power = 0;
  std::size_t begin = 0;
  while (begin < order.size()) {
    const int target = points[order[begin]][level];
    std::size_t end = begin;
    while (end < order.size() && points[order[end]][level] == target) ++end;
    for (; power < target; ++power) current = current.times(ideals_[level]);
    descend(level + 1, current, order.subspan(begin, end - begin), points, out);
    begin = end;
  }
}

}  // namespace multlab
