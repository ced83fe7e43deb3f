#include "multlab/ideal.hpp"

#include "multlab/bigint.hpp"

#include <algorithm>
#include <limits>

namespace multlab {

namespace {

void check_dims(const std::vector<Monomial>& gens, std::size_t d) {
  for (const Monomial& g : gens) {
    if (g.dim() != d) throw AlgebraError("generator has wrong number of variables");
  }
}

// Sort by degree so that every divisor of a generator is seen before it.
std::vector<Monomial> minimal_antichain(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, std::size_t d) : dim_(d) {
  if (gens.empty()) throw AlgebraError("an ideal needs at least one generator");
  check_dims(gens, d);
  gens_ = minimal_antichain(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t d) { return MonomialIdeal({Monomial::one(d)}, d); }

MonomialIdeal MonomialIdeal::maximal(std::size_t d) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(Monomial::pure_power(d, i, 1));
  return MonomialIdeal(std::move(gens), d);
}

MonomialIdeal MonomialIdeal::pure_powers(const std::vector<Exponent>& k) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < k.size(); ++i) gens.push_back(Monomial::pure_power(k.size(), i, k[i]));
  return MonomialIdeal(std::move(gens), k.size());
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

std::int64_t MonomialIdeal::max_degree() const {
  std::int64_t best = 0;
  for (const Monomial& g : gens_) best = std::max(best, g.degree());
  return best;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t d) {
  return MonomialIdeal(std::move(gens), d);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw AlgebraError("dimension mismatch in ideal product");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.gens()) {
    for (const Monomial& h : b.gens()) gens.push_back(g * h);
  }
  return MonomialIdeal(std::move(gens), a.dim());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.dim());
  for (unsigned i = 0; i < n; ++i) result = product(result, ideal);
  return result;
}

bool contains(const MonomialIdeal& ideal, const Monomial& t) {
  if (t.dim() != ideal.dim()) throw AlgebraError("dimension mismatch in membership test");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(t); });
}

bool is_subset(const MonomialIdeal& i, const MonomialIdeal& j) {
  return std::all_of(i.gens().begin(), i.gens().end(),
                     [&](const Monomial& g) { return contains(j, g); });
}

bool has_finite_colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  std::vector<bool> seen(ideal.dim(), false);
  for (const Monomial& g : ideal.gens()) {
    auto i = g.pure_power_index();
    if (i >= 0) seen[static_cast<std::size_t>(i)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_m_primary(const MonomialIdeal& ideal) {
  return !ideal.is_unit() && has_finite_colength(ideal);
}

std::vector<Exponent> box_bounds(const MonomialIdeal& ideal) {
  if (!has_finite_colength(ideal)) throw AlgebraError("ideal is not m-primary");
  std::vector<Exponent> bounds(ideal.dim(), 0);
  if (ideal.is_unit()) return bounds;
  for (const Monomial& g : ideal.gens()) {
    auto i = g.pure_power_index();
    if (i >= 0) bounds[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
  }
  return bounds;
}

namespace {

// Phase-one simplex over exact rationals: is {x >= 0 : A x = b} non-empty?
// b must be non-negative.  Bland's rule, so it terminates.
bool feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  const std::size_t total = cols + rows;  // structural + artificial
  // Row `rows` holds the phase-one objective (reduced costs).
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][total] = b[i];
    basis[i] = cols + i;
    for (std::size_t j = 0; j < cols; ++j) t[rows][j] -= a[i][j];
    t[rows][total] -= b[i];
  }
  for (;;) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][total] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[rows][total] == 0;
}

}  // namespace

bool in_newton_polyhedron(const MonomialIdeal& ideal, const Monomial& t) {
  if (contains(ideal, t)) return true;
  const std::size_t d = ideal.dim();
  const std::size_t n = ideal.size();
  // sum_g lambda_g g_j + s_j = t_j  (j < d),  sum_g lambda_g = 1.
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n + d));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t g = 0; g < n; ++g) a[j][g] = ideal.gens()[g][j];
    a[j][n + j] = 1;
    b[j] = t[j];
  }
  for (std::size_t g = 0; g < n; ++g) a[d][g] = 1;
  b[d] = 1;
  return feasible(std::move(a), std::move(b));
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (!is_m_primary(ideal)) throw AlgebraError("integral closure requires an m-primary ideal");
  const auto bounds = box_bounds(ideal);
  const std::size_t d = ideal.dim();
  std::vector<Monomial> gens = ideal.gens();
  std::vector<Exponent> v(d, 0);
  for (;;) {
    Monomial t(v);
    if (!contains(ideal, t) && in_newton_polyhedron(ideal, t)) gens.push_back(t);
    std::size_t i = 0;
    while (i < d && ++v[i] == bounds[i]) v[i++] = 0;
    if (i == d) break;
  }
  return MonomialIdeal(std::move(gens), d);
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens()[i]);
  }
  return out + ")";
}

}  // namespace multlab
