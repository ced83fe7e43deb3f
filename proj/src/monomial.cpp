#include "multlab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace multlab {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw AlgebraError("negative exponent in monomial");
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::one(std::size_t d) { return Monomial(std::vector<Exponent>(d, 0)); }

Monomial Monomial::pure_power(std::size_t d, std::size_t i, Exponent k) {
  if (i >= d) throw AlgebraError("variable index out of range");
  std::vector<Exponent> e(d, 0);
  e[i] = k;
  return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::ptrdiff_t Monomial::pure_power_index() const {
  std::ptrdiff_t found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<std::ptrdiff_t>(i);
  }
  return found;
}

bool Monomial::divides(const Monomial& other) const {
  if (dim() != other.dim()) throw AlgebraError("dimension mismatch in divisibility test");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw AlgebraError("exponent overflow");
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) throw AlgebraError("dimension mismatch in monomial product");
  std::vector<Exponent> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

namespace {

std::string variable_name(std::size_t i, std::size_t d) {
  static constexpr const char* kAliases[] = {"x", "y", "z", "w"};
  if (d <= 4) return kAliases[i];
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, m.dim());
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace multlab
