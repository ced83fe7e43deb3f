#ifndef MULTLAB_MONOMIAL_HPP
#define MULTLAB_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace multlab {

using Exponent = std::int32_t;

/// Raised for dimension mismatches, overflow and other violated
/// preconditions of the monomial and ideal arithmetic.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monomial x^v in k[x_1, ..., x_d], stored as its exponent vector.
/// Ordering is lexicographic on the exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// The constant monomial 1 in dimension d.
  static Monomial one(std::size_t d);
  /// x_i^k in dimension d (i is zero-based).
  static Monomial pure_power(std::size_t d, std::size_t i, Exponent k);

  std::size_t dim() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;
  /// Index of the single variable if this is x_i^k with k >= 1.
  std::ptrdiff_t pure_power_index() const;

  /// Componentwise <=.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Renders with x,y,z,w for d <= 4 and x1..xd otherwise, e.g. "x^2*y".
std::string to_string(const Monomial& m);

/// Checked exponent addition; throws AlgebraError on overflow.
Exponent checked_add(Exponent a, Exponent b);

}  // namespace multlab

#endif  // MULTLAB_MONOMIAL_HPP
