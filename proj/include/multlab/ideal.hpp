#ifndef MULTLAB_IDEAL_HPP
#define MULTLAB_IDEAL_HPP

#include "multlab/monomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace multlab {

/// Monomial ideal of k[x_1, ..., x_d] given by its minimal generators.
///
/// The generator list is always a divisibility antichain sorted
/// lexicographically, so two ideals are equal iff their representations
/// are.  The unit ideal is the single generator 1.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`.  Throws AlgebraError on an empty set or on
  /// monomials of the wrong length.
  MonomialIdeal(std::vector<Monomial> gens, std::size_t d);

  static MonomialIdeal unit(std::size_t d);
  /// The homogeneous maximal ideal m = (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t d);
  /// (x_1^{k_1}, ..., x_d^{k_d}).
  static MonomialIdeal pure_powers(const std::vector<Exponent>& k);

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_unit() const;
  /// Largest total degree among the minimal generators.
  std::int64_t max_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.gens_ <=> b.gens_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal elements of `gens`, canonically sorted.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t d);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^n by iterated multiplication, minimalizing after every step.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);

bool contains(const MonomialIdeal& ideal, const Monomial& t);

/// I ⊆ J as ideals.
bool is_subset(const MonomialIdeal& i, const MonomialIdeal& j);

/// Proper ideal containing a pure power of every variable, i.e. R/I has
/// finite, non-zero length.  The unit ideal is not m-primary.
bool is_m_primary(const MonomialIdeal& ideal);

/// m-primary or the unit ideal: exactly the ideals with finite colength.
bool has_finite_colength(const MonomialIdeal& ideal);

/// b_i = least k with x_i^k in I.  Every standard monomial lies in the
/// box prod [0, b_i).  Requires finite colength (the unit ideal gives
/// all zeros).
std::vector<Exponent> box_bounds(const MonomialIdeal& ideal);

/// Integral closure via the Newton polyhedron.  Requires is_m_primary.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// Whether the exponent vector of t lies in conv(exponents of gens) plus
/// the non-negative orthant.  Decided by an exact rational LP.
bool in_newton_polyhedron(const MonomialIdeal& ideal, const Monomial& t);

/// Inverse of parse_ideal: "(x^2, x*y, y^3)".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace multlab

#endif  // MULTLAB_IDEAL_HPP
