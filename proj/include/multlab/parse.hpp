#ifndef MULTLAB_PARSE_HPP
#define MULTLAB_PARSE_HPP

#include "multlab/ideal.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multlab {

/// Syntax or dimension error in an ideal expression.  `position` is the
/// zero-based character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   ideal    := '(' monomial (',' monomial)* ')'
//   monomial := '1' | factor ('*'? factor)*
//   factor   := var ('^' integer)?
//   var      := 'x' integer | 'x' | 'y' | 'z' | 'w'
// x, y, z, w are aliases for x1..x4.

/// Parses one ideal.  The ambient dimension is the highest variable index
/// unless `dim` is given, in which case it must be at least that index.
MonomialIdeal parse_ideal(std::string_view expr,
                          std::optional<std::size_t> dim = std::nullopt);

/// Parses several ideals into a common dimension (the largest variable
/// index across all of them, or `dim`).
std::vector<MonomialIdeal> parse_ideals(
    const std::vector<std::string>& exprs,
    std::optional<std::size_t> dim = std::nullopt);

/// Splits "(..);(..)" into ideal expressions and parses them jointly.
std::vector<MonomialIdeal> parse_module(
    std::string_view expr, std::optional<std::size_t> dim = std::nullopt);

}  // namespace multlab

#endif  // MULTLAB_PARSE_HPP
