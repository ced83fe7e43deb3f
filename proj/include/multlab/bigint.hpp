#ifndef MULTLAB_BIGINT_HPP
#define MULTLAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace multlab {

/// Exact counts and multiplicities.  Lengths grow like n^d times the
/// generator degrees, so nothing here is allowed to overflow silently.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Binomial coefficient C(n, k) for small non-negative arguments.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

}  // namespace multlab

#endif  // MULTLAB_BIGINT_HPP
