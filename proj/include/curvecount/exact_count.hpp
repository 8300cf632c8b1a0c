#ifndef CURVECOUNT_EXACT_COUNT_HPP
#define CURVECOUNT_EXACT_COUNT_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace curvecount {

// Arbitrary-precision signed integer. Intermediate boundary combinations in
// the recursion can be negative; final counts are not.
using ExactCount = mpz_class;

inline std::string to_decimal(const ExactCount& v) { return v.get_str(10); }

// Parses an optionally signed base-10 integer. Throws std::invalid_argument
// on anything else (including empty strings and leading '+').
ExactCount parse_decimal(std::string_view text);

}  // namespace curvecount

#endif  // CURVECOUNT_EXACT_COUNT_HPP
