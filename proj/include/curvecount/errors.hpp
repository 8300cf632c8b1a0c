#ifndef CURVECOUNT_ERRORS_HPP
#define CURVECOUNT_ERRORS_HPP

#include <stdexcept>

namespace curvecount {

// Thrown for queries outside the domain of an operation: the zero class,
// negative point counts, nonpositive degrees, unknown table names.
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace curvecount

#endif  // CURVECOUNT_ERRORS_HPP
