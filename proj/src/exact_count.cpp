#include "curvecount/exact_count.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace curvecount {

ExactCount parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return ExactCount(std::string(text), 10);
}

}  // namespace curvecount
