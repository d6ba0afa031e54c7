#include "ivt/natural.hpp"

#include <stdexcept>

namespace ivt {

Natural parse_natural(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty number");
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a natural number: '" +
                                  std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string to_string(const Natural &value) { return value.str(); }

} // namespace ivt
