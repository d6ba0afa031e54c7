#include "ivt/attractor.hpp"

#include <stdexcept>
#include <string>

namespace ivt {

namespace {

constexpr std::array<std::string_view, 17> tag_names{
    "ZERO",           "ZERO_ALLONES",    "ALLONES_ZERO",   "ALLONES_ALLONES",
    "X_ALLONES",      "ALLONES_X",       "B2_CYCLE",       "COMPLEMENT_SWAP",
    "X_ALLONES_SWAP", "ALLONES_X_SWAP",  "MIRROR_SWAP",    "DIAG",
    "X_ZERO",         "ZERO_X",          "COMPLEMENT_FIXED", "ROTATION",
    "GENERIC",
};

} // namespace

std::string_view to_string(AttractorTag tag) noexcept {
  return tag_names[static_cast<std::size_t>(tag)];
}

std::optional<AttractorTag> parse_attractor_tag(std::string_view name) noexcept {
  for (std::size_t k = 0; k < tag_names.size(); ++k)
    if (tag_names[k] == name)
      return static_cast<AttractorTag>(k);
  return std::nullopt;
}

std::string_view to_string(AttractorClass c) noexcept {
  switch (c) {
  case AttractorClass::I:
    return "I";
  case AttractorClass::II:
    return "II";
  case AttractorClass::III:
    return "III";
  case AttractorClass::IV:
    return "IV";
  }
  return "?";
}

std::optional<AttractorClass> parse_attractor_class(std::string_view roman) noexcept {
  for (AttractorClass c : {AttractorClass::I, AttractorClass::II,
                           AttractorClass::III, AttractorClass::IV})
    if (to_string(c) == roman)
      return c;
  return std::nullopt;
}

AttractorClass class_for_period(std::size_t period) {
  if (period < 1 || period > 4)
    throw std::out_of_range("no attractor class for period " +
                            std::to_string(period));
  return static_cast<AttractorClass>(period);
}

} // namespace ivt
