#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ivt/engine.hpp"

namespace ivt {

// Parametric shapes of terminal cycles. "allones" stands for 2^s - 1 with
// s >= 1 and "complement" is taken inside the cycle's own bit width.
enum class AttractorTag {
  zero,             // (0,0)
  zero_allones,     // (0, 2^t-1)
  allones_zero,     // (2^s-1, 0)
  allones_allones,  // (2^s-1, 2^t-1)
  x_allones,        // (x, 2^t-1)
  allones_x,        // (2^s-1, x)
  b2_cycle,         // cycle of length >= 2 inside {0,1} x {0,1}
  complement_swap,  // (x, ~x) <-> (~x, x)
  x_allones_swap,   // (x, 2^t-1) <-> (~x, 2^t-1)
  allones_x_swap,   // (2^s-1, x) <-> (2^s-1, ~x)
  mirror_swap,      // (p, q) <-> (r, s), each of r, s equal to or the complement of p, q
  diag,             // (x, x)
  x_zero,           // (x, 0)
  zero_x,           // (0, x)
  complement_fixed, // (x, ~x)
  rotation,         // (x,y) -> (z,x) -> (y,z)
  generic,
};

// Most specific first. classify_attractor_form and family_of both scan in
// this order.
inline constexpr std::array<AttractorTag, 17> tag_precedence{
    AttractorTag::zero,           AttractorTag::zero_allones,
    AttractorTag::allones_zero,   AttractorTag::allones_allones,
    AttractorTag::x_allones,      AttractorTag::allones_x,
    AttractorTag::b2_cycle,       AttractorTag::complement_swap,
    AttractorTag::x_allones_swap, AttractorTag::allones_x_swap,
    AttractorTag::mirror_swap,    AttractorTag::diag,
    AttractorTag::x_zero,         AttractorTag::zero_x,
    AttractorTag::complement_fixed, AttractorTag::rotation,
    AttractorTag::generic,
};

std::string_view to_string(AttractorTag tag) noexcept;

// Classes I-IV: the longest terminal cycle observed for an IVT.
enum class AttractorClass { I = 1, II = 2, III = 3, IV = 4 };

std::string_view to_string(AttractorClass c) noexcept;
std::optional<AttractorClass> parse_attractor_class(std::string_view roman) noexcept;
// Throws std::out_of_range unless 1 <= period <= 4.
AttractorClass class_for_period(std::size_t period);
std::optional<AttractorTag> parse_attractor_tag(std::string_view name) noexcept;

template <BitNatural N> struct BasicAttractorForm {
  AttractorTag tag = AttractorTag::generic;
  // Witnessed exponents and component values; see form_parameters.
  std::vector<N> params;

  friend bool operator==(const BasicAttractorForm &,
                         const BasicAttractorForm &) = default;
};

using AttractorForm = BasicAttractorForm<Natural>;
using WordAttractorForm = BasicAttractorForm<std::uint64_t>;

namespace detail {

template <BitNatural N>
std::size_t cycle_width(std::span<const BasicPair<N>> cycle) {
  std::size_t width = 1;
  for (const auto &p : cycle)
    width = std::max(width, bit_width(p));
  return width;
}

template <BitNatural N> std::size_t exponent(const N &all_ones) {
  return bit_length(all_ones);
}

template <BitNatural N>
bool is_bit_pair(const BasicPair<N> &p) {
  return p.m <= 1 && p.n <= 1;
}

template <BitNatural N>
bool is_rotation(std::span<const BasicPair<N>> c) {
  if (c.size() != 3)
    return false;
  bool forward = true;
  bool backward = true;
  for (std::size_t k = 0; k < 3; ++k) {
    forward = forward && c[k].m == c[(k + 1) % 3].n;
    backward = backward && c[k].n == c[(k + 1) % 3].m;
  }
  return forward || backward;
}

template <BitNatural N>
bool is_two_cycle_with(std::span<const BasicPair<N>> c, AttractorTag tag) {
  if (c.size() != 2)
    return false;
  const std::size_t width = cycle_width(c);
  const auto &a = c[0];
  const auto &b = c[1];
  switch (tag) {
  case AttractorTag::complement_swap:
    return a.n == complement(a.m, width) && b.m == a.n && b.n == a.m;
  case AttractorTag::x_allones_swap:
    return is_all_ones(a.n) && b.n == a.n && b.m == complement(a.m, width);
  case AttractorTag::allones_x_swap:
    return is_all_ones(a.m) && b.m == a.m && b.n == complement(a.n, width);
  case AttractorTag::mirror_swap:
    return (b.m == a.m || b.m == complement(a.m, width)) &&
           (b.n == a.n || b.n == complement(a.n, width));
  default:
    break;
  }
  return false;
}

} // namespace detail

// Strict membership used for single cycles: boundary parameters (s = 0,
// x = 0) are excluded so that (0,0) is only ever ZERO.
template <BitNatural N>
bool matches_form(AttractorTag tag, std::span<const BasicPair<N>> c) {
  using detail::is_two_cycle_with;
  const bool fixed = c.size() == 1;
  switch (tag) {
  case AttractorTag::zero:
    return fixed && c[0].m == 0 && c[0].n == 0;
  case AttractorTag::zero_allones:
    return fixed && c[0].m == 0 && is_all_ones(c[0].n);
  case AttractorTag::allones_zero:
    return fixed && is_all_ones(c[0].m) && c[0].n == 0;
  case AttractorTag::allones_allones:
    return fixed && is_all_ones(c[0].m) && is_all_ones(c[0].n);
  case AttractorTag::x_allones:
    return fixed && c[0].m != 0 && is_all_ones(c[0].n);
  case AttractorTag::allones_x:
    return fixed && is_all_ones(c[0].m) && c[0].n != 0;
  case AttractorTag::b2_cycle:
    return c.size() >= 2 &&
           std::all_of(c.begin(), c.end(),
                       [](const auto &p) { return detail::is_bit_pair(p); });
  case AttractorTag::complement_swap:
  case AttractorTag::x_allones_swap:
  case AttractorTag::allones_x_swap:
  case AttractorTag::mirror_swap:
    return is_two_cycle_with(c, tag);
  case AttractorTag::diag:
    return fixed && c[0].m != 0 && c[0].m == c[0].n;
  case AttractorTag::x_zero:
    return fixed && c[0].m != 0 && c[0].n == 0;
  case AttractorTag::zero_x:
    return fixed && c[0].m == 0 && c[0].n != 0;
  case AttractorTag::complement_fixed:
    return fixed && c[0].n == complement(c[0].m, detail::cycle_width(c));
  case AttractorTag::rotation:
    return detail::is_rotation(c);
  case AttractorTag::generic:
    return !c.empty();
  }
  return false;
}

// Relaxed membership used to find one family covering every cycle of an IVT:
// the free component x may take any value, including 0 and 2^s - 1.
template <BitNatural N>
bool in_family(AttractorTag tag, std::span<const BasicPair<N>> c) {
  const bool fixed = c.size() == 1;
  switch (tag) {
  case AttractorTag::x_allones:
    return fixed && is_all_ones(c[0].n);
  case AttractorTag::allones_x:
    return fixed && is_all_ones(c[0].m);
  case AttractorTag::diag:
    return fixed && c[0].m == c[0].n;
  case AttractorTag::x_zero:
    return fixed && c[0].n == 0;
  case AttractorTag::zero_x:
    return fixed && c[0].m == 0;
  default:
    return matches_form(tag, c);
  }
}

// Parameters recorded for a cycle already known to match `tag`:
//   zero_allones {t}, allones_zero {s}, allones_allones {s, t},
//   x_allones {x, t}, allones_x {s, x}, b2_cycle {length},
//   complement_swap {x, width}, x_allones_swap {x, t}, allones_x_swap {s, x},
//   mirror_swap {p, q, width}, diag/x_zero/zero_x {x},
//   complement_fixed {x, width}, rotation {x, y, z}, zero/generic {}.
template <BitNatural N>
std::vector<N> form_parameters(AttractorTag tag,
                               std::span<const BasicPair<N>> c) {
  using detail::exponent;
  const N width = N(detail::cycle_width(c));
  switch (tag) {
  case AttractorTag::zero:
  case AttractorTag::generic:
    return {};
  case AttractorTag::zero_allones:
    return {N(exponent(c[0].n))};
  case AttractorTag::allones_zero:
    return {N(exponent(c[0].m))};
  case AttractorTag::allones_allones:
    return {N(exponent(c[0].m)), N(exponent(c[0].n))};
  case AttractorTag::x_allones:
    return {c[0].m, N(exponent(c[0].n))};
  case AttractorTag::allones_x:
    return {N(exponent(c[0].m)), c[0].n};
  case AttractorTag::b2_cycle:
    return {N(c.size())};
  case AttractorTag::complement_swap:
    return {c[0].m, width};
  case AttractorTag::x_allones_swap:
    return {c[0].m, N(exponent(c[0].n))};
  case AttractorTag::allones_x_swap:
    return {N(exponent(c[0].m)), c[0].n};
  case AttractorTag::mirror_swap:
    return {c[0].m, c[0].n, width};
  case AttractorTag::diag:
  case AttractorTag::x_zero:
    return {c[0].m};
  case AttractorTag::zero_x:
    return {c[0].n};
  case AttractorTag::complement_fixed:
    return {c[0].m, width};
  case AttractorTag::rotation:
    return {c[0].m, c[0].n, c[1].m};
  }
  return {};
}

// First tag in precedence order that the cycle matches strictly.
template <BitNatural N>
BasicAttractorForm<N> classify_attractor_form(std::span<const BasicPair<N>> cycle) {
  for (AttractorTag tag : tag_precedence)
    if (matches_form(tag, cycle))
      return BasicAttractorForm<N>{tag, form_parameters(tag, cycle)};
  return {};
}

template <BitNatural N>
BasicAttractorForm<N> classify_attractor_form(const std::vector<BasicPair<N>> &cycle) {
  return classify_attractor_form(std::span<const BasicPair<N>>(cycle));
}

// First tag in precedence order whose family contains every given cycle.
// GENERIC when no parametric family covers them all.
template <BitNatural N>
AttractorTag family_of(std::span<const std::vector<BasicPair<N>>> cycles) {
  if (cycles.empty())
    return AttractorTag::generic;
  for (AttractorTag tag : tag_precedence) {
    const bool covers =
        std::all_of(cycles.begin(), cycles.end(), [tag](const auto &c) {
          return in_family(tag, std::span<const BasicPair<N>>(c));
        });
    if (covers)
      return tag;
  }
  return AttractorTag::generic;
}

} // namespace ivt
