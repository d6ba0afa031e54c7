#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ivt/boolean.hpp"
#include "ivt/errors.hpp"
#include "ivt/natural.hpp"

namespace ivt {

// A point (m, n) of N x N.
template <BitNatural N> struct BasicPair {
  N m{};
  N n{};

  friend bool operator==(const BasicPair &, const BasicPair &) = default;
  friend bool operator<(const BasicPair &a, const BasicPair &b) {
    return std::tie(a.m, a.n) < std::tie(b.m, b.n);
  }
};

using NatPair = BasicPair<Natural>;
using WordPair = BasicPair<std::uint64_t>;

struct PairHash {
  template <BitNatural N> std::size_t operator()(const BasicPair<N> &p) const {
    const std::size_t h = std::hash<N>{}(p.m);
    return h ^ (std::hash<N>{}(p.n) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                (h >> 2));
  }
};

std::string to_string(const NatPair &p);
std::string to_string(const WordPair &p);

// Number of bit positions processed by one IVT step: the longer binary
// expansion of the two components, never less than one.
template <BitNatural N> std::size_t bit_width(const BasicPair<N> &p) {
  return std::max({bit_length(p.m), bit_length(p.n), std::size_t{1}});
}

// IVT_{i,j}: applies f_i and f_j to every aligned bit pair (m_k, n_k) for
// k < bit_width(p). Widths are recomputed on every call.
template <BitNatural N> BasicPair<N> ivt_apply(PairMap f, const BasicPair<N> &p) {
  const std::size_t width = bit_width(p);
  const N not_m = complement(p.m, width);
  const N not_n = complement(p.n, width);
  auto component = [&](BoolFn2 g) {
    N out = 0;
    if (g(false, false))
      out |= not_m & not_n;
    if (g(false, true))
      out |= not_m & p.n;
    if (g(true, false))
      out |= p.m & not_n;
    if (g(true, true))
      out |= p.m & p.n;
    return out;
  };
  return BasicPair<N>{component(f.first()), component(f.second())};
}

NatPair ivt_apply(int i, int j, const NatPair &p);

struct OrbitConfig {
  std::size_t max_steps = 256;

  // Throws std::invalid_argument when max_steps == 0.
  void validate() const;
};

template <BitNatural N> struct BasicTrajectory {
  BasicPair<N> start{};
  // States visited before the cycle, starting with `start` (may be empty).
  std::vector<BasicPair<N>> transient;
  // Rotation-canonical terminal cycle.
  std::vector<BasicPair<N>> cycle;
  // Position in `cycle` of the first cycle state the orbit reaches.
  std::size_t entry_index = 0;

  std::size_t steps_to_cycle() const noexcept { return transient.size(); }

  friend bool operator==(const BasicTrajectory &,
                         const BasicTrajectory &) = default;
};

using Trajectory = BasicTrajectory<Natural>;
using WordTrajectory = BasicTrajectory<std::uint64_t>;

// Iterates IVT_{i,j} from `start` until a state repeats. Throws CycleNotFound
// after cfg.max_steps applications without a repeat.
template <BitNatural N>
BasicTrajectory<N> trajectory(PairMap f, const BasicPair<N> &start,
                              const OrbitConfig &cfg = {}) {
  cfg.validate();
  std::unordered_map<BasicPair<N>, std::size_t, PairHash> seen;
  std::vector<BasicPair<N>> path{start};
  seen.emplace(start, 0);
  for (std::size_t applied = 1; applied <= cfg.max_steps; ++applied) {
    BasicPair<N> next = ivt_apply(f, path.back());
    if (auto it = seen.find(next); it != seen.end()) {
      const auto split = path.begin() + static_cast<std::ptrdiff_t>(it->second);
      BasicTrajectory<N> result;
      result.start = start;
      result.transient.assign(path.begin(), split);
      result.cycle = canonical_rotation(std::vector<BasicPair<N>>(split, path.end()));
      const auto entry = std::find(result.cycle.begin(), result.cycle.end(), *split);
      result.entry_index = static_cast<std::size_t>(entry - result.cycle.begin());
      return result;
    }
    seen.emplace(next, path.size());
    path.push_back(std::move(next));
  }
  throw CycleNotFound("IVT_{" + std::to_string(f.i()) + "," +
                      std::to_string(f.j()) + "} from " + to_string(start) +
                      ": no repeat within " + std::to_string(cfg.max_steps) +
                      " steps");
}

Trajectory trajectory(int i, int j, const NatPair &start,
                      const OrbitConfig &cfg = {});

template <BitNatural N>
std::vector<BasicPair<N>> orbit_cycle(PairMap f, const BasicPair<N> &start,
                                      const OrbitConfig &cfg = {}) {
  return trajectory(f, start, cfg).cycle;
}

std::vector<NatPair> orbit_cycle(int i, int j, const NatPair &start,
                                 const OrbitConfig &cfg = {});

WordPair to_word_pair(const NatPair &p); // throws std::overflow_error
NatPair to_nat_pair(const WordPair &p);

} // namespace ivt
