#include "ivt/engine.hpp"

namespace ivt {

std::string to_string(const NatPair &p) {
  return "(" + to_string(p.m) + "," + to_string(p.n) + ")";
}

std::string to_string(const WordPair &p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

NatPair ivt_apply(int i, int j, const NatPair &p) {
  return ivt_apply(PairMap(i, j), p);
}

void OrbitConfig::validate() const {
  if (max_steps == 0)
    throw std::invalid_argument("max_steps must be at least 1");
}

Trajectory trajectory(int i, int j, const NatPair &start,
                      const OrbitConfig &cfg) {
  return trajectory(PairMap(i, j), start, cfg);
}

std::vector<NatPair> orbit_cycle(int i, int j, const NatPair &start,
                                 const OrbitConfig &cfg) {
  return orbit_cycle(PairMap(i, j), start, cfg);
}

WordPair to_word_pair(const NatPair &p) {
  if (bit_width(p) > 64)
    throw std::overflow_error("pair " + to_string(p) +
                              " does not fit in 64-bit words");
  return WordPair{p.m.convert_to<std::uint64_t>(),
                  p.n.convert_to<std::uint64_t>()};
}

NatPair to_nat_pair(const WordPair &p) { return NatPair{p.m, p.n}; }

} // namespace ivt
