#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ivt {

// One of the 16 two-variable Boolean functions. f_i(a, b) is bit (2a + b)
// of i, so the truth table read in input order 00, 01, 10, 11 is the binary
// expansion of i from the least significant bit upward.
class BoolFn2 {
public:
  static constexpr int count = 16;

  // Throws std::out_of_range unless 0 <= index <= 15.
  explicit BoolFn2(int index);

  int index() const noexcept { return index_; }

  bool operator()(bool a, bool b) const noexcept {
    return ((index_ >> (2 * int(a) + int(b))) & 1) != 0;
  }

  // Outputs for inputs (0,0), (0,1), (1,0), (1,1).
  std::array<bool, 4> truth_table() const noexcept;

  static BoolFn2 from_truth_table(const std::array<bool, 4> &table) noexcept;

  friend bool operator==(BoolFn2, BoolFn2) = default;

private:
  int index_;
};

bool eval_boolfn(int index, bool a, bool b);
std::array<bool, 4> truth_table(int index);

// Element of B2 = {00, 01, 10, 11}; x is the first (high) component.
struct PairState {
  bool x = false;
  bool y = false;

  constexpr int code() const noexcept { return 2 * int(x) + int(y); }
  static constexpr PairState from_code(int code) noexcept {
    return PairState{(code & 2) != 0, (code & 1) != 0};
  }
  // "00", "01", "10" or "11".
  std::string label() const;

  friend constexpr bool operator==(PairState, PairState) = default;
  friend constexpr auto operator<=>(PairState a, PairState b) noexcept {
    return a.code() <=> b.code();
  }
};

inline constexpr std::array<PairState, 4> all_pair_states{
    PairState::from_code(0), PairState::from_code(1), PairState::from_code(2),
    PairState::from_code(3)};

// f_{i,j}(x, y) = (f_i(x, y), f_j(x, y)). Also names IVT_{i,j}.
class PairMap {
public:
  // Throws std::out_of_range for an index outside [0, 15].
  PairMap(int i, int j);
  PairMap(BoolFn2 first, BoolFn2 second) noexcept
      : first_(first), second_(second) {}

  int i() const noexcept { return first_.index(); }
  int j() const noexcept { return second_.index(); }
  BoolFn2 first() const noexcept { return first_; }
  BoolFn2 second() const noexcept { return second_; }

  PairState operator()(PairState s) const noexcept {
    return PairState{first_(s.x, s.y), second_(s.x, s.y)};
  }

  // Rebuilds the (i, j) indices of an arbitrary map B2 -> B2 given as its
  // image of 00, 01, 10, 11.
  static PairMap from_images(const std::array<PairState, 4> &images) noexcept;

  // All 256 maps in (i, j) lexicographic order.
  static std::vector<PairMap> all();

  friend bool operator==(PairMap, PairMap) = default;
  friend auto operator<=>(PairMap a, PairMap b) noexcept {
    return std::pair{a.i(), a.j()} <=> std::pair{b.i(), b.j()};
  }

private:
  BoolFn2 first_;
  BoolFn2 second_;
};

PairState pairmap_apply(int i, int j, PairState s);

// Functional graph of a pair map on B2: one outgoing edge per state.
class TransitionDiagram {
public:
  explicit TransitionDiagram(const std::array<PairState, 4> &next) noexcept
      : next_(next) {}

  PairState next(PairState s) const noexcept { return next_[s.code()]; }
  const std::array<PairState, 4> &edges() const noexcept { return next_; }
  int in_degree(PairState s) const noexcept;

  friend bool operator==(const TransitionDiagram &,
                         const TransitionDiagram &) = default;

private:
  std::array<PairState, 4> next_;
};

TransitionDiagram build_std(int i, int j);
TransitionDiagram build_std(PairMap f) noexcept;

// Lexicographically minimal rotation of a cycle. Works for any element type
// with operator<.
template <class T> std::vector<T> canonical_rotation(std::vector<T> cycle) {
  if (cycle.size() < 2)
    return cycle;
  std::size_t best = 0;
  const std::size_t n = cycle.size();
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const T &a = cycle[(start + k) % n];
      const T &b = cycle[(best + k) % n];
      if (a < b) {
        best = start;
        break;
      }
      if (b < a)
        break;
    }
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(cycle[(best + k) % n]);
  return out;
}

struct CycleTail {
  std::size_t cycle = 0; // index into TerminalCycleSet::cycles
  int steps = 0;         // edges followed before landing on the cycle
};

struct TerminalCycleSet {
  // Rotation-canonical, ordered by their first state.
  std::vector<std::vector<PairState>> cycles;
  // Indexed by PairState::code().
  std::array<CycleTail, 4> tails{};
};

TerminalCycleSet terminal_cycles(const TransitionDiagram &d);

bool is_collatz_like_std(const TransitionDiagram &d);

// Shape of a Collatz-like STD as a tree hanging off the (0,0) self-loop.
//   star:  all three other states map straight to 00
//   path:  a single chain a -> b -> c -> 00
//   fork:  two states map to 00 and the third maps to one of them
//   broom: one state maps to 00 and the other two map to it
enum class StdTopology { star, path, fork, broom, not_collatz };

std::string_view to_string(StdTopology t) noexcept;

StdTopology std_topology(const TransitionDiagram &d);

struct CollatzCensus {
  std::vector<PairMap> pairs;
  std::map<StdTopology, int> histogram;
};

CollatzCensus enumerate_collatz_like();

} // namespace ivt
