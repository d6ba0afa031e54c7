#include "ivt/boolean.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivt {

BoolFn2::BoolFn2(int index) : index_(index) {
  if (index < 0 || index >= count)
    throw std::out_of_range("Boolean function index " + std::to_string(index) +
                            " outside [0, 15]");
}

std::array<bool, 4> BoolFn2::truth_table() const noexcept {
  std::array<bool, 4> table{};
  for (int k = 0; k < 4; ++k)
    table[k] = (*this)(k >= 2, (k & 1) != 0);
  return table;
}

BoolFn2 BoolFn2::from_truth_table(const std::array<bool, 4> &table) noexcept {
  int index = 0;
  for (int k = 0; k < 4; ++k)
    index |= int(table[k]) << k;
  return BoolFn2(index);
}

bool eval_boolfn(int index, bool a, bool b) { return BoolFn2(index)(a, b); }

std::array<bool, 4> truth_table(int index) {
  return BoolFn2(index).truth_table();
}

std::string PairState::label() const {
  return std::string{x ? '1' : '0', y ? '1' : '0'};
}

PairMap::PairMap(int i, int j) : first_(i), second_(j) {}

PairMap PairMap::from_images(const std::array<PairState, 4> &images) noexcept {
  std::array<bool, 4> first{};
  std::array<bool, 4> second{};
  for (int k = 0; k < 4; ++k) {
    first[k] = images[k].x;
    second[k] = images[k].y;
  }
  return PairMap(BoolFn2::from_truth_table(first),
                 BoolFn2::from_truth_table(second));
}

std::vector<PairMap> PairMap::all() {
  std::vector<PairMap> maps;
  maps.reserve(256);
  for (int i = 0; i < BoolFn2::count; ++i)
    for (int j = 0; j < BoolFn2::count; ++j)
      maps.emplace_back(i, j);
  return maps;
}

PairState pairmap_apply(int i, int j, PairState s) { return PairMap(i, j)(s); }

int TransitionDiagram::in_degree(PairState s) const noexcept {
  int degree = 0;
  for (PairState target : next_)
    degree += target == s;
  return degree;
}

TransitionDiagram build_std(int i, int j) { return build_std(PairMap(i, j)); }

TransitionDiagram build_std(PairMap f) noexcept {
  std::array<PairState, 4> next{};
  for (PairState s : all_pair_states)
    next[s.code()] = f(s);
  return TransitionDiagram(next);
}

TerminalCycleSet terminal_cycles(const TransitionDiagram &d) {
  TerminalCycleSet result;
  std::array<int, 4> cycle_of{-1, -1, -1, -1};

  for (PairState start : all_pair_states) {
    // Walk until a state repeats; four steps always suffice.
    std::array<int, 4> seen_at{-1, -1, -1, -1};
    PairState s = start;
    int step = 0;
    while (seen_at[s.code()] < 0) {
      seen_at[s.code()] = step++;
      s = d.next(s);
    }
    if (cycle_of[s.code()] >= 0)
      continue;
    std::vector<PairState> cycle;
    PairState c = s;
    do {
      cycle.push_back(c);
      c = d.next(c);
    } while (c != s);
    for (PairState member : cycle)
      cycle_of[member.code()] = static_cast<int>(result.cycles.size());
    result.cycles.push_back(canonical_rotation(std::move(cycle)));
  }

  // Keep cycles ordered by their canonical first state.
  std::vector<std::size_t> order(result.cycles.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.cycles[a].front() < result.cycles[b].front();
  });
  std::vector<std::vector<PairState>> sorted;
  std::array<std::size_t, 4> remap{};
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    sorted.push_back(std::move(result.cycles[order[k]]));
  }
  result.cycles = std::move(sorted);

  for (PairState start : all_pair_states) {
    PairState s = start;
    int steps = 0;
    while (cycle_of[s.code()] < 0) {
      s = d.next(s);
      ++steps;
    }
    // States on a cycle have cycle_of set; tail states never do.
    result.tails[start.code()] =
        CycleTail{remap[static_cast<std::size_t>(cycle_of[s.code()])], steps};
  }
  return result;
}

bool is_collatz_like_std(const TransitionDiagram &d) {
  const TerminalCycleSet cycles = terminal_cycles(d);
  return cycles.cycles.size() == 1 && cycles.cycles.front().size() == 1 &&
         cycles.cycles.front().front() == PairState{};
}

std::string_view to_string(StdTopology t) noexcept {
  switch (t) {
  case StdTopology::star:
    return "STAR";
  case StdTopology::path:
    return "PATH";
  case StdTopology::fork:
    return "FORK";
  case StdTopology::broom:
    return "BROOM";
  case StdTopology::not_collatz:
    break;
  }
  return "NOT_COLLATZ";
}

StdTopology std_topology(const TransitionDiagram &d) {
  if (!is_collatz_like_std(d))
    return StdTopology::not_collatz;
  const PairState root{};
  const int direct = d.in_degree(root) - 1; // minus the self-loop
  switch (direct) {
  case 3:
    return StdTopology::star;
  case 2:
    return StdTopology::fork;
  default:
    break;
  }
  // One child of the root: it either has two children or a chain continues.
  for (PairState s : all_pair_states)
    if (s != root && d.next(s) == root)
      return d.in_degree(s) == 2 ? StdTopology::broom : StdTopology::path;
  return StdTopology::not_collatz;
}

CollatzCensus enumerate_collatz_like() {
  CollatzCensus census;
  for (PairMap f : PairMap::all()) {
    const TransitionDiagram d = build_std(f);
    const StdTopology shape = std_topology(d);
    if (shape == StdTopology::not_collatz)
      continue;
    census.pairs.push_back(f);
    ++census.histogram[shape];
  }
  return census;
}

} // namespace ivt
