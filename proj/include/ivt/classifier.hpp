#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ivt/attractor.hpp"
#include "ivt/engine.hpp"
#include "ivt/reference.hpp"

namespace ivt {

// Start points are every (m, n) with m, n < 2^width.
struct GridConfig {
  unsigned width = 6;
  std::size_t max_steps = 256;

  // Throws std::invalid_argument unless 2 <= width <= 16 and max_steps >= 1.
  void validate() const;

  friend bool operator==(const GridConfig &, const GridConfig &) = default;
};

struct ClassRecord {
  PairMap pair{0, 0};
  AttractorClass cls = AttractorClass::I;
  bool collatz_like = false; // every observed orbit ends at (0,0)
  bool global = false;       // exactly one distinct cycle observed
  bool sensitive = false;
  // Narrowest family containing every observed cycle.
  AttractorTag family = AttractorTag::generic;
  // Distinct per-cycle tags, in precedence order.
  std::vector<AttractorTag> forms;
  std::size_t distinct_cycles = 0;
  // At most four orbits: the first reaching a longest cycle, then the first
  // reaching each further distinct cycle, in scan order.
  std::vector<WordTrajectory> witnesses;

  friend bool operator==(const ClassRecord &, const ClassRecord &) = default;
};

enum class DiscrepancyKind {
  missing,             // pair in no reference table
  extra,               // pair listed more than once
  class_mismatch,
  form_mismatch,
  sensitivity_mismatch,
};

std::string_view to_string(DiscrepancyKind kind) noexcept;
std::optional<DiscrepancyKind> parse_discrepancy_kind(std::string_view name) noexcept;

struct Discrepancy {
  PairMap pair{0, 0};
  DiscrepancyKind kind = DiscrepancyKind::missing;
  int paper_table = 0; // 0 when not listed
  int paper_row = 0;
  std::string expected;
  std::string observed;
  std::vector<WordTrajectory> witnesses;

  friend bool operator==(const Discrepancy &, const Discrepancy &) = default;
};

struct ClassificationReport {
  GridConfig grid;
  std::vector<ClassRecord> records; // 256 entries in (i, j) order
  std::array<int, 4> counts{};      // classes I..IV
  std::vector<Discrepancy> diff;

  const ClassRecord &record(PairMap f) const {
    return records.at(static_cast<std::size_t>(f.i() * 16 + f.j()));
  }

  friend bool operator==(const ClassificationReport &,
                         const ClassificationReport &) = default;
};

// lcm of the terminal-cycle lengths of the STD of f.
std::size_t predicted_max_period(PairMap f);
std::size_t predicted_max_period(int i, int j);

ClassRecord classify_ivt(PairMap f, const GridConfig &grid);
ClassRecord classify_ivt(PairMap f, std::span<const WordPair> starts,
                         std::size_t max_steps);

// Classifies all 256 IVTs and diffs them against the embedded reference
// tables. Output does not depend on `threads`. Throws InvariantViolation if an
// observed cycle length does not divide predicted_max_period.
ClassificationReport classify_all(const GridConfig &grid, unsigned threads = 1);

std::vector<Discrepancy> diff_with_paper(const ClassificationReport &report);
std::vector<Discrepancy> diff_with_reference(const ClassificationReport &report,
                                             std::span<const ReferenceRow> rows);

inline constexpr std::uint64_t default_seed = 20170811;

// Starts drawn uniformly from [0, 2^width)^2 with a fixed-seed mt19937_64.
std::vector<WordPair> sample_starts(std::uint64_t seed, unsigned width,
                                    std::size_t count);

struct StabilityGrid {
  std::string label; // "W=4", ..., "W=8 sampled"
  std::vector<AttractorClass> classes; // 256 entries
};

struct ClassFlip {
  PairMap pair{0, 0};
  std::string grid;
  AttractorClass baseline = AttractorClass::I;
  AttractorClass observed = AttractorClass::I;
};

struct StabilityReport {
  std::uint64_t seed = default_seed;
  std::size_t samples = 0;
  std::vector<StabilityGrid> grids; // grids[0] is the baseline
  std::vector<ClassFlip> flips;

  bool stable() const noexcept { return flips.empty(); }
};

// Baseline W=6; compares W=4, W=5 exhaustively and `samples` random starts at
// W=8.
StabilityReport check_stability(std::uint64_t seed = default_seed,
                                std::size_t samples = 4096,
                                unsigned threads = 1);

} // namespace ivt
