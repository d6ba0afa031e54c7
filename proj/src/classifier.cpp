#include "ivt/classifier.hpp"

#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "parallel.hpp"

namespace ivt {

void GridConfig::validate() const {
  if (width < 2 || width > 16)
    throw std::invalid_argument("grid width must be in [2, 16], got " +
                                std::to_string(width));
  if (max_steps == 0)
    throw std::invalid_argument("max_steps must be at least 1");
}

std::string_view to_string(DiscrepancyKind kind) noexcept {
  switch (kind) {
  case DiscrepancyKind::missing:
    return "MISSING";
  case DiscrepancyKind::extra:
    return "EXTRA";
  case DiscrepancyKind::class_mismatch:
    return "CLASS_MISMATCH";
  case DiscrepancyKind::form_mismatch:
    return "FORM_MISMATCH";
  case DiscrepancyKind::sensitivity_mismatch:
    break;
  }
  return "SENSITIVITY_MISMATCH";
}

std::optional<DiscrepancyKind> parse_discrepancy_kind(std::string_view name) noexcept {
  for (auto k : {DiscrepancyKind::missing, DiscrepancyKind::extra,
                 DiscrepancyKind::class_mismatch, DiscrepancyKind::form_mismatch,
                 DiscrepancyKind::sensitivity_mismatch})
    if (to_string(k) == name)
      return k;
  return std::nullopt;
}

std::size_t predicted_max_period(PairMap f) {
  std::size_t period = 1;
  for (const auto &cycle : terminal_cycles(build_std(f)).cycles)
    period = std::lcm(period, cycle.size());
  return period;
}

std::size_t predicted_max_period(int i, int j) {
  return predicted_max_period(PairMap(i, j));
}

namespace {

using WordCycle = std::vector<WordPair>;

std::vector<WordPair> grid_starts(unsigned width) {
  const std::uint64_t side = std::uint64_t{1} << width;
  std::vector<WordPair> starts;
  starts.reserve(side * side);
  for (std::uint64_t m = 0; m < side; ++m)
    for (std::uint64_t n = 0; n < side; ++n)
      starts.push_back(WordPair{m, n});
  return starts;
}

} // namespace

ClassRecord classify_ivt(PairMap f, std::span<const WordPair> starts,
                         std::size_t max_steps) {
  if (starts.empty())
    throw std::invalid_argument("classify_ivt needs at least one start");
  const OrbitConfig cfg{max_steps};

  // Distinct cycles with the index of the first start reaching each.
  std::map<WordCycle, std::size_t> first_seen;
  std::vector<const WordCycle *> order;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    auto [it, inserted] = first_seen.emplace(orbit_cycle(f, starts[k], cfg), k);
    if (inserted)
      order.push_back(&it->first);
  }

  const std::size_t predicted = predicted_max_period(f);
  std::size_t longest = 0;
  for (const WordCycle *cycle : order) {
    if (predicted % cycle->size() != 0)
      throw InvariantViolation(
          "IVT_{" + std::to_string(f.i()) + "," + std::to_string(f.j()) +
          "}: cycle of length " + std::to_string(cycle->size()) +
          " does not divide STD period " + std::to_string(predicted));
    longest = std::max(longest, cycle->size());
  }

  ClassRecord record;
  record.pair = f;
  record.cls = class_for_period(longest);
  record.distinct_cycles = order.size();
  record.global = order.size() == 1;
  record.collatz_like = record.global && *order.front() == WordCycle{WordPair{}};

  std::vector<WordCycle> cycles;
  cycles.reserve(order.size());
  for (const WordCycle *cycle : order)
    cycles.push_back(*cycle);
  for (AttractorTag tag : tag_precedence) {
    const bool seen = std::any_of(cycles.begin(), cycles.end(), [tag](const auto &c) {
      return classify_attractor_form(c).tag == tag;
    });
    if (seen)
      record.forms.push_back(tag);
  }
  record.family = family_of(std::span<const WordCycle>(cycles));
  record.sensitive = record.family == AttractorTag::generic && cycles.size() >= 2;

  // Witnesses: longest cycle first, then other cycles in order of discovery.
  std::vector<const WordCycle *> chosen;
  for (const WordCycle *cycle : order) {
    if (cycle->size() == longest) {
      chosen.push_back(cycle);
      break;
    }
  }
  for (const WordCycle *cycle : order) {
    if (chosen.size() >= 4)
      break;
    if (cycle != chosen.front())
      chosen.push_back(cycle);
  }
  for (const WordCycle *cycle : chosen)
    record.witnesses.push_back(trajectory(f, starts[first_seen.at(*cycle)], cfg));
  return record;
}

ClassRecord classify_ivt(PairMap f, const GridConfig &grid) {
  grid.validate();
  const auto starts = grid_starts(grid.width);
  return classify_ivt(f, starts, grid.max_steps);
}

ClassificationReport classify_all(const GridConfig &grid, unsigned threads) {
  grid.validate();
  const auto starts = grid_starts(grid.width);
  const auto maps = PairMap::all();

  ClassificationReport report;
  report.grid = grid;
  report.records.resize(maps.size());
  detail::parallel_for(maps.size(), threads, [&](std::size_t k) {
    report.records[k] = classify_ivt(maps[k], starts, grid.max_steps);
  });
  for (const auto &r : report.records)
    ++report.counts[static_cast<std::size_t>(r.cls) - 1];
  report.diff = diff_with_paper(report);
  return report;
}

namespace {

std::string describe(const ClassRecord &r) {
  std::string text = "family " + std::string(to_string(r.family)) + ", " +
                     std::to_string(r.distinct_cycles) + " distinct cycle";
  if (r.distinct_cycles != 1)
    text += "s";
  return text;
}

// Paper B2 literals list states of a single cycle; order is not compared.
bool same_state_set(const ClassRecord &r, const std::vector<PairState> &states) {
  if (r.distinct_cycles != 1 || r.witnesses.empty())
    return false;
  std::vector<PairState> observed;
  for (const WordPair &p : r.witnesses.front().cycle) {
    if (p.m > 1 || p.n > 1)
      return false;
    observed.push_back(PairState{p.m == 1, p.n == 1});
  }
  std::vector<PairState> expected = states;
  std::sort(observed.begin(), observed.end());
  std::sort(expected.begin(), expected.end());
  return observed == expected;
}

std::string states_text(const std::vector<PairState> &states) {
  std::string text = "{";
  for (std::size_t k = 0; k < states.size(); ++k)
    text += (k ? "," : "") + states[k].label();
  return text + "}";
}

std::string observed_form(const ClassRecord &r) {
  std::string text(to_string(r.family));
  if (r.family == AttractorTag::b2_cycle && !r.witnesses.empty()) {
    std::vector<PairState> states;
    for (const WordPair &p : r.witnesses.front().cycle)
      states.push_back(PairState{p.m == 1, p.n == 1});
    text += states_text(states);
  }
  return text;
}

} // namespace

std::vector<Discrepancy> diff_with_reference(const ClassificationReport &report,
                                             std::span<const ReferenceRow> rows) {
  std::map<PairMap, std::vector<const ReferenceRow *>> listed;
  for (const ReferenceRow &row : rows)
    listed[row.pair].push_back(&row);

  std::vector<Discrepancy> diff;
  for (const ClassRecord &r : report.records) {
    auto add = [&](DiscrepancyKind kind, const ReferenceRow *row,
                   std::string expected, std::string observed) {
      diff.push_back(Discrepancy{r.pair, kind, row ? row->table : 0,
                                 row ? row->row : 0, std::move(expected),
                                 std::move(observed), r.witnesses});
    };
    const auto it = listed.find(r.pair);
    if (it == listed.end()) {
      add(DiscrepancyKind::missing, nullptr, "listed in a reference table",
          "class " + std::string(to_string(r.cls)) + ", " + describe(r));
      continue;
    }
    for (std::size_t k = 1; k < it->second.size(); ++k)
      add(DiscrepancyKind::extra, it->second[k], "listed once",
          "also in table " + std::to_string(it->second[k]->table) + " row " +
              std::to_string(it->second[k]->row));

    const ReferenceRow &row = *it->second.front();
    if (row.cls != r.cls)
      add(DiscrepancyKind::class_mismatch, &row,
          "class " + std::string(to_string(row.cls)),
          "class " + std::string(to_string(r.cls)));
    if (row.sensitive != r.sensitive)
      add(DiscrepancyKind::sensitivity_mismatch, &row,
          row.sensitive ? "sensitive" : "not sensitive",
          std::string(r.sensitive ? "sensitive" : "not sensitive") + " (" +
              describe(r) + ")");
    if (row.tag && *row.tag != AttractorTag::generic && !r.sensitive) {
      const bool form_ok = *row.tag == r.family &&
                           (row.states.empty() || same_state_set(r, row.states));
      if (!form_ok)
        add(DiscrepancyKind::form_mismatch, &row, row.form, observed_form(r));
    }
  }
  return diff;
}

std::vector<Discrepancy> diff_with_paper(const ClassificationReport &report) {
  const auto rows = embedded_class_tables();
  return diff_with_reference(report, rows);
}

std::vector<WordPair> sample_starts(std::uint64_t seed, unsigned width,
                                    std::size_t count) {
  if (width == 0 || width > 63)
    throw std::invalid_argument("sample width must be in [1, 63]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, (std::uint64_t{1} << width) - 1);
  std::vector<WordPair> starts(count);
  for (auto &p : starts) {
    p.m = coord(rng);
    p.n = coord(rng);
  }
  return starts;
}

StabilityReport check_stability(std::uint64_t seed, std::size_t samples,
                                unsigned threads) {
  StabilityReport report;
  report.seed = seed;
  report.samples = samples;
  const auto maps = PairMap::all();

  auto run = [&](std::string label, const std::vector<WordPair> &starts) {
    StabilityGrid g{std::move(label), std::vector<AttractorClass>(maps.size())};
    detail::parallel_for(maps.size(), threads, [&](std::size_t k) {
      g.classes[k] = classify_ivt(maps[k], starts, 256).cls;
    });
    report.grids.push_back(std::move(g));
  };
  run("W=6", grid_starts(6));
  run("W=4", grid_starts(4));
  run("W=5", grid_starts(5));
  run("W=8 sampled", sample_starts(seed, 8, samples));

  const auto &baseline = report.grids.front().classes;
  for (std::size_t g = 1; g < report.grids.size(); ++g)
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (report.grids[g].classes[k] != baseline[k])
        report.flips.push_back(ClassFlip{maps[k], report.grids[g].label,
                                         baseline[k], report.grids[g].classes[k]});
  return report;
}

} // namespace ivt
