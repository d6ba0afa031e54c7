#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ivt/algebra.hpp"
#include "ivt/boolean.hpp"
#include "ivt/classifier.hpp"
#include "ivt/engine.hpp"

namespace ivt {

enum class Format { dot, json, csv, text };

std::string_view to_string(Format f) noexcept;
std::optional<Format> parse_format(std::string_view name) noexcept;

inline constexpr int schema_version = 1;

// Graphviz text for the STD of f: nodes "00", "01", "10", "11" in that order,
// then one edge per node in the same order.
std::string emit_std_dot(PairMap f);

// Union of the orbits from every start. Nodes are "m,n", sorted numerically.
// Start nodes carry peripheries=2; cycle nodes and cycle edges carry
// style=bold. Throws CycleNotFound like trajectory().
std::string emit_orbit_dot(PairMap f, std::span<const NatPair> starts,
                           const OrbitConfig &cfg = {});

// JSON, CSV or text. Throws std::invalid_argument for Format::dot.
std::string emit_classification(const ClassificationReport &report, Format format,
                                bool include_diff);

// Inverse of emit_classification(..., Format::json, ...). The diff is
// restored when the document has a "paper_diff" section.
ClassificationReport parse_classification_json(std::string_view text);

std::string emit_stability(const StabilityReport &report, Format format);
std::string emit_trajectory(PairMap f, const Trajectory &t, Format format);
std::string emit_collatz(const CollatzCensus &census, Format format);
std::string emit_algebra(const AlgebraReport &report,
                         std::span<const AlgebraicTableRow> table, Format format);

} // namespace ivt
