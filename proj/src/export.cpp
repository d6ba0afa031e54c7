#include "ivt/export.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ivt {

using Json = nlohmann::ordered_json;

std::string_view to_string(Format f) noexcept {
  switch (f) {
  case Format::dot:
    return "dot";
  case Format::json:
    return "json";
  case Format::csv:
    return "csv";
  case Format::text:
    break;
  }
  return "text";
}

std::optional<Format> parse_format(std::string_view name) noexcept {
  for (Format f : {Format::dot, Format::json, Format::csv, Format::text})
    if (to_string(f) == name)
      return f;
  return std::nullopt;
}

namespace {

std::string ivt_name(PairMap f) {
  return "IVT_{" + std::to_string(f.i()) + "," + std::to_string(f.j()) + "}";
}

std::string dot_node(const NatPair &p) {
  return "\"" + to_string(p.m) + "," + to_string(p.n) + "\"";
}

std::string cycle_text(const std::vector<WordPair> &cycle) {
  std::string text;
  for (std::size_t k = 0; k < cycle.size(); ++k)
    text += (k ? ">" : "") + to_string(cycle[k]);
  return text;
}

[[noreturn]] void unsupported(Format format, std::string_view what) {
  throw std::invalid_argument("format '" + std::string(to_string(format)) +
                              "' is not supported for " + std::string(what));
}

} // namespace

std::string emit_std_dot(PairMap f) {
  const TransitionDiagram d = build_std(f);
  std::ostringstream out;
  out << "digraph \"f_" << f.i() << "_" << f.j() << "\" {\n";
  out << "  node [shape=circle];\n";
  for (PairState s : all_pair_states)
    out << "  \"" << s.label() << "\";\n";
  for (PairState s : all_pair_states)
    out << "  \"" << s.label() << "\" -> \"" << d.next(s).label() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string emit_orbit_dot(PairMap f, std::span<const NatPair> starts,
                           const OrbitConfig &cfg) {
  if (starts.empty())
    throw std::invalid_argument("emit_orbit_dot needs at least one start");
  std::set<NatPair> nodes;
  std::set<NatPair> on_cycle;
  std::set<NatPair> start_set(starts.begin(), starts.end());
  for (const NatPair &start : starts) {
    const Trajectory t = trajectory(f, start, cfg);
    nodes.insert(t.transient.begin(), t.transient.end());
    nodes.insert(t.cycle.begin(), t.cycle.end());
    on_cycle.insert(t.cycle.begin(), t.cycle.end());
  }

  std::ostringstream out;
  out << "digraph \"IVT_" << f.i() << "_" << f.j() << "\" {\n";
  out << "  node [shape=ellipse];\n";
  for (const NatPair &p : nodes) {
    std::vector<std::string> attrs;
    if (start_set.count(p))
      attrs.emplace_back("peripheries=2");
    if (on_cycle.count(p))
      attrs.emplace_back("style=bold");
    out << "  " << dot_node(p);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k)
        out << (k ? ", " : "") << attrs[k];
      out << "]";
    }
    out << ";\n";
  }
  for (const NatPair &p : nodes) {
    out << "  " << dot_node(p) << " -> " << dot_node(ivt_apply(f, p));
    if (on_cycle.count(p))
      out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

Json pair_json(const WordPair &p) { return Json::array({p.m, p.n}); }

Json pair_json(const NatPair &p) {
  auto component = [](const Natural &v) -> Json {
    if (bit_length(v) <= 64)
      return v.convert_to<std::uint64_t>();
    return to_string(v);
  };
  return Json::array({component(p.m), component(p.n)});
}

template <class P> Json pairs_json(const std::vector<P> &pairs) {
  Json arr = Json::array();
  for (const auto &p : pairs)
    arr.push_back(pair_json(p));
  return arr;
}

template <BitNatural N> Json trajectory_json(const BasicTrajectory<N> &t) {
  return Json{{"start", pair_json(t.start)},
              {"transient", pairs_json(t.transient)},
              {"cycle", pairs_json(t.cycle)},
              {"entry_index", t.entry_index}};
}

WordPair word_pair_from(const Json &j) {
  return WordPair{j.at(0).get<std::uint64_t>(), j.at(1).get<std::uint64_t>()};
}

std::vector<WordPair> word_pairs_from(const Json &j) {
  std::vector<WordPair> pairs;
  for (const auto &p : j)
    pairs.push_back(word_pair_from(p));
  return pairs;
}

WordTrajectory word_trajectory_from(const Json &j) {
  WordTrajectory t;
  t.start = word_pair_from(j.at("start"));
  t.transient = word_pairs_from(j.at("transient"));
  t.cycle = word_pairs_from(j.at("cycle"));
  t.entry_index = j.at("entry_index").get<std::size_t>();
  return t;
}

Json witnesses_json(const std::vector<WordTrajectory> &witnesses) {
  Json arr = Json::array();
  for (const auto &w : witnesses)
    arr.push_back(trajectory_json(w));
  return arr;
}

std::vector<WordTrajectory> witnesses_from(const Json &j) {
  std::vector<WordTrajectory> witnesses;
  for (const auto &w : j)
    witnesses.push_back(word_trajectory_from(w));
  return witnesses;
}

std::map<PairMap, std::vector<const Discrepancy *>>
index_diff(const std::vector<Discrepancy> &diff) {
  std::map<PairMap, std::vector<const Discrepancy *>> by_pair;
  for (const auto &d : diff)
    by_pair[d.pair].push_back(&d);
  return by_pair;
}

Json discrepancy_json(const Discrepancy &d) {
  return Json{{"i", d.pair.i()},
              {"j", d.pair.j()},
              {"kind", to_string(d.kind)},
              {"paper_table", d.paper_table},
              {"paper_row", d.paper_row},
              {"expected", d.expected},
              {"observed", d.observed},
              {"witnesses", witnesses_json(d.witnesses)}};
}

Json totals_json(const std::array<int, 4> &counts) {
  return Json{{"I", counts[0]}, {"II", counts[1]}, {"III", counts[2]},
              {"IV", counts[3]}};
}

std::string classification_json(const ClassificationReport &report,
                                bool include_diff) {
  const auto diff_by_pair = index_diff(report.diff);
  Json doc;
  doc["schema_version"] = schema_version;
  doc["kind"] = "classification";
  doc["grid"] = Json{{"width", report.grid.width},
                     {"max_steps", report.grid.max_steps}};
  doc["totals"] = totals_json(report.counts);
  Json records = Json::array();
  for (const ClassRecord &r : report.records) {
    Json forms = Json::array();
    for (AttractorTag tag : r.forms)
      forms.push_back(to_string(tag));
    Json rec{{"i", r.pair.i()},
             {"j", r.pair.j()},
             {"class", to_string(r.cls)},
             {"collatz_like", r.collatz_like},
             {"global", r.global},
             {"sensitive", r.sensitive},
             {"family", to_string(r.family)},
             {"forms", forms},
             {"distinct_cycles", r.distinct_cycles},
             {"witnesses", witnesses_json(r.witnesses)}};
    if (include_diff) {
      // An empty list marks a record that agrees with the reference tables.
      Json kinds = Json::array();
      if (auto it = diff_by_pair.find(r.pair); it != diff_by_pair.end())
        for (const Discrepancy *d : it->second)
          kinds.push_back(to_string(d->kind));
      rec["diff"] = kinds;
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  if (include_diff) {
    Json entries = Json::array();
    for (const Discrepancy &d : report.diff)
      entries.push_back(discrepancy_json(d));
    doc["paper_diff"] = Json{{"reference_version", 1},
                             {"count", report.diff.size()},
                             {"discrepancies", std::move(entries)}};
  }
  return doc.dump(2) + "\n";
}

std::string csv_quote(const std::string &field) {
  if (field.find_first_of(",\"\n") == std::string::npos)
    return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string classification_csv(const ClassificationReport &report,
                               bool include_diff) {
  const auto diff_by_pair = index_diff(report.diff);
  std::ostringstream out;
  out << "i,j,class,family,sensitive,collatz_like,global,distinct_cycles,forms,"
         "witness_cycle";
  if (include_diff)
    out << ",diff";
  out << "\n";
  for (const ClassRecord &r : report.records) {
    std::string forms;
    for (std::size_t k = 0; k < r.forms.size(); ++k)
      forms += (k ? "|" : "") + std::string(to_string(r.forms[k]));
    const std::string witness =
        r.witnesses.empty() ? std::string() : cycle_text(r.witnesses.front().cycle);
    out << r.pair.i() << ',' << r.pair.j() << ',' << to_string(r.cls) << ','
        << to_string(r.family) << ',' << (r.sensitive ? 1 : 0) << ','
        << (r.collatz_like ? 1 : 0) << ',' << (r.global ? 1 : 0) << ','
        << r.distinct_cycles << ',' << forms << ',' << csv_quote(witness);
    if (include_diff) {
      std::string kinds;
      if (auto it = diff_by_pair.find(r.pair); it != diff_by_pair.end())
        for (const Discrepancy *d : it->second)
          kinds += (kinds.empty() ? "" : "|") + std::string(to_string(d->kind));
      out << ',' << kinds;
    }
    out << "\n";
  }
  return out.str();
}

std::string classification_text(const ClassificationReport &report,
                                bool include_diff) {
  std::ostringstream out;
  out << "grid: m,n < 2^" << report.grid.width
      << ", max_steps " << report.grid.max_steps << "\n";
  out << "totals: I=" << report.counts[0] << " II=" << report.counts[1]
      << " III=" << report.counts[2] << " IV=" << report.counts[3] << "\n";
  for (AttractorClass cls : {AttractorClass::I, AttractorClass::II,
                             AttractorClass::III, AttractorClass::IV}) {
    // Group by family, then list the sensitive ones separately.
    std::map<std::string, std::vector<PairMap>> groups;
    for (const ClassRecord &r : report.records) {
      if (r.cls != cls)
        continue;
      std::string key = r.collatz_like ? "ZERO (Collatz-like)"
                        : r.sensitive  ? "sensitive"
                                       : std::string(to_string(r.family));
      groups[key].push_back(r.pair);
    }
    out << "\nclass " << to_string(cls) << "\n";
    for (const auto &[key, pairs] : groups) {
      out << "  " << key << " [" << pairs.size() << "]:";
      for (PairMap f : pairs)
        out << " (" << f.i() << "," << f.j() << ")";
      out << "\n";
    }
  }
  if (include_diff) {
    out << "\nreference diff: " << report.diff.size() << " discrepanc"
        << (report.diff.size() == 1 ? "y" : "ies") << "\n";
    for (const Discrepancy &d : report.diff) {
      out << "  " << ivt_name(d.pair) << " " << to_string(d.kind);
      if (d.paper_table)
        out << " (table " << d.paper_table << " row " << d.paper_row << ")";
      out << ": expected " << d.expected << "; observed " << d.observed << "\n";
      for (const WordTrajectory &w : d.witnesses) {
        out << "    " << to_string(w.start);
        for (std::size_t k = 1; k < w.transient.size(); ++k)
          out << " -> " << to_string(w.transient[k]);
        out << " => [" << cycle_text(w.cycle) << "]\n";
      }
    }
  }
  return out.str();
}

} // namespace

std::string emit_classification(const ClassificationReport &report, Format format,
                                bool include_diff) {
  switch (format) {
  case Format::json:
    return classification_json(report, include_diff);
  case Format::csv:
    return classification_csv(report, include_diff);
  case Format::text:
    return classification_text(report, include_diff);
  case Format::dot:
    break;
  }
  unsupported(format, "classification reports");
}

ClassificationReport parse_classification_json(std::string_view text) {
  const Json doc = Json::parse(text);
  if (doc.at("schema_version").get<int>() != schema_version)
    throw std::runtime_error("unsupported classification schema_version");
  ClassificationReport report;
  report.grid.width = doc.at("grid").at("width").get<unsigned>();
  report.grid.max_steps = doc.at("grid").at("max_steps").get<std::size_t>();
  const Json &totals = doc.at("totals");
  report.counts = {totals.at("I").get<int>(), totals.at("II").get<int>(),
                   totals.at("III").get<int>(), totals.at("IV").get<int>()};
  for (const Json &rec : doc.at("records")) {
    ClassRecord r;
    r.pair = PairMap(rec.at("i").get<int>(), rec.at("j").get<int>());
    const auto cls = parse_attractor_class(rec.at("class").get<std::string>());
    const auto family = parse_attractor_tag(rec.at("family").get<std::string>());
    if (!cls || !family)
      throw std::runtime_error("bad class or family in record");
    r.cls = *cls;
    r.family = *family;
    r.collatz_like = rec.at("collatz_like").get<bool>();
    r.global = rec.at("global").get<bool>();
    r.sensitive = rec.at("sensitive").get<bool>();
    for (const Json &form : rec.at("forms")) {
      const auto tag = parse_attractor_tag(form.get<std::string>());
      if (!tag)
        throw std::runtime_error("bad form tag in record");
      r.forms.push_back(*tag);
    }
    r.distinct_cycles = rec.at("distinct_cycles").get<std::size_t>();
    r.witnesses = witnesses_from(rec.at("witnesses"));
    report.records.push_back(std::move(r));
  }
  if (doc.contains("paper_diff")) {
    for (const Json &d : doc.at("paper_diff").at("discrepancies")) {
      const auto kind = parse_discrepancy_kind(d.at("kind").get<std::string>());
      if (!kind)
        throw std::runtime_error("bad discrepancy kind");
      report.diff.push_back(Discrepancy{
          PairMap(d.at("i").get<int>(), d.at("j").get<int>()), *kind,
          d.at("paper_table").get<int>(), d.at("paper_row").get<int>(),
          d.at("expected").get<std::string>(), d.at("observed").get<std::string>(),
          witnesses_from(d.at("witnesses"))});
    }
  }
  return report;
}

std::string emit_stability(const StabilityReport &report, Format format) {
  if (format == Format::json) {
    Json grids = Json::array();
    for (const StabilityGrid &g : report.grids) {
      std::array<int, 4> counts{};
      for (AttractorClass c : g.classes)
        ++counts[static_cast<std::size_t>(c) - 1];
      grids.push_back(Json{{"label", g.label}, {"totals", totals_json(counts)}});
    }
    Json flips = Json::array();
    for (const ClassFlip &f : report.flips)
      flips.push_back(Json{{"i", f.pair.i()},
                           {"j", f.pair.j()},
                           {"grid", f.grid},
                           {"baseline", to_string(f.baseline)},
                           {"observed", to_string(f.observed)}});
    Json doc{{"schema_version", schema_version},
             {"kind", "stability"},
             {"seed", report.seed},
             {"samples", report.samples},
             {"grids", grids},
             {"flips", flips},
             {"stable", report.stable()}};
    return doc.dump(2) + "\n";
  }
  if (format != Format::text)
    unsupported(format, "stability reports");
  std::ostringstream out;
  out << "stability (seed " << report.seed << ", " << report.samples
      << " samples at W=8)\n";
  for (const StabilityGrid &g : report.grids) {
    std::array<int, 4> counts{};
    for (AttractorClass c : g.classes)
      ++counts[static_cast<std::size_t>(c) - 1];
    out << "  " << g.label << ": I=" << counts[0] << " II=" << counts[1]
        << " III=" << counts[2] << " IV=" << counts[3] << "\n";
  }
  out << "  flips: " << report.flips.size() << "\n";
  for (const ClassFlip &f : report.flips)
    out << "    " << ivt_name(f.pair) << " " << f.grid << ": "
        << to_string(f.baseline) << " -> " << to_string(f.observed) << "\n";
  return out.str();
}

std::string emit_trajectory(PairMap f, const Trajectory &t, Format format) {
  if (format == Format::json) {
    Json doc = trajectory_json(t);
    doc["schema_version"] = schema_version;
    doc["i"] = f.i();
    doc["j"] = f.j();
    doc["steps_to_cycle"] = t.steps_to_cycle();
    doc["form"] = to_string(classify_attractor_form(t.cycle).tag);
    return doc.dump(2) + "\n";
  }
  if (format != Format::text)
    unsupported(format, "orbits without --dot");
  std::ostringstream out;
  out << ivt_name(f) << " from " << to_string(t.start) << "\n";
  out << "transient:";
  for (const NatPair &p : t.transient)
    out << " " << to_string(p);
  out << "\ncycle:";
  for (const NatPair &p : t.cycle)
    out << " " << to_string(p);
  out << "\nsteps_to_cycle: " << t.steps_to_cycle()
      << "\nperiod: " << t.cycle.size()
      << "\nform: " << to_string(classify_attractor_form(t.cycle).tag) << "\n";
  return out.str();
}

std::string emit_collatz(const CollatzCensus &census, Format format) {
  if (format == Format::json) {
    Json pairs = Json::array();
    for (PairMap f : census.pairs)
      pairs.push_back(Json{{"i", f.i()},
                           {"j", f.j()},
                           {"topology", to_string(std_topology(build_std(f)))}});
    Json histogram = Json::object();
    for (const auto &[shape, count] : census.histogram)
      histogram[std::string(to_string(shape))] = count;
    Json doc{{"schema_version", schema_version},
             {"kind", "collatz"},
             {"count", census.pairs.size()},
             {"pairs", pairs},
             {"histogram", histogram}};
    return doc.dump(2) + "\n";
  }
  if (format != Format::text)
    unsupported(format, "the Collatz census");
  std::ostringstream out;
  out << census.pairs.size() << " Collatz-like IVTs\n";
  for (PairMap f : census.pairs)
    out << "  (" << f.i() << "," << f.j() << ") "
        << to_string(std_topology(build_std(f))) << "\n";
  out << "topology histogram:\n";
  for (const auto &[shape, count] : census.histogram)
    out << "  " << to_string(shape) << ": " << count << "\n";
  return out.str();
}

namespace {

Json pair_list_json(const std::vector<PairMap> &pairs) {
  Json arr = Json::array();
  for (PairMap f : pairs)
    arr.push_back(Json::array({f.i(), f.j()}));
  return arr;
}

std::string pair_list_text(const std::vector<PairMap> &pairs) {
  std::string text;
  for (PairMap f : pairs)
    text += " (" + std::to_string(f.i()) + "," + std::to_string(f.j()) + ")";
  return text;
}

} // namespace

std::string emit_algebra(const AlgebraReport &report,
                         std::span<const AlgebraicTableRow> table, Format format) {
  if (format == Format::json) {
    Json bases = Json::array();
    for (const BasisAudit &b : report.bases)
      bases.push_back(Json{{"space", to_string(b.space)},
                           {"candidates", b.candidate_names},
                           {"rank_elimination", b.rank_elimination},
                           {"span_size", b.span_size},
                           {"rank_from_span", b.rank_from_span},
                           {"claimed_dimension", b.claimed_dimension},
                           {"space_dimension", b.space_dimension},
                           {"oracles_agree", b.oracles_agree()},
                           {"independent", b.independent()},
                           {"spans_space", b.spans_space()},
                           {"matches_claim", b.matches_claim()}});
    Json rows = Json::array();
    for (const AlgebraicTableRow &row : table) {
      Json r{{"i", row.pair.i()},
             {"j", row.pair.j()},
             {"character", to_string(row.character)},
             {"remark", to_string(row.remark)},
             {"family", to_string(row.family)},
             {"attractor", pairs_json(row.attractor)},
             {"paper_character", to_string(row.paper_character)},
             {"paper_remark", to_string(row.paper_remark)},
             {"agrees", row.agrees()}};
      if (!row.paper_note.empty())
        r["paper_note"] = row.paper_note;
      rows.push_back(std::move(r));
    }
    Json doc{{"schema_version", schema_version},
             {"kind", "algebra"},
             {"axioms", Json{{"B2", report.axioms_b2},
                             {"S", report.axioms_s},
                             {"T", report.axioms_t}}},
             {"linear_functions", report.linear_functions},
             {"linear_pairs", pair_list_json(report.linear_pairs)},
             {"bijective_pairs", pair_list_json(report.bijective_pairs)},
             {"isomorphisms", pair_list_json(report.isomorphisms)},
             {"bases", bases},
             {"closure", Json{{"sums_checked", report.closure.sums_checked},
                              {"compositions_checked",
                               report.closure.compositions_checked},
                              {"failures", report.closure.failures.size()}}},
             {"linear_iff_components", report.linear_iff_components},
             {"swap_symmetric", report.swap_symmetric},
             {"basis_candidates_nonlinear", report.basis_candidates_nonlinear},
             {"algebraic_table", rows}};
    return doc.dump(2) + "\n";
  }
  if (format != Format::text)
    unsupported(format, "the algebra report");
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "NO"; };
  out << "vector space axioms: B2 " << yes(report.axioms_b2) << ", S "
      << yes(report.axioms_s) << ", T " << yes(report.axioms_t) << "\n";
  out << "linear functions [" << report.linear_functions.size() << "]:";
  for (int i : report.linear_functions)
    out << " f_" << i;
  out << "\nlinear pairs [" << report.linear_pairs.size()
      << "]:" << pair_list_text(report.linear_pairs) << "\n";
  out << "bijective pairs [" << report.bijective_pairs.size()
      << "]:" << pair_list_text(report.bijective_pairs) << "\n";
  out << "isomorphisms [" << report.isomorphisms.size()
      << "]:" << pair_list_text(report.isomorphisms) << "\n";
  out << "closure: " << report.closure.sums_checked << " sums, "
      << report.closure.compositions_checked << " compositions, "
      << report.closure.failures.size() << " failures\n";
  out << "linear(i,j) <=> linear(i) and linear(j): "
      << yes(report.linear_iff_components) << "\n";
  out << "linearity/bijectivity symmetric under (i,j)->(j,i): "
      << yes(report.swap_symmetric) << "\n";
  out << "listed T basis candidates all non-linear: "
      << yes(report.basis_candidates_nonlinear) << "\n";
  out << "basis audits:\n";
  for (const BasisAudit &b : report.bases) {
    out << "  " << to_string(b.space) << " (" << b.candidates.size()
        << " candidates): rank " << b.rank_elimination << " by elimination, span "
        << b.span_size << " = 2^" << b.rank_from_span << " by enumeration; claimed "
        << b.claimed_dimension << ", space dimension " << b.space_dimension
        << (b.matches_claim() ? "" : "  ** differs from claim **") << "\n";
  }
  out << "algebraic table:\n";
  for (const AlgebraicTableRow &row : table) {
    out << "  " << ivt_name(row.pair) << " " << to_string(row.character) << " "
        << to_string(row.remark) << " " << to_string(row.family) << " ["
        << cycle_text(row.attractor) << "]";
    if (!row.agrees())
      out << "  ** reference: " << to_string(row.paper_character) << " "
          << to_string(row.paper_remark) << " **";
    if (!row.paper_note.empty())
      out << "  (" << row.paper_note << ")";
    out << "\n";
  }
  return out.str();
}

} // namespace ivt
