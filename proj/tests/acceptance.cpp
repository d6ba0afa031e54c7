// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ivt/algebra.hpp"
#include "ivt/export.hpp"

using namespace ivt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok) {
      outcome_.pass = false;
      if (!outcome_.detail.empty())
        outcome_.detail += "; ";
      outcome_.detail += what;
    }
  }
  Outcome done(std::string summary) {
    if (outcome_.pass)
      outcome_.detail = std::move(summary);
    return outcome_;
  }

private:
  Outcome outcome_;
};

std::string totals(const std::array<int, 4> &c) {
  std::ostringstream s;
  s << c[0] << "/" << c[1] << "/" << c[2] << "/" << c[3];
  return s.str();
}

Outcome collatz_census() {
  Checker c;
  const CollatzCensus census = enumerate_collatz_like();
  const std::vector<PairMap> expected{
      {0, 0}, {0, 4}, {0, 8},  {0, 12}, {2, 0}, {2, 2}, {2, 6},  {2, 8},
      {4, 4}, {4, 12}, {6, 4}, {6, 6},  {8, 0}, {8, 4}, {10, 0}, {10, 2}};
  c.expect(census.pairs == expected, "pair list differs");
  std::multiset<int> counts;
  for (const auto &[shape, n] : census.histogram)
    counts.insert(n);
  c.expect(counts == std::multiset<int>{1, 3, 6, 6}, "topology histogram differs");
  return c.done("16 pairs, topology counts {1,6,6,3}");
}

Outcome class_partition(const ClassificationReport &r) {
  Checker c;
  c.expect(r.counts == std::array<int, 4>{125, 93, 32, 6}, "totals " + totals(r.counts));
  std::set<PairMap> four;
  for (const ClassRecord &rec : r.records)
    if (rec.cls == AttractorClass::IV)
      four.insert(rec.pair);
  c.expect(four == std::set<PairMap>{{3, 6}, {3, 9}, {5, 12}, {6, 5}, {9, 5}, {10, 3}},
           "class IV membership differs");
  for (const Discrepancy &d : r.diff)
    c.expect(!d.witnesses.empty(), "discrepancy without witness");
  for (const ClassRecord &rec : r.records)
    c.expect(predicted_max_period(rec.pair) % static_cast<std::size_t>(rec.cls) == 0,
             "class does not divide predicted period");
  return c.done(totals(r.counts) + ", " + std::to_string(r.diff.size()) +
                " witnessed discrepancies");
}

Outcome worked_example() {
  Checker c;
  c.expect(ivt_apply(13, 3, NatPair{0, 2}) == NatPair{1, 3}, "IVT_{13,3}(0,2) != (1,3)");
  const Trajectory t = trajectory(13, 3, NatPair{0, 2});
  c.expect(t.cycle == std::vector<NatPair>{{1, 2}}, "cycle is not the fixed point (1,2)");
  c.expect(t.steps_to_cycle() <= 3, "more than 3 steps to the fixed point");
  return c.done("(0,2) -> (1,3) -> (1,2) fixed");
}

Outcome algebra_censuses(const AlgebraReport &a) {
  Checker c;
  c.expect(a.linear_functions == std::vector<int>{0, 6, 10, 12}, "linear functions");
  c.expect(a.linear_pairs.size() == 16, "linear pair count");
  for (PairMap f : a.linear_pairs)
    c.expect(is_linear_fn(f.i()) && is_linear_fn(f.j()), "linear pair with nonlinear part");
  const std::vector<PairMap> bijective{
      {3, 5},  {3, 6},  {3, 9},  {3, 10},  {5, 3},  {5, 6},  {5, 9},   {5, 12},
      {6, 3},  {6, 5},  {6, 10}, {6, 12},  {9, 3},  {9, 5},  {9, 10},  {9, 12},
      {10, 3}, {10, 6}, {10, 9}, {10, 12}, {12, 5}, {12, 6}, {12, 9}, {12, 10}};
  c.expect(a.bijective_pairs == bijective, "bijective pairs");
  c.expect(a.isomorphisms == std::vector<PairMap>{{6, 10}, {6, 12}, {10, 6},
                                                 {10, 12}, {12, 6}, {12, 10}},
           "isomorphisms");
  c.expect(a.axioms_b2 && a.axioms_s && a.axioms_t, "vector space axioms");
  c.expect(a.closure.ok() && a.closure.sums_checked == 256 &&
               a.closure.compositions_checked == 256,
           "closure of linear pairs");
  return c.done("4 linear fns, 16 linear, 24 bijective, 6 isomorphisms; axioms and closure hold");
}

Outcome rank_audit(const AlgebraReport &a) {
  Checker c;
  std::vector<GF2Vector> s;
  for (int i : {1, 2, 4, 8})
    s.push_back(fn_to_vector(i));
  c.expect(rank_gf2(s) == 4, "rank of {f1,f2,f4,f8}");
  const BasisAudit &t = a.bases.at(2);
  c.expect(t.candidates.size() == 16, "T candidate count");
  c.expect(t.oracles_agree(), "elimination and span enumeration disagree");
  c.expect(t.claimed_dimension == 16, "claimed dimension not recorded");
  return c.done("S rank 4; T candidates rank " + std::to_string(t.rank_elimination) +
                " (span " + std::to_string(t.span_size) + "), claimed " +
                std::to_string(t.claimed_dimension));
}

Outcome property_suite() {
  Checker c;
  std::size_t violations = 0;
  auto fail = [&](bool ok) { violations += ok ? 0 : 1; };
  for (PairMap f : PairMap::all()) {
    const std::size_t period = predicted_max_period(f);
    bool all_reach_zero = true;
    for (std::uint64_t m = 0; m < 16; ++m)
      for (std::uint64_t n = 0; n < 16; ++n) {
        const WordPair p{m, n};
        const WordTrajectory t = trajectory(f, p);
        fail(period % t.cycle.size() == 0);
        all_reach_zero = all_reach_zero && t.cycle == std::vector<WordPair>{{0, 0}};
        WordPair x = p;
        for (std::size_t k = 0; k < t.transient.size() + t.cycle.size(); ++k) {
          const WordPair y = ivt_apply(f, x);
          fail(bit_width(y) <= bit_width(x));
          x = y;
        }
        if (f.i() % 2 == 0 && f.j() % 2 == 0) {
          WordPair bits{0, 0};
          for (unsigned k = 0; k < 4; ++k) {
            const WordPair b = ivt_apply(f, WordPair{(m >> k) & 1, (n >> k) & 1});
            bits.m |= b.m << k;
            bits.n |= b.n << k;
          }
          fail(ivt_apply(f, p) == bits);
        }
        if (is_linear_pair(f.i(), f.j()))
          for (std::uint64_t q = 0; q < 16; ++q) {
            const WordPair r{q, q ^ m};
            const WordPair s{p.m ^ r.m, p.n ^ r.n};
            const WordPair fp = ivt_apply(f, p), fr = ivt_apply(f, r);
            fail(ivt_apply(f, s) == WordPair{fp.m ^ fr.m, fp.n ^ fr.n});
          }
      }
    fail(is_collatz_like_std(build_std(f)) == all_reach_zero);
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  return c.done("256 pairs x 256 starts at W=4, 0 violations");
}

Outcome stability() {
  Checker c;
  const StabilityReport s = check_stability(default_seed, 4096, 2);
  c.expect(s.stable(), std::to_string(s.flips.size()) + " class flips");
  return c.done("W=4,5,6 and 4096 sampled W=8 starts, 0 flips");
}

Outcome determinism(const ClassificationReport &baseline) {
  Checker c;
  auto artifacts = [](const ClassificationReport &r) {
    std::string out = emit_classification(r, Format::json, true) +
                      emit_classification(r, Format::csv, true);
    for (PairMap f : PairMap::all())
      out += emit_std_dot(f);
    std::vector<NatPair> starts;
    for (unsigned m = 0; m < 8; ++m)
      for (unsigned n = 0; n < 8; ++n)
        starts.push_back(NatPair{m, n});
    out += emit_orbit_dot(PairMap(13, 3), starts) + emit_orbit_dot(PairMap(10, 0), starts);
    return out;
  };
  const std::string first = artifacts(baseline);
  c.expect(first == artifacts(classify_all(GridConfig{}, 1)), "second run differs");
  c.expect(first == artifacts(classify_all(GridConfig{}, 4)), "4 threads differ");
  return c.done(std::to_string(first.size()) + " bytes identical across runs and 1/2/4 threads");
}

} // namespace

int main() {
  const ClassificationReport report = classify_all(GridConfig{}, 2);
  const AlgebraReport algebra = build_algebra_report();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Collatz-like census", collatz_census},
      {"class partition", [&] { return class_partition(report); }},
      {"worked example", worked_example},
      {"algebra censuses", [&] { return algebra_censuses(algebra); }},
      {"rank audit", [&] { return rank_audit(algebra); }},
      {"property suite", property_suite},
      {"stability", stability},
      {"determinism", [&] { return determinism(report); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << k + 1 << " "
              << criteria[k].first << ": " << o.detail << "\n";
  }
  return failures;
}
