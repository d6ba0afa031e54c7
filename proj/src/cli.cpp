#include "ivt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivt/export.hpp"

namespace ivt {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int i = 0;
  int j = 0;
  std::string m = "0";
  std::string n = "0";
  unsigned box = 0;
  unsigned width = 6;
  std::size_t max_steps = 256;
  std::string format;
  std::string output;
  bool diff_paper = false;
  unsigned threads = 1;
  std::uint64_t seed = default_seed;
  std::size_t samples = 4096;
  bool check_stability = false;
};

Format resolve_format(const Options &o, Format fallback,
                      std::initializer_list<Format> allowed) {
  if (o.format.empty())
    return fallback;
  const auto f = parse_format(o.format);
  if (!f)
    throw UsageError("unknown format '" + o.format + "'");
  for (Format a : allowed)
    if (a == *f)
      return *f;
  throw UsageError("format '" + o.format + "' is not available here");
}

NatPair start_pair(const Options &o) {
  try {
    return NatPair{parse_natural(o.m), parse_natural(o.n)};
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

void deliver(const Options &o, const std::string &text, std::ostream &out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(o.output);
  if (const char *dir = std::getenv("IVT_OUTPUT_DIR"); dir && *dir && path.is_relative())
    path = std::filesystem::path(dir) / path;
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::ios_base::failure("cannot open " + path.string());
  file << text;
  if (!file.flush())
    throw std::ios_base::failure("cannot write " + path.string());
}

std::string run_eval(const Options &o) {
  const PairMap f(o.i, o.j);
  const NatPair start = start_pair(o);
  const NatPair image = ivt_apply(f, start);
  if (resolve_format(o, Format::text, {Format::text, Format::json}) == Format::text)
    return to_string(image) + "\n";
  nlohmann::ordered_json doc{{"schema_version", schema_version},
                             {"i", o.i},
                             {"j", o.j},
                             {"m", to_string(start.m)},
                             {"n", to_string(start.n)},
                             {"result", {to_string(image.m), to_string(image.n)}}};
  return doc.dump(2) + "\n";
}

std::string run_orbit(const Options &o) {
  const PairMap f(o.i, o.j);
  const OrbitConfig cfg{o.max_steps};
  cfg.validate();
  const Format format =
      resolve_format(o, Format::text, {Format::text, Format::json, Format::dot});
  if (o.box > 0 && format != Format::dot)
    throw UsageError("--box needs --format dot");
  if (format == Format::dot) {
    std::vector<NatPair> starts;
    if (o.box > 0) {
      for (unsigned m = 0; m < o.box; ++m)
        for (unsigned n = 0; n < o.box; ++n)
          starts.push_back(NatPair{m, n});
    } else {
      starts.push_back(start_pair(o));
    }
    return emit_orbit_dot(f, starts, cfg);
  }
  return emit_trajectory(f, trajectory(f, start_pair(o), cfg), format);
}

std::string run_classify(const Options &o) {
  if (o.check_stability) {
    const Format format = resolve_format(o, Format::text, {Format::text, Format::json});
    return emit_stability(check_stability(o.seed, o.samples, o.threads), format);
  }
  const GridConfig grid{o.width, o.max_steps};
  try {
    grid.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const Format format =
      resolve_format(o, Format::text, {Format::text, Format::json, Format::csv});
  return emit_classification(classify_all(grid, o.threads), format, o.diff_paper);
}

std::string run_algebra(const Options &o) {
  const Format format = resolve_format(o, Format::text, {Format::text, Format::json});
  const AlgebraReport report = build_algebra_report();
  const auto table = algebraic_table(classify_all(GridConfig{}, o.threads));
  return emit_algebra(report, table, format);
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Two-dimensional integral value transformations"};
  app.require_subcommand(1, 1);

  auto add_indices = [&](CLI::App *cmd) {
    cmd->add_option("--i", o.i, "index of the first Boolean function")
        ->required()
        ->check(CLI::Range(0, 15));
    cmd->add_option("--j", o.j, "index of the second Boolean function")
        ->required()
        ->check(CLI::Range(0, 15));
  };
  auto add_start = [&](CLI::App *cmd) {
    cmd->add_option("--m", o.m, "first component (decimal, any size)");
    cmd->add_option("--n", o.n, "second component (decimal, any size)");
  };
  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--format", o.format, "dot, json, csv or text");
    cmd->add_option("-o,--output", o.output, "write to this file instead of stdout");
  };

  CLI::App *std_cmd = app.add_subcommand("std", "state transition diagram as DOT");
  add_indices(std_cmd);
  add_common(std_cmd);

  CLI::App *eval_cmd = app.add_subcommand("eval", "apply IVT_{i,j} once");
  add_indices(eval_cmd);
  add_start(eval_cmd);
  add_common(eval_cmd);

  CLI::App *orbit_cmd = app.add_subcommand("orbit", "trajectory until the first repeat");
  add_indices(orbit_cmd);
  add_start(orbit_cmd);
  add_common(orbit_cmd);
  orbit_cmd->add_option("--box", o.box, "DOT of all starts with m,n < BOX")
      ->check(CLI::Range(1u, 1024u));
  orbit_cmd->add_option("--max-steps", o.max_steps, "step budget")
      ->check(CLI::PositiveNumber);

  CLI::App *classify_cmd = app.add_subcommand("classify", "classify all 256 IVTs");
  add_common(classify_cmd);
  classify_cmd->add_option("--width", o.width, "grid covers m,n < 2^WIDTH")
      ->check(CLI::Range(2u, 16u));
  classify_cmd->add_option("--max-steps", o.max_steps, "step budget per orbit")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--diff-paper", o.diff_paper,
                         "include the diff against the embedded reference tables");
  classify_cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::Range(1u, 256u));
  classify_cmd->add_flag("--check-stability", o.check_stability,
                         "compare classes across W=4,5,6 and sampled W=8");
  classify_cmd->add_option("--seed", o.seed, "seed for the W=8 sample");
  classify_cmd->add_option("--samples", o.samples, "W=8 sample size")
      ->check(CLI::PositiveNumber);

  CLI::App *algebra_cmd = app.add_subcommand("algebra", "GF(2) structure report");
  add_common(algebra_cmd);
  algebra_cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::Range(1u, 256u));

  CLI::App *collatz_cmd = app.add_subcommand("collatz", "Collatz-like IVTs and STD shapes");
  add_common(collatz_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    std::string text;
    if (std_cmd->parsed()) {
      resolve_format(o, Format::dot, {Format::dot});
      text = emit_std_dot(PairMap(o.i, o.j));
    } else if (eval_cmd->parsed()) {
      text = run_eval(o);
    } else if (orbit_cmd->parsed()) {
      text = run_orbit(o);
    } else if (classify_cmd->parsed()) {
      text = run_classify(o);
    } else if (algebra_cmd->parsed()) {
      text = run_algebra(o);
    } else {
      text = emit_collatz(enumerate_collatz_like(),
                          resolve_format(o, Format::text, {Format::text, Format::json}));
    }
    deliver(o, text, out);
    return 0;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::ios_base::failure &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation &e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const CycleNotFound &e) {
    err << "no cycle: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace ivt
