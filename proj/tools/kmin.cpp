// kmin: minimize, compare, generate and benchmark deterministic Kripke
// structures stored in the .kts text format.
//
// Exit codes: 0 success, 1 negative verdict (equiv), 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmin/bench.hpp"
#include "kmin/engine.hpp"
#include "kmin/generate.hpp"
#include "kmin/kts.hpp"
#include "kmin/quotient.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

kmin::KtsDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return kmin::parse_kts_document(buffer.str());
  } catch (const kmin::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

/// Loads and rejects anything but unreachable states.
kmin::KtsDocument load_well_formed(const std::string& path) {
  kmin::KtsDocument doc = load(path);
  kmin::ValidationReport report = kmin::validate(doc.structure);
  if (!report.well_formed())
    throw UsageError(path + ": invalid structure:\n" +
                     report.describe(doc.structure));
  return doc;
}

kmin::KripkeStructure load_trimmed(const std::string& path) {
  kmin::KripkeStructure k = load_well_formed(path).structure;
  kmin::KripkeStructure trimmed = kmin::trim_unreachable(k);
  if (trimmed.num_states() != k.num_states())
    std::cerr << "kmin: note: " << path << ": dropped "
              << k.num_states() - trimmed.num_states()
              << " unreachable state(s)\n";
  return trimmed;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

int cmd_minimize(const std::string& input, const std::string& output,
                 bool stats) {
  kmin::KtsDocument doc = load_well_formed(input);
  kmin::KripkeStructure k = kmin::trim_unreachable(doc.structure);
  if (k.num_states() != doc.structure.num_states())
    std::cerr << "kmin: note: " << input << ": dropped "
              << doc.structure.num_states() - k.num_states()
              << " unreachable state(s)\n";
  kmin::MinimizeResult result = kmin::minimize_partition(k);
  kmin::KripkeStructure minimal =
      kmin::canonical_form(kmin::build_quotient(k, result.partition)).structure;
  write_output(output, kmin::serialize_kts(minimal));
  if (stats) {
    json record{{"input_states", doc.structure.num_states()},
                {"reachable_states", k.num_states()},
                {"output_states", minimal.num_states()},
                {"splits", result.stats.splits},
                {"state_moves", result.stats.state_moves},
                {"splitter_removals", result.stats.splitter_removals},
                {"loop_iterations", result.stats.loop_iterations},
                {"smaller_half_violations",
                 result.stats.smaller_half_violations},
                {"seconds", result.stats.seconds}};
    std::cerr << record.dump() << '\n';
  }
  return kExitOk;
}

int cmd_equiv(const std::string& left, const std::string& right) {
  kmin::KripkeStructure a = load_well_formed(left).structure;
  kmin::KripkeStructure b = load_well_formed(right).structure;
  kmin::EquivalenceVerdict verdict;
  try {
    verdict = kmin::language_equivalent(a, b);
  } catch (const kmin::Error& e) {
    throw UsageError(e.what());
  }
  if (verdict.equivalent) {
    std::cout << "equivalent\n";
    return kExitOk;
  }
  const kmin::Counterexample& cex = *verdict.counterexample;
  std::cout << "counterexample: " << kmin::word_to_string(a, cex.word) << '\n'
            << "left: " << cex.left.to_string() << '\n'
            << "right: " << cex.right.to_string() << '\n';
  return kExitNegative;
}

int cmd_info(const std::string& input) {
  kmin::KripkeStructure k = load_well_formed(input).structure;
  kmin::KripkeStructure trimmed = kmin::trim_unreachable(k);
  std::cout << "states: " << k.num_states() << '\n'
            << "bits: " << k.num_bits() << '\n'
            << "alphabet: " << k.alphabet_size() << '\n'
            << "reachable: " << trimmed.num_states() << '\n'
            << "minimal: " << (kmin::is_minimal(trimmed) ? "true" : "false")
            << '\n';
  return kExitOk;
}

json to_json(const kmin::BenchReport& report) {
  json points = json::array();
  for (const kmin::BenchPoint& p : report.points) {
    json samples = json::array();
    for (const kmin::BenchSample& s : p.samples)
      samples.push_back({{"states", s.states},
                         {"blocks", s.blocks},
                         {"splits", s.stats.splits},
                         {"state_moves", s.stats.state_moves},
                         {"splitter_removals", s.stats.splitter_removals},
                         {"loop_iterations", s.stats.loop_iterations},
                         {"seconds", s.stats.seconds}});
    points.push_back({{"family", kmin::to_string(p.family)},
                      {"requested_states", p.requested_states},
                      {"bits", p.bits},
                      {"alphabet", p.alphabet},
                      {"reps", p.reps},
                      {"mean_state_moves", p.mean_state_moves},
                      {"max_state_moves", p.max_state_moves},
                      {"mean_splitter_removals", p.mean_splitter_removals},
                      {"max_splitter_removals", p.max_splitter_removals},
                      {"mean_seconds", p.mean_seconds},
                      {"max_seconds", p.max_seconds},
                      {"bound_ratio", p.bound_ratio},
                      {"samples", samples}});
  }
  return json{{"points", points}};
}

int cmd_bench(kmin::BenchOptions options, const std::string& family,
              bool as_json) {
  if (family == "random")
    options.families = {kmin::BenchFamily::Random};
  else if (family == "redundant")
    options.families = {kmin::BenchFamily::Redundant};
  std::sort(options.sizes.begin(), options.sizes.end());
  kmin::BenchReport report = kmin::bench(options);
  if (as_json) {
    std::cout << to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  std::printf("%-10s %10s %14s %14s %10s %8s\n", "family", "n", "max_moves",
              "max_removals", "max_sec", "ratio");
  for (const kmin::BenchPoint& p : report.points)
    std::printf("%-10s %10zu %14llu %14llu %10.4f %8.4f\n",
                std::string(kmin::to_string(p.family)).c_str(),
                p.requested_states,
                static_cast<unsigned long long>(p.max_state_moves),
                static_cast<unsigned long long>(p.max_splitter_removals),
                p.max_seconds, p.bound_ratio);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimize deterministic Kripke structures", "kmin"};
  app.require_subcommand(1);
  int status = kExitOk;

  std::string input, output, other;
  bool stats = false;
  auto* minimize = app.add_subcommand("minimize", "Write the minimal structure");
  minimize->add_option("input", input, "Input .kts file")->required();
  minimize->add_option("-o,--output", output, "Output file (default stdout)");
  minimize->add_flag("--stats", stats,
                     "Print refinement counters as JSON on stderr");
  minimize->callback([&] { status = cmd_minimize(input, output, stats); });

  auto* equiv = app.add_subcommand("equiv", "Decide language equivalence");
  equiv->add_option("a", input, "First .kts file")->required();
  equiv->add_option("b", other, "Second .kts file")->required();
  equiv->callback([&] { status = cmd_equiv(input, other); });

  auto* info = app.add_subcommand("info", "Summarize a structure");
  info->add_option("input", input, "Input .kts file")->required();
  info->callback([&] { status = cmd_info(input); });

  kmin::GenSpec spec;
  auto* gen = app.add_subcommand("gen", "Generate a random structure");
  gen->add_option("--states", spec.states)->required()->check(
      CLI::Range(std::size_t{1}, std::size_t{1} << 31));
  gen->add_option("--bits", spec.bits)->required()->check(
      CLI::PositiveNumber);
  gen->add_option("--alphabet", spec.alphabet)->required()->check(
      CLI::PositiveNumber);
  gen->add_option("--seed", spec.seed)->required();
  gen->add_option("--collide", spec.collide, "Label reuse probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->callback([&] {
    std::cout << kmin::serialize_kts(kmin::gen_random(spec));
  });

  std::size_t copies = 1;
  std::uint64_t seed = 0;
  auto* inflate =
      app.add_subcommand("inflate", "Emit a redundant equivalent structure");
  inflate->add_option("input", input, "Input .kts file")->required();
  inflate->add_option("--copies", copies)->required()->check(
      CLI::PositiveNumber);
  inflate->add_option("--seed", seed)->required();
  inflate->callback([&] {
    kmin::KripkeStructure k = load_trimmed(input);
    std::cout << kmin::serialize_kts(kmin::gen_redundant(k, copies, seed));
  });

  kmin::BenchOptions bench_options;
  std::string family = "both";
  bool as_json = false;
  auto* bench = app.add_subcommand("bench", "Measure refinement work");
  bench->add_option("--sizes", bench_options.sizes, "State counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--bits", bench_options.bits)->check(CLI::PositiveNumber);
  bench->add_option("--alphabet", bench_options.alphabet)
      ->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_options.reps);
  bench->add_option("--seed", bench_options.seed);
  bench->add_option("--copies", bench_options.copies,
                    "Clones per state in the redundant family")
      ->check(CLI::PositiveNumber);
  bench->add_option("--family", family)
      ->check(CLI::IsMember({"random", "redundant", "both"}));
  bench->add_flag("--json", as_json, "Emit the report as JSON");
  bench->callback(
      [&] { status = cmd_bench(bench_options, family, as_json); });

  auto* dot = app.add_subcommand("dot", "Render as Graphviz DOT");
  dot->add_option("input", input, "Input .kts file")->required();
  dot->callback([&] {
    kmin::KtsDocument doc = load(input);
    std::cout << kmin::export_dot(doc.structure, doc.state_names);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "kmin: " << e.what() << '\n';
    return kExitUsage;
  } catch (const kmin::Error& e) {
    std::cerr << "kmin: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
