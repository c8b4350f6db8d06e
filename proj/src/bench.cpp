#include "kmin/bench.hpp"

#include <algorithm>
#include <cmath>

#include "kmin/generate.hpp"

namespace kmin {

std::string_view to_string(BenchFamily family) {
  return family == BenchFamily::Random ? "random" : "redundant";
}

double move_scale(std::size_t alphabet, std::size_t states) {
  const double n = static_cast<double>(states);
  return static_cast<double>(alphabet) * n * std::log2(n);
}

std::uint64_t removal_bound(std::size_t alphabet, std::size_t states) {
  std::uint64_t ceil_log = 0;
  while ((std::uint64_t{1} << ceil_log) < states) ++ceil_log;
  return alphabet * states * (ceil_log + 1);
}

namespace {

KripkeStructure instance(const BenchOptions& options, BenchFamily family,
                         std::size_t size, std::uint64_t seed) {
  if (family == BenchFamily::Random) {
    return trim_unreachable(
        gen_random({size, options.bits, options.alphabet, seed, 0.0}));
  }
  const std::size_t base_states = std::max<std::size_t>(1, size / options.copies);
  KripkeStructure base = trim_unreachable(
      gen_random({base_states, options.bits, options.alphabet, seed, 0.0}));
  return gen_redundant(base, options.copies, mix_seed(seed));
}

}  // namespace

BenchReport bench(const BenchOptions& options) {
  BenchReport report;
  if (options.reps == 0) return report;
  for (BenchFamily family : options.families) {
    for (std::size_t si = 0; si < options.sizes.size(); ++si) {
      BenchPoint point{family, options.sizes[si], options.bits,
                       options.alphabet, options.reps, {}};
      for (std::size_t rep = 0; rep < options.reps; ++rep) {
        const std::uint64_t seed = mix_seed(
            options.seed ^ mix_seed((static_cast<std::uint64_t>(family) << 48) ^
                                    (si << 24) ^ rep));
        KripkeStructure k = instance(options, family, options.sizes[si], seed);
        MinimizeResult result = minimize_partition(k);
        point.samples.push_back(
            {k.num_states(), result.partition.num_blocks(), result.stats});
      }
      for (const BenchSample& s : point.samples) {
        const double reps = static_cast<double>(options.reps);
        point.mean_state_moves += s.stats.state_moves / reps;
        point.mean_splitter_removals += s.stats.splitter_removals / reps;
        point.mean_seconds += s.stats.seconds / reps;
        point.max_state_moves =
            std::max(point.max_state_moves, s.stats.state_moves);
        point.max_splitter_removals =
            std::max(point.max_splitter_removals, s.stats.splitter_removals);
        point.max_seconds = std::max(point.max_seconds, s.stats.seconds);
        if (s.states > 1)
          point.bound_ratio =
              std::max(point.bound_ratio,
                       s.stats.state_moves / move_scale(options.alphabet, s.states));
      }
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

}  // namespace kmin
