#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmin/engine.hpp"

namespace kmin {

enum class BenchFamily { Random, Redundant };

std::string_view to_string(BenchFamily family);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t bits = 2;
  std::size_t alphabet = 2;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  std::vector<BenchFamily> families{BenchFamily::Random,
                                    BenchFamily::Redundant};
  /// Clones per base state in the redundant family.
  std::size_t copies = 4;
};

struct BenchSample {
  std::size_t states = 0;
  std::size_t blocks = 0;
  RefinementStats stats;
};

struct BenchPoint {
  BenchFamily family;
  std::size_t requested_states;
  std::size_t bits;
  std::size_t alphabet;
  std::size_t reps;
  std::vector<BenchSample> samples;

  double mean_state_moves = 0;
  std::uint64_t max_state_moves = 0;
  double mean_splitter_removals = 0;
  std::uint64_t max_splitter_removals = 0;
  double mean_seconds = 0;
  double max_seconds = 0;
  /// max over samples of state_moves / (|Σ| n log2 n).
  double bound_ratio = 0;
};

struct BenchReport {
  std::vector<BenchPoint> points;
};

/// |Σ| n log2 n, the scale of the move bound.
double move_scale(std::size_t alphabet, std::size_t states);
/// |Σ| n (ceil(log2 n) + 1), the splitter-removal bound.
std::uint64_t removal_bound(std::size_t alphabet, std::size_t states);

/// Generates `reps` instances per (size, family) and minimizes each.
/// Instances are independent of run order: each one's seed is derived from
/// (seed, family, size index, rep).
BenchReport bench(const BenchOptions& options);

}  // namespace kmin
