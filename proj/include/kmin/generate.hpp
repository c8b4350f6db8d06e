#pragma once

#include <cstdint>
#include <random>

#include "kmin/kripke.hpp"

namespace kmin {

struct GenSpec {
  std::size_t states = 1;
  std::size_t bits = 1;
  std::size_t alphabet = 1;
  std::uint64_t seed = 0;
  /// Probability that a state copies the label of an earlier state instead
  /// of drawing fresh random bits.
  double collide = 0.0;
};

/// Random total deterministic structure with initial state 0.
///
/// Draws come from std::mt19937_64(seed): first the labels of states
/// 0..n-1 in order (state q > 0 copies the label of a uniformly chosen
/// earlier state with probability `collide`, otherwise takes `bits` fresh
/// bits, one top bit per draw), then the targets of every (state, symbol)
/// pair in row-major order, uniform over all states. Symbols are named
/// a, b, ..., z, then x26, x27, ...
KripkeStructure gen_random(const GenSpec& spec);

/// Language-equivalent inflation of k: every state gets `copies` clones and
/// each transition of each clone goes to a seed-chosen clone of its target.
/// The result is trimmed to the clones reachable from clone 0 of k's initial
/// state.
KripkeStructure gen_redundant(const KripkeStructure& k, std::size_t copies,
                              std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection on raw 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);
/// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);

std::string default_symbol_name(std::size_t index);

}  // namespace kmin
