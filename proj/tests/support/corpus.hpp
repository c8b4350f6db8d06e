#pragma once

#include <string>
#include <vector>

#include "kmin/generate.hpp"
#include "kmin/kripke.hpp"

namespace kmin::testing {

struct CorpusEntry {
  std::string name;
  KripkeStructure structure;  // trimmed: every state reachable
};

/// Deterministic test corpus: `random_count` random structures with
/// n in [1,50], bits in {1,2,3,8}, |Σ| in {1,2,4} and mixed collision rates,
/// plus `redundant_count` clone-inflated structures of at most 48 states.
inline std::vector<CorpusEntry> make_corpus(std::size_t random_count = 1000,
                                            std::size_t redundant_count = 200) {
  static constexpr std::size_t kBits[] = {1, 2, 3, 8};
  static constexpr std::size_t kAlphabet[] = {1, 2, 4};
  static constexpr double kCollide[] = {0.0, 0.5, 0.8, 0.95, 1.0};
  std::vector<CorpusEntry> corpus;
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::uint64_t h = mix_seed(i);
    GenSpec spec{1 + h % 50, kBits[(h >> 8) % 4], kAlphabet[(h >> 16) % 3],
                 mix_seed(h), kCollide[(h >> 24) % 5]};
    corpus.push_back({"random#" + std::to_string(i),
                      trim_unreachable(gen_random(spec))});
  }
  for (std::size_t i = 0; i < redundant_count; ++i) {
    const std::uint64_t h = mix_seed(0x5eed0000 + i);
    GenSpec spec{1 + h % 12, kBits[(h >> 8) % 3], kAlphabet[(h >> 16) % 3],
                 mix_seed(h), kCollide[(h >> 24) % 5]};
    KripkeStructure base = trim_unreachable(gen_random(spec));
    const std::size_t copies = 2 + (h >> 32) % 3;
    corpus.push_back({"redundant#" + std::to_string(i),
                      gen_redundant(base, copies, mix_seed(h + 1))});
  }
  return corpus;
}

}  // namespace kmin::testing
