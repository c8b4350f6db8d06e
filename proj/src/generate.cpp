#include "kmin/generate.hpp"

#include <string>

namespace kmin {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string default_symbol_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index);
}

KripkeStructure gen_random(const GenSpec& spec) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < spec.alphabet; ++i)
    alphabet.push_back(default_symbol_name(i));
  KripkeStructure k(spec.states, spec.bits, std::move(alphabet));
  std::mt19937_64 rng(spec.seed);

  for (StateId q = 0; q < spec.states; ++q) {
    if (q > 0 && uniform_unit(rng) < spec.collide) {
      k.set_label(q, k.label(static_cast<StateId>(uniform_below(rng, q))));
      continue;
    }
    Label label(spec.bits);
    for (std::size_t b = 0; b < spec.bits; ++b) label.set_bit(b, rng() >> 63);
    k.set_label(q, std::move(label));
  }
  for (StateId q = 0; q < spec.states; ++q)
    for (SymbolId s = 0; s < spec.alphabet; ++s)
      k.set_target(q, s, static_cast<StateId>(uniform_below(rng, spec.states)));
  k.set_initial(0);
  return k;
}

KripkeStructure gen_redundant(const KripkeStructure& k, std::size_t copies,
                              std::uint64_t seed) {
  const std::size_t n = k.num_states();
  KripkeStructure inflated(n * copies, k.num_bits(), k.alphabet());
  std::mt19937_64 rng(seed);
  for (StateId q = 0; q < n; ++q)
    for (std::size_t c = 0; c < copies; ++c) {
      const auto clone = static_cast<StateId>(q * copies + c);
      inflated.set_label(clone, k.label(q));
      for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
        const StateId t = k.target(q, s);
        inflated.set_target(
            clone, s,
            static_cast<StateId>(t * copies + uniform_below(rng, copies)));
      }
    }
  inflated.set_initial(static_cast<StateId>(k.initial() * copies));
  return trim_unreachable(inflated);
}

}  // namespace kmin
