#pragma once

#include <optional>
#include <utility>

#include "kmin/kripke.hpp"
#include "kmin/partition.hpp"

namespace kmin {

/// K/P: one state per block. Throws NotACongruenceError when a block mixes
/// labels or its members disagree on a successor block.
KripkeStructure build_quotient(const KripkeStructure& k,
                               const BlockPartition& partition);

/// Trims, computes the Nerode congruence and returns the quotient.
KripkeStructure minimize(const KripkeStructure& k);

struct Counterexample {
  Word word;
  Label left;
  Label right;
};

struct EquivalenceVerdict {
  bool equivalent = true;
  std::optional<Counterexample> counterexample;
};

/// Decides whether the initial states of a and b have the same right
/// language by BFS over the synchronized product. A negative verdict carries
/// a shortest counterexample. Throws AlphabetMismatchError or
/// LabelWidthMismatchError when the structures are not comparable.
EquivalenceVerdict language_equivalent(const KripkeStructure& a,
                                       const KripkeStructure& b);

/// True iff no two distinct states are Nerode-equivalent. Requires a valid
/// structure without unreachable states.
bool is_minimal(const KripkeStructure& k);

struct CanonicalForm {
  KripkeStructure structure;
  /// Unreachable states dropped before renumbering.
  std::size_t trimmed = 0;
};

/// Renumbers the reachable states in BFS discovery order from the initial
/// state, exploring symbols in alphabet order. Two reachable deterministic
/// structures are isomorphic iff their canonical forms compare equal.
CanonicalForm canonical_form(const KripkeStructure& k);

}  // namespace kmin
