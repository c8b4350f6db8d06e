#pragma once

#include <optional>
#include <utility>

#include "kmin/kripke.hpp"
#include "kmin/partition.hpp"

namespace kmin::oracle {

// Straightforward quadratic computations of the Nerode congruence. They share
// no code with PartitionEngine and exist to cross-check it.

/// Pairwise table filling: mark pairs with different labels, then propagate
/// marks backwards over the transitions until nothing changes.
BlockPartition nerode_table_filling(const KripkeStructure& k);

/// Classical round-based refinement by successor-block signatures.
BlockPartition moore_refinement(const KripkeStructure& k);

struct DistinguishingResult {
  bool equivalent = true;
  Word word;
  /// Labels reached from p and q after `word`; set iff !equivalent.
  std::optional<std::pair<Label, Label>> labels;
};

/// Shortest word separating p and q by label, found by BFS over state pairs.
/// Among words of equal length the alphabetically first one is returned.
DistinguishingResult distinguishing_word(const KripkeStructure& k, StateId p,
                                         StateId q);

}  // namespace kmin::oracle
