#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kmin/kripke.hpp"
#include "kmin/partition.hpp"

namespace kmin {

struct RefinementStats {
  std::uint64_t splits = 0;
  /// States relocated inside the refinement loop: marked into B'_j,
  /// relabelled into a new block, or moved between predecessor subsets.
  std::uint64_t state_moves = 0;
  std::uint64_t splitter_removals = 0;
  std::uint64_t loop_iterations = 0;
  /// Removals whose splitter was larger than half the subset it was split
  /// from. Always zero unless the waiting-set rule is broken.
  std::uint64_t smaller_half_violations = 0;
  double seconds = 0.0;
};

struct SplitEvent {
  SymbolId symbol;
  BlockId splitter;
  /// Block that keeps its number and the freshly numbered block.
  BlockId kept;
  BlockId created;
  std::size_t kept_size;
  std::size_t created_size;
  std::size_t block_count;
};

/// Partition refinement computing the Nerode congruence of a deterministic
/// Kripke structure in O(|Σ| n log n).
///
/// Blocks and predecessor subsets B(σ,i) live as contiguous ranges of
/// permutation arrays, so marking, splitting and moving a state are O(1).
/// On a split the part with fewer states gets the new block number, which
/// keeps relabelling proportional to the smaller half.
///
/// run() executes the whole algorithm. The individual phases are public so
/// tests can drive the loop step by step; they must be called in order:
/// initial_partition, predecessor_subsets, init_waiting, then any sequence of
/// remove_waiting/take_splitter followed by process_splitter.
class PartitionEngine {
 public:
  /// Throws InvalidStructureError unless k is total, well-formed and has no
  /// unreachable states. `k` must outlive the engine.
  explicit PartitionEngine(const KripkeStructure& k);

  /// One block per distinct label, numbered by first occurrence in state order.
  void initial_partition();
  void predecessor_subsets();
  /// W(σ) = { i | B(σ,i) non-empty }.
  void init_waiting();

  /// Deletes block i from W(σ). Returns false when it was not waiting.
  bool remove_waiting(SymbolId symbol, BlockId block);
  /// Pops the most recently added member of W(σ), if any.
  std::optional<BlockId> take_splitter(SymbolId symbol);

  /// Splits every block j having states whose σ-successor lies in B(σ,i)
  /// into those states and the rest, then updates all predecessor subsets
  /// and waiting sets.
  void process_splitter(SymbolId symbol, BlockId splitter);

  void run();

  std::size_t block_count() const { return num_blocks_; }
  std::vector<StateId> block(BlockId b) const;
  std::vector<StateId> pred_subset(SymbolId symbol, BlockId b) const;
  std::size_t pred_subset_size(SymbolId symbol, BlockId b) const {
    return sub_end_[symbol][b] - sub_first_[symbol][b];
  }
  bool is_waiting(SymbolId symbol, BlockId b) const {
    return in_wait_[symbol][b] != 0;
  }
  std::vector<BlockId> waiting(SymbolId symbol) const;
  std::span<const StateId> predecessors(SymbolId symbol, StateId q) const;
  BlockId block_of(StateId q) const { return block_of_[q]; }

  BlockPartition partition() const { return BlockPartition(block_of_); }
  const RefinementStats& stats() const { return stats_; }

  void on_split(std::function<void(const SplitEvent&)> observer) {
    observer_ = std::move(observer);
  }

  /// Full structural check of blocks and predecessor subsets; O(|Σ| n).
  bool well_formed() const;

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  void split(SymbolId symbol, BlockId splitter, BlockId j);
  void enqueue(SymbolId symbol, BlockId b, std::size_t bound);
  void count_removal(SymbolId symbol, BlockId b);

  const KripkeStructure* k_;
  std::size_t n_;
  std::size_t sigma_;

  // Inverse transitions in CSR form, one table per symbol.
  std::vector<std::vector<std::uint32_t>> inv_offset_;
  std::vector<std::vector<StateId>> inv_source_;

  // Blocks: ranges [first, end) of elems_; marked_ counts the prefix of
  // states already moved into B'_j by the current splitter.
  std::vector<StateId> elems_;
  std::vector<std::uint32_t> pos_;
  std::vector<BlockId> block_of_;
  std::vector<std::uint32_t> first_, end_, marked_;
  std::size_t num_blocks_ = 0;

  // Predecessor subsets B(σ,b): per symbol, ranges of sub_elems_[σ].
  std::vector<std::vector<StateId>> sub_elems_;
  std::vector<std::vector<std::uint32_t>> sub_pos_;
  std::vector<std::vector<std::uint32_t>> sub_first_, sub_end_;

  // Waiting sets: LIFO stack with membership flags, and the size bound each
  // waiting entry must respect when removed.
  std::vector<std::vector<BlockId>> wait_stack_;
  std::vector<std::vector<char>> in_wait_;
  std::vector<std::vector<std::size_t>> wait_bound_;

  std::vector<BlockId> touched_;
  RefinementStats stats_;
  std::function<void(const SplitEvent&)> observer_;
};

struct MinimizeResult {
  BlockPartition partition;
  RefinementStats stats;
};

/// Nerode congruence of k. Requires a valid structure without unreachable
/// states (InvalidStructureError otherwise).
MinimizeResult minimize_partition(const KripkeStructure& k);

}  // namespace kmin
