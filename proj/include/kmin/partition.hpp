#pragma once

#include <cstdint>
#include <vector>

#include "kmin/kripke.hpp"

namespace kmin {

using BlockId = std::uint32_t;

/// A partition of the states 0..n-1, stored as a block index per state.
/// Comparison is by block set: two partitions are equal when they group the
/// same states together, whatever their block numbering.
class BlockPartition {
 public:
  BlockPartition() = default;
  explicit BlockPartition(std::vector<BlockId> block_of);

  std::size_t num_states() const { return block_of_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  BlockId block_of(StateId q) const { return block_of_[q]; }
  const std::vector<BlockId>& block_index() const { return block_of_; }

  /// Blocks as sorted member lists, ordered by their smallest member.
  std::vector<std::vector<StateId>> blocks() const;

  /// Renumbers blocks by first occurrence in state order.
  BlockPartition normalized() const;

  bool same_block(StateId p, StateId q) const {
    return block_of_[p] == block_of_[q];
  }

  friend bool operator==(const BlockPartition& a, const BlockPartition& b);

 private:
  std::vector<BlockId> block_of_;
  std::size_t num_blocks_ = 0;
};

/// The refinement order on block sets: every block of `finer` is contained
/// in some block of `coarser`.
bool refines(const BlockPartition& finer, const BlockPartition& coarser);

}  // namespace kmin
