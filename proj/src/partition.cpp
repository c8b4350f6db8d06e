#include "kmin/partition.hpp"

#include <algorithm>
#include <limits>

namespace kmin {

BlockPartition::BlockPartition(std::vector<BlockId> block_of)
    : block_of_(std::move(block_of)) {
  std::vector<bool> used;
  for (BlockId b : block_of_) {
    if (b >= used.size()) used.resize(b + 1, false);
    if (!used[b]) {
      used[b] = true;
      ++num_blocks_;
    }
  }
}

BlockPartition BlockPartition::normalized() const {
  constexpr BlockId kUnset = std::numeric_limits<BlockId>::max();
  std::vector<BlockId> rename;
  std::vector<BlockId> out(block_of_.size());
  BlockId next = 0;
  for (std::size_t q = 0; q < block_of_.size(); ++q) {
    BlockId b = block_of_[q];
    if (b >= rename.size()) rename.resize(b + 1, kUnset);
    if (rename[b] == kUnset) rename[b] = next++;
    out[q] = rename[b];
  }
  return BlockPartition(std::move(out));
}

std::vector<std::vector<StateId>> BlockPartition::blocks() const {
  BlockPartition norm = normalized();
  std::vector<std::vector<StateId>> out(norm.num_blocks());
  for (StateId q = 0; q < norm.num_states(); ++q)
    out[norm.block_of(q)].push_back(q);
  return out;
}

bool operator==(const BlockPartition& a, const BlockPartition& b) {
  return a.normalized().block_of_ == b.normalized().block_of_;
}

bool refines(const BlockPartition& finer, const BlockPartition& coarser) {
  if (finer.num_states() != coarser.num_states()) return false;
  constexpr BlockId kUnset = std::numeric_limits<BlockId>::max();
  std::vector<BlockId> image;
  for (StateId q = 0; q < finer.num_states(); ++q) {
    BlockId f = finer.block_of(q);
    if (f >= image.size()) image.resize(f + 1, kUnset);
    if (image[f] == kUnset)
      image[f] = coarser.block_of(q);
    else if (image[f] != coarser.block_of(q))
      return false;
  }
  return true;
}

}  // namespace kmin
