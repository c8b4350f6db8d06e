#include "kmin/engine.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <utility>

#include "kmin/errors.hpp"

namespace kmin {

PartitionEngine::PartitionEngine(const KripkeStructure& k)
    : k_(&k), n_(k.num_states()), sigma_(k.alphabet_size()) {
  require_valid_reachable(k);

  inv_offset_.assign(sigma_, std::vector<std::uint32_t>(n_ + 1, 0));
  inv_source_.assign(sigma_, std::vector<StateId>(n_));
  for (SymbolId s = 0; s < sigma_; ++s) {
    auto& offset = inv_offset_[s];
    for (StateId r = 0; r < n_; ++r) ++offset[k.target(r, s) + 1];
    for (std::size_t q = 0; q < n_; ++q) offset[q + 1] += offset[q];
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (StateId r = 0; r < n_; ++r)
      inv_source_[s][fill[k.target(r, s)]++] = r;
  }

  elems_.resize(n_);
  pos_.resize(n_);
  block_of_.assign(n_, 0);
  first_.reserve(n_);
  end_.reserve(n_);
  marked_.reserve(n_);
}

std::span<const StateId> PartitionEngine::predecessors(SymbolId symbol,
                                                       StateId q) const {
  const auto& offset = inv_offset_[symbol];
  return std::span<const StateId>(inv_source_[symbol]).subspan(
      offset[q], offset[q + 1] - offset[q]);
}

void PartitionEngine::initial_partition() {
  std::unordered_map<Label, BlockId> by_label;
  std::vector<std::uint32_t> sizes;
  for (StateId q = 0; q < n_; ++q) {
    auto [it, fresh] =
        by_label.try_emplace(k_->label(q), static_cast<BlockId>(sizes.size()));
    if (fresh) sizes.push_back(0);
    block_of_[q] = it->second;
    ++sizes[it->second];
  }
  num_blocks_ = sizes.size();
  first_.assign(num_blocks_, 0);
  end_.assign(num_blocks_, 0);
  marked_.assign(num_blocks_, 0);
  std::uint32_t at = 0;
  for (BlockId b = 0; b < num_blocks_; ++b) {
    first_[b] = end_[b] = at;
    at += sizes[b];
  }
  for (StateId q = 0; q < n_; ++q) {
    std::uint32_t p = end_[block_of_[q]]++;
    elems_[p] = q;
    pos_[q] = p;
  }
}

void PartitionEngine::predecessor_subsets() {
  sub_elems_.assign(sigma_, {});
  sub_pos_.assign(sigma_, std::vector<std::uint32_t>(n_, kAbsent));
  sub_first_.assign(sigma_, std::vector<std::uint32_t>(num_blocks_, 0));
  sub_end_.assign(sigma_, std::vector<std::uint32_t>(num_blocks_, 0));
  for (SymbolId s = 0; s < sigma_; ++s) {
    auto& sub = sub_elems_[s];
    const auto& offset = inv_offset_[s];
    sub.reserve(n_);
    // elems_ is grouped by block, so each B(s,b) comes out contiguous.
    for (BlockId b = 0; b < num_blocks_; ++b) {
      sub_first_[s][b] = static_cast<std::uint32_t>(sub.size());
      for (std::uint32_t p = first_[b]; p < end_[b]; ++p) {
        StateId q = elems_[p];
        if (offset[q + 1] == offset[q]) continue;
        sub_pos_[s][q] = static_cast<std::uint32_t>(sub.size());
        sub.push_back(q);
      }
      sub_end_[s][b] = static_cast<std::uint32_t>(sub.size());
    }
    sub_first_[s].reserve(n_);
    sub_end_[s].reserve(n_);
  }
}

void PartitionEngine::init_waiting() {
  wait_stack_.assign(sigma_, {});
  in_wait_.assign(sigma_, std::vector<char>(n_, 0));
  wait_bound_.assign(sigma_, std::vector<std::size_t>(n_, kUnbounded));
  for (SymbolId s = 0; s < sigma_; ++s) {
    // Pushed in reverse so LIFO pops block 0 first.
    for (BlockId b = static_cast<BlockId>(num_blocks_); b-- > 0;)
      if (pred_subset_size(s, b) > 0) enqueue(s, b, kUnbounded);
  }
}

void PartitionEngine::enqueue(SymbolId symbol, BlockId b, std::size_t bound) {
  if (in_wait_[symbol][b] || pred_subset_size(symbol, b) == 0) return;
  in_wait_[symbol][b] = 1;
  wait_bound_[symbol][b] = bound;
  wait_stack_[symbol].push_back(b);
}

void PartitionEngine::count_removal(SymbolId symbol, BlockId b) {
  in_wait_[symbol][b] = 0;
  ++stats_.splitter_removals;
  if (pred_subset_size(symbol, b) > wait_bound_[symbol][b])
    ++stats_.smaller_half_violations;
}

bool PartitionEngine::remove_waiting(SymbolId symbol, BlockId block) {
  if (!is_waiting(symbol, block)) return false;
  auto& stack = wait_stack_[symbol];
  stack.erase(std::find(stack.begin(), stack.end(), block));
  count_removal(symbol, block);
  return true;
}

std::optional<BlockId> PartitionEngine::take_splitter(SymbolId symbol) {
  auto& stack = wait_stack_[symbol];
  if (stack.empty()) return std::nullopt;
  BlockId b = stack.back();
  stack.pop_back();
  count_removal(symbol, b);
  return b;
}

void PartitionEngine::process_splitter(SymbolId symbol, BlockId splitter) {
  touched_.clear();
  const auto& sub = sub_elems_[symbol];
  for (std::uint32_t p = sub_first_[symbol][splitter];
       p < sub_end_[symbol][splitter]; ++p) {
    for (StateId r : predecessors(symbol, sub[p])) {
      BlockId b = block_of_[r];
      if (marked_[b] == 0) touched_.push_back(b);
      std::uint32_t dst = first_[b] + marked_[b]++;
      StateId other = elems_[dst];
      std::swap(elems_[pos_[r]], elems_[dst]);
      pos_[other] = pos_[r];
      pos_[r] = dst;
      ++stats_.state_moves;
    }
  }
  // All of B'_j is known before any block is split.
  for (BlockId j : touched_) {
    if (marked_[j] == end_[j] - first_[j]) {
      marked_[j] = 0;
      continue;
    }
    split(symbol, splitter, j);
  }
}

void PartitionEngine::split(SymbolId symbol, BlockId splitter, BlockId j) {
  const std::uint32_t marked = marked_[j];
  marked_[j] = 0;
  const std::uint32_t lo = first_[j], mid = lo + marked, hi = end_[j];
  const BlockId created = static_cast<BlockId>(num_blocks_++);

  // The smaller part moves to the new block; on ties B_j - B'_j does.
  std::uint32_t new_first, new_end;
  if (hi - mid <= mid - lo) {
    new_first = mid;
    new_end = hi;
    end_[j] = mid;
  } else {
    new_first = lo;
    new_end = mid;
    first_[j] = mid;
  }
  first_.push_back(new_first);
  end_.push_back(new_end);
  marked_.push_back(0);
  for (std::uint32_t p = new_first; p < new_end; ++p) {
    block_of_[elems_[p]] = created;
    ++stats_.state_moves;
  }

  for (SymbolId t = 0; t < sigma_; ++t) {
    auto& sub = sub_elems_[t];
    auto& spos = sub_pos_[t];
    std::uint32_t boundary = sub_end_[t][j];
    for (std::uint32_t p = new_first; p < new_end; ++p) {
      StateId q = elems_[p];
      if (spos[q] == kAbsent) continue;
      --boundary;
      StateId other = sub[boundary];
      std::swap(sub[spos[q]], sub[boundary]);
      spos[other] = spos[q];
      spos[q] = boundary;
      ++stats_.state_moves;
    }
    sub_first_[t].push_back(boundary);
    sub_end_[t].push_back(sub_end_[t][j]);
    sub_end_[t][j] = boundary;

    const std::size_t kept_size = pred_subset_size(t, j);
    const std::size_t new_size = pred_subset_size(t, created);
    const std::size_t half = (kept_size + new_size) / 2;
    if (in_wait_[t][j]) {
      enqueue(t, created, wait_bound_[t][j]);
    } else if (kept_size == 0) {
      // The empty half is the smaller one: nothing to enqueue.
    } else if (kept_size <= new_size) {
      enqueue(t, j, half);
    } else {
      enqueue(t, created, half);
    }
  }

  ++stats_.splits;
  if (observer_) {
    observer_(SplitEvent{symbol, splitter, j, created, end_[j] - first_[j],
                         new_end - new_first, num_blocks_});
  }
}

void PartitionEngine::run() {
  auto start = std::chrono::steady_clock::now();
  initial_partition();
  if (num_blocks_ < n_) {
    predecessor_subsets();
    init_waiting();
    bool splittable = true;
    while (splittable) {
      ++stats_.loop_iterations;
      for (SymbolId s = 0; s < sigma_; ++s)
        while (auto i = take_splitter(s)) process_splitter(s, *i);
      splittable = false;
      for (SymbolId s = 0; s < sigma_; ++s)
        if (!wait_stack_[s].empty()) splittable = true;
    }
  }
  stats_.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
}

std::vector<StateId> PartitionEngine::block(BlockId b) const {
  std::vector<StateId> out(elems_.begin() + first_[b],
                           elems_.begin() + end_[b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateId> PartitionEngine::pred_subset(SymbolId symbol,
                                                  BlockId b) const {
  const auto& sub = sub_elems_[symbol];
  std::vector<StateId> out(sub.begin() + sub_first_[symbol][b],
                           sub.begin() + sub_end_[symbol][b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockId> PartitionEngine::waiting(SymbolId symbol) const {
  std::vector<BlockId> out(wait_stack_[symbol]);
  std::sort(out.begin(), out.end());
  return out;
}

bool PartitionEngine::well_formed() const {
  std::vector<char> seen(n_, 0);
  for (BlockId b = 0; b < num_blocks_; ++b) {
    if (first_[b] >= end_[b]) return false;
    for (std::uint32_t p = first_[b]; p < end_[b]; ++p) {
      StateId q = elems_[p];
      if (seen[q] || pos_[q] != p || block_of_[q] != b) return false;
      seen[q] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  if (sub_elems_.empty()) return true;

  for (SymbolId s = 0; s < sigma_; ++s) {
    std::size_t covered = 0;
    for (BlockId b = 0; b < num_blocks_; ++b) {
      for (std::uint32_t p = sub_first_[s][b]; p < sub_end_[s][b]; ++p) {
        StateId q = sub_elems_[s][p];
        if (block_of_[q] != b || sub_pos_[s][q] != p) return false;
        if (predecessors(s, q).empty()) return false;
        ++covered;
      }
    }
    // Every state with a predecessor must sit in its block's subset.
    std::size_t with_pred = 0;
    for (StateId q = 0; q < n_; ++q)
      if (!predecessors(s, q).empty()) ++with_pred;
    if (covered != with_pred) return false;
  }
  return true;
}

MinimizeResult minimize_partition(const KripkeStructure& k) {
  PartitionEngine engine(k);
  engine.run();
  return {engine.partition(), engine.stats()};
}

}  // namespace kmin
