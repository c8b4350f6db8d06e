#include "kmin/oracles.hpp"

#include <deque>
#include <map>
#include <set>
#include <vector>

namespace kmin::oracle {

BlockPartition nerode_table_filling(const KripkeStructure& k) {
  const std::size_t n = k.num_states();
  std::vector<std::vector<bool>> marked(n, std::vector<bool>(n, false));
  std::deque<std::pair<StateId, StateId>> pending;
  for (StateId p = 0; p < n; ++p)
    for (StateId q = p + 1; q < n; ++q)
      if (k.label(p) != k.label(q)) {
        marked[p][q] = marked[q][p] = true;
        pending.emplace_back(p, q);
      }

  // preds[s][q] = { r | δ(r,s) = q }
  std::vector<std::vector<std::vector<StateId>>> preds(
      k.alphabet_size(), std::vector<std::vector<StateId>>(n));
  for (StateId r = 0; r < n; ++r)
    for (SymbolId s = 0; s < k.alphabet_size(); ++s)
      preds[s][k.target(r, s)].push_back(r);

  while (!pending.empty()) {
    auto [p, q] = pending.front();
    pending.pop_front();
    for (SymbolId s = 0; s < k.alphabet_size(); ++s)
      for (StateId a : preds[s][p])
        for (StateId b : preds[s][q])
          if (a != b && !marked[a][b]) {
            marked[a][b] = marked[b][a] = true;
            pending.emplace_back(a, b);
          }
  }

  std::vector<BlockId> block(n, static_cast<BlockId>(-1));
  BlockId next = 0;
  for (StateId p = 0; p < n; ++p) {
    if (block[p] != static_cast<BlockId>(-1)) continue;
    block[p] = next;
    for (StateId q = p + 1; q < n; ++q)
      if (!marked[p][q]) block[q] = next;
    ++next;
  }
  return BlockPartition(std::move(block));
}

BlockPartition moore_refinement(const KripkeStructure& k) {
  const std::size_t n = k.num_states();
  std::vector<BlockId> block(n);
  {
    std::map<std::string, BlockId> ids;
    for (StateId q = 0; q < n; ++q)
      block[q] = ids.try_emplace(k.label(q).to_string(),
                                 static_cast<BlockId>(ids.size()))
                     .first->second;
  }
  std::size_t count = std::set<BlockId>(block.begin(), block.end()).size();
  for (;;) {
    std::map<std::vector<BlockId>, BlockId> ids;
    std::vector<BlockId> next(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<BlockId> signature{block[q]};
      for (SymbolId s = 0; s < k.alphabet_size(); ++s)
        signature.push_back(block[k.target(q, s)]);
      next[q] = ids.try_emplace(signature, static_cast<BlockId>(ids.size()))
                    .first->second;
    }
    block = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return BlockPartition(std::move(block));
}

DistinguishingResult distinguishing_word(const KripkeStructure& k, StateId p,
                                         StateId q) {
  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, std::pair<Pair, SymbolId>> parent;
  std::deque<Pair> queue{{p, q}};
  std::set<Pair> seen{{p, q}};
  while (!queue.empty()) {
    Pair cur = queue.front();
    queue.pop_front();
    if (k.label(cur.first) != k.label(cur.second)) {
      DistinguishingResult result;
      result.equivalent = false;
      result.labels.emplace(k.label(cur.first), k.label(cur.second));
      for (Pair at = cur; at != Pair{p, q}; at = parent.at(at).first)
        result.word.insert(result.word.begin(), parent.at(at).second);
      return result;
    }
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      Pair succ{k.target(cur.first, s), k.target(cur.second, s)};
      if (seen.insert(succ).second) {
        parent[succ] = {cur, s};
        queue.push_back(succ);
      }
    }
  }
  return {};
}

}  // namespace kmin::oracle
