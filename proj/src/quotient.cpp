#include "kmin/quotient.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "kmin/engine.hpp"
#include "kmin/errors.hpp"

namespace kmin {

KripkeStructure build_quotient(const KripkeStructure& k,
                               const BlockPartition& partition) {
  if (partition.num_states() != k.num_states())
    throw NotACongruenceError("partition does not cover the structure");
  const BlockPartition p = partition.normalized();
  const std::size_t blocks = p.num_blocks();

  KripkeStructure out(blocks, k.num_bits(), k.alphabet());
  std::vector<StateId> representative(blocks, kNoState);
  for (StateId q = 0; q < k.num_states(); ++q) {
    const BlockId b = p.block_of(q);
    StateId& rep = representative[b];
    if (rep == kNoState) {
      rep = q;
      out.set_label(b, k.label(q));
      for (SymbolId s = 0; s < k.alphabet_size(); ++s)
        out.set_target(b, s, p.block_of(k.target(q, s)));
      continue;
    }
    if (k.label(q) != k.label(rep))
      throw NotACongruenceError("states " + std::to_string(rep) + " and " +
                                std::to_string(q) +
                                " share a block but differ in label");
    for (SymbolId s = 0; s < k.alphabet_size(); ++s)
      if (p.block_of(k.target(q, s)) != out.target(b, s))
        throw NotACongruenceError(
            "states " + std::to_string(rep) + " and " + std::to_string(q) +
            " share a block but their " + k.symbol(s) +
            "-successors do not");
  }
  out.set_initial(p.block_of(k.initial()));
  return out;
}

KripkeStructure minimize(const KripkeStructure& k) {
  KripkeStructure reachable = trim_unreachable(k);
  return build_quotient(reachable, minimize_partition(reachable).partition);
}

EquivalenceVerdict language_equivalent(const KripkeStructure& a,
                                       const KripkeStructure& b) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatchError("structures have different alphabets");
  if (a.num_bits() != b.num_bits())
    throw LabelWidthMismatchError("structures have different label widths");

  for (const KripkeStructure* k : {&a, &b}) {
    ValidationReport report = validate(*k);
    if (!report.well_formed())
      throw InvalidStructureError("cannot compare malformed structure:\n" +
                                  report.describe(*k));
  }

  const std::uint64_t nb = b.num_states();
  auto key = [nb](StateId p, StateId q) { return std::uint64_t{p} * nb + q; };
  struct Visit {
    std::uint64_t parent;
    SymbolId symbol;
  };
  // Only pairs reachable from the initial pair are stored.
  std::unordered_map<std::uint64_t, Visit> visit;

  const std::uint64_t root = key(a.initial(), b.initial());
  visit.emplace(root, Visit{root, 0});
  std::deque<std::uint64_t> queue{root};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    const StateId p = static_cast<StateId>(cur / nb);
    const StateId q = static_cast<StateId>(cur % nb);
    if (a.label(p) != b.label(q)) {
      Counterexample cex{{}, a.label(p), b.label(q)};
      for (std::uint64_t at = cur; at != root; at = visit.at(at).parent)
        cex.word.push_back(visit.at(at).symbol);
      std::reverse(cex.word.begin(), cex.word.end());
      return {false, std::move(cex)};
    }
    for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
      const std::uint64_t next = key(a.target(p, s), b.target(q, s));
      if (visit.try_emplace(next, Visit{cur, s}).second) queue.push_back(next);
    }
  }
  return {true, std::nullopt};
}

bool is_minimal(const KripkeStructure& k) {
  return minimize_partition(k).partition.num_blocks() == k.num_states();
}

CanonicalForm canonical_form(const KripkeStructure& k) {
  const std::vector<StateId> order = reachable_states(k);
  std::vector<StateId> renumber(k.num_states(), kNoState);
  for (std::size_t i = 0; i < order.size(); ++i)
    renumber[order[i]] = static_cast<StateId>(i);

  CanonicalForm form{KripkeStructure(order.size(), k.num_bits(), k.alphabet()),
                     k.num_states() - order.size()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId q = order[i];
    form.structure.set_label(static_cast<StateId>(i), k.label(q));
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      const StateId t = k.target(q, s);
      form.structure.set_target(static_cast<StateId>(i), s,
                                t < k.num_states() ? renumber[t] : kNoState);
    }
  }
  form.structure.set_initial(0);
  return form;
}

}  // namespace kmin
