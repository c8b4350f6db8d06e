#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/label.hpp"

namespace kmin {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// A deterministic Kripke structure over a finite alphabet with k-bit state
/// labels. States are dense ids 0..n-1; the transition table holds one target
/// per (state, symbol), or kNoState while the structure is still incomplete.
///
/// Values are built through the setters and treated as immutable afterwards.
class KripkeStructure {
 public:
  KripkeStructure() = default;
  /// n states, all labelled with k zero bits, no transitions, initial state 0.
  KripkeStructure(std::size_t num_states, std::size_t num_bits,
                  std::vector<std::string> alphabet);

  std::size_t num_states() const { return labels_.size(); }
  std::size_t num_bits() const { return num_bits_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& symbol(SymbolId s) const { return alphabet_[s]; }
  std::optional<SymbolId> symbol_id(std::string_view name) const;

  StateId initial() const { return initial_; }
  void set_initial(StateId q) { initial_ = q; }

  const Label& label(StateId q) const { return labels_[q]; }
  void set_label(StateId q, Label label) { labels_[q] = std::move(label); }

  StateId target(StateId q, SymbolId s) const {
    return transitions_[static_cast<std::size_t>(q) * alphabet_.size() + s];
  }
  void set_target(StateId q, SymbolId s, StateId to) {
    transitions_[static_cast<std::size_t>(q) * alphabet_.size() + s] = to;
  }

  friend bool operator==(const KripkeStructure&,
                         const KripkeStructure&) = default;

 private:
  std::size_t num_bits_ = 0;
  std::vector<std::string> alphabet_;
  StateId initial_ = 0;
  std::vector<Label> labels_;
  std::vector<StateId> transitions_;
};

enum class IssueKind {
  NonTotal,
  NonDeterministic,
  BadLabelWidth,
  BadStateRef,
  Unreachable,
};

std::string_view to_string(IssueKind kind);

struct Issue {
  IssueKind kind;
  StateId state = kNoState;
  /// Set for transition-level issues.
  std::optional<SymbolId> symbol;

  friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
  std::vector<Issue> issues;

  /// No issues at all.
  bool ok() const { return issues.empty(); }
  /// No issues other than Unreachable.
  bool well_formed() const;
  bool has(IssueKind kind) const;
  std::string describe(const KripkeStructure& k) const;
};

/// Reports every violated structural invariant. Unreachable states are found
/// by a breadth-first search from the initial state over all symbols.
ValidationReport validate(const KripkeStructure& k);

/// Throws InvalidStructureError unless validate(k) is fully ok.
void require_valid_reachable(const KripkeStructure& k);

/// States reachable from the initial state, in BFS discovery order.
std::vector<StateId> reachable_states(const KripkeStructure& k);

/// Restricts k to the states reachable from its initial state. Surviving
/// states keep their relative order and are renumbered densely.
KripkeStructure trim_unreachable(const KripkeStructure& k);

StateId delta_star(const KripkeStructure& k, StateId q,
                   std::span<const SymbolId> word);
const Label& lambda_star(const KripkeStructure& k, StateId q,
                         std::span<const SymbolId> word);

/// Maps symbol names to ids; throws UnknownSymbolError.
Word to_word(const KripkeStructure& k, std::span<const std::string> symbols);
std::string word_to_string(const KripkeStructure& k,
                           std::span<const SymbolId> word);

StateId delta_star(const KripkeStructure& k, StateId q,
                   std::span<const std::string> word);
const Label& lambda_star(const KripkeStructure& k, StateId q,
                         std::span<const std::string> word);

}  // namespace kmin
