#include "kmin/kripke.hpp"

#include <algorithm>
#include <sstream>

#include "kmin/errors.hpp"

namespace kmin {

KripkeStructure::KripkeStructure(std::size_t num_states, std::size_t num_bits,
                                 std::vector<std::string> alphabet)
    : num_bits_(num_bits),
      alphabet_(std::move(alphabet)),
      labels_(num_states, Label(num_bits)),
      transitions_(num_states * alphabet_.size(), kNoState) {}

std::optional<SymbolId> KripkeStructure::symbol_id(
    std::string_view name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<SymbolId>(it - alphabet_.begin());
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::NonTotal: return "NonTotal";
    case IssueKind::NonDeterministic: return "NonDeterministic";
    case IssueKind::BadLabelWidth: return "BadLabelWidth";
    case IssueKind::BadStateRef: return "BadStateRef";
    case IssueKind::Unreachable: return "Unreachable";
  }
  return "?";
}

bool ValidationReport::well_formed() const {
  return std::all_of(issues.begin(), issues.end(), [](const Issue& i) {
    return i.kind == IssueKind::Unreachable;
  });
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const Issue& i) { return i.kind == kind; });
}

std::string ValidationReport::describe(const KripkeStructure& k) const {
  std::ostringstream out;
  for (const Issue& issue : issues) {
    out << to_string(issue.kind);
    if (issue.state != kNoState) out << " at state " << issue.state;
    if (issue.symbol && *issue.symbol < k.alphabet_size())
      out << " symbol " << k.symbol(*issue.symbol);
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<bool> reachable_mask(const KripkeStructure& k) {
  std::vector<bool> seen(k.num_states(), false);
  if (k.initial() >= k.num_states()) return seen;
  std::vector<StateId> queue{k.initial()};
  seen[k.initial()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId q = queue[head];
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(q, s);
      if (t < k.num_states() && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

ValidationReport validate(const KripkeStructure& k) {
  ValidationReport report;
  const std::size_t n = k.num_states();
  if (n == 0 || k.initial() >= n)
    report.issues.push_back({IssueKind::BadStateRef, k.initial(), {}});
  for (StateId q = 0; q < n; ++q) {
    if (k.label(q).width() != k.num_bits())
      report.issues.push_back({IssueKind::BadLabelWidth, q, {}});
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(q, s);
      if (t == kNoState)
        report.issues.push_back({IssueKind::NonTotal, q, s});
      else if (t >= n)
        report.issues.push_back({IssueKind::BadStateRef, q, s});
    }
  }
  std::vector<bool> seen = reachable_mask(k);
  for (StateId q = 0; q < n; ++q)
    if (!seen[q]) report.issues.push_back({IssueKind::Unreachable, q, {}});
  return report;
}

void require_valid_reachable(const KripkeStructure& k) {
  ValidationReport report = validate(k);
  if (!report.ok())
    throw InvalidStructureError("structure is not a valid reachable "
                                "deterministic Kripke structure:\n" +
                                report.describe(k));
}

std::vector<StateId> reachable_states(const KripkeStructure& k) {
  std::vector<StateId> order;
  std::vector<bool> seen(k.num_states(), false);
  if (k.initial() >= k.num_states()) return order;
  order.push_back(k.initial());
  seen[k.initial()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(order[head], s);
      if (t < k.num_states() && !seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

KripkeStructure trim_unreachable(const KripkeStructure& k) {
  std::vector<bool> seen = reachable_mask(k);
  std::vector<StateId> renumber(k.num_states(), kNoState);
  StateId next = 0;
  for (StateId q = 0; q < k.num_states(); ++q)
    if (seen[q]) renumber[q] = next++;

  KripkeStructure out(next, k.num_bits(), k.alphabet());
  for (StateId q = 0; q < k.num_states(); ++q) {
    if (!seen[q]) continue;
    out.set_label(renumber[q], k.label(q));
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(q, s);
      out.set_target(renumber[q], s, t < k.num_states() ? renumber[t] : t);
    }
  }
  if (k.initial() < k.num_states()) out.set_initial(renumber[k.initial()]);
  return out;
}

StateId delta_star(const KripkeStructure& k, StateId q,
                   std::span<const SymbolId> word) {
  for (SymbolId s : word) {
    if (s >= k.alphabet_size())
      throw UnknownSymbolError("#" + std::to_string(s));
    q = k.target(q, s);
  }
  return q;
}

const Label& lambda_star(const KripkeStructure& k, StateId q,
                         std::span<const SymbolId> word) {
  return k.label(delta_star(k, q, word));
}

Word to_word(const KripkeStructure& k, std::span<const std::string> symbols) {
  Word word;
  word.reserve(symbols.size());
  for (const std::string& name : symbols) {
    auto id = k.symbol_id(name);
    if (!id) throw UnknownSymbolError(name);
    word.push_back(*id);
  }
  return word;
}

std::string word_to_string(const KripkeStructure& k,
                           std::span<const SymbolId> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(' ');
    out += k.symbol(word[i]);
  }
  return out;
}

StateId delta_star(const KripkeStructure& k, StateId q,
                   std::span<const std::string> word) {
  return delta_star(k, q, std::span<const SymbolId>(to_word(k, word)));
}

const Label& lambda_star(const KripkeStructure& k, StateId q,
                         std::span<const std::string> word) {
  return k.label(delta_star(k, q, word));
}

}  // namespace kmin
