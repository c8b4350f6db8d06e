#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/errors.hpp"
#include "kmin/kripke.hpp"

namespace kmin {

enum class ParseErrorKind {
  Syntax,
  DuplicateState,
  UnknownState,
  UnknownSymbol,
  DuplicateTransition,
  MissingHeader,
  BadBitstring,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  /// 1-based position of the offending token.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// A parsed .kts document: the structure plus the state names, indexed by
/// state id in declaration order.
struct KtsDocument {
  KripkeStructure structure;
  std::vector<std::string> state_names;
};

// .kts is line oriented; '#' starts a comment and blank lines are ignored.
//
//   kripke
//   bits <k>
//   alphabet <sym>...
//   state <name> <bitstring> [init]
//   trans <src> <sym> <dst>
//
// Header lines come before the first state. Transitions may refer to states
// declared later. Missing transitions are accepted; validate() reports them.

KtsDocument parse_kts_document(std::string_view text);
KripkeStructure parse_kts(std::string_view text);

/// Canonical text: header, states in id order, then transitions by
/// (state, symbol). States are named `s<id>` unless names are given.
std::string serialize_kts(const KripkeStructure& k,
                          std::span<const std::string> names = {});

/// Graphviz rendering: one node per state showing its label, the initial
/// state drawn as a double circle, one edge per transition.
std::string export_dot(const KripkeStructure& k,
                       std::span<const std::string> names = {});

}  // namespace kmin
