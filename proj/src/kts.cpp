#include "kmin/kts.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace kmin {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::DuplicateState: return "DuplicateState";
    case ParseErrorKind::UnknownState: return "UnknownState";
    case ParseErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ParseErrorKind::DuplicateTransition: return "DuplicateTransition";
    case ParseErrorKind::MissingHeader: return "MissingHeader";
    case ParseErrorKind::BadBitstring: return "BadBitstring";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start),
                                            start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (text.empty()) break;
  }
  return lines;
}

[[noreturn]] void fail(ParseErrorKind kind, const Line& line, const Token& tok,
                       const std::string& message) {
  throw ParseError(kind, line.number, tok.column, message);
}

void expect_arity(const Line& line, std::size_t min, std::size_t max,
                  const char* usage) {
  std::size_t n = line.tokens.size();
  if (n < min || n > max) {
    const Token& at = n > max ? line.tokens[max] : line.tokens.back();
    fail(ParseErrorKind::Syntax, line, at, std::string("expected '") + usage +
                                               "'");
  }
}

}  // namespace

KtsDocument parse_kts_document(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front().text != "kripke") {
    if (lines.empty()) throw ParseError(ParseErrorKind::MissingHeader, 1, 1,
                                        "expected 'kripke'");
    fail(ParseErrorKind::MissingHeader, lines.front(),
         lines.front().tokens.front(), "expected 'kripke'");
  }
  if (lines.front().tokens.size() != 1)
    fail(ParseErrorKind::Syntax, lines.front(), lines.front().tokens[1],
         "unexpected token after 'kripke'");

  std::optional<std::size_t> bits;
  std::optional<std::vector<std::string>> alphabet;
  std::map<std::string, StateId, std::less<>> state_ids;
  std::vector<std::string> names;
  std::vector<Label> labels;
  std::optional<StateId> initial;
  std::vector<const Line*> transitions;

  auto require_header = [&](const Line& line) {
    if (!bits || !alphabet)
      fail(ParseErrorKind::MissingHeader, line, line.tokens.front(),
           !bits ? "'bits' must precede states and transitions"
                 : "'alphabet' must precede states and transitions");
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const Token& head = line.tokens.front();
    if (head.text == "bits") {
      expect_arity(line, 2, 2, "bits <k>");
      if (bits) fail(ParseErrorKind::Syntax, line, head, "duplicate 'bits'");
      if (!names.empty())
        fail(ParseErrorKind::Syntax, line, head, "'bits' after first state");
      std::size_t value = 0;
      std::string_view v = line.tokens[1].text;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
      if (ec != std::errc{} || ptr != v.data() + v.size() || value == 0)
        fail(ParseErrorKind::Syntax, line, line.tokens[1],
             "bit count must be a positive integer");
      bits = value;
    } else if (head.text == "alphabet") {
      expect_arity(line, 2, static_cast<std::size_t>(-1), "alphabet <sym>...");
      if (alphabet)
        fail(ParseErrorKind::Syntax, line, head, "duplicate 'alphabet'");
      if (!names.empty())
        fail(ParseErrorKind::Syntax, line, head,
             "'alphabet' after first state");
      std::vector<std::string> symbols;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        std::string sym(line.tokens[t].text);
        for (const auto& seen : symbols)
          if (seen == sym)
            fail(ParseErrorKind::Syntax, line, line.tokens[t],
                 "duplicate symbol '" + sym + "'");
        symbols.push_back(std::move(sym));
      }
      alphabet = std::move(symbols);
    } else if (head.text == "state") {
      require_header(line);
      expect_arity(line, 3, 4, "state <name> <bitstring> [init]");
      const Token& name = line.tokens[1];
      if (state_ids.count(name.text))
        fail(ParseErrorKind::DuplicateState, line, name,
             "state '" + std::string(name.text) + "' already declared");
      Label label;
      if (!Label::from_string(line.tokens[2].text, label))
        fail(ParseErrorKind::BadBitstring, line, line.tokens[2],
             "label must consist of '0' and '1'");
      if (label.width() != *bits)
        fail(ParseErrorKind::BadBitstring, line, line.tokens[2],
             "label has " + std::to_string(label.width()) + " bits, expected " +
                 std::to_string(*bits));
      const StateId id = static_cast<StateId>(names.size());
      if (line.tokens.size() == 4) {
        if (line.tokens[3].text != "init")
          fail(ParseErrorKind::Syntax, line, line.tokens[3],
               "expected 'init'");
        if (initial)
          fail(ParseErrorKind::Syntax, line, line.tokens[3],
               "more than one initial state");
        initial = id;
      }
      state_ids.emplace(std::string(name.text), id);
      names.emplace_back(name.text);
      labels.push_back(std::move(label));
    } else if (head.text == "trans") {
      require_header(line);
      expect_arity(line, 4, 4, "trans <src> <sym> <dst>");
      transitions.push_back(&line);
    } else if (head.text == "kripke") {
      fail(ParseErrorKind::Syntax, line, head, "duplicate 'kripke'");
    } else {
      fail(ParseErrorKind::Syntax, line, head,
           "unknown directive '" + std::string(head.text) + "'");
    }
  }

  const Line& last = lines.back();
  if (!bits || !alphabet)
    fail(ParseErrorKind::MissingHeader, last, last.tokens.front(),
         !bits ? "missing 'bits'" : "missing 'alphabet'");
  if (names.empty())
    fail(ParseErrorKind::Syntax, last, last.tokens.front(),
         "no states declared");
  if (!initial)
    fail(ParseErrorKind::Syntax, last, last.tokens.front(),
         "no state is marked 'init'");

  KtsDocument doc{KripkeStructure(names.size(), *bits, *alphabet),
                  std::move(names)};
  KripkeStructure& k = doc.structure;
  k.set_initial(*initial);
  for (StateId q = 0; q < labels.size(); ++q) k.set_label(q, labels[q]);

  auto lookup_state = [&](const Line& line, const Token& tok) {
    auto it = state_ids.find(tok.text);
    if (it == state_ids.end())
      fail(ParseErrorKind::UnknownState, line, tok,
           "undeclared state '" + std::string(tok.text) + "'");
    return it->second;
  };
  for (const Line* line : transitions) {
    const StateId src = lookup_state(*line, line->tokens[1]);
    auto sym = k.symbol_id(line->tokens[2].text);
    if (!sym)
      fail(ParseErrorKind::UnknownSymbol, *line, line->tokens[2],
           "symbol '" + std::string(line->tokens[2].text) +
               "' not in alphabet");
    const StateId dst = lookup_state(*line, line->tokens[3]);
    if (k.target(src, *sym) != kNoState)
      fail(ParseErrorKind::DuplicateTransition, *line, line->tokens[0],
           "second transition for (" + std::string(line->tokens[1].text) +
               ", " + std::string(line->tokens[2].text) + ")");
    k.set_target(src, *sym, dst);
  }
  return doc;
}

KripkeStructure parse_kts(std::string_view text) {
  return parse_kts_document(text).structure;
}

namespace {

std::string state_name(std::span<const std::string> names, StateId q) {
  return q < names.size() ? names[q] : "s" + std::to_string(q);
}

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string dot_quote(const std::string& text) {
  return '"' + dot_escape(text) + '"';
}

}  // namespace

std::string serialize_kts(const KripkeStructure& k,
                          std::span<const std::string> names) {
  std::ostringstream out;
  out << "kripke\nbits " << k.num_bits() << "\nalphabet";
  for (const auto& sym : k.alphabet()) out << ' ' << sym;
  out << '\n';
  for (StateId q = 0; q < k.num_states(); ++q) {
    out << "state " << state_name(names, q) << ' ' << k.label(q).to_string();
    if (q == k.initial()) out << " init";
    out << '\n';
  }
  for (StateId q = 0; q < k.num_states(); ++q)
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(q, s);
      if (t == kNoState) continue;
      out << "trans " << state_name(names, q) << ' ' << k.symbol(s) << ' '
          << state_name(names, t) << '\n';
    }
  return out.str();
}

std::string export_dot(const KripkeStructure& k,
                       std::span<const std::string> names) {
  std::ostringstream out;
  out << "digraph kripke {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < k.num_states(); ++q) {
    const std::string name = state_name(names, q);
    out << "  " << dot_quote(name) << " [label="
        << '"' << dot_escape(name) << "\\n" << k.label(q).to_string() << '"';
    if (q == k.initial()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (StateId q = 0; q < k.num_states(); ++q)
    for (SymbolId s = 0; s < k.alphabet_size(); ++s) {
      StateId t = k.target(q, s);
      if (t == kNoState) continue;
      out << "  " << dot_quote(state_name(names, q)) << " -> "
          << dot_quote(state_name(names, t))
          << " [label=" << dot_quote(k.symbol(s)) << "];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace kmin
