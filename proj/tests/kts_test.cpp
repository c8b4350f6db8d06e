#include <gtest/gtest.h>

#include "kmin/generate.hpp"
#include "kmin/kts.hpp"
#include "support/corpus.hpp"
#include "support/kex.hpp"

namespace kmin {
namespace {

using namespace kmin::testing;

ParseError parse_failure(const std::string& text) {
  try {
    parse_kts(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

TEST(ParseKts, MinimalDocument) {
  KripkeStructure k = parse_kts("kripke\nbits 1\nalphabet a\nstate s0 0 init\n"
                                "trans s0 a s0\n");
  EXPECT_EQ(k.num_states(), 1u);
  EXPECT_EQ(k.num_bits(), 1u);
  EXPECT_EQ(k.alphabet(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(k.target(0, 0), 0u);
  EXPECT_TRUE(validate(k).ok());
}

TEST(ParseKts, KexFileMatchesHandBuiltStructure) {
  KripkeStructure expected(6, 3, {"a", "b"});
  const char* labels[] = {"100", "010", "010", "001", "110", "100"};
  const StateId a[] = {q1, q0, q0, q4, q3, q4};
  const StateId b[] = {q2, q3, q3, q5, q1, q4};
  for (StateId q = 0; q < 6; ++q) {
    Label label;
    ASSERT_TRUE(Label::from_string(labels[q], label));
    expected.set_label(q, label);
    expected.set_target(q, sym_a, a[q]);
    expected.set_target(q, sym_b, b[q]);
  }
  KtsDocument doc = parse_kts_document(read_file(data_path("kex.kts")));
  EXPECT_EQ(doc.structure, expected);
  EXPECT_EQ(doc.state_names,
            (std::vector<std::string>{"q0", "q1", "q2", "q3", "q4", "q5"}));
}

TEST(ParseKts, CommentsBlankLinesAndForwardReferences) {
  KripkeStructure k = parse_kts(
      "# leading comment\n\nkripke   # header\nbits 2\nalphabet go\n"
      "state x 01 init\ntrans x go y\n\nstate y 10\ntrans y go x # back\n");
  EXPECT_EQ(k.num_states(), 2u);
  EXPECT_EQ(k.target(0, 0), 1u);
  EXPECT_EQ(k.target(1, 0), 0u);
}

TEST(ParseKts, PartialStructuresParse) {
  KripkeStructure k =
      parse_kts("kripke\nbits 1\nalphabet a b\nstate s 1 init\ntrans s a s\n");
  EXPECT_TRUE(validate(k).has(IssueKind::NonTotal));
}

TEST(ParseKts, Errors) {
  const std::string head = "kripke\nbits 1\nalphabet a\n";

  ParseError e = parse_failure(head + "state s0 0 init\ntrans s0 a s1\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::UnknownState);
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 12u);

  e = parse_failure(head + "state s0 0 init\nstate s0 1\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::DuplicateState);
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 7u);

  e = parse_failure(head + "state s0 0 init\ntrans s0 z s0\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::UnknownSymbol);
  EXPECT_EQ(e.column(), 10u);

  e = parse_failure(head + "state s0 0 init\ntrans s0 a s0\ntrans s0 a s0\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::DuplicateTransition);
  EXPECT_EQ(e.line(), 6u);

  e = parse_failure(head + "state s0 2 init\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::BadBitstring);
  EXPECT_EQ(e.column(), 10u);
  EXPECT_EQ(parse_failure(head + "state s0 01 init\n").kind(),
            ParseErrorKind::BadBitstring);

  EXPECT_EQ(parse_failure("").kind(), ParseErrorKind::MissingHeader);
  EXPECT_EQ(parse_failure("bits 1\n").kind(), ParseErrorKind::MissingHeader);
  e = parse_failure("kripke\nalphabet a\nstate s 0 init\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::MissingHeader);
  EXPECT_EQ(e.line(), 3u);

  EXPECT_EQ(parse_failure(head + "state s0 0\n").kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure(head + "state s0 0 init\nstate s1 0 init\n").kind(),
            ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure(head + "state s0 0 init\nfoo\n").kind(),
            ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure("kripke\nbits 0\n").kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure("kripke\nbits 1\nalphabet a a\n").kind(),
            ParseErrorKind::Syntax);
  EXPECT_EQ(parse_failure(head + "state s0 0 init\ntrans s0 a\n").kind(),
            ParseErrorKind::Syntax);
}

TEST(SerializeKts, CanonicalLayout) {
  KripkeStructure k = parse_kts("kripke\nbits 1\nalphabet a\nstate s0 0 init\n"
                                "trans s0 a s0\n");
  const std::string once = serialize_kts(k);
  EXPECT_EQ(once,
            "kripke\nbits 1\nalphabet a\nstate s0 0 init\ntrans s0 a s0\n");
  EXPECT_EQ(serialize_kts(parse_kts(once)), once);
}

TEST(SerializeKts, KexRoundTripKeepsNames) {
  KtsDocument doc = parse_kts_document(read_file(data_path("kex.kts")));
  std::string text = serialize_kts(doc.structure, doc.state_names);
  KtsDocument back = parse_kts_document(text);
  EXPECT_EQ(back.structure, doc.structure);
  EXPECT_EQ(back.state_names, doc.state_names);
}

TEST(SerializeKts, RoundTripOnCorpus) {
  for (const CorpusEntry& e : make_corpus()) {
    std::string text = serialize_kts(e.structure);
    KripkeStructure back = parse_kts(text);
    ASSERT_EQ(back, e.structure) << e.name;
    ASSERT_EQ(serialize_kts(back), text) << e.name;
  }
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1))
    ++n;
  return n;
}

TEST(ExportDot, SingleState) {
  KripkeStructure k(1, 2, {"a", "b", "c"});
  for (SymbolId s = 0; s < 3; ++s) k.set_target(0, s, 0);
  std::string dot = export_dot(k);
  EXPECT_EQ(count(dot, " -> "), 3u);
  EXPECT_EQ(count(dot, "\"s0\" -> \"s0\""), 3u);
  EXPECT_EQ(count(dot, "[label=\"s0\\n00\""), 1u);
  EXPECT_EQ(count(dot, "doublecircle"), 1u);
}

TEST(ExportDot, KexCounts) {
  KtsDocument doc = parse_kts_document(read_file(data_path("kex.kts")));
  std::string dot = export_dot(doc.structure, doc.state_names);
  EXPECT_EQ(count(dot, " -> "), 12u);
  EXPECT_EQ(count(dot, "\\n"), 6u);
  EXPECT_EQ(count(dot, "\"q0\" [label=\"q0\\n100\", shape=doublecircle]"), 1u);
  EXPECT_EQ(dot, export_dot(doc.structure, doc.state_names));
}

}  // namespace
}  // namespace kmin
