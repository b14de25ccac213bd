#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace taba;

TEST(ParseValueList, Examples) {
  EXPECT_EQ(parse_value_list("[1; 2; 3]"), (ValueList<long long>{1, 2, 3}));
  EXPECT_EQ(parse_value_list("[]"), ValueList<long long>{});
  EXPECT_EQ(parse_value_list("[1,  2]"), (ValueList<long long>{1, 2}));
  EXPECT_EQ(parse_value_list("  [ -4 ;5]  "), (ValueList<long long>{-4, 5}));
}

TEST(ParseValueList, ReportsThePosition) {
  for (const char* text : {"[1; 2", "1; 2]", "[1;; 2]", "[1] x", "[a]", "[99999999999999999999]"})
    EXPECT_THROW(parse_value_list(text), ParseError) << text;
  try {
    parse_value_list("[1; 2; x]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(ParseTerm, Examples) {
  EXPECT_EQ(parse_term<NamedRep>("(lamn \"x1\" (appn (expn \"e\") (varn \"x1\")))"),
            make_eta_redexn("e", 1));
  EXPECT_EQ(parse_term<LevelRep>("expl"), exp_l());
  EXPECT_EQ(parse_term<IndexRep>("(vari 0)"), var_i(0));
  EXPECT_EQ(parse_term("(laml (appl expl (varl 0)))", Representation::level),
            AnyTerm(make_eta_redexl(exp_l(), 1)));
}

TEST(ParseTerm, RoundTripsRendering) {
  taba::testing::Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    TermN n = rng.term<NamedRep>(10);
    TermL l = rng.term<LevelRep>(10);
    TermI x = rng.term<IndexRep>(10);
    ASSERT_EQ(parse_term<NamedRep>(render(n)), n) << render(n);
    ASSERT_EQ(parse_term<LevelRep>(render(l)), l) << render(l);
    ASSERT_EQ(parse_term<IndexRep>(render(x)), x) << render(x);
  }
}

TEST(ParseTerm, Errors) {
  EXPECT_THROW(parse_term<NamedRep>("(lamx \"x\" (expn \"e\"))"), ParseError);
  EXPECT_THROW(parse_term<IndexRep>("(laml (appl expl (varl 0)))"), ParseError);
  EXPECT_THROW(parse_term<LevelRep>("(appl expl)"), ParseError);
  EXPECT_THROW(parse_term<LevelRep>("(varl)"), ParseError);
  EXPECT_THROW(parse_term<NamedRep>("(varn \"\")"), ParseError);
  EXPECT_THROW(parse_term<NamedRep>("expn"), ParseError);
  EXPECT_THROW(parse_term<IndexRep>("expi expi"), ParseError);
}

TEST(ParseTree, ExamplesAndErrors) {
  EXPECT_EQ(parse_tree("(node (leaf 1) (node (leaf 2) (leaf 3)))"),
            BinTree::node(BinTree::leaf(1), BinTree::node(BinTree::leaf(2), BinTree::leaf(3))));
  EXPECT_EQ(render(parse_tree(" (leaf 4) ")), "(leaf 4)");
  EXPECT_THROW(parse_tree("(node (leaf 1))"), ParseError);
  EXPECT_THROW(parse_tree("(twig 1)"), ParseError);
  EXPECT_THROW(parse_tree("(leaf -1)"), ParseError);
}

}  // namespace
