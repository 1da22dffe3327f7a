#include <gtest/gtest.h>

#include "entrench/formula.hpp"
#include "entrench/naming.hpp"

using namespace entrench;

namespace {

universe_ptr pbf() { return make_universe({"p", "b", "f"}); }
universe_ptr pq() { return make_universe({"p", "q"}); }

}  // namespace

TEST(Parse, Implication) {
  auto f = parse_formula("p -> ~f", pbf());
  EXPECT_EQ(f.type(), formula::kind::implication);
  EXPECT_EQ(f.right().type(), formula::kind::negation);
}

TEST(Parse, ConstantAndAtom) {
  auto f = parse_formula("true & p", pbf());
  EXPECT_EQ(f.type(), formula::kind::conjunction);
  EXPECT_EQ(f.left().type(), formula::kind::top);
  EXPECT_EQ(f.right().type(), formula::kind::atom);
}

TEST(Parse, ImplicationIsRightAssociative) {
  auto u = make_universe({"p", "q", "r"});
  auto f = parse_formula("p -> q -> r", u);
  ASSERT_EQ(f.type(), formula::kind::implication);
  EXPECT_EQ(f.left().type(), formula::kind::atom);
  EXPECT_EQ(f.right().type(), formula::kind::implication);
}

TEST(Parse, Precedence) {
  auto u = make_universe({"p", "q", "r"});
  EXPECT_EQ(parse_formula("p | q & r", u), parse_formula("p | (q & r)", u));
  EXPECT_EQ(parse_formula("~p & q", u), parse_formula("(~p) & q", u));
  EXPECT_EQ(parse_formula("p & q -> r | p", u), parse_formula("(p & q) -> (r | p)", u));
  EXPECT_EQ(parse_formula("!p", u), parse_formula("~p", u));
}

TEST(Parse, Errors) {
  auto u = pq();
  EXPECT_THROW(parse_formula("p &", u), parse_error);
  EXPECT_THROW(parse_formula("(p", u), parse_error);
  EXPECT_THROW(parse_formula("p q", u), parse_error);
  EXPECT_THROW(parse_formula("", u), parse_error);
  EXPECT_THROW(parse_formula("r", u), unknown_atom);
}

TEST(Print, RoundTrip) {
  auto u = make_universe({"p", "q", "r"});
  for (const char* text : {"p -> q -> r", "(p -> q) -> r", "~(p | q) & r", "p | q & r", "~~p", "true", "false"}) {
    auto f = parse_formula(text, u);
    EXPECT_EQ(parse_formula(to_string(f), u), f) << text;
  }
  EXPECT_EQ(to_string(parse_formula("(p -> q) -> r", u)), "(p -> q) -> r");
  EXPECT_EQ(to_string(parse_formula("p -> (q -> r)", u)), "p -> q -> r");
}

TEST(Classify, TruthTables) {
  auto u = pq();
  EXPECT_EQ(parse_class("p & ~p", u).mask(), 0u);
  EXPECT_EQ(parse_class("true", u).model_count(), 4u);
  const auto imp = parse_class("p -> q", u);
  EXPECT_EQ(imp.model_count(), 3u);
  EXPECT_FALSE(entails(parse_class("p & ~q", u), imp));
}

TEST(Classify, EquivalentFormulasShareClass) {
  auto u = pq();
  EXPECT_EQ(parse_class("p -> q", u), parse_class("~p | q", u));
  EXPECT_EQ(parse_class("~(p & q)", u), parse_class("~p | ~q", u));
}

TEST(Naming, EveryClassNamedByAFormulaDenotingIt) {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, "pqr"[i]));
    auto u = make_universe(atoms);
    class_namer name(u);
    for (class_id c = 0; c < u->class_count(); ++c) EXPECT_EQ(parse_class(name(c), u).mask(), c);
  }
}

TEST(Naming, ShortNames) {
  auto u = pq();
  class_namer name(u);
  EXPECT_EQ(name(parse_class("p", u)), "p");
  EXPECT_EQ(name(parse_class("true", u)), "true");
  EXPECT_EQ(name(parse_class("false", u)), "false");
  EXPECT_EQ(name(parse_class("~p | ~q", u)), "p -> ~q");
  EXPECT_EQ(name(parse_class("~(p -> q)", u)), "p & ~q");
}

TEST(Naming, FourAtomsFallsBackToMinterms) {
  auto u = make_universe({"p", "q", "r", "s"});
  class_namer name(u);
  const auto c = parse_class("p & q | r", u);
  EXPECT_EQ(parse_class(name(c), u), c);
}
