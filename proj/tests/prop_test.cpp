#include <gtest/gtest.h>

#include "entrench/class_set.hpp"
#include "entrench/formula.hpp"
#include "entrench/prop.hpp"

using namespace entrench;

namespace {

universe_ptr pq() { return make_universe({"p", "q"}); }

}  // namespace

TEST(Universe, RejectsTooManyAtoms) { EXPECT_THROW(make_universe({"a", "b", "c", "d", "e"}), error); }

TEST(Universe, RejectsDuplicatesAndKeywords) {
  EXPECT_THROW(make_universe({"p", "p"}), error);
  EXPECT_THROW(make_universe({"true"}), error);
  EXPECT_THROW(make_universe({"P"}), error);
}

TEST(Universe, CountsClasses) {
  EXPECT_EQ(make_universe({})->class_count(), 2u);
  EXPECT_EQ(pq()->class_count(), 16u);
  EXPECT_EQ(make_universe({"p", "q", "r", "s"})->class_count(), 65536u);
}

TEST(Entails, Basic) {
  auto u = pq();
  EXPECT_TRUE(entails(parse_class("p & q", u), parse_class("q", u)));
  EXPECT_TRUE(entails(parse_class("p", u), parse_class("p | q", u)));
  EXPECT_FALSE(entails(parse_class("p | q", u), parse_class("p", u)));
}

TEST(Entails, MismatchedUniverses) {
  auto a = make_universe({"p", "q"});
  auto b = make_universe({"p", "r"});
  EXPECT_THROW(entails(parse_class("p", a), parse_class("p", b)), universe_mismatch);
  // equal atom lists are the same universe even as distinct objects
  EXPECT_NO_THROW(entails(parse_class("p", a), parse_class("p", pq())));
}

TEST(Connectives, Identities) {
  auto u = pq();
  EXPECT_TRUE(negate(semantic_class::top(u)).is_bottom());
  for (class_id m = 0; m < 16; ++m) {
    semantic_class a(u, m);
    EXPECT_TRUE(implies(a, a).is_top());
  }
}

TEST(Connectives, DeductionTheorem) {
  auto u = pq();
  for (class_id x = 0; x < 16; ++x)
    for (class_id a = 0; a < 16; ++a)
      for (class_id b = 0; b < 16; ++b) {
        semantic_class X(u, x), A(u, a), B(u, b);
        EXPECT_EQ(entails(conjoin(X, A), B), entails(X, implies(A, B)));
      }
}

TEST(Theory, Consequences) {
  auto p = make_universe({"p"});
  auto top = consequences(theory(semantic_class::top(p)));
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(top[0].is_top());
  EXPECT_EQ(consequences(theory(semantic_class::bottom(p))).size(), 4u);

  // Cn(p) over {p,q}: count supersets of the mask among all 16 masks
  auto u = pq();
  const auto pm = parse_class("p", u).mask();
  std::size_t expected = 0;
  for (class_id m = 0; m < 16; ++m) expected += (pm & ~m) == 0;
  EXPECT_EQ(expected, 4u);  // p, p | q, p | ~q, true
  EXPECT_EQ(consequences(theory(parse_class("p", u))).size(), expected);
}

TEST(Theory, Inclusion) {
  auto u = pq();
  theory p(parse_class("p", u)), pq_(parse_class("p & q", u));
  EXPECT_TRUE(p.subset_of(pq_));
  EXPECT_FALSE(pq_.subset_of(p));
  EXPECT_FALSE(theory(semantic_class::bottom(u)).consistent());
}

TEST(Lattice, UpAndDown) {
  const auto& lat = class_lattice::of(2);
  EXPECT_EQ(lat.size(), 16u);
  for (class_id a = 0; a < 16; ++a)
    for (class_id b = 0; b < 16; ++b) {
      EXPECT_EQ(lat.up(a).contains(b), (a & ~b) == 0);
      EXPECT_EQ(lat.down(a).contains(b), (b & ~a) == 0);
    }
  EXPECT_EQ(lat.all().size(), 16u);
  EXPECT_EQ(lat.negate(0), lat.top());
}

TEST(ClassSet, Operations) {
  class_set s;
  EXPECT_TRUE(s.empty());
  EXPECT_TRUE(s.add(3));
  EXPECT_FALSE(s.add(3));
  s.insert(200);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.to_vector(), (std::vector<class_id>{3, 200}));
  class_set t = class_set::first(10);
  EXPECT_EQ(t.size(), 10u);
  EXPECT_TRUE((s & t).subset_of(t));
  EXPECT_TRUE(s.intersects(t));
  EXPECT_EQ((s - t).to_vector(), (std::vector<class_id>{200}));
  s.erase(200);
  EXPECT_TRUE(s.subset_of(t));
}
