#include <gtest/gtest.h>

#include <algorithm>

#include "entrench/formula.hpp"
#include "entrench/maxiconsistent.hpp"
#include "entrench/random.hpp"
#include "oracle.hpp"

using namespace entrench;

namespace {

universe_ptr pq() { return standard_universe(2); }

entrenchment_relation close(const universe_ptr& u, std::vector<std::pair<const char*, const char*>> s,
                            const rule_profile& p = rule_profile::frame()) {
  std::vector<std::pair<semantic_class, semantic_class>> pairs;
  for (auto [a, b] : s) pairs.push_back({parse_class(a, u), parse_class(b, u)});
  return close_entrenchment(u, std::span<const std::pair<semantic_class, semantic_class>>(pairs), p);
}

std::vector<class_id> generators(const std::vector<theory>& ts) {
  std::vector<class_id> out;
  for (const auto& t : ts) out.push_back(t.generator().mask());
  return out;
}

std::vector<class_id> oracle_generators(const oracle::lang& L, const std::vector<oracle::set>& ts) {
  std::vector<class_id> out;
  for (const auto& t : ts) out.push_back(oracle::generator(L, t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Coherent, DominanceAtTop) {
  const auto u = pq();
  const auto c = make_coherent_set(dominance_relation(u), semantic_class::top(u));
  EXPECT_EQ(c.members.size(), 15u);
  EXPECT_FALSE(c.members.contains(0));
}

TEST(Coherent, EmptyWhenTopBelowBottom) {
  const auto u = pq();
  const auto rel = close(u, {{"true", "false"}});
  EXPECT_TRUE(make_coherent_set(rel, semantic_class::top(u)).empty());
  EXPECT_TRUE(extensions(rel, semantic_class::top(u), false).empty());
  EXPECT_TRUE(extensions(rel, semantic_class::top(u), true).empty());
  // the empty family: everything is inferred, nothing credulously
  EXPECT_TRUE(infers(rel, semantic_class::top(u), semantic_class::bottom(u), false));
  EXPECT_FALSE(credulous_infers(rel, semantic_class::top(u), semantic_class::top(u), false));
}

TEST(Coherent, DominanceAtP) {
  const auto u = pq();
  const auto p = parse_class("p", u);
  const auto not_p = negate(p).mask();
  const auto c = make_coherent_set(dominance_relation(u), p);
  for (class_id b = 0; b < 16; ++b) EXPECT_EQ(c.members.contains(b), (b & ~not_p) != 0) << b;
}

TEST(Conditionalize, TopTheory) {
  const auto u = pq();
  const auto out = conditionalize(theory(semantic_class::top(u)), parse_class("p", u));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].is_top());
}

TEST(Conditionalize, CnWithPremise) {
  const auto u = pq();
  for (class_id g = 0; g < 16; ++g)
    for (class_id a = 0; a < 16; ++a) {
      const theory U(semantic_class(u, g));
      const semantic_class alpha(u, a);
      class_id meet = u->top_mask();
      for (const auto& c : conditionalize(U, alpha)) meet &= c.mask();
      EXPECT_EQ(meet & a, g & a);
      EXPECT_EQ(conditional_generator(U, alpha).mask(), (u->top_mask() & ~a) | g);
    }
}

TEST(Conditionalize, InjectiveOnTheoriesContainingThePremise) {
  const auto u = pq();
  for (class_id a = 0; a < 16; ++a)
    for (class_id g = 0; g < 16; ++g)
      for (class_id h = 0; h < 16; ++h) {
        const semantic_class alpha(u, a);
        const bool same = conditionalize(theory(semantic_class(u, g)), alpha) ==
                          conditionalize(theory(semantic_class(u, h)), alpha);
        if (g == h) {
          EXPECT_TRUE(same);
        }
        if ((g & ~a) == 0 && (h & ~a) == 0) {
          EXPECT_EQ(same, g == h);
        }
      }
}

TEST(Conditionalize, NotInjectiveInGeneral) {
  // Cn(p) and Cn(true) have the same p-conditionalization
  const auto u = pq();
  const auto p = parse_class("p", u);
  EXPECT_EQ(conditionalize(theory(p), p), conditionalize(theory(semantic_class::top(u)), p));
}

TEST(Bases, DominanceOneAtom) {
  const auto u = make_universe({"p"});
  const auto p = parse_class("p", u);
  const auto max = max_bases(dominance_relation(u), p);
  ASSERT_EQ(max.size(), 1u);
  EXPECT_EQ(max[0].generator(), p);
}

TEST(Bases, PropertiesOnRandomFrames) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto rel = random_frame(seed, pq(), seed % 7, rule_profile::frame());
    for (class_id a = 0; a < 16; ++a) {
      const semantic_class alpha(pq(), a);
      for (const auto& t : bases(rel, alpha)) EXPECT_NE(t.generator().mask() & a, 0u);
      for (const auto& t : weak_max_bases(rel, alpha)) {
        EXPECT_TRUE(t.contains(alpha));
        EXPECT_TRUE(is_weak_base(rel, t, alpha));
      }
      const auto coh = make_coherent_set(rel, alpha);
      for (class_id b = 0; b < 16; ++b)
        if (coh.members.contains((~a & 15) | b)) {
          EXPECT_TRUE(is_weak_base(rel, theory(semantic_class(pq(), b)), alpha));
        }
    }
  }
}

TEST(Extensions, DominanceWeakAtTopAreCompleteTheories) {
  const auto u = pq();
  const auto ext = extensions(dominance_relation(u), semantic_class::top(u), true);
  ASSERT_EQ(ext.size(), 4u);
  for (const auto& t : ext.extensions) EXPECT_EQ(t.generator().model_count(), 1u);
}

TEST(Extensions, MultipleExtensionsDemo) {
  const auto u = pq();
  const auto rel = close(u, {{"~p", "q"}, {"~q", "p"}});
  const auto top = semantic_class::top(u);
  const auto ext = extensions(rel, top, false);
  EXPECT_GE(ext.size(), 2u);
  const oracle::lang L(2);
  EXPECT_EQ(generators(ext.extensions), oracle_generators(L, oracle::extensions(L, oracle::read(L, rel), u->top_mask(), false)));
  const auto p = parse_class("p", u), q = parse_class("q", u);
  EXPECT_TRUE(credulous_infers(rel, top, p, false));
  EXPECT_TRUE(credulous_infers(rel, top, q, false));
  EXPECT_FALSE(infers(rel, top, p, false));
  EXPECT_FALSE(infers(rel, top, q, false));
}

TEST(Extensions, MatchOracleAtTwoAtoms) {
  const oracle::lang L(2);
  for (const char* profile : {"base", "d-base", "wd-base", "bcr", "tc"}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto rel = random_frame(seed * 17 + 3, pq(), seed % 7, rule_profile::parse(profile));
      const auto m = oracle::read(L, rel);
      for (class_id a = 0; a < 16; ++a)
        for (bool weak : {false, true}) {
          const auto lib = generators(extensions(rel, semantic_class(pq(), a), weak).extensions);
          ASSERT_EQ(lib, oracle_generators(L, oracle::extensions(L, m, a, weak)))
              << profile << " seed " << seed << " a " << a << " weak " << weak;
        }
    }
  }
}

TEST(Extensions, MatchOracleAtThreeAtoms) {
  const oracle::lang L(3);
  const auto u = standard_universe(3);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto rel = random_frame(seed, u, 4, rule_profile::frame());
    const auto m = oracle::read(L, rel);
    for (class_id a : {0u, 1u, 15u, 85u, 170u, 200u, 255u})
      for (bool weak : {false, true})
        EXPECT_EQ(generators(extensions(rel, semantic_class(u, a), weak).extensions),
                  oracle_generators(L, oracle::extensions(L, m, a, weak)));
  }
}

TEST(Sceptical, Conventions) {
  const auto u = pq();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto rel = random_frame(seed, u, seed % 7, rule_profile::frame());
    for (class_id a = 0; a < 16; ++a) {
      const semantic_class alpha(u, a);
      for (bool weak : {false, true}) {
        const auto ext = extensions(rel, alpha, weak);
        const auto e = sceptical(rel, alpha, weak);
        EXPECT_TRUE(infers(rel, alpha, semantic_class::top(u), weak));
        if (ext.empty()) {
          EXPECT_FALSE(e.consistent());
        } else {
          EXPECT_TRUE(e.contains(alpha));
        }
        if (ext.size() == 1) {
          EXPECT_EQ(e, ext.extensions[0]);
        }
        for (class_id b = 0; b < 16; ++b) {
          const semantic_class beta(u, b);
          if (infers(rel, alpha, beta, weak) && !ext.empty()) {
            EXPECT_TRUE(credulous_infers(rel, alpha, beta, weak));
          }
          if (infers(rel, alpha, beta, false)) {
            EXPECT_TRUE(rel.holds(negate(beta), negate(alpha)));
          }
        }
      }
    }
  }
}

TEST(Inference, DominanceCollapsesToClassical) {
  const oracle::lang L(2);
  const auto dom = dominance_relation(pq());
  for (bool weak : {false, true}) {
    EXPECT_EQ(oracle::read(L, inference_relation(dom, weak)), oracle::classical(L));
    EXPECT_EQ(oracle::inference(L, oracle::read(L, dom), weak), oracle::classical(L));
  }
}

TEST(Inference, PremiseFromOtherUniverse) {
  const auto rel = dominance_relation(pq());
  EXPECT_THROW(extensions(rel, parse_class("p", make_universe({"p", "r"})), false), universe_mismatch);
}
