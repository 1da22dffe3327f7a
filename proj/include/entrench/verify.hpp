#pragma once

// Verification suites: each suite samples seeded random frames or
// consequence relations and checks one representation result on them.
// Inference is always computed from the definitions (maximal bases over
// generator classes) and compared with the characterization under test,
// which is computed separately from the relation itself.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entrench/consequence.hpp"
#include "entrench/duality.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/maxiconsistent.hpp"
#include "entrench/naming.hpp"
#include "entrench/random.hpp"

namespace entrench {

struct verification_failure {
  std::size_t sample = 0;
  std::uint64_t sample_seed = 0;
  /// "frame" or "consequence": the randomly drawn relation the check ran on.
  std::string relation;
  std::string profile;
  std::vector<std::string> statements;
  std::string check;
  std::string instantiation;
  std::string expected;
  std::string actual;
};

struct verification_report {
  std::string suite;
  std::string description;
  std::size_t n_atoms = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  /// The first failures in sample order; failure_count counts all of them.
  std::vector<verification_failure> failures;
  /// Counters for observations that are reported but never fail a suite.
  std::map<std::string, std::uint64_t> informational;

  bool passed() const noexcept { return failure_count == 0; }
};

inline constexpr std::size_t max_recorded_failures = 20;
inline constexpr std::size_t max_statements_per_sample = 6;

struct suite_sample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  /// Number of random statements drawn for each relation of the sample.
  std::size_t statements = 0;

  std::uint64_t stream(std::uint64_t salt) const { return splitmix64(seed ^ splitmix64(salt + 1)); }
};

class suite_context {
 public:
  suite_context(verification_report& report, universe_ptr universe)
      : report_(report), universe_(std::move(universe)), lattice_(lattice_for(*universe_)), namer_(universe_) {}

  const universe_ptr& universe() const noexcept { return universe_; }
  const class_lattice& lattice() const noexcept { return lattice_; }
  class_id class_count() const noexcept { return static_cast<class_id>(lattice_.size()); }
  std::size_t samples() const noexcept { return report_.samples; }
  std::string name(class_id c) const { return namer_(c); }

  suite_sample sample(std::size_t i) const {
    suite_sample s;
    s.index = i;
    s.seed = splitmix64(report_.seed + i);
    std::mt19937_64 rng(s.seed);
    s.statements = static_cast<std::size_t>(bounded_draw(rng, max_statements_per_sample + 1));
    return s;
  }

  /// Random frame of the sample; equal salts give equal statements.
  entrenchment_relation frame(const suite_sample& s, const rule_profile& profile, std::uint64_t salt = 0) const {
    return random_frame(s.stream(salt), universe_, s.statements, profile);
  }
  consequence_relation consequence(const suite_sample& s, const nm_profile& profile, std::uint64_t salt = 0) const {
    return random_consequence(s.stream(salt), universe_, s.statements, profile);
  }

  void count(std::uint64_t n = 1) { report_.checks += n; }
  void note(const std::string& key, std::uint64_t n = 1) { report_.informational[key] += n; }

  template <typename Relation>
  bool expect(bool ok, const suite_sample& s, const Relation& subject, const std::string& check,
              const std::string& instantiation, const std::string& expected, const std::string& actual) {
    ++report_.checks;
    if (ok) return true;
    ++report_.failure_count;
    if (report_.failures.size() < max_recorded_failures) {
      verification_failure f;
      f.sample = s.index;
      f.sample_seed = s.seed;
      describe(subject, f);
      f.check = check;
      f.instantiation = instantiation;
      f.expected = expected;
      f.actual = actual;
      report_.failures.push_back(std::move(f));
    }
    return false;
  }

  std::string pair(class_id a, class_id b, std::string_view op) const {
    return name(a) + " " + std::string(op) + " " + name(b);
  }
  std::string tuple(const std::vector<class_id>& w) const {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + name(w[i]);
    return out + ")";
  }

  // ---- comparison helpers -------------------------------------------------

  /// Pointwise equality of two consequence relations.
  template <typename Subject>
  bool same(const suite_sample& s, const Subject& subject, const std::string& check,
            const consequence_relation& expected, const consequence_relation& actual) {
    count(lattice_.size() * lattice_.size() - 1);
    for (class_id a = 0; a < class_count(); ++a) {
      if (expected.above(a) == actual.above(a)) continue;
      for (class_id b = 0; b < class_count(); ++b)
        if (expected.holds(a, b) != actual.holds(a, b))
          return expect(false, s, subject, check, pair(a, b, "|~"), expected.holds(a, b) ? "holds" : "fails",
                        actual.holds(a, b) ? "holds" : "fails");
    }
    return expect(true, s, subject, check, "", "", "");
  }

  template <typename Subject>
  bool same(const suite_sample& s, const Subject& subject, const std::string& check,
            const entrenchment_relation& expected, const entrenchment_relation& actual) {
    count(lattice_.size() * lattice_.size() - 1);
    for (class_id b = 0; b < class_count(); ++b) {
      if (expected.below(b) == actual.below(b)) continue;
      for (class_id a = 0; a < class_count(); ++a)
        if (expected.holds(a, b) != actual.holds(a, b))
          return expect(false, s, subject, check, pair(a, b, "<="), expected.holds(a, b) ? "holds" : "fails",
                        actual.holds(a, b) ? "holds" : "fails");
    }
    return expect(true, s, subject, check, "", "", "");
  }

  /// `sub` ⊆ `super` pointwise.
  template <typename Subject>
  bool included(const suite_sample& s, const Subject& subject, const std::string& check,
                const consequence_relation& sub, const consequence_relation& super) {
    count(lattice_.size() * lattice_.size() - 1);
    for (class_id a = 0; a < class_count(); ++a) {
      if (sub.above(a).subset_of(super.above(a))) continue;
      for (class_id b = 0; b < class_count(); ++b)
        if (sub.holds(a, b) && !super.holds(a, b))
          return expect(false, s, subject, check, pair(a, b, "|~"), "holds", "fails");
    }
    return expect(true, s, subject, check, "", "", "");
  }

  /// `rel` satisfies every rule of `profile`.
  template <typename Subject>
  bool rules_hold(const suite_sample& s, const Subject& subject, const std::string& check,
                  const consequence_relation& rel, const nm_profile& profile) {
    bool all = true;
    for (nm_rule r : profile.rules()) all &= rule_holds(s, subject, check, rel, to_property(r));
    return all;
  }
  template <typename Subject>
  bool rule_holds(const suite_sample& s, const Subject& subject, const std::string& check,
                  const consequence_relation& rel, nm_property p) {
    if (holds_fast(rel, p)) return expect(true, s, subject, check, "", "", "");
    const auto w = scan_violation(rel, p);
    return expect(false, s, subject, check + ": " + std::string(nm_property_name(p)), w ? tuple(*w) : "",
                  "rule holds", "violated");
  }

  template <typename Subject>
  bool rules_hold(const suite_sample& s, const Subject& subject, const std::string& check,
                  const entrenchment_relation& rel, const rule_profile& profile) {
    bool all = true;
    for (rule r : profile.rules()) all &= rule_holds(s, subject, check, rel, to_property(r));
    return all;
  }
  template <typename Subject>
  bool rule_holds(const suite_sample& s, const Subject& subject, const std::string& check,
                  const entrenchment_relation& rel, entrenchment_property p) {
    if (holds_fast(rel, p)) return expect(true, s, subject, check, "", "", "");
    const auto w = scan_violation(rel, p);
    return expect(false, s, subject, check + ": " + std::string(property_name(p)), w ? tuple(*w) : "",
                  "rule holds", "violated");
  }

 private:
  void describe(const entrenchment_relation& r, verification_failure& f) const {
    f.relation = "frame";
    if (r.profile()) f.profile = r.profile()->describe();
    for (const auto& st : r.statements()) f.statements.push_back(pair(st.first, st.second, "<="));
  }
  void describe(const consequence_relation& r, verification_failure& f) const {
    f.relation = "consequence";
    if (r.profile()) f.profile = r.profile()->describe();
    for (const auto& st : r.statements()) f.statements.push_back(pair(st.first, st.second, "|~"));
  }
  void describe(const std::monostate&, verification_failure& f) const { f.relation = "none"; }

  verification_report& report_;
  universe_ptr universe_;
  const class_lattice& lattice_;
  class_namer namer_;
};

struct suite_info {
  std::string name;
  std::string description;
  std::function<void(suite_context&)> run;
};

namespace detail {

using R = rule;
using NR = nm_rule;

inline rule_profile preset_or_throw(std::string_view name) {
  auto p = rule_profile::preset(name);
  if (!p) throw error("unknown preset");
  return *p;
}
inline nm_profile nm_preset_or_throw(std::string_view name) {
  auto p = nm_profile::preset(name);
  if (!p) throw error("unknown preset");
  return *p;
}

/// Bw(a) as the set of generators g with Cn(g)^a ⊆ Coh(a).
inline class_set weak_base_generators(const entrenchment_relation& rel, class_id a) {
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_set conds = weak_conditionals(rel, a, coherent_members(rel, a));
  class_set out;
  for (class_id g = 0; g < lat.size(); ++g)
    if (conds.contains(lat.negate(a) | g)) out.insert(g);
  return out;
}

// ---- inference and collapse --------------------------------------------

inline void classical_collapse(suite_context& ctx) {
  const auto s = ctx.sample(0);
  const auto dom = dominance_relation(ctx.universe());
  const auto classical = classical_consequence(ctx.universe());
  ctx.same(s, dom, "strong inference equals classical consequence", classical, inference_relation(dom, false));
  ctx.same(s, dom, "weak inference equals classical consequence", classical, inference_relation(dom, true));
}

inline void ccf_to_strong(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("d-base"));
    ctx.same(s, rel, "~b <= ~a iff a infers b", map_N(rel), inference_relation(rel, false));
  }
}

inline void strong_equals_weak(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("d-base"));
    ctx.same(s, rel, "strong inference equals weak inference", inference_relation(rel, false),
             inference_relation(rel, true));
  }
}

inline void soundness(suite_context& ctx) {
  const auto core = nm_profile::core();
  const auto cumulative = nm_preset_or_throw("c");
  const auto strong_cumulative = nm_preset_or_throw("sc");
  const auto preferential = nm_preset_or_throw("p");
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto base = ctx.frame(s, preset_or_throw("base"));
    ctx.rules_hold(s, base, "base frame: inference is a nonmonotonic consequence relation",
                   inference_relation(base, false), core);
    const auto bcr = ctx.frame(s, preset_or_throw("bcr"));
    ctx.rules_hold(s, bcr, "bcr frame: inference is cumulative", inference_relation(bcr, false), cumulative);
    const auto ba = ctx.frame(s, preset_or_throw("ba"));
    ctx.rules_hold(s, ba, "ba frame: inference is strongly cumulative", inference_relation(ba, false),
                   strong_cumulative);
    const auto tc = ctx.frame(s, preset_or_throw("tc"));
    ctx.rules_hold(s, tc, "tc frame: inference is preferential", inference_relation(tc, false), preferential);
  }
}

inline void weak_soundness(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    ctx.rules_hold(s, rel, "weak inference is a nonmonotonic consequence relation", inference_relation(rel, true),
                   nm_profile::core());
  }
}

inline void disjunctive_soundness(suite_context& ctx) {
  const auto d = preset_or_throw("d-base");
  const std::pair<rule, nm_rule> mapping[] = {{R::bounded_cut, NR::cut},
                                              {R::bounded_right_monotonicity, NR::cautious_monotonicity},
                                              {R::acyclicity, NR::loop},
                                              {R::right_conjunction, NR::or_rule}};
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, d);
    const auto n = map_N(rel);
    ctx.rules_hold(s, rel, "N of a disjunctive frame is a nonmonotonic consequence relation", n, nm_profile::core());
    ctx.same(s, rel, "N equals strong inference", n, inference_relation(rel, false));
    for (const auto& [er, nr] : mapping) {
      const auto ext = ctx.frame(s, d.with(er));
      ctx.rule_holds(s, ext, "d-base+" + std::string(rule_name(er)) + " gives " + std::string(nm_rule_name(nr)),
                     inference_relation(ext, false), to_property(nr));
    }
  }
}

inline void weak_completeness(suite_context& ctx) {
  const auto wd = preset_or_throw("wd-base");
  const std::pair<rule, nm_rule> mapping[] = {{R::weak_bounded_cut, NR::cut},
                                              {R::weak_bounded_right_monotonicity, NR::cautious_monotonicity},
                                              {R::weak_acyclicity, NR::loop},
                                              {R::right_conjunction, NR::or_rule}};
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, wd);
    const auto n = map_N_arrow(rel);
    ctx.rules_hold(s, rel, "N-> of a weak disjunctive frame is a nonmonotonic consequence relation", n,
                   nm_profile::core());
    ctx.same(s, rel, "N-> equals weak inference", n, inference_relation(rel, true));
    for (const auto& [er, nr] : mapping) {
      const auto ext = ctx.frame(s, wd.with(er));
      ctx.rule_holds(s, ext, "wd-base+" + std::string(rule_name(er)) + " gives " + std::string(nm_rule_name(nr)),
                     inference_relation(ext, true), to_property(nr));
    }
  }
}

// ---- duality maps --------------------------------------------------------

inline void iso(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    ctx.same(s, rel, "P(N(<=)) = <=", rel, map_P(map_N(rel)));
    const auto cons = ctx.consequence(s, nm_profile::core());
    ctx.same(s, cons, "N(P(|~)) = |~", cons, map_N(map_P(cons)));
  }
}

inline void weak_iso_arrow_frame(suite_context& ctx) {
  const auto profile = rule_profile::of(R::right_monotonicity, R::right_conjunction);
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, profile);
    ctx.same(s, rel, "P->(N->(<=)) = <= under RightMonotonicity and RightConjunction", rel,
             map_P_arrow(map_N_arrow(rel)));
  }
}

inline void weak_iso_arrow_consequence(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto cons = ctx.consequence(s, nm_profile::core());
    ctx.same(s, cons, "N->(P->(|~)) = |~", cons, map_N_arrow(map_P_arrow(cons)));
  }
}

inline void weak_iso_tr_frame(suite_context& ctx) {
  const auto profile = rule_profile::of(R::transitivity);
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, profile);
    ctx.same(s, rel, "Ptr(N->(<=)) = <= on transitive frames", rel, map_P_tr(map_N_arrow(rel)));
  }
}

inline void weak_iso_tr_consequence(suite_context& ctx) {
  const auto profile = nm_profile::of(NR::loop);
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto cons = ctx.consequence(s, profile);
    ctx.same(s, cons, "N->(Ptr(|~)) = |~ under Loop", cons, map_N_arrow(map_P_tr(cons)));
  }
}

inline void completeness_nm(suite_context& ctx) {
  const std::pair<nm_rule, rule> mapping[] = {{NR::cut, R::bounded_cut},
                                              {NR::cautious_monotonicity, R::bounded_right_monotonicity},
                                              {NR::loop, R::acyclicity},
                                              {NR::or_rule, R::right_conjunction}};
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto cons = ctx.consequence(s, nm_profile::core());
    const auto p = map_P(cons);
    ctx.rules_hold(s, cons, "P(|~) is a disjunctive entrenchment relation", p,
                   rule_profile::of(R::left_disjunction));
    ctx.same(s, cons, "inference over P(|~) reproduces |~", cons, inference_relation(p, false));
    for (const auto& [nr, er] : mapping) {
      const auto ext = ctx.consequence(s, nm_profile::of(nr));
      ctx.rule_holds(s, ext, std::string(nm_rule_name(nr)) + " gives " + std::string(rule_name(er)), map_P(ext),
                     to_property(er));
    }
  }
}

inline void completeness_preferential(suite_context& ctx) {
  const auto profile = nm_preset_or_throw("p");
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto cons = ctx.consequence(s, profile);
    const auto p = map_P_arrow(cons);
    ctx.rules_hold(s, cons, "P->(|~) is weak disjunctive, transitive, with RightConjunction", p,
                   rule_profile::of(R::weak_left_disjunction, R::transitivity, R::right_conjunction));
    ctx.same(s, cons, "strong inference over P->(|~) reproduces |~", cons, inference_relation(p, false));
    ctx.same(s, cons, "weak inference over P->(|~) reproduces |~", cons, inference_relation(p, true));
  }
}

inline void completeness_strong_cumulative(suite_context& ctx) {
  const auto profile = nm_profile::of(NR::loop);
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto cons = ctx.consequence(s, profile);
    const auto p = map_P_tr(cons);
    ctx.rules_hold(s, cons, "Ptr(|~) is weak disjunctive and transitive", p,
                   rule_profile::of(R::weak_left_disjunction, R::transitivity));
    ctx.same(s, cons, "weak inference over Ptr(|~) reproduces |~", cons, inference_relation(p, true));
  }
}

// ---- lemmas on coherence, bases and inference ---------------------------

inline void conditionalization(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  const class_id n = ctx.class_count();
  auto check = [&](const suite_sample& s, class_id ug, class_id vg, class_id a) {
    const semantic_class alpha(u, a);
    const theory U(semantic_class(u, ug)), V(semantic_class(u, vg));
    const auto ua = conditionalize(U, alpha);
    // Cn(U^a, a): the conjunction of the conditionalization with a.
    class_id meet = lat.top();
    for (const auto& c : ua) meet &= c.mask();
    ctx.expect((meet & a) == (ug & a), s, std::monostate{}, "Cn(U^a, a) = Cn(U, a)",
               "U = Cn(" + ctx.name(ug) + "), a = " + ctx.name(a), ctx.name(ug & a), ctx.name(meet & a));
    const bool same_cond = ua == conditionalize(V, alpha);
    if (same_cond != (ug == vg)) ctx.note("U^a = V^a with U != V (theories not containing a)");
    if ((ug & ~a) == 0 && (vg & ~a) == 0)
      ctx.expect(same_cond == (ug == vg), s, std::monostate{}, "U = V iff U^a = V^a for theories containing a",
                 "U = Cn(" + ctx.name(ug) + "), V = Cn(" + ctx.name(vg) + "), a = " + ctx.name(a),
                 ug == vg ? "equal" : "different", same_cond ? "equal" : "different");
  };
  if (n <= 16) {
    const auto s = ctx.sample(0);
    for (class_id a = 0; a < n; ++a)
      for (class_id ug = 0; ug < n; ++ug)
        for (class_id vg = 0; vg < n; ++vg) check(s, ug, vg, a);
    return;
  }
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    std::mt19937_64 rng(s.stream(7));
    for (int t = 0; t < 64; ++t) {
      const auto a = static_cast<class_id>(bounded_draw(rng, n));
      const auto ug = static_cast<class_id>(bounded_draw(rng, n));
      // Half the draws pick V with the same conditionalization as U.
      auto vg = static_cast<class_id>(bounded_draw(rng, n));
      if (t % 2 == 0) vg = (ug & a) | (vg & ~a & lat.top());
      check(s, ug, vg, a);
    }
  }
}

inline void consistent_theories(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    for (class_id a = 0; a < ctx.class_count(); ++a) {
      const semantic_class alpha(u, a);
      const class_set coh = make_coherent_set(rel, alpha).members;
      coh.for_each([&](class_id b) {
        ctx.expect((b & ~lat.negate(a)) != 0, s, rel, "b in Coh(a) implies b does not entail ~a",
                   "a = " + ctx.name(a) + ", b = " + ctx.name(b), "b does not entail ~a", "b entails ~a");
      });
      for (const auto& t : bases(rel, alpha))
        ctx.expect((t.generator().mask() & a) != 0, s, rel, "every base is consistent with a",
                   "a = " + ctx.name(a) + ", U = Cn(" + ctx.name(t.generator().mask()) + ")", "consistent",
                   "inconsistent");
      const class_set weak = weak_base_generators(rel, a);
      weak.for_each([&](class_id g) {
        ctx.expect((g & a) != 0, s, rel, "every weak base is consistent with a",
                   "a = " + ctx.name(a) + ", U = Cn(" + ctx.name(g) + ")", "consistent", "inconsistent");
      });
      for (const auto& t : weak_max_bases(rel, alpha)) {
        const class_id g = t.generator().mask();
        const std::string inst = "a = " + ctx.name(a) + ", U = Cn(" + ctx.name(g) + ")";
        ctx.expect((g & ~a) == 0, s, rel, "every maximal weak base contains a", inst, "a in U", "a not in U");
        ctx.expect(weak.contains(g), s, rel, "every maximal weak base is a weak base", inst, "weak base",
                   "not a weak base");
        // No weak base has a strictly larger conditionalization.
        const class_id cond = lat.negate(a) | g;
        bool maximal = true;
        weak.for_each([&](class_id h) {
          const class_id other = lat.negate(a) | h;
          if ((other & ~cond) == 0 && other != cond) maximal = false;
        });
        ctx.expect(maximal, s, rel, "maximal weak bases have maximal conditionalizations", inst, "maximal",
                   "not maximal");
      }
    }
  }
}

inline void inconsistency(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    for (class_id a = 0; a < ctx.class_count(); ++a) {
      const semantic_class alpha(u, a);
      const class_id na = lat.negate(a);
      const bool coh_empty = make_coherent_set(rel, alpha).empty();
      const bool top_below = rel.holds(lat.top(), na);
      const bool all_below = rel.below(na) == lat.all();
      const std::string inst = "a = " + ctx.name(a);
      auto show = [](bool b) { return std::string(b ? "true" : "false"); };
      ctx.expect(coh_empty == top_below, s, rel, "Coh(a) empty iff true <= ~a", inst, show(coh_empty),
                 show(top_below));
      ctx.expect(coh_empty == all_below, s, rel, "Coh(a) empty iff every b <= ~a", inst, show(coh_empty),
                 show(all_below));
      for (bool weak : {false, true}) {
        const bool bottom = infers(rel, alpha, semantic_class::bottom(u), weak);
        ctx.expect(bottom == coh_empty, s, rel,
                   std::string(weak ? "weak" : "strong") + " inference of false iff Coh(a) empty", inst,
                   show(coh_empty), show(bottom));
      }
    }
  }
}

inline void inequalities(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    const auto strong = inference_relation(rel, false);
    for (class_id a = 0; a < ctx.class_count(); ++a) {
      const class_set coh = make_coherent_set(rel, semantic_class(u, a)).members;
      coh.for_each([&](class_id b) {
        ctx.expect(lat.up(b).subset_of(coh), s, rel, "b in Coh(a) implies Cn(b) within Coh(a)",
                   "a = " + ctx.name(a) + ", b = " + ctx.name(b), "contained", "not contained");
      });
      const class_id na = lat.negate(a);
      strong.above(a).for_each([&](class_id b) {
        const class_id nb = lat.negate(b);
        ctx.expect(rel.holds(na | nb, na), s, rel, "a infers b implies a -> ~b <= ~a", ctx.pair(a, b, "|~"),
                   "holds", "fails");
        ctx.expect(rel.holds(nb, na), s, rel, "a infers b implies ~b <= ~a", ctx.pair(a, b, "|~"), "holds",
                   "fails");
      });
    }
    const auto d = ctx.frame(s, preset_or_throw("d-base"));
    for (class_id a = 0; a < ctx.class_count(); ++a)
      for (class_id b = 0; b < ctx.class_count(); ++b)
        ctx.expect(d.holds(a, b) == d.holds(a | b, b), s, d, "disjunctive: a <= b iff a | b <= b",
                   ctx.pair(a, b, "<="), d.holds(a, b) ? "holds" : "fails", d.holds(a | b, b) ? "holds" : "fails");
  }
}

inline void weak_inequalities(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    const auto weak = inference_relation(rel, true);
    for (class_id a = 0; a < ctx.class_count(); ++a) {
      const class_set coh = make_coherent_set(rel, semantic_class(u, a)).members;
      const class_id na = lat.negate(a);
      const class_set wb = weak_base_generators(rel, a);
      for (class_id b = 0; b < ctx.class_count(); ++b)
        if (coh.contains(na | b))
          ctx.expect(wb.contains(b), s, rel, "a -> b in Coh(a) implies Cn(b) is a weak base",
                     "a = " + ctx.name(a) + ", b = " + ctx.name(b), "weak base", "not a weak base");
      weak.above(a).for_each([&](class_id b) {
        const class_id nb = lat.negate(b);
        ctx.expect(rel.holds(na | nb, na), s, rel, "a weakly infers b implies a -> ~b <= ~a", ctx.pair(a, b, "|~"),
                   "holds", "fails");
        ctx.expect(rel.holds(nb, na), s, rel, "a weakly infers b implies ~b <= ~a", ctx.pair(a, b, "|~"), "holds",
                   "fails");
      });
    }
  }
}

inline void bases_and_weak_bases(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const auto& u = ctx.universe();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto rel = ctx.frame(s, preset_or_throw("base"));
    for (class_id a = 0; a < ctx.class_count(); ++a) {
      const semantic_class alpha(u, a);
      const class_set wb = weak_base_generators(rel, a);
      const class_set coh = make_coherent_set(rel, alpha).members;
      for (const auto& t : max_bases(rel, alpha)) {
        const class_id g = t.generator().mask() & a;
        ctx.expect(wb.contains(g), s, rel, "U maximal base implies Cn(U, a) is a weak base",
                   "a = " + ctx.name(a) + ", U = Cn(" + ctx.name(t.generator().mask()) + ")", "weak base",
                   "not a weak base");
      }
      for (const auto& t : weak_max_bases(rel, alpha)) {
        const class_id cond = lat.negate(a) | t.generator().mask();
        ctx.expect(lat.up(cond).subset_of(coh), s, rel, "U maximal weak base implies Cn(U^a) within Coh(a)",
                   "a = " + ctx.name(a) + ", U = Cn(" + ctx.name(t.generator().mask()) + ")", "contained",
                   "not contained");
      }
    }
  }
}

inline void properties_max_inference(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const class_id n = ctx.class_count();
  auto coh_of = [&](const entrenchment_relation& rel) {
    std::vector<class_set> out(n);
    for (class_id a = 0; a < n; ++a) out[a] = coherent_members(rel, a);
    return out;
  };
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    struct part {
      rule_profile profile;
      bool cut, cm;
      const char* label;
    };
    const part parts[] = {
        {rule_profile::of(R::bounded_cut), true, false, "BoundedCut"},
        {rule_profile::of(R::bounded_right_monotonicity), false, true, "BoundedRightMonotonicity"},
        {rule_profile::of(R::bounded_cut, R::bounded_right_monotonicity), true, true,
         "BoundedCut+BoundedRightMonotonicity"},
    };
    for (const auto& pt : parts) {
      const auto rel = ctx.frame(s, pt.profile);
      const auto coh = coh_of(rel);
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b) {
          if (!rel.holds(lat.negate(b), lat.negate(a))) continue;
          const std::string inst = "a = " + ctx.name(a) + ", b = " + ctx.name(b);
          if (pt.cut)
            ctx.expect(coh[a].subset_of(coh[a & b]), s, rel,
                       std::string(pt.label) + ": ~b <= ~a implies Coh(a) within Coh(a & b)", inst, "contained",
                       "not contained");
          if (pt.cm)
            ctx.expect(coh[a & b].subset_of(coh[a]), s, rel,
                       std::string(pt.label) + ": ~b <= ~a implies Coh(a & b) within Coh(a)", inst, "contained",
                       "not contained");
        }
    }
    const auto rm = ctx.frame(s, rule_profile::of(R::right_monotonicity));
    const auto coh = coh_of(rm);
    for (class_id a = 0; a < n; ++a)
      lat.up(a).for_each([&](class_id b) {
        ctx.expect(coh[a].subset_of(coh[b]), s, rm, "RightMonotonicity: a entails b implies Coh(a) within Coh(b)",
                   "a = " + ctx.name(a) + ", b = " + ctx.name(b), "contained", "not contained");
      });
  }
}

inline void properties_weak_max_inference(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  const class_id n = ctx.class_count();
  auto bw_of = [&](const entrenchment_relation& rel) {
    std::vector<class_set> out(n);
    for (class_id a = 0; a < n; ++a) out[a] = weak_base_generators(rel, a);
    return out;
  };
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    struct part {
      rule_profile profile;
      bool cut, cm;
      const char* label;
    };
    const part parts[] = {
        {rule_profile::of(R::weak_bounded_cut), true, false, "WeakBoundedCut"},
        {rule_profile::of(R::weak_bounded_right_monotonicity), false, true, "WeakBoundedRightMonotonicity"},
        {rule_profile::of(R::weak_bounded_cut, R::weak_bounded_right_monotonicity), true, true,
         "WeakBoundedCut+WeakBoundedRightMonotonicity"},
    };
    for (const auto& pt : parts) {
      const auto rel = ctx.frame(s, pt.profile);
      const auto bw = bw_of(rel);
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b) {
          const class_id na = lat.negate(a);
          if (!rel.holds(na | lat.negate(b), na)) continue;
          const std::string inst = "a = " + ctx.name(a) + ", b = " + ctx.name(b);
          if (pt.cut)
            ctx.expect(bw[a].subset_of(bw[a & b]), s, rel,
                       std::string(pt.label) + ": ~a | ~b <= ~a implies Bw(a) within Bw(a & b)", inst, "contained",
                       "not contained");
          if (pt.cm)
            ctx.expect(bw[a & b].subset_of(bw[a]), s, rel,
                       std::string(pt.label) + ": ~a | ~b <= ~a implies Bw(a & b) within Bw(a)", inst, "contained",
                       "not contained");
        }
    }
    // The monotonicity part names a rule that is not defined; observed on
    // RightMonotonicity frames and reported only.
    const auto rm = ctx.frame(s, rule_profile::of(R::right_monotonicity));
    const auto bw = bw_of(rm);
    for (class_id a = 0; a < n; ++a)
      lat.up(a).for_each([&](class_id b) {
        ctx.note(bw[a].subset_of(bw[b]) ? "RightMonotonicity: a entails b, Bw(a) within Bw(b)"
                                        : "RightMonotonicity: a entails b, Bw(a) not within Bw(b)");
      });
  }
}

inline void ccf_to_weak(suite_context& ctx) {
  const class_lattice& lat = ctx.lattice();
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto wd = ctx.frame(s, preset_or_throw("wd-base"));
    ctx.same(s, wd, "~a | ~b <= ~a iff a weakly infers b", map_N_arrow(wd), inference_relation(wd, true));
    const auto wdtc = ctx.frame(s, preset_or_throw("wd-tc"));
    const auto strong = inference_relation(wdtc, false);
    for (class_id a = 0; a < ctx.class_count(); ++a)
      for (class_id b = 0; b < ctx.class_count(); ++b) {
        const class_id na = lat.negate(a);
        if (!wdtc.holds(na | lat.negate(b), na)) continue;
        ctx.expect(strong.holds(a, b), s, wdtc, "wd-tc: ~a | ~b <= ~a implies a infers b", ctx.pair(a, b, "|~"),
                   "holds", "fails");
      }
  }
}

inline void wd_strong_weak(suite_context& ctx) {
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    const auto wd = ctx.frame(s, preset_or_throw("wd-base"));
    ctx.included(s, wd, "weak disjunctive: strong inference within weak inference", inference_relation(wd, false),
                 inference_relation(wd, true));
    const auto wdtc = ctx.frame(s, preset_or_throw("wd-tc"));
    ctx.same(s, wdtc, "wd-tc: weak inference equals strong inference", inference_relation(wdtc, false),
             inference_relation(wdtc, true));
  }
}

// ---- closure laws and derived rules -------------------------------------

inline void derived_rules(suite_context& ctx) {
  struct derivation {
    rule_profile profile;
    rule derived;
  };
  const derivation derivations[] = {
      {rule_profile::of(R::weak_bounded_right_monotonicity, R::weak_bounded_cut), R::weak_equivalence},
      {rule_profile::of(R::bounded_cut, R::bounded_right_monotonicity), R::equivalence},
      {rule_profile::of(R::transitivity), R::right_monotonicity},
      {rule_profile::of(R::right_monotonicity, R::bounded_cut), R::transitivity},
  };
  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    for (const auto& d : derivations) {
      const auto rel = ctx.frame(s, d.profile);
      ctx.rule_holds(s, rel, d.profile.describe() + " implies " + std::string(rule_name(d.derived)), rel,
                     to_property(d.derived));
      ctx.rule_holds(s, rel, "frames satisfy Dominance", rel, entrenchment_property::dominance);
    }
  }
}

inline void closure_laws(suite_context& ctx) {
  std::vector<rule_profile> profiles;
  for (const char* p : {"base", "d-base", "wd-base", "bcr", "ba", "tc", "d-tc", "wd-tc"})
    profiles.push_back(preset_or_throw(p));
  profiles.push_back(rule_profile::of(R::weak_equivalence, R::weak_bounded_cut, R::weak_acyclicity));
  profiles.push_back(rule_profile::of(R::equivalence, R::weak_bounded_right_monotonicity));
  std::vector<nm_profile> nm_profiles;
  for (const char* p : {"nm", "d", "cm", "c", "sc", "p"}) nm_profiles.push_back(nm_preset_or_throw(p));
  nm_profiles.push_back(nm_profile::of(NR::weak_transitivity));

  for (std::size_t i = 0; i < ctx.samples(); ++i) {
    const auto s = ctx.sample(i);
    for (const auto& p : profiles) {
      const auto x = ctx.frame(s, p, 0);
      const auto y = ctx.frame(s, p, 1);
      const std::string tag = "[" + p.describe() + "] ";
      ctx.rules_hold(s, x, tag + "closure satisfies its profile", x, p);
      ctx.same(s, x, tag + "closure is idempotent", x, reclose(x, p));
      std::vector<class_pair> both = x.statements();
      both.insert(both.end(), y.statements().begin(), y.statements().end());
      const auto xy = close_entrenchment(ctx.universe(), std::span<const class_pair>(both), p);
      ctx.expect(x.subset_of(xy), s, x, tag + "closure is monotone in the statements", "", "subset", "not a subset");
      ctx.rules_hold(s, x, tag + "intersection of closed relations is closed", intersect(x, y), p);
    }
    for (const auto& p : nm_profiles) {
      const auto x = ctx.consequence(s, p, 0);
      const std::string tag = "[" + p.describe() + "] ";
      ctx.rules_hold(s, x, tag + "closure satisfies its profile", x, p);
      std::vector<class_pair> seeds;
      for (class_id a = 0; a < ctx.class_count(); ++a) x.above(a).for_each([&](class_id b) { seeds.push_back({a, b}); });
      ctx.same(s, x, tag + "closure is idempotent", x,
               close_consequence(ctx.universe(), std::span<const class_pair>(seeds), p));
    }
  }
}

// ---- class correspondences ------------------------------------------------

enum class duality_map { P, P_arrow, P_tr };

inline entrenchment_relation apply_map(duality_map m, const consequence_relation& c) {
  switch (m) {
    case duality_map::P: return map_P(c);
    case duality_map::P_arrow: return map_P_arrow(c);
    case duality_map::P_tr: return map_P_tr(c);
  }
  throw error("unknown map");
}

inline const char* map_label(duality_map m) {
  switch (m) {
    case duality_map::P: return "P";
    case duality_map::P_arrow: return "P->";
    case duality_map::P_tr: return "Ptr";
  }
  return "?";
}

/// One correspondence A ~ B between a consequence class A and an
/// entrenchment class B through a map from A to B. A duality checks both
/// C∘map = Id on A and map∘C = Id on B; a retract only the former.
struct correspondence {
  std::string label;
  nm_profile nm_class;
  rule_profile er_class;
  duality_map map;
  bool weak;
  bool retract;
};

inline void check_correspondence(suite_context& ctx, const suite_sample& s, const correspondence& c,
                                 std::uint64_t salt) {
  const auto cons = ctx.consequence(s, c.nm_class, salt);
  const auto mapped = apply_map(c.map, cons);
  ctx.rules_hold(s, cons, c.label + ": " + map_label(c.map) + " maps into the entrenchment class", mapped, c.er_class);
  ctx.same(s, cons, c.label + ": C" + (c.weak ? "w" : "") + " o " + map_label(c.map) + " = Id", cons,
           inference_relation(mapped, c.weak));
  if (c.retract) return;
  const auto rel = ctx.frame(s, c.er_class, salt);
  const auto inferred = inference_relation(rel, c.weak);
  ctx.rules_hold(s, rel, c.label + ": C" + (c.weak ? "w" : "") + " maps into the consequence class", inferred,
                 c.nm_class);
  ctx.same(s, rel, c.label + ": " + map_label(c.map) + " o C" + (c.weak ? "w" : "") + " = Id", rel,
           apply_map(c.map, inferred));
}

inline std::vector<correspondence> correspondences(const std::string& cls, bool weak) {
  using M = duality_map;
  const auto d = rule_profile::of(R::left_disjunction);
  const auto wd = rule_profile::of(R::weak_left_disjunction);
  const auto bc = rule_profile::of(R::bounded_cut);
  const auto br = rule_profile::of(R::bounded_right_monotonicity);
  const auto bcr = bc.with(br);
  const auto ba = bcr.with(R::acyclicity);
  const auto t = rule_profile::of(R::transitivity);
  const auto tc = t.with(R::right_conjunction);
  const std::string w = weak ? "=w" : "=";
  const std::string rw = weak ? "|=w" : "|=";
  std::vector<correspondence> out;
  if (cls == "NM") {
    const auto nm = nm_profile::core();
    out.push_back({"NM " + w + " d-E", nm, d, M::P, weak, false});
    out.push_back({"NM " + rw + " E", nm, rule_profile::frame(), M::P, weak, true});
    if (!weak) out.push_back({"NM |= wd-E", nm, wd, M::P, false, true});
  } else if (cls == "D") {
    out.push_back({"D " + w + " d-BC", nm_preset_or_throw("d"), d.with(bc), M::P, weak, false});
  } else if (cls == "CM") {
    out.push_back({"CM " + w + " d-BR", nm_preset_or_throw("cm"), d.with(br), M::P, weak, false});
  } else if (cls == "C") {
    const auto c = nm_preset_or_throw("c");
    out.push_back({"C " + w + " d-BCR", c, d.with(bcr), M::P, weak, false});
    out.push_back({"C " + rw + " BCR", c, bcr, M::P, weak, true});
  } else if (cls == "SC") {
    const auto sc = nm_preset_or_throw("sc");
    out.push_back({"SC " + w + " d-BA", sc, d.with(ba), M::P, weak, false});
    if (weak) out.push_back({"SC =w wd-T", sc, wd.with(t), M::P_tr, true, false});
  } else if (cls == "P") {
    const auto p = nm_preset_or_throw("p");
    if (!weak) out.push_back({"P |= d-TC", p, d.with(tc), M::P, false, true});
    out.push_back({"P " + w + " wd-TC", p, wd.with(tc), M::P_arrow, weak, false});
  } else {
    throw error("unknown class '" + cls + "'");
  }
  return out;
}

inline std::function<void(suite_context&)> corollary_suite(const std::string& cls, bool weak) {
  return [cls, weak](suite_context& ctx) {
    const auto list = correspondences(cls, weak);
    for (std::size_t i = 0; i < ctx.samples(); ++i) {
      const auto s = ctx.sample(i);
      for (std::size_t j = 0; j < list.size(); ++j) check_correspondence(ctx, s, list[j], j);
    }
  };
}

}  // namespace detail

inline const std::vector<suite_info>& verification_suites() {
  static const std::vector<suite_info> suites = [] {
    using namespace detail;
    std::vector<suite_info> v = {
        {"classical-collapse", "inference over the dominance frame equals classical consequence", classical_collapse},
        {"thm-ccf-to-strong", "disjunctive frames: ~b <= ~a iff a maxiconsistently infers b", ccf_to_strong},
        {"cor-strong-equals-weak", "disjunctive frames: strong and weak inference coincide", strong_equals_weak},
        {"thm-soundness", "inference ladder: base, bcr, ba, tc frames give nm, cumulative, strongly cumulative, "
                          "preferential relations",
         soundness},
        {"thm-weak-soundness", "weak inference is a nonmonotonic consequence relation", weak_soundness},
        {"thm-disjunctive-soundness", "disjunctive frames: N equals inference; rule-by-rule correspondence",
         disjunctive_soundness},
        {"thm-weak-completeness", "weak disjunctive frames: N-> equals weak inference; rule-by-rule correspondence",
         weak_completeness},
        {"lemma-iso", "P(N(<=)) = <= and N(P(|~)) = |~", iso},
        {"lemma-weak-iso-arrow-frame", "P->(N->(<=)) = <= under RightMonotonicity and RightConjunction",
         weak_iso_arrow_frame},
        {"lemma-weak-iso-arrow-consequence", "N->(P->(|~)) = |~", weak_iso_arrow_consequence},
        {"lemma-weak-iso-tr-frame", "Ptr(N->(<=)) = <= on transitive frames", weak_iso_tr_frame},
        {"lemma-weak-iso-tr-consequence", "N->(Ptr(|~)) = |~ under Loop", weak_iso_tr_consequence},
        {"thm-completeness-nm", "P(|~) is disjunctive, its inference reproduces |~, rules correspond",
         completeness_nm},
        {"thm-completeness-preferential", "preferential |~: P->(|~) is wd, transitive, conjunctive; both "
                                          "inference modes reproduce |~",
         completeness_preferential},
        {"thm-completeness-strong-cumulative", "Loop-closed |~: Ptr(|~) is wd and transitive; weak inference "
                                               "reproduces |~",
         completeness_strong_cumulative},
        {"lemma-conditionalization", "Cn(U^a, a) = Cn(U, a); U = V iff U^a = V^a for theories containing a",
         conditionalization},
        {"lemma-consistent-theories", "coherent sentences, bases and weak bases are consistent with a",
         consistent_theories},
        {"lemma-inconsistency", "a infers false iff Coh(a) empty iff true <= ~a iff every b <= ~a", inconsistency},
        {"lemma-inequalities", "coherence is upward closed; inference implies entrenchment inequalities",
         inequalities},
        {"lemma-weak-inequalities", "weak bases from coherent conditionals; weak inference inequalities",
         weak_inequalities},
        {"lemma-bases-and-weak-bases", "maximal bases give weak bases; maximal weak bases stay coherent",
         bases_and_weak_bases},
        {"lemma-properties-max-inference", "bounded rules control coherent sets", properties_max_inference},
        {"lemma-properties-weak-max-inference", "weak bounded rules control weak bases",
         properties_weak_max_inference},
        {"lemma-ccf-to-weak", "weak disjunctive frames: ~a | ~b <= ~a iff weak inference", ccf_to_weak},
        {"thm-wd-strong-weak", "weak disjunctive frames: strong within weak; equal with Transitivity and "
                               "RightConjunction",
         wd_strong_weak},
        {"derived-rules", "rules derivable from rule combinations", derived_rules},
        {"closure-laws", "closure is sound, idempotent, monotone and intersection-closed", closure_laws},
    };
    for (const char* cls : {"NM", "D", "CM", "C", "SC", "P"}) {
      v.push_back({std::string("corollary-classes-") + cls,
                   std::string("class correspondences for ") + cls + " under maxiconsistent inference",
                   corollary_suite(cls, false)});
      v.push_back({std::string("corollary-weak-classes-") + cls,
                   std::string("class correspondences for ") + cls + " under weak maxiconsistent inference",
                   corollary_suite(cls, true)});
    }
    return v;
  }();
  return suites;
}

inline const suite_info* find_suite(std::string_view name) {
  for (const auto& s : verification_suites())
    if (s.name == name) return &s;
  return nullptr;
}

inline verification_report verify_suite(std::string_view name, std::size_t n_atoms, std::size_t samples,
                                        std::uint64_t seed) {
  const suite_info* info = find_suite(name);
  if (!info) throw error("unknown suite '" + std::string(name) + "'");
  if (n_atoms > max_relation_atoms) throw error("suites support at most 3 atoms");
  if (samples == 0) throw error("at least one sample is required");
  verification_report report;
  report.suite = info->name;
  report.description = info->description;
  report.n_atoms = n_atoms;
  report.samples = samples;
  report.seed = seed;
  suite_context ctx(report, standard_universe(n_atoms));
  info->run(ctx);
  return report;
}

}  // namespace entrench
