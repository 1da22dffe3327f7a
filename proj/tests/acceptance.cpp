// Acceptance criteria AC1..AC10. One PASS/FAIL line per criterion, with
// sub-check details underneath. Exit status 0 iff every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entrench/entrench.hpp"
#include "figure1_oracle.hpp"
#include "oracle.hpp"

using namespace entrench;

namespace {

const oracle::lang L2(2);

struct outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass &= ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

/// Seed and statement count of sample i, matching the verification suites.
std::pair<std::uint64_t, std::size_t> sample(std::uint64_t seed, std::size_t i) {
  const std::uint64_t s = splitmix64(seed + i);
  std::mt19937_64 rng(s);
  return {s, static_cast<std::size_t>(bounded_draw(rng, max_statements_per_sample + 1))};
}

std::vector<std::pair<oracle::mask, oracle::mask>> raw(const std::vector<class_pair>& st) {
  std::vector<std::pair<oracle::mask, oracle::mask>> out;
  for (const auto& s : st) out.push_back({s.first, s.second});
  return out;
}

/// A seeded frame whose library closure is cross-checked against the oracle.
struct frame_sample {
  entrenchment_relation rel;
  oracle::matrix m;
  bool closure_agrees;
};

frame_sample frame(std::uint64_t seed, std::size_t i, const rule_profile& p) {
  const auto [s, k] = sample(seed, i);
  auto rel = random_frame(s, standard_universe(2), k, p);
  auto m = oracle::read(L2, rel);
  const bool ok = m == oracle::close_frame(L2, raw(rel.statements()), p.rules());
  return {std::move(rel), std::move(m), ok};
}

struct consequence_sample {
  consequence_relation rel;
  oracle::matrix m;
  bool closure_agrees;
};

consequence_sample consequence(std::uint64_t seed, std::size_t i, const nm_profile& p) {
  const auto [s, k] = sample(seed, i);
  auto rel = random_consequence(s, standard_universe(2), k, p);
  auto m = oracle::read(L2, rel);
  std::vector<nm_rule> extra;
  for (nm_rule r : p.rules()) extra.push_back(r);
  const bool ok = m == oracle::close_nm(L2, raw(rel.statements()), extra);
  return {std::move(rel), std::move(m), ok};
}

std::string count(std::size_t bad, std::size_t total, const std::string& what) {
  return what + ": " + std::to_string(bad) + " of " + std::to_string(total) + " failing";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool oracle_rules(const oracle::matrix& m, const std::vector<nm_rule>& rules) {
  for (nm_rule r : rules)
    if (!oracle::satisfies(L2, m, r)) return false;
  return true;
}
bool oracle_rules(const oracle::matrix& m, const std::vector<rule>& rules) {
  for (rule r : rules)
    if (!oracle::satisfies(L2, m, r)) return false;
  return true;
}

const std::vector<nm_rule> core_rules = {nm_rule::supraclassicality, nm_rule::left_logical_equivalence,
                                         nm_rule::right_weakening, nm_rule::and_rule};

std::vector<nm_rule> plus(std::vector<nm_rule> v, std::initializer_list<nm_rule> more) {
  v.insert(v.end(), more);
  return v;
}

// ---------------------------------------------------------------------------

outcome ac1() {
  outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto dom = dominance_relation(standard_universe(2));
  const auto cl = oracle::classical(L2);
  o.check(oracle::read(L2, dom) == cl, "Dominance frame is exactly entailment");
  for (bool weak : {false, true}) {
    const std::string mode = weak ? "weak" : "strong";
    o.check(oracle::read(L2, inference_relation(dom, weak)) == cl, mode + " inference equals entailment on all 256 pairs");
    o.check(oracle::inference(L2, oracle::read(L2, dom), weak) == cl, mode + " oracle inference equals entailment");
  }
  const double t = seconds_since(t0);
  o.check(t < 5, "runtime " + std::to_string(t) + " s < 5 s");
  return o;
}

// AC2 and AC3 share their frames.
std::vector<frame_sample> d_base_frames() {
  std::vector<frame_sample> out;
  for (std::size_t i = 0; i < 200; ++i) out.push_back(frame(42, i, *rule_profile::preset("d-base")));
  return out;
}

outcome ac2(const std::vector<frame_sample>& frames, double setup) {
  outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t closure = 0, oracle_bad = 0, lib_bad = 0, map_bad = 0;
  for (const auto& f : frames) {
    closure += !f.closure_agrees;
    // contraposition shortcut, read straight off the relation
    oracle::matrix shortcut = oracle::empty_matrix(L2);
    for (oracle::mask a = 0; a < L2.count; ++a)
      for (oracle::mask b = 0; b < L2.count; ++b) shortcut[a][b] = f.m[L2.neg(b)][L2.neg(a)];
    oracle_bad += oracle::inference(L2, f.m, false) != shortcut;
    lib_bad += oracle::read(L2, inference_relation(f.rel, false)) != shortcut;
    map_bad += oracle::read(L2, map_N(f.rel)) != shortcut;
  }
  o.check(closure == 0, count(closure, 200, "library closure equals oracle closure"));
  o.check(oracle_bad == 0, count(oracle_bad, 200, "filter-enumeration inference equals ~b <= ~a"));
  o.check(lib_bad == 0, count(lib_bad, 200, "library inference equals ~b <= ~a"));
  o.check(map_bad == 0, count(map_bad, 200, "library N equals ~b <= ~a"));
  const double t = setup + seconds_since(t0);
  o.check(t < 60, "runtime " + std::to_string(t) + " s < 60 s");
  return o;
}

outcome ac3(const std::vector<frame_sample>& frames) {
  outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t oracle_bad = 0, lib_bad = 0;
  for (const auto& f : frames) {
    oracle_bad += oracle::inference(L2, f.m, false) != oracle::inference(L2, f.m, true);
    lib_bad += inference_relation(f.rel, false) != inference_relation(f.rel, true);
  }
  o.check(oracle_bad == 0, count(oracle_bad, 200, "oracle strong equals weak"));
  o.check(lib_bad == 0, count(lib_bad, 200, "library strong equals weak"));
  const double t = seconds_since(t0);
  o.check(t < 60, "runtime " + std::to_string(t) + " s < 60 s");
  return o;
}

outcome ac4() {
  outcome o;
  struct tier {
    const char* preset;
    std::vector<nm_rule> rules;
  };
  const tier tiers[] = {
      {"base", core_rules},
      {"bcr", plus(core_rules, {nm_rule::cut, nm_rule::cautious_monotonicity})},
      {"ba", plus(core_rules, {nm_rule::cut, nm_rule::cautious_monotonicity, nm_rule::loop})},
      {"tc", plus(core_rules, {nm_rule::cut, nm_rule::cautious_monotonicity, nm_rule::or_rule})},
  };
  for (const auto& t : tiers) {
    std::size_t closure = 0, bad = 0, agree = 0;
    for (std::size_t i = 0; i < 200; ++i) {
      const auto f = frame(4, i, *rule_profile::preset(t.preset));
      closure += !f.closure_agrees;
      const auto inf = oracle::inference(L2, f.m, false);
      agree += oracle::read(L2, inference_relation(f.rel, false)) != inf;
      bad += !oracle_rules(inf, t.rules);
    }
    std::string names;
    for (nm_rule r : t.rules) names += std::string(names.empty() ? "" : ", ") + std::string(nm_rule_name(r));
    o.check(closure == 0 && agree == 0,
            std::string(t.preset) + ": library closure and inference agree with the oracle (" +
                std::to_string(closure + agree) + " mismatches)");
    o.check(bad == 0, count(bad, 200, std::string(t.preset) + " inference satisfies " + names));
  }
  return o;
}

outcome ac5() {
  outcome o;
  std::size_t bad_e = 0, bad_c = 0, closure = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto f = frame(5, i, rule_profile::frame());
    closure += !f.closure_agrees;
    bad_e += oracle::P(L2, oracle::N(L2, f.m)) != f.m || map_P(map_N(f.rel)) != f.rel;
    const auto c = consequence(5, i, nm_profile::core());
    closure += !c.closure_agrees;
    bad_c += oracle::N(L2, oracle::P(L2, c.m)) != c.m || map_N(map_P(c.rel)) != c.rel;
  }
  o.check(closure == 0, count(closure, 400, "library closure equals oracle closure"));
  o.check(bad_e == 0, count(bad_e, 200, "P(N(<=)) = <= on closed frames"));
  o.check(bad_c == 0, count(bad_c, 200, "N(P(|~)) = |~ on NM-closed relations"));
  return o;
}

outcome ac6() {
  outcome o;
  std::size_t a = 0, b = 0, c = 0, d = 0, closure = 0;
  const auto rmrc = rule_profile::of(rule::right_monotonicity, rule::right_conjunction);
  const auto tr = rule_profile::of(rule::transitivity);
  for (std::size_t i = 0; i < 100; ++i) {
    const auto nm = consequence(6, i, nm_profile::core());
    a += oracle::N_arrow(L2, oracle::P_arrow(L2, nm.m)) != nm.m || map_N_arrow(map_P_arrow(nm.rel)) != nm.rel;
    const auto f = frame(6, i, rmrc);
    b += oracle::P_arrow(L2, oracle::N_arrow(L2, f.m)) != f.m || map_P_arrow(map_N_arrow(f.rel)) != f.rel;
    const auto t = frame(6, i, tr);
    c += oracle::P_tr(L2, oracle::N_arrow(L2, t.m)) != t.m || map_P_tr(map_N_arrow(t.rel)) != t.rel;
    const auto lp = consequence(6, i, nm_profile::of(nm_rule::loop));
    d += oracle::N_arrow(L2, oracle::P_tr(L2, lp.m)) != lp.m || map_N_arrow(map_P_tr(lp.rel)) != lp.rel;
    closure += !nm.closure_agrees + !f.closure_agrees + !t.closure_agrees + !lp.closure_agrees;
  }
  o.check(closure == 0, count(closure, 400, "library closure equals oracle closure"));
  o.check(a == 0, count(a, 100, "N->(P->(|~)) = |~ on NM-closed relations"));
  o.check(b == 0, count(b, 100, "P->(N->(<=)) = <= under RightMonotonicity + RightConjunction"));
  o.check(c == 0, count(c, 100, "Ptr(N->(<=)) = <= on transitive frames"));
  o.check(d == 0, count(d, 100, "N->(Ptr(|~)) = |~ on Loop-closed relations"));
  return o;
}

outcome ac7() {
  outcome o;
  std::size_t nm_inf = 0, nm_rules = 0, nm_parts = 0, p_inf = 0, p_rules = 0, l_inf = 0, l_rules = 0, closure = 0;
  const std::pair<nm_rule, rule> parts[] = {{nm_rule::cut, rule::bounded_cut},
                                            {nm_rule::cautious_monotonicity, rule::bounded_right_monotonicity},
                                            {nm_rule::loop, rule::acyclicity},
                                            {nm_rule::or_rule, rule::right_conjunction}};
  for (std::size_t i = 0; i < 100; ++i) {
    const auto nm = consequence(7, i, nm_profile::core());
    const auto pn = oracle::P(L2, nm.m);
    nm_inf += oracle::inference(L2, pn, false) != nm.m || inference_relation(map_P(nm.rel), false) != nm.rel;
    nm_rules += !oracle::satisfies(L2, pn, rule::left_disjunction) || !oracle::dominance(L2, pn);
    for (auto [nr, er] : parts) {
      const auto x = consequence(7, i, nm_profile::of(nr));
      closure += !x.closure_agrees;
      nm_parts += !oracle::satisfies(L2, oracle::P(L2, x.m), er);
    }

    const auto pref = consequence(7, i, *nm_profile::preset("p"));
    const auto pa = oracle::P_arrow(L2, pref.m);
    p_inf += oracle::inference(L2, pa, false) != pref.m || oracle::inference(L2, pa, true) != pref.m;
    p_inf += inference_relation(map_P_arrow(pref.rel), true) != pref.rel;
    p_rules += !oracle_rules(pa, std::vector<rule>{rule::weak_left_disjunction, rule::transitivity,
                                                   rule::right_conjunction, rule::reflexivity,
                                                   rule::left_monotonicity});

    const auto lp = consequence(7, i, nm_profile::of(nm_rule::loop));
    const auto pt = oracle::P_tr(L2, lp.m);
    l_inf += oracle::inference(L2, pt, true) != lp.m || inference_relation(map_P_tr(lp.rel), true) != lp.rel;
    l_rules += !oracle_rules(pt, std::vector<rule>{rule::weak_left_disjunction, rule::transitivity,
                                                   rule::reflexivity, rule::left_monotonicity});
    closure += !nm.closure_agrees + !pref.closure_agrees + !lp.closure_agrees;
  }
  o.check(closure == 0, count(closure, 700, "library closure equals oracle closure"));
  o.check(nm_inf == 0, count(nm_inf, 100, "NM: inference over P(|~) reproduces |~"));
  o.check(nm_rules == 0, count(nm_rules, 100, "NM: P(|~) is a disjunctive entrenchment relation"));
  o.check(nm_parts == 0, count(nm_parts, 400, "NM: Cut/CM/Loop/Or give BoundedCut/BoundedRightMonotonicity/"
                                              "Acyclicity/RightConjunction"));
  o.check(p_inf == 0, count(p_inf, 100, "preferential: both inference modes over P->(|~) reproduce |~"));
  o.check(p_rules == 0, count(p_rules, 100, "preferential: P->(|~) is weak disjunctive, transitive, conjunctive"));
  o.check(l_inf == 0, count(l_inf, 100, "Loop-closed: weak inference over Ptr(|~) reproduces |~"));
  o.check(l_rules == 0, count(l_rules, 100, "Loop-closed: Ptr(|~) is weak disjunctive and transitive"));
  return o;
}

outcome ac8() {
  outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  // inconsistency equivalences straight from the oracle
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto f = frame(8, i, rule_profile::frame());
    for (oracle::mask a = 0; a < L2.count; ++a) {
      const bool coh_empty = oracle::coh(L2, f.m, a).none();
      bool all_below = true;
      for (oracle::mask b = 0; b < L2.count; ++b) all_below &= f.m[b][L2.neg(a)];
      const bool top_below = f.m[L2.top][L2.neg(a)];
      for (bool weak : {false, true}) {
        const bool bottom = oracle::sceptical(L2, oracle::extensions(L2, f.m, a, weak))[0];
        bad += bottom != coh_empty || coh_empty != top_below || top_below != all_below;
      }
    }
  }
  o.check(bad == 0, count(bad, 200 * 16 * 2, "oracle: a |~ false iff Coh(a) empty iff true <= ~a iff all b <= ~a"));
  const char* suites[] = {"lemma-conditionalization",       "lemma-consistent-theories",
                          "lemma-inconsistency",            "lemma-inequalities",
                          "lemma-weak-inequalities",        "lemma-bases-and-weak-bases",
                          "lemma-properties-max-inference", "lemma-properties-weak-max-inference",
                          "lemma-ccf-to-weak"};
  for (std::size_t n : {2u, 3u})
    for (const char* s : suites) {
      const auto r = verify_suite(s, n, 200, 8);
      o.check(r.passed(), std::string(s) + " at n=" + std::to_string(n) + ": " + std::to_string(r.failure_count) +
                              " failures in " + std::to_string(r.checks) + " checks");
    }
  const double t = seconds_since(t0);
  o.check(t < 600, "runtime " + std::to_string(t) + " s < 600 s");
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

outcome ac9() {
  outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string out;
  FILE* pipe = popen((std::string(ENTRENCH_CLI) + " demo figure1").c_str(), "r");
  int status = -1;
  if (pipe) {
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int st = pclose(pipe);
    status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  }
  const double t = seconds_since(t0);
  const std::string golden = slurp(std::string(SOURCE_DIR) + "/tests/golden/figure1.txt");
  o.check(status == 0, "entrench demo figure1 exits 0");
  o.check(!golden.empty() && golden == oracle_figure1_text(), "committed snapshot equals the oracle rendering");
  o.check(out == golden, "demo output matches the snapshot byte for byte");
  o.check(out.find(figure1_note) != std::string::npos, "demo prints the walkthrough discrepancy note");
  o.check(slurp(std::string(SOURCE_DIR) + "/theories/figure1.ent") == figure1_theory_text,
          "demo loads the shipped frame");
  o.check(t < 10, "runtime " + std::to_string(t) + " s < 10 s");
  return o;
}

outcome ac10() {
  outcome o;
  using R = rule;
  struct cls {
    const char* name;
    nm_profile nm;
    rule_profile dual;  // the disjunctive class reached by P
  };
  const auto d = rule_profile::of(R::left_disjunction);
  const cls classes[] = {
      {"NM", nm_profile::core(), d},
      {"D", *nm_profile::preset("d"), d.with(R::bounded_cut)},
      {"CM", *nm_profile::preset("cm"), d.with(R::bounded_right_monotonicity)},
      {"C", *nm_profile::preset("c"), d.with(R::bounded_cut).with(R::bounded_right_monotonicity)},
      {"SC", *nm_profile::preset("sc"),
       d.with(R::bounded_cut).with(R::bounded_right_monotonicity).with(R::acyclicity)},
      {"P", *nm_profile::preset("p"), d.with(R::transitivity).with(R::right_conjunction)},
  };
  for (const auto& c : classes) {
    // Oracle: C o N = Id on sampled members of the class, and N o C = Id on
    // sampled members of the dual class (a retract for P).
    std::size_t left = 0, into = 0, right = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      const auto x = consequence(10, i, c.nm);
      const auto px = oracle::P(L2, x.m);
      left += oracle::inference(L2, px, false) != x.m;
      std::vector<rule> want = c.dual.rules();
      into += !oracle_rules(px, want);
      if (std::string(c.name) != "P") {
        const auto f = frame(10, i, c.dual);
        right += oracle::P(L2, oracle::inference(L2, f.m, false)) != f.m;
      }
    }
    const auto lib = verify_suite(std::string("corollary-classes-") + c.name, 2, 50, 10);
    o.check(left == 0 && into == 0 && right == 0 && lib.passed(),
            std::string(c.name) + ": oracle C o N = Id " + std::to_string(left) + ", N into class " +
                std::to_string(into) + ", N o C = Id " + std::to_string(right) + " failing of 50; library suite " +
                std::to_string(lib.failure_count) + " failures in " + std::to_string(lib.checks) + " checks");
  }
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](const char* id, const char* title, const outcome& o) {
    all &= o.pass;
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << " " << title << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  };
  report("AC1", "classical collapse", ac1());
  const auto t0 = std::chrono::steady_clock::now();
  const auto frames = d_base_frames();
  const double setup = seconds_since(t0);
  report("AC2", "contraposition characterizes inference on disjunctive frames", ac2(frames, setup));
  report("AC3", "strong equals weak on disjunctive frames", ac3(frames));
  report("AC4", "soundness ladder", ac4());
  report("AC5", "contraposition round trips", ac5());
  report("AC6", "implication and chain round trips", ac6());
  report("AC7", "completeness", ac7());
  report("AC8", "inconsistency and invariant suites", ac8());
  report("AC9", "penguin demo (demo figure1)", ac9());
  report("AC10", "class dualities", ac10());
  return all ? 0 : 1;
}
