#pragma once

// Entrenchment relations: finite relations over semantic classes closed
// under a profile of Horn rules, plus an exhaustive checker for every rule
// and for the non-Horn properties Connectivity and Conjunctiveness.
//
// `a ⪯ b` reads "b is at least as entrenched as a". Relations are stored by
// column: below(b) is the set {a : a ⪯ b}.

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entrench/class_set.hpp"
#include "entrench/prop.hpp"
#include "entrench/report.hpp"

namespace entrench {

enum class rule : std::uint8_t {
  reflexivity,
  left_monotonicity,
  logical_equivalence,
  weak_equivalence,
  equivalence,
  weak_left_disjunction,
  left_disjunction,
  weak_bounded_cut,
  bounded_cut,
  weak_bounded_right_monotonicity,
  bounded_right_monotonicity,
  acyclicity,
  weak_acyclicity,
  right_monotonicity,
  right_conjunction,
  transitivity,
};

inline constexpr std::array all_rules = {
    rule::reflexivity,
    rule::left_monotonicity,
    rule::logical_equivalence,
    rule::weak_equivalence,
    rule::equivalence,
    rule::weak_left_disjunction,
    rule::left_disjunction,
    rule::weak_bounded_cut,
    rule::bounded_cut,
    rule::weak_bounded_right_monotonicity,
    rule::bounded_right_monotonicity,
    rule::acyclicity,
    rule::weak_acyclicity,
    rule::right_monotonicity,
    rule::right_conjunction,
    rule::transitivity,
};

inline std::string_view rule_name(rule r) {
  switch (r) {
    case rule::reflexivity: return "Reflexivity";
    case rule::left_monotonicity: return "LeftMonotonicity";
    case rule::logical_equivalence: return "LogicalEquivalence";
    case rule::weak_equivalence: return "WeakEquivalence";
    case rule::equivalence: return "Equivalence";
    case rule::weak_left_disjunction: return "WeakLeftDisjunction";
    case rule::left_disjunction: return "LeftDisjunction";
    case rule::weak_bounded_cut: return "WeakBoundedCut";
    case rule::bounded_cut: return "BoundedCut";
    case rule::weak_bounded_right_monotonicity: return "WeakBoundedRightMonotonicity";
    case rule::bounded_right_monotonicity: return "BoundedRightMonotonicity";
    case rule::acyclicity: return "Acyclicity";
    case rule::weak_acyclicity: return "WeakAcyclicity";
    case rule::right_monotonicity: return "RightMonotonicity";
    case rule::right_conjunction: return "RightConjunction";
    case rule::transitivity: return "Transitivity";
  }
  return "?";
}

inline std::optional<rule> parse_rule(std::string_view name) {
  const std::string key = normalize_rule_name(name);
  for (rule r : all_rules)
    if (normalize_rule_name(rule_name(r)) == key) return r;
  // Theorem statements call Right Conjunction simply "Conjunction".
  if (key == "conjunction") return rule::right_conjunction;
  return std::nullopt;
}

/// Set of Horn rules a relation is closed under. Always contains the frame
/// axioms Reflexivity, Left Monotonicity and Logical Equivalence.
class rule_profile {
 public:
  rule_profile() { bits_ = bit(rule::reflexivity) | bit(rule::left_monotonicity) | bit(rule::logical_equivalence); }

  static rule_profile frame() { return {}; }

  template <typename... Rules>
  static rule_profile of(Rules... rules) {
    rule_profile p;
    ((p.bits_ |= bit(rules)), ...);
    return p;
  }

  rule_profile with(rule r) const {
    rule_profile p = *this;
    p.bits_ |= bit(r);
    return p;
  }
  rule_profile with(const rule_profile& other) const {
    rule_profile p = *this;
    p.bits_ |= other.bits_;
    return p;
  }

  bool contains(rule r) const noexcept { return (bits_ & bit(r)) != 0; }
  bool includes(const rule_profile& other) const noexcept { return (other.bits_ & ~bits_) == 0; }

  std::vector<rule> rules() const {
    std::vector<rule> out;
    for (rule r : all_rules)
      if (contains(r)) out.push_back(r);
    return out;
  }

  std::string describe() const {
    std::string out;
    for (rule r : rules()) {
      if (!out.empty()) out += ',';
      out += rule_name(r);
    }
    return out;
  }

  /// Shipped presets, mirroring the classes of entrenchment relations:
  ///   base  frame axioms only
  ///   bcr   + BoundedCut, BoundedRightMonotonicity
  ///   ba    + BoundedCut, RightMonotonicity, Acyclicity
  ///   tc    + Transitivity, RightConjunction
  /// each optionally prefixed `d-` (LeftDisjunction) or `wd-`
  /// (WeakLeftDisjunction).
  static std::optional<rule_profile> preset(std::string_view name) {
    rule_profile extra;
    if (name.starts_with("d-")) {
      extra = extra.with(rule::left_disjunction);
      name.remove_prefix(2);
    } else if (name.starts_with("wd-")) {
      extra = extra.with(rule::weak_left_disjunction);
      name.remove_prefix(3);
    }
    if (name == "base") return extra;
    if (name == "bcr") return extra.with(rule::bounded_cut).with(rule::bounded_right_monotonicity);
    if (name == "ba")
      return extra.with(rule::bounded_cut).with(rule::right_monotonicity).with(rule::acyclicity);
    if (name == "tc") return extra.with(rule::transitivity).with(rule::right_conjunction);
    return std::nullopt;
  }

  /// Parses `preset`, `preset+Rule+Rule…` or `Rule+Rule…`.
  static rule_profile parse(std::string_view text) {
    rule_profile p;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('+', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.empty()) throw error("empty component in profile '" + std::string(text) + "'");
      if (auto pre = preset(token)) {
        p = p.with(*pre);
      } else if (auto r = parse_rule(token)) {
        p = p.with(*r);
      } else if (normalize_rule_name(token) == "connectivity" ||
                 normalize_rule_name(token) == "conjunctiveness") {
        throw error("'" + std::string(token) + "' is not a Horn rule and cannot be used for closure");
      } else {
        throw error("unknown profile or rule '" + std::string(token) + "'");
      }
      start = end + 1;
    }
    return p;
  }

  friend bool operator==(const rule_profile&, const rule_profile&) = default;

 private:
  static std::uint32_t bit(rule r) { return std::uint32_t{1} << static_cast<unsigned>(r); }
  std::uint32_t bits_ = 0;
};

struct class_pair {
  class_id first = 0;
  class_id second = 0;
  friend bool operator==(const class_pair&, const class_pair&) = default;
};

class entrenchment_relation {
 public:
  /// `below[b]` = {a : a ⪯ b}. A relation built by a map rather than by
  /// closure has no profile.
  entrenchment_relation(universe_ptr universe, std::vector<class_set> below,
                        std::optional<rule_profile> profile = std::nullopt,
                        std::vector<class_pair> statements = {})
      : universe_(std::move(universe)),
        below_(std::move(below)),
        profile_(profile),
        statements_(std::move(statements)) {
    if (!universe_->supports_relations())
      throw error("relations support at most " + std::to_string(max_relation_atoms) + " atoms");
    if (below_.size() != universe_->class_count()) throw error("relation matrix has the wrong size");
  }

  const universe_ptr& universe() const noexcept { return universe_; }
  std::size_t class_count() const noexcept { return below_.size(); }

  bool holds(class_id a, class_id b) const { return below_[b].contains(a); }
  bool holds(const semantic_class& a, const semantic_class& b) const {
    require_same_universe(*a.universe(), *universe_);
    require_same_universe(*b.universe(), *universe_);
    return holds(a.mask(), b.mask());
  }

  const class_set& below(class_id b) const { return below_[b]; }
  const std::vector<class_set>& columns() const noexcept { return below_; }
  const std::optional<rule_profile>& profile() const noexcept { return profile_; }
  const std::vector<class_pair>& statements() const noexcept { return statements_; }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& col : below_) n += col.size();
    return n;
  }

  bool subset_of(const entrenchment_relation& other) const {
    require_same_universe(*universe_, *other.universe_);
    for (std::size_t b = 0; b < below_.size(); ++b)
      if (!below_[b].subset_of(other.below_[b])) return false;
    return true;
  }

  /// Same pairs over the same universe; provenance is ignored.
  friend bool operator==(const entrenchment_relation& x, const entrenchment_relation& y) {
    return *x.universe_ == *y.universe_ && x.below_ == y.below_;
  }

  /// Pairwise intersection.
  friend entrenchment_relation intersect(const entrenchment_relation& x, const entrenchment_relation& y) {
    require_same_universe(*x.universe_, *y.universe_);
    std::vector<class_set> cols(x.below_.size());
    for (std::size_t b = 0; b < cols.size(); ++b) cols[b] = x.below_[b] & y.below_[b];
    return {x.universe_, std::move(cols)};
  }

 private:
  universe_ptr universe_;
  std::vector<class_set> below_;
  std::optional<rule_profile> profile_;
  std::vector<class_pair> statements_;
};

namespace detail {

/// Transitive closure (paths of length ≥ 1) of a graph given by successor
/// sets, by Warshall's algorithm.
inline std::vector<class_set> transitive_closure(std::vector<class_set> succ) {
  const std::size_t n = succ.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (succ[i].contains(static_cast<class_id>(k))) succ[i] |= succ[k];
  return succ;
}

/// One application of `r` to every instantiation; returns whether the
/// relation grew. `L[b]` = {a : a ⪯ b}.
inline bool apply_rule(rule r, std::vector<class_set>& L, const class_lattice& lat) {
  const auto n = static_cast<class_id>(lat.size());
  bool changed = false;
  switch (r) {
    case rule::reflexivity:
      for (class_id b = 0; b < n; ++b) changed |= L[b].add(b);
      break;

    case rule::left_monotonicity:
      for (class_id b = 0; b < n; ++b) {
        class_set acc = L[b];
        L[b].for_each([&](class_id a) { acc |= lat.down(a); });
        changed |= L[b].merge(acc);
      }
      break;

    case rule::logical_equivalence:
      // Classes are already equivalence classes.
      break;

    case rule::weak_equivalence:
      // a∨b ⪯ b, a∨b ⪯ a, a∨c ⪯ a  ⟹  b∨c ⪯ b
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b) {
          const class_id ab = a | b;
          if (!L[b].contains(ab) || !L[a].contains(ab)) continue;
          for (class_id c = 0; c < n; ++c)
            if (L[a].contains(a | c)) changed |= L[b].add(b | c);
        }
      break;

    case rule::equivalence:
      // a ⪯ b, b ⪯ a, c ⪯ a  ⟹  c ⪯ b
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (a != b && L[b].contains(a) && L[a].contains(b)) changed |= L[b].merge(L[a]);
      break;

    case rule::weak_left_disjunction:
      // a∨b ⪯ a, a∨c ⪯ a  ⟹  a∨b∨c ⪯ a: the supersets of a below a are
      // closed under union.
      for (class_id a = 0; a < n; ++a) {
        std::vector<class_id> above;
        (L[a] & lat.up(a)).for_each([&](class_id x) { above.push_back(x); });
        for (std::size_t i = 0; i < above.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (L[a].add(above[i] | above[j])) {
              above.push_back(above[i] | above[j]);
              changed = true;
            }
      }
      break;

    case rule::left_disjunction:
      // b ⪯ a, c ⪯ a  ⟹  b∨c ⪯ a; iterated, the join of the whole column.
      for (class_id a = 0; a < n; ++a) {
        class_id join = 0;
        L[a].for_each([&](class_id x) { join |= x; });
        if (!L[a].empty()) changed |= L[a].add(join);
      }
      break;

    case rule::weak_bounded_cut:
      // a∨b∨c ⪯ a∨b, a∨b ⪯ a  ⟹  a∨c ⪯ a. With x = a∨b and z = a∨c the
      // premise a∨b∨c is x∨z, so only supersets of a matter.
      for (class_id a = 0; a < n; ++a)
        (L[a] & lat.up(a)).for_each([&](class_id x) {
          lat.up(a).for_each([&](class_id z) {
            if (L[x].contains(x | z)) changed |= L[a].add(z);
          });
        });
      break;

    case rule::bounded_cut:
      // c ⪯ a∨b, b ⪯ a  ⟹  c ⪯ a
      for (class_id a = 0; a < n; ++a) {
        class_set acc = L[a];
        L[a].for_each([&](class_id b) { acc |= L[a | b]; });
        changed |= L[a].merge(acc);
      }
      break;

    case rule::weak_bounded_right_monotonicity:
      // a∨c ⪯ a, a∨b ⪯ a  ⟹  a∨b∨c ⪯ a∨b
      for (class_id a = 0; a < n; ++a) {
        const class_set above = L[a] & lat.up(a);
        above.for_each([&](class_id x) { above.for_each([&](class_id z) { changed |= L[x].add(x | z); }); });
      }
      break;

    case rule::bounded_right_monotonicity:
      // c ⪯ a, b ⪯ a  ⟹  c ⪯ a∨b
      for (class_id a = 0; a < n; ++a) {
        const class_set col = L[a];
        col.for_each([&](class_id b) { changed |= L[a | b].merge(col); });
      }
      break;

    case rule::acyclicity: {
      // a0 ⪯ an, an ⪯ an-1, …, a1 ⪯ a0  ⟹  an ⪯ a0: whenever x ⪯ y and
      // y reaches x along ⪯, add y ⪯ x. Successors of x are {y : x ⪯ y}.
      std::vector<class_set> succ(n);
      for (class_id y = 0; y < n; ++y) L[y].for_each([&](class_id x) { succ[x].insert(y); });
      const auto reach = transitive_closure(succ);
      for (class_id x = 0; x < n; ++x)
        succ[x].for_each([&](class_id y) {
          if (reach[y].contains(x)) changed |= L[x].add(y);
        });
      break;
    }

    case rule::weak_acyclicity: {
      // Edge a → b iff a∨b ⪯ a. A cycle a0 → … → an → a0 yields a0 → an.
      std::vector<class_set> succ(n);
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (L[a].contains(a | b)) succ[a].insert(b);
      const auto reach = transitive_closure(succ);
      for (class_id a = 0; a < n; ++a)
        reach[a].for_each([&](class_id b) {
          if (succ[b].contains(a)) changed |= L[a].add(a | b);
        });
      break;
    }

    case rule::right_monotonicity:
      // a ⪯ b, b ⊢ c  ⟹  a ⪯ c
      for (class_id c = 0; c < n; ++c) {
        class_set acc = L[c];
        lat.down(c).for_each([&](class_id b) { acc |= L[b]; });
        changed |= L[c].merge(acc);
      }
      break;

    case rule::right_conjunction:
      // c ⪯ a, c ⪯ b  ⟹  c ⪯ a∧b
      for (class_id a = 0; a < n; ++a)
        for (class_id b = a + 1; b < n; ++b) changed |= L[a & b].merge(L[a] & L[b]);
      break;

    case rule::transitivity:
      // a ⪯ b, b ⪯ c  ⟹  a ⪯ c
      for (class_id k = 0; k < n; ++k)
        for (class_id c = 0; c < n; ++c)
          if (L[c].contains(k)) changed |= L[c].merge(L[k]);
      break;
  }
  return changed;
}

}  // namespace detail

/// Least relation containing `statements` (pairs a ⪯ b) and closed under
/// every rule of `profile`. Rules are applied round-robin to a fixpoint.
inline entrenchment_relation close_entrenchment(const universe_ptr& universe,
                                                std::span<const class_pair> statements,
                                                const rule_profile& profile) {
  const class_lattice& lat = lattice_for(*universe);
  std::vector<class_set> L(lat.size());
  for (const auto& s : statements) {
    if (s.first >= lat.size() || s.second >= lat.size()) throw error("statement outside the universe");
    L[s.second].insert(s.first);
  }
  const auto rules = profile.rules();
  for (bool changed = true; changed;) {
    changed = false;
    for (rule r : rules) changed |= detail::apply_rule(r, L, lat);
  }
  return {universe, std::move(L), profile, std::vector<class_pair>(statements.begin(), statements.end())};
}

inline entrenchment_relation close_entrenchment(
    const universe_ptr& universe, std::span<const std::pair<semantic_class, semantic_class>> statements,
    const rule_profile& profile) {
  std::vector<class_pair> raw;
  raw.reserve(statements.size());
  for (const auto& [a, b] : statements) {
    require_same_universe(*a.universe(), *universe);
    require_same_universe(*b.universe(), *universe);
    raw.push_back({a.mask(), b.mask()});
  }
  return close_entrenchment(universe, std::span<const class_pair>(raw), profile);
}

/// The least entrenchment relation: a ⪯ b iff a ⊢ b.
inline entrenchment_relation dominance_relation(const universe_ptr& universe) {
  return close_entrenchment(universe, std::span<const class_pair>{}, rule_profile::frame());
}

/// Re-closes a relation under additional rules, keeping its statements.
inline entrenchment_relation reclose(const entrenchment_relation& rel, const rule_profile& profile) {
  std::vector<class_pair> seeds;
  for (class_id b = 0; b < rel.class_count(); ++b)
    rel.below(b).for_each([&](class_id a) { seeds.push_back({a, b}); });
  auto closed = close_entrenchment(rel.universe(), std::span<const class_pair>(seeds), profile);
  return {rel.universe(), closed.columns(), profile, rel.statements()};
}

// ---------------------------------------------------------------------------
// Property checking

enum class entrenchment_property : std::uint8_t {
  reflexivity,
  left_monotonicity,
  dominance,
  logical_equivalence,
  weak_equivalence,
  equivalence,
  weak_left_disjunction,
  left_disjunction,
  weak_bounded_cut,
  bounded_cut,
  weak_bounded_right_monotonicity,
  bounded_right_monotonicity,
  acyclicity,
  weak_acyclicity,
  right_monotonicity,
  right_conjunction,
  transitivity,
  connectivity,
  conjunctiveness,
};

inline constexpr std::array all_entrenchment_properties = {
    entrenchment_property::reflexivity,
    entrenchment_property::left_monotonicity,
    entrenchment_property::dominance,
    entrenchment_property::logical_equivalence,
    entrenchment_property::weak_equivalence,
    entrenchment_property::equivalence,
    entrenchment_property::weak_left_disjunction,
    entrenchment_property::left_disjunction,
    entrenchment_property::weak_bounded_cut,
    entrenchment_property::bounded_cut,
    entrenchment_property::weak_bounded_right_monotonicity,
    entrenchment_property::bounded_right_monotonicity,
    entrenchment_property::acyclicity,
    entrenchment_property::weak_acyclicity,
    entrenchment_property::right_monotonicity,
    entrenchment_property::right_conjunction,
    entrenchment_property::transitivity,
    entrenchment_property::connectivity,
    entrenchment_property::conjunctiveness,
};

inline std::string_view property_name(entrenchment_property p) {
  switch (p) {
    case entrenchment_property::dominance: return "Dominance";
    case entrenchment_property::connectivity: return "Connectivity";
    case entrenchment_property::conjunctiveness: return "Conjunctiveness";
    default: break;
  }
  static constexpr std::array<rule, 19> as_rule = {
      rule::reflexivity, rule::left_monotonicity, rule::reflexivity /*dominance*/,
      rule::logical_equivalence, rule::weak_equivalence, rule::equivalence,
      rule::weak_left_disjunction, rule::left_disjunction, rule::weak_bounded_cut,
      rule::bounded_cut, rule::weak_bounded_right_monotonicity, rule::bounded_right_monotonicity,
      rule::acyclicity, rule::weak_acyclicity, rule::right_monotonicity,
      rule::right_conjunction, rule::transitivity, rule::reflexivity, rule::reflexivity};
  return rule_name(as_rule[static_cast<std::size_t>(p)]);
}

inline entrenchment_property to_property(rule r) {
  for (auto p : all_entrenchment_properties)
    if (property_name(p) == rule_name(r)) return p;
  throw error("rule without property");
}

inline bool is_check_only(entrenchment_property p) {
  return p == entrenchment_property::connectivity || p == entrenchment_property::conjunctiveness;
}

namespace detail {

/// Shortest path of length ≥ 1 from `from` to `to` in the graph `succ`,
/// as the list of visited nodes (both ends included); empty if none.
inline std::vector<class_id> find_path(const std::vector<class_set>& succ, class_id from, class_id to) {
  const std::size_t n = succ.size();
  std::vector<std::int32_t> parent(n, -1);
  std::deque<class_id> queue;
  std::vector<bool> seen(n, false);
  succ[from].for_each([&](class_id s) {
    if (!seen[s]) {
      seen[s] = true;
      parent[s] = static_cast<std::int32_t>(from);
      queue.push_back(s);
    }
  });
  while (!queue.empty()) {
    const class_id v = queue.front();
    queue.pop_front();
    if (v == to) {
      std::vector<class_id> path{v};
      class_id cur = v;
      do {
        cur = static_cast<class_id>(parent[cur]);
        path.push_back(cur);
      } while (cur != from || path.size() == 1);
      return {path.rbegin(), path.rend()};
    }
    succ[v].for_each([&](class_id s) {
      if (!seen[s]) {
        seen[s] = true;
        parent[s] = static_cast<std::int32_t>(v);
        queue.push_back(s);
      }
    });
  }
  return {};
}

}  // namespace detail

/// Exhaustive tuple scan for the first violated instance of `p`, in
/// ascending order; nothing when the property holds.
inline std::optional<std::vector<class_id>> scan_violation(const entrenchment_relation& rel,
                                                           entrenchment_property p) {
  using P = entrenchment_property;
  const auto n = static_cast<class_id>(rel.class_count());
  auto le = [&](class_id a, class_id b) { return rel.holds(a, b); };
  auto ent = [](class_id a, class_id b) { return (a & ~b) == 0; };
  using witness = std::optional<std::vector<class_id>>;

  switch (p) {
    case P::reflexivity:
      for (class_id a = 0; a < n; ++a)
        if (!le(a, a)) return witness{{a}};
      return std::nullopt;
    case P::dominance:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (ent(a, b) && !le(a, b)) return witness{{a, b}};
      return std::nullopt;
    case P::connectivity:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (!le(a, b) && !le(b, a)) return witness{{a, b}};
      return std::nullopt;
    case P::conjunctiveness:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (!le(a, a & b) && !le(b, a & b)) return witness{{a, b}};
      return std::nullopt;
    case P::acyclicity: {
      std::vector<class_set> succ(n);
      for (class_id y = 0; y < n; ++y) rel.below(y).for_each([&](class_id x) { succ[x].insert(y); });
      const auto reach = detail::transitive_closure(succ);
      for (class_id x = 0; x < n; ++x)
        for (class_id y = 0; y < n; ++y)
          if (le(x, y) && reach[y].contains(x) && !le(y, x)) {
            auto path = detail::find_path(succ, y, x);  // y ⪯ … ⪯ x
            return witness{{path.rbegin(), path.rend()}};
          }
      return std::nullopt;
    }
    case P::weak_acyclicity: {
      std::vector<class_set> succ(n);
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (le(a | b, a)) succ[a].insert(b);
      const auto reach = detail::transitive_closure(succ);
      for (class_id x = 0; x < n; ++x)
        for (class_id y = 0; y < n; ++y)
          if (succ[y].contains(x) && reach[x].contains(y) && !succ[x].contains(y))
            return witness{detail::find_path(succ, x, y)};
      return std::nullopt;
    }
    default:
      break;
  }

  // Three-variable Horn rules, as (a, b, c).
  for (class_id a = 0; a < n; ++a)
    for (class_id b = 0; b < n; ++b) {
      switch (p) {
        case P::left_monotonicity:
          if (!ent(a, b)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(b, c) && !le(a, c)) return witness{{a, b, c}};
          break;
        case P::logical_equivalence:
          if (a != b) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(c, a) && !le(c, b)) return witness{{a, b, c}};
          break;
        case P::weak_equivalence:
          if (!le(a | b, b) || !le(a | b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(a | c, a) && !le(b | c, b)) return witness{{a, b, c}};
          break;
        case P::equivalence:
          if (!le(a, b) || !le(b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(c, a) && !le(c, b)) return witness{{a, b, c}};
          break;
        case P::weak_left_disjunction:
          if (!le(a | b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(a | c, a) && !le(a | b | c, a)) return witness{{a, b, c}};
          break;
        case P::left_disjunction:
          if (!le(b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(c, a) && !le(b | c, a)) return witness{{a, b, c}};
          break;
        case P::weak_bounded_cut:
          if (!le(a | b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(a | b | c, a | b) && !le(a | c, a)) return witness{{a, b, c}};
          break;
        case P::bounded_cut:
          if (!le(b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(c, a | b) && !le(c, a)) return witness{{a, b, c}};
          break;
        case P::weak_bounded_right_monotonicity:
          if (!le(a | b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(a | c, a) && !le(a | b | c, a | b)) return witness{{a, b, c}};
          break;
        case P::bounded_right_monotonicity:
          if (!le(b, a)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(c, a) && !le(c, a | b)) return witness{{a, b, c}};
          break;
        case P::right_monotonicity:
          if (!le(a, b)) continue;
          for (class_id c = 0; c < n; ++c)
            if (ent(b, c) && !le(a, c)) return witness{{a, b, c}};
          break;
        case P::right_conjunction:
          for (class_id c = 0; c < n; ++c)
            if (le(c, a) && le(c, b) && !le(c, a & b)) return witness{{a, b, c}};
          break;
        case P::transitivity:
          if (!le(a, b)) continue;
          for (class_id c = 0; c < n; ++c)
            if (le(b, c) && !le(a, c)) return witness{{a, b, c}};
          break;
        default:
          throw error("unhandled property");
      }
    }
  return std::nullopt;
}

/// Decides `p` with set operations instead of a tuple scan.
inline bool holds_fast(const entrenchment_relation& rel, entrenchment_property p) {
  using P = entrenchment_property;
  const class_lattice& lat = lattice_for(*rel.universe());
  const auto n = static_cast<class_id>(lat.size());
  const auto& L = rel.columns();
  // T[a] = {c : a∨c ⪯ a}
  auto disjunct_sets = [&] {
    std::vector<class_set> T(n);
    for (class_id a = 0; a < n; ++a)
      for (class_id c = 0; c < n; ++c)
        if (L[a].contains(a | c)) T[a].insert(c);
    return T;
  };
  switch (p) {
    case P::reflexivity:
      for (class_id a = 0; a < n; ++a)
        if (!L[a].contains(a)) return false;
      return true;
    case P::left_monotonicity: {
      bool ok = true;
      for (class_id c = 0; c < n && ok; ++c)
        L[c].for_each([&](class_id b) { ok = ok && lat.down(b).subset_of(L[c]); });
      return ok;
    }
    case P::dominance:
      for (class_id a = 0; a < n; ++a)
        if (!lat.down(a).subset_of(L[a])) return false;
      return true;
    case P::logical_equivalence:
      return true;
    case P::weak_equivalence: {
      const auto T = disjunct_sets();
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (L[b].contains(a | b) && L[a].contains(a | b) && !T[a].subset_of(T[b])) return false;
      return true;
    }
    case P::equivalence:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (L[b].contains(a) && L[a].contains(b) && !L[a].subset_of(L[b])) return false;
      return true;
    case P::weak_left_disjunction:
      for (class_id a = 0; a < n; ++a) {
        const auto above = (L[a] & lat.up(a)).to_vector();
        for (class_id x : above)
          for (class_id z : above)
            if (!L[a].contains(x | z)) return false;
      }
      return true;
    case P::left_disjunction:
      for (class_id a = 0; a < n; ++a) {
        const auto col = L[a].to_vector();
        for (std::size_t i = 0; i < col.size(); ++i)
          for (std::size_t j = i + 1; j < col.size(); ++j)
            if (!L[a].contains(col[i] | col[j])) return false;
      }
      return true;
    case P::weak_bounded_cut:
      for (class_id a = 0; a < n; ++a) {
        bool ok = true;
        (L[a] & lat.up(a)).for_each([&](class_id x) {
          lat.up(a).for_each([&](class_id z) { ok = ok && (!L[x].contains(x | z) || L[a].contains(z)); });
        });
        if (!ok) return false;
      }
      return true;
    case P::bounded_cut: {
      bool ok = true;
      for (class_id a = 0; a < n && ok; ++a)
        L[a].for_each([&](class_id b) { ok = ok && L[a | b].subset_of(L[a]); });
      return ok;
    }
    case P::weak_bounded_right_monotonicity:
      for (class_id a = 0; a < n; ++a) {
        const auto above = (L[a] & lat.up(a)).to_vector();
        for (class_id x : above)
          for (class_id z : above)
            if (!L[x].contains(x | z)) return false;
      }
      return true;
    case P::bounded_right_monotonicity: {
      bool ok = true;
      for (class_id a = 0; a < n && ok; ++a)
        L[a].for_each([&](class_id b) { ok = ok && L[a].subset_of(L[a | b]); });
      return ok;
    }
    case P::acyclicity:
    case P::weak_acyclicity:
      return !scan_violation(rel, p).has_value();
    case P::right_monotonicity: {
      bool ok = true;
      for (class_id b = 0; b < n && ok; ++b)
        lat.up(b).for_each([&](class_id c) { ok = ok && L[b].subset_of(L[c]); });
      return ok;
    }
    case P::right_conjunction:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = a + 1; b < n; ++b)
          if (!(L[a] & L[b]).subset_of(L[a & b])) return false;
      return true;
    case P::transitivity: {
      bool ok = true;
      for (class_id c = 0; c < n && ok; ++c)
        L[c].for_each([&](class_id b) { ok = ok && L[b].subset_of(L[c]); });
      return ok;
    }
    case P::connectivity: {
      std::vector<class_set> above(n);
      for (class_id b = 0; b < n; ++b) L[b].for_each([&](class_id a) { above[a].insert(b); });
      for (class_id a = 0; a < n; ++a)
        if (!((L[a] | above[a]) == lat.all())) return false;
      return true;
    }
    case P::conjunctiveness:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (!L[a & b].contains(a) && !L[a & b].contains(b)) return false;
      return true;
  }
  return false;
}

/// First violated instance of `p` in `rel`, scanning tuples in ascending
/// order, or nothing when the property holds.
inline std::optional<std::vector<class_id>> find_violation(const entrenchment_relation& rel,
                                                           entrenchment_property p) {
  if (holds_fast(rel, p)) return std::nullopt;
  return scan_violation(rel, p);
}

/// Whether `w` instantiates the premises of `p` in `rel` while its
/// conclusion fails. Used to re-check reported witnesses.
inline bool violates(const entrenchment_relation& rel, entrenchment_property p, std::span<const class_id> w) {
  using P = entrenchment_property;
  const auto n = rel.class_count();
  for (class_id c : w)
    if (c >= n) return false;
  auto le = [&](class_id a, class_id b) { return rel.holds(a, b); };
  auto ent = [](class_id a, class_id b) { return (a & ~b) == 0; };
  switch (p) {
    case P::reflexivity: return w.size() == 1 && !le(w[0], w[0]);
    case P::dominance: return w.size() == 2 && ent(w[0], w[1]) && !le(w[0], w[1]);
    case P::connectivity: return w.size() == 2 && !le(w[0], w[1]) && !le(w[1], w[0]);
    case P::conjunctiveness: return w.size() == 2 && !le(w[0], w[0] & w[1]) && !le(w[1], w[0] & w[1]);
    case P::acyclicity: {
      // a0 ⪯ an, an ⪯ an-1, …, a1 ⪯ a0, not an ⪯ a0
      if (w.size() < 2) return false;
      const std::size_t last = w.size() - 1;
      if (!le(w[0], w[last])) return false;
      for (std::size_t i = 1; i <= last; ++i)
        if (!le(w[i], w[i - 1])) return false;
      return !le(w[last], w[0]);
    }
    case P::weak_acyclicity: {
      // a0∨a1 ⪯ a0, …, an∨a0 ⪯ an, not a0∨an ⪯ a0
      if (w.size() < 2) return false;
      const std::size_t last = w.size() - 1;
      for (std::size_t i = 0; i < last; ++i)
        if (!le(w[i] | w[i + 1], w[i])) return false;
      if (!le(w[last] | w[0], w[last])) return false;
      return !le(w[0] | w[last], w[0]);
    }
    default:
      break;
  }
  if (w.size() != 3) return false;
  const class_id a = w[0], b = w[1], c = w[2];
  switch (p) {
    case P::left_monotonicity: return ent(a, b) && le(b, c) && !le(a, c);
    case P::logical_equivalence: return a == b && le(c, a) && !le(c, b);
    case P::weak_equivalence: return le(a | b, b) && le(a | b, a) && le(a | c, a) && !le(b | c, b);
    case P::equivalence: return le(a, b) && le(b, a) && le(c, a) && !le(c, b);
    case P::weak_left_disjunction: return le(a | b, a) && le(a | c, a) && !le(a | b | c, a);
    case P::left_disjunction: return le(b, a) && le(c, a) && !le(b | c, a);
    case P::weak_bounded_cut: return le(a | b | c, a | b) && le(a | b, a) && !le(a | c, a);
    case P::bounded_cut: return le(c, a | b) && le(b, a) && !le(c, a);
    case P::weak_bounded_right_monotonicity: return le(a | c, a) && le(a | b, a) && !le(a | b | c, a | b);
    case P::bounded_right_monotonicity: return le(c, a) && le(b, a) && !le(c, a | b);
    case P::right_monotonicity: return le(a, b) && ent(b, c) && !le(a, c);
    case P::right_conjunction: return le(c, a) && le(c, b) && !le(c, a & b);
    case P::transitivity: return le(a, b) && le(b, c) && !le(a, c);
    default: return false;
  }
}

inline bool satisfies(const entrenchment_relation& rel, entrenchment_property p) { return holds_fast(rel, p); }
inline bool satisfies(const entrenchment_relation& rel, rule r) { return satisfies(rel, to_property(r)); }
inline bool satisfies(const entrenchment_relation& rel, const rule_profile& profile) {
  for (rule r : profile.rules())
    if (!satisfies(rel, r)) return false;
  return true;
}

/// Every property of `rel`, exhaustively over all class tuples.
inline property_report check_entrenchment_properties(const entrenchment_relation& rel) {
  property_report report;
  for (auto p : all_entrenchment_properties) {
    property_result r;
    r.name = std::string(property_name(p));
    r.check_only = is_check_only(p);
    if (auto w = find_violation(rel, p)) {
      r.status = property_status::fails;
      r.witness = std::move(*w);
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace entrench
