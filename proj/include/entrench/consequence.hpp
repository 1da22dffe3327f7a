#pragma once

// Nonmonotonic consequence relations over semantic classes: closure under
// Horn inference rules and an exhaustive rule checker.
//
// Relations are stored by row: above(a) is the set {b : a |~ b}.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entrench/class_set.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/prop.hpp"
#include "entrench/report.hpp"

namespace entrench {

enum class nm_rule : std::uint8_t {
  supraclassicality,
  left_logical_equivalence,
  right_weakening,
  and_rule,
  cut,
  cautious_monotonicity,
  loop,
  or_rule,
  weak_transitivity,
};

inline constexpr std::array all_nm_rules = {
    nm_rule::supraclassicality, nm_rule::left_logical_equivalence, nm_rule::right_weakening,
    nm_rule::and_rule,          nm_rule::cut,                      nm_rule::cautious_monotonicity,
    nm_rule::loop,              nm_rule::or_rule,                  nm_rule::weak_transitivity,
};

inline std::string_view nm_rule_name(nm_rule r) {
  switch (r) {
    case nm_rule::supraclassicality: return "Supraclassicality";
    case nm_rule::left_logical_equivalence: return "LeftLogicalEquivalence";
    case nm_rule::right_weakening: return "RightWeakening";
    case nm_rule::and_rule: return "And";
    case nm_rule::cut: return "Cut";
    case nm_rule::cautious_monotonicity: return "CautiousMonotonicity";
    case nm_rule::loop: return "Loop";
    case nm_rule::or_rule: return "Or";
    case nm_rule::weak_transitivity: return "WeakTransitivity";
  }
  return "?";
}

inline std::optional<nm_rule> parse_nm_rule(std::string_view name) {
  const std::string key = normalize_rule_name(name);
  for (nm_rule r : all_nm_rules)
    if (normalize_rule_name(nm_rule_name(r)) == key) return r;
  return std::nullopt;
}

/// The printed Weak Transitivity rule lacks a disjunct in its first premise.
/// `left` reads it as α∨β |~ α, `right` as α∨β |~ β. Either way the
/// conclusion is α∨γ |~ α and the second premise β∨γ |~ β.
enum class weak_transitivity_reading { left, right };

/// Set of Horn inference rules. Always contains Supraclassicality, Left
/// Logical Equivalence, Right Weakening and And.
class nm_profile {
 public:
  nm_profile() {
    bits_ = bit(nm_rule::supraclassicality) | bit(nm_rule::left_logical_equivalence) |
            bit(nm_rule::right_weakening) | bit(nm_rule::and_rule);
  }

  static nm_profile core() { return {}; }

  template <typename... Rules>
  static nm_profile of(Rules... rules) {
    nm_profile p;
    ((p.bits_ |= bit(rules)), ...);
    return p;
  }

  nm_profile with(nm_rule r) const {
    nm_profile p = *this;
    p.bits_ |= bit(r);
    return p;
  }
  nm_profile with(const nm_profile& other) const {
    nm_profile p = *this;
    p.bits_ |= other.bits_;
    return p;
  }

  bool contains(nm_rule r) const noexcept { return (bits_ & bit(r)) != 0; }

  std::vector<nm_rule> rules() const {
    std::vector<nm_rule> out;
    for (nm_rule r : all_nm_rules)
      if (contains(r)) out.push_back(r);
    return out;
  }

  std::string describe() const {
    std::string out;
    for (nm_rule r : rules()) {
      if (!out.empty()) out += ',';
      out += nm_rule_name(r);
    }
    return out;
  }

  /// Presets named after the classes of consequence relations:
  ///   nm  core rules        d   + Cut           cm  + CautiousMonotonicity
  ///   c   + Cut, CM         sc  + Cut, CM, Loop p   + Cut, CM, Or
  static std::optional<nm_profile> preset(std::string_view name) {
    using R = nm_rule;
    if (name == "nm") return core();
    if (name == "d") return of(R::cut);
    if (name == "cm") return of(R::cautious_monotonicity);
    if (name == "c") return of(R::cut, R::cautious_monotonicity);
    if (name == "sc") return of(R::cut, R::cautious_monotonicity, R::loop);
    if (name == "p") return of(R::cut, R::cautious_monotonicity, R::or_rule);
    return std::nullopt;
  }

  /// Parses `preset`, `preset+Rule…` or `Rule+Rule…`.
  static nm_profile parse(std::string_view text) {
    nm_profile p;
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
      } else if (auto r = parse_nm_rule(token)) {
        p = p.with(*r);
      } else if (normalize_rule_name(token) == "rationalmonotonicity") {
        throw error("RationalMonotonicity is not a Horn rule and cannot be used for closure");
      } else {
        throw error("unknown profile or rule '" + std::string(token) + "'");
      }
      start = end + 1;
    }
    return p;
  }

  friend bool operator==(const nm_profile&, const nm_profile&) = default;

 private:
  static std::uint32_t bit(nm_rule r) { return std::uint32_t{1} << static_cast<unsigned>(r); }
  std::uint32_t bits_ = 0;
};

class consequence_relation {
 public:
  /// `above[a]` = {b : a |~ b}.
  consequence_relation(universe_ptr universe, std::vector<class_set> above,
                       std::optional<nm_profile> profile = std::nullopt, std::vector<class_pair> statements = {})
      : universe_(std::move(universe)),
        above_(std::move(above)),
        profile_(profile),
        statements_(std::move(statements)) {
    if (!universe_->supports_relations())
      throw error("relations support at most " + std::to_string(max_relation_atoms) + " atoms");
    if (above_.size() != universe_->class_count()) throw error("relation matrix has the wrong size");
  }

  const universe_ptr& universe() const noexcept { return universe_; }
  std::size_t class_count() const noexcept { return above_.size(); }

  bool holds(class_id a, class_id b) const { return above_[a].contains(b); }
  bool holds(const semantic_class& a, const semantic_class& b) const {
    require_same_universe(*a.universe(), *universe_);
    require_same_universe(*b.universe(), *universe_);
    return holds(a.mask(), b.mask());
  }

  const class_set& above(class_id a) const { return above_[a]; }
  const std::vector<class_set>& rows() const noexcept { return above_; }
  const std::optional<nm_profile>& profile() const noexcept { return profile_; }
  const std::vector<class_pair>& statements() const noexcept { return statements_; }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& row : above_) n += row.size();
    return n;
  }

  bool subset_of(const consequence_relation& other) const {
    require_same_universe(*universe_, *other.universe_);
    for (std::size_t a = 0; a < above_.size(); ++a)
      if (!above_[a].subset_of(other.above_[a])) return false;
    return true;
  }

  friend bool operator==(const consequence_relation& x, const consequence_relation& y) {
    return *x.universe_ == *y.universe_ && x.above_ == y.above_;
  }

 private:
  universe_ptr universe_;
  std::vector<class_set> above_;
  std::optional<nm_profile> profile_;
  std::vector<class_pair> statements_;
};

namespace detail {

inline bool apply_nm_rule(nm_rule r, std::vector<class_set>& C, const class_lattice& lat,
                          weak_transitivity_reading reading) {
  const auto n = static_cast<class_id>(lat.size());
  bool changed = false;
  switch (r) {
    case nm_rule::supraclassicality:
      for (class_id a = 0; a < n; ++a) changed |= C[a].merge(lat.up(a));
      break;

    case nm_rule::left_logical_equivalence:
      break;

    case nm_rule::right_weakening:
      for (class_id a = 0; a < n; ++a) {
        class_set acc = C[a];
        C[a].for_each([&](class_id b) { acc |= lat.up(b); });
        changed |= C[a].merge(acc);
      }
      break;

    case nm_rule::and_rule:
      // Iterated And: the meet of the whole row.
      for (class_id a = 0; a < n; ++a) {
        if (C[a].empty()) continue;
        class_id meet = lat.top();
        C[a].for_each([&](class_id b) { meet &= b; });
        changed |= C[a].add(meet);
      }
      break;

    case nm_rule::cut:
      // a |~ b, a∧b |~ c  ⟹  a |~ c
      for (class_id a = 0; a < n; ++a) {
        class_set acc = C[a];
        C[a].for_each([&](class_id b) { acc |= C[a & b]; });
        changed |= C[a].merge(acc);
      }
      break;

    case nm_rule::cautious_monotonicity:
      // a |~ b, a |~ c  ⟹  a∧b |~ c
      for (class_id a = 0; a < n; ++a) {
        const class_set row = C[a];
        row.for_each([&](class_id b) { changed |= C[a & b].merge(row); });
      }
      break;

    case nm_rule::loop: {
      // a0 |~ a1 |~ … |~ an |~ a0  ⟹  a0 |~ an
      const auto reach = transitive_closure(C);
      for (class_id a = 0; a < n; ++a)
        reach[a].for_each([&](class_id b) {
          if (C[b].contains(a)) changed |= C[a].add(b);
        });
      break;
    }

    case nm_rule::or_rule:
      // a |~ c, b |~ c  ⟹  a∨b |~ c
      for (class_id a = 0; a < n; ++a)
        for (class_id b = a + 1; b < n; ++b) changed |= C[a | b].merge(C[a] & C[b]);
      break;

    case nm_rule::weak_transitivity:
      // a∨b |~ a (or b), b∨c |~ b  ⟹  a∨c |~ a
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b) {
          if (!C[a | b].contains(reading == weak_transitivity_reading::left ? a : b)) continue;
          for (class_id c = 0; c < n; ++c)
            if (C[b | c].contains(b)) changed |= C[a | c].add(a);
        }
      break;
  }
  return changed;
}

}  // namespace detail

/// Least relation containing `statements` (pairs a |~ b) and closed under
/// every rule of `profile`.
inline consequence_relation close_consequence(const universe_ptr& universe, std::span<const class_pair> statements,
                                              const nm_profile& profile,
                                              weak_transitivity_reading reading = weak_transitivity_reading::left) {
  const class_lattice& lat = lattice_for(*universe);
  std::vector<class_set> C(lat.size());
  for (const auto& s : statements) {
    if (s.first >= lat.size() || s.second >= lat.size()) throw error("statement outside the universe");
    C[s.first].insert(s.second);
  }
  const auto rules = profile.rules();
  for (bool changed = true; changed;) {
    changed = false;
    for (nm_rule r : rules) changed |= detail::apply_nm_rule(r, C, lat, reading);
  }
  return {universe, std::move(C), profile, std::vector<class_pair>(statements.begin(), statements.end())};
}

inline consequence_relation close_consequence(
    const universe_ptr& universe, std::span<const std::pair<semantic_class, semantic_class>> statements,
    const nm_profile& profile, weak_transitivity_reading reading = weak_transitivity_reading::left) {
  std::vector<class_pair> raw;
  raw.reserve(statements.size());
  for (const auto& [a, b] : statements) {
    require_same_universe(*a.universe(), *universe);
    require_same_universe(*b.universe(), *universe);
    raw.push_back({a.mask(), b.mask()});
  }
  return close_consequence(universe, std::span<const class_pair>(raw), profile, reading);
}

/// Classical consequence ⊢ as a consequence relation.
inline consequence_relation classical_consequence(const universe_ptr& universe) {
  return close_consequence(universe, std::span<const class_pair>{}, nm_profile::core());
}

// ---------------------------------------------------------------------------
// Property checking

enum class nm_property : std::uint8_t {
  supraclassicality,
  left_logical_equivalence,
  right_weakening,
  and_rule,
  cut,
  cautious_monotonicity,
  loop,
  or_rule,
  weak_transitivity,
  rational_monotonicity,
};

inline constexpr std::array all_nm_properties = {
    nm_property::supraclassicality, nm_property::left_logical_equivalence,
    nm_property::right_weakening,   nm_property::and_rule,
    nm_property::cut,               nm_property::cautious_monotonicity,
    nm_property::loop,              nm_property::or_rule,
    nm_property::weak_transitivity, nm_property::rational_monotonicity,
};

inline std::string_view nm_property_name(nm_property p) {
  if (p == nm_property::rational_monotonicity) return "RationalMonotonicity";
  return nm_rule_name(static_cast<nm_rule>(p));
}

inline nm_property to_property(nm_rule r) { return static_cast<nm_property>(r); }

/// Exhaustive tuple scan for the first violated instance of `p`. Witnesses
/// list the rule's variables in order (a, b, c); Loop lists the chain.
inline std::optional<std::vector<class_id>> scan_violation(
    const consequence_relation& rel, nm_property p,
    weak_transitivity_reading reading = weak_transitivity_reading::left) {
  using P = nm_property;
  using witness = std::optional<std::vector<class_id>>;
  const auto n = static_cast<class_id>(rel.class_count());
  const class_id top = rel.universe()->top_mask();
  auto nm = [&](class_id a, class_id b) { return rel.holds(a, b); };
  auto ent = [](class_id a, class_id b) { return (a & ~b) == 0; };

  switch (p) {
    case P::supraclassicality:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (ent(a, b) && !nm(a, b)) return witness{{a, b}};
      return std::nullopt;
    case P::loop: {
      const auto reach = detail::transitive_closure(rel.rows());
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (reach[a].contains(b) && nm(b, a) && !nm(a, b)) return witness{detail::find_path(rel.rows(), a, b)};
      return std::nullopt;
    }
    default:
      break;
  }

  for (class_id a = 0; a < n; ++a)
    for (class_id b = 0; b < n; ++b)
      for (class_id c = 0; c < n; ++c) {
        bool bad = false;
        switch (p) {
          case P::left_logical_equivalence:
            // a ⊢ b, b ⊢ a, a |~ c  ⟹  b |~ c
            bad = a == b && nm(a, c) && !nm(b, c);
            break;
          case P::right_weakening:
            bad = ent(b, c) && nm(a, b) && !nm(a, c);
            break;
          case P::and_rule:
            bad = nm(a, b) && nm(a, c) && !nm(a, b & c);
            break;
          case P::cut:
            bad = nm(a, b) && nm(a & b, c) && !nm(a, c);
            break;
          case P::cautious_monotonicity:
            bad = nm(a, b) && nm(a, c) && !nm(a & b, c);
            break;
          case P::or_rule:
            bad = nm(a, c) && nm(b, c) && !nm(a | b, c);
            break;
          case P::weak_transitivity:
            bad = nm(a | b, reading == weak_transitivity_reading::left ? a : b) && nm(b | c, b) && !nm(a | c, a);
            break;
          case P::rational_monotonicity:
            // not a |~ ¬b, a |~ c  ⟹  a∧b |~ c
            bad = !nm(a, top & ~b) && nm(a, c) && !nm(a & b, c);
            break;
          default:
            throw error("unhandled property");
        }
        if (bad) return witness{{a, b, c}};
      }
  return std::nullopt;
}

/// Decides `p` with set operations instead of a tuple scan.
inline bool holds_fast(const consequence_relation& rel, nm_property p,
                       weak_transitivity_reading reading = weak_transitivity_reading::left) {
  using P = nm_property;
  const class_lattice& lat = lattice_for(*rel.universe());
  const auto n = static_cast<class_id>(lat.size());
  const auto& C = rel.rows();
  switch (p) {
    case P::supraclassicality:
      for (class_id a = 0; a < n; ++a)
        if (!lat.up(a).subset_of(C[a])) return false;
      return true;
    case P::left_logical_equivalence:
      return true;
    case P::right_weakening: {
      bool ok = true;
      for (class_id a = 0; a < n && ok; ++a)
        C[a].for_each([&](class_id b) { ok = ok && lat.up(b).subset_of(C[a]); });
      return ok;
    }
    case P::and_rule:
      for (class_id a = 0; a < n; ++a) {
        const auto row = C[a].to_vector();
        for (std::size_t i = 0; i < row.size(); ++i)
          for (std::size_t j = i + 1; j < row.size(); ++j)
            if (!C[a].contains(row[i] & row[j])) return false;
      }
      return true;
    case P::cut: {
      bool ok = true;
      for (class_id a = 0; a < n && ok; ++a)
        C[a].for_each([&](class_id b) { ok = ok && C[a & b].subset_of(C[a]); });
      return ok;
    }
    case P::cautious_monotonicity: {
      bool ok = true;
      for (class_id a = 0; a < n && ok; ++a)
        C[a].for_each([&](class_id b) { ok = ok && C[a].subset_of(C[a & b]); });
      return ok;
    }
    case P::loop:
      return !scan_violation(rel, p).has_value();
    case P::or_rule:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = a + 1; b < n; ++b)
          if (!(C[a] & C[b]).subset_of(C[a | b])) return false;
      return true;
    case P::weak_transitivity: {
      // T[x] = {y : x∨y |~ x}
      std::vector<class_set> T(n);
      for (class_id x = 0; x < n; ++x)
        for (class_id y = 0; y < n; ++y)
          if (C[x | y].contains(x)) T[x].insert(y);
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b) {
          const bool first = reading == weak_transitivity_reading::left ? T[a].contains(b) : T[b].contains(a);
          if (first && !T[b].subset_of(T[a])) return false;
        }
      return true;
    }
    case P::rational_monotonicity:
      for (class_id a = 0; a < n; ++a)
        for (class_id b = 0; b < n; ++b)
          if (!C[a].contains(lat.negate(b)) && !C[a].subset_of(C[a & b])) return false;
      return true;
  }
  return false;
}

/// First violated instance of `p`, or nothing when it holds.
inline std::optional<std::vector<class_id>> find_violation(
    const consequence_relation& rel, nm_property p,
    weak_transitivity_reading reading = weak_transitivity_reading::left) {
  if (holds_fast(rel, p, reading)) return std::nullopt;
  return scan_violation(rel, p, reading);
}

inline bool violates(const consequence_relation& rel, nm_property p, std::span<const class_id> w,
                     weak_transitivity_reading reading = weak_transitivity_reading::left) {
  using P = nm_property;
  for (class_id c : w)
    if (c >= rel.class_count()) return false;
  const class_id top = rel.universe()->top_mask();
  auto nm = [&](class_id a, class_id b) { return rel.holds(a, b); };
  auto ent = [](class_id a, class_id b) { return (a & ~b) == 0; };
  if (p == P::supraclassicality) return w.size() == 2 && ent(w[0], w[1]) && !nm(w[0], w[1]);
  if (p == P::loop) {
    if (w.size() < 2) return false;
    const std::size_t last = w.size() - 1;
    for (std::size_t i = 0; i < last; ++i)
      if (!nm(w[i], w[i + 1])) return false;
    return nm(w[last], w[0]) && !nm(w[0], w[last]);
  }
  if (w.size() != 3) return false;
  const class_id a = w[0], b = w[1], c = w[2];
  switch (p) {
    case P::left_logical_equivalence: return a == b && nm(a, c) && !nm(b, c);
    case P::right_weakening: return ent(b, c) && nm(a, b) && !nm(a, c);
    case P::and_rule: return nm(a, b) && nm(a, c) && !nm(a, b & c);
    case P::cut: return nm(a, b) && nm(a & b, c) && !nm(a, c);
    case P::cautious_monotonicity: return nm(a, b) && nm(a, c) && !nm(a & b, c);
    case P::or_rule: return nm(a, c) && nm(b, c) && !nm(a | b, c);
    case P::weak_transitivity:
      return nm(a | b, reading == weak_transitivity_reading::left ? a : b) && nm(b | c, b) && !nm(a | c, a);
    case P::rational_monotonicity: return !nm(a, top & ~b) && nm(a, c) && !nm(a & b, c);
    default: return false;
  }
}

inline bool satisfies(const consequence_relation& rel, nm_property p) { return holds_fast(rel, p); }
inline bool satisfies(const consequence_relation& rel, nm_rule r) { return satisfies(rel, to_property(r)); }
inline bool satisfies(const consequence_relation& rel, const nm_profile& profile) {
  for (nm_rule r : profile.rules())
    if (!satisfies(rel, r)) return false;
  return true;
}

/// Every rule for nonmonotonic inference, exhaustively. Weak Transitivity
/// is reported as provisional, Rational Monotonicity as check-only.
inline property_report check_nm_properties(const consequence_relation& rel,
                                           weak_transitivity_reading reading = weak_transitivity_reading::left) {
  property_report report;
  for (auto p : all_nm_properties) {
    property_result r;
    r.name = std::string(nm_property_name(p));
    r.check_only = p == nm_property::rational_monotonicity;
    r.provisional = p == nm_property::weak_transitivity;
    if (auto w = find_violation(rel, p, reading)) {
      r.status = property_status::fails;
      r.witness = std::move(*w);
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace entrench
