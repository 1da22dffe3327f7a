#pragma once

// Maxiconsistent and weak maxiconsistent inference induced by an
// entrenchment relation.
//
// Every deductively closed set over a finite language is Cn(γ) for a single
// class γ, so bases, weak bases and extensions are handled through their
// generators. Cn(γ') ⊇ Cn(γ) iff γ' ⊢ γ.

#include <algorithm>
#include <vector>

#include "entrench/class_set.hpp"
#include "entrench/consequence.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/prop.hpp"

namespace entrench {

struct coherent_set {
  semantic_class premise;
  /// {β : not β ⪯ ¬α}
  class_set members;

  bool contains(const semantic_class& b) const { return members.contains(b.mask()); }
  bool empty() const { return members.empty(); }
};

struct extension_set {
  semantic_class premise;
  /// Ascending by generator mask, without duplicates.
  std::vector<theory> extensions;
  bool weak = false;

  bool empty() const { return extensions.empty(); }
  std::size_t size() const { return extensions.size(); }
};

namespace detail {

inline void check_premise(const entrenchment_relation& rel, const semantic_class& a) {
  require_same_universe(*a.universe(), *rel.universe());
}

inline class_set coherent_members(const entrenchment_relation& rel, class_id a) {
  const class_lattice& lat = lattice_for(*rel.universe());
  return lat.all() - rel.below(lat.negate(a));
}

/// Generators γ with Cn(γ) ⊆ Coh(α).
inline class_set base_generators(const entrenchment_relation& rel, const class_set& coh) {
  const class_lattice& lat = lattice_for(*rel.universe());
  class_set out;
  lat.all().for_each([&](class_id g) {
    if (lat.up(g).subset_of(coh)) out.insert(g);
  });
  return out;
}

/// Members of `s` with no strictly smaller member (maximal theories).
inline std::vector<class_id> minimal_members(const class_set& s, const class_lattice& lat) {
  std::vector<class_id> out;
  s.for_each([&](class_id g) {
    class_set below = lat.down(g) & s;
    below.erase(g);
    if (below.empty()) out.push_back(g);
  });
  return out;
}

/// Masks ¬α∨γ of the conditionalizations Cn(γ)^α that lie inside Coh(α).
inline class_set weak_conditionals(const entrenchment_relation& rel, class_id a, const class_set& coh) {
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_id not_a = lat.negate(a);
  class_set out;
  lat.up(not_a).for_each([&](class_id c) {
    if (lat.up(c).subset_of(coh)) out.insert(c);
  });
  return out;
}

inline std::vector<theory> to_theories(const universe_ptr& u, std::vector<class_id> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<theory> out;
  out.reserve(gens.size());
  for (class_id g : gens) out.emplace_back(semantic_class(u, g));
  return out;
}

inline std::vector<class_id> extension_generators(const entrenchment_relation& rel, class_id a, bool weak) {
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_set coh = coherent_members(rel, a);
  std::vector<class_id> out;
  if (!weak) {
    for (class_id g : minimal_members(base_generators(rel, coh), lat)) out.push_back(g & a);
  } else {
    for (class_id c : minimal_members(weak_conditionals(rel, a, coh), lat)) out.push_back(c & a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline class_id sceptical_generator(const std::vector<class_id>& gens) {
  class_id e = 0;
  for (class_id g : gens) e |= g;
  return e;
}

}  // namespace detail

/// Coh(α) = {β : β ⋠ ¬α}.
inline coherent_set make_coherent_set(const entrenchment_relation& rel, const semantic_class& a) {
  detail::check_premise(rel, a);
  return {a, detail::coherent_members(rel, a.mask())};
}

/// U^α = {α → δ : δ ∈ U}, ascending by mask.
inline std::vector<semantic_class> conditionalize(const theory& u, const semantic_class& a) {
  require_same_universe(*u.generator().universe(), *a.universe());
  std::vector<class_id> masks;
  for (const auto& d : consequences(u)) masks.push_back(implies(a, d).mask());
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<semantic_class> out;
  out.reserve(masks.size());
  for (class_id m : masks) out.emplace_back(a.universe(), m);
  return out;
}

/// The class α → γ generating U^α for U = Cn(γ).
inline semantic_class conditional_generator(const theory& u, const semantic_class& a) {
  return implies(a, u.generator());
}

/// All deductively closed U ⊆ Coh(α).
inline std::vector<theory> bases(const entrenchment_relation& rel, const semantic_class& a) {
  detail::check_premise(rel, a);
  const class_set gens = detail::base_generators(rel, detail::coherent_members(rel, a.mask()));
  return detail::to_theories(rel.universe(), gens.to_vector());
}

/// Inclusion-maximal bases of α.
inline std::vector<theory> max_bases(const entrenchment_relation& rel, const semantic_class& a) {
  detail::check_premise(rel, a);
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_set gens = detail::base_generators(rel, detail::coherent_members(rel, a.mask()));
  return detail::to_theories(rel.universe(), detail::minimal_members(gens, lat));
}

/// Maximal weak bases of α: U with U^α ⊆ Coh(α) such that no weak base has
/// a strictly larger conditionalization. Theories with the same
/// conditionalization differ only outside α, so each is represented by the
/// one containing α, Cn(α ∧ (α → γ)).
inline std::vector<theory> weak_max_bases(const entrenchment_relation& rel, const semantic_class& a) {
  detail::check_premise(rel, a);
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_set conds = detail::weak_conditionals(rel, a.mask(), detail::coherent_members(rel, a.mask()));
  std::vector<class_id> gens;
  for (class_id c : detail::minimal_members(conds, lat)) gens.push_back(c & a.mask());
  return detail::to_theories(rel.universe(), std::move(gens));
}

/// Whether U is a weak base of α: U^α ⊆ Coh(α).
inline bool is_weak_base(const entrenchment_relation& rel, const theory& u, const semantic_class& a) {
  detail::check_premise(rel, a);
  const class_lattice& lat = lattice_for(*rel.universe());
  const class_set coh = detail::coherent_members(rel, a.mask());
  return lat.up(conditional_generator(u, a).mask()).subset_of(coh);
}

/// Strong: {Cn(U, α) : U maximal base}. Weak: the maximal weak bases.
inline extension_set extensions(const entrenchment_relation& rel, const semantic_class& a, bool weak) {
  detail::check_premise(rel, a);
  return {a, detail::to_theories(rel.universe(), detail::extension_generators(rel, a.mask(), weak)), weak};
}

/// Intersection of all extensions; the inconsistent theory when there are
/// none.
inline theory sceptical(const entrenchment_relation& rel, const semantic_class& a, bool weak) {
  detail::check_premise(rel, a);
  return theory(
      semantic_class(rel.universe(), detail::sceptical_generator(detail::extension_generators(rel, a.mask(), weak))));
}

inline bool infers(const entrenchment_relation& rel, const semantic_class& a, const semantic_class& b, bool weak) {
  require_same_universe(*b.universe(), *rel.universe());
  return sceptical(rel, a, weak).contains(b);
}

/// Whether β belongs to some extension; false when there are none.
inline bool credulous_infers(const entrenchment_relation& rel, const semantic_class& a, const semantic_class& b,
                             bool weak) {
  require_same_universe(*b.universe(), *rel.universe());
  for (const auto& t : extensions(rel, a, weak).extensions)
    if (t.contains(b)) return true;
  return false;
}

/// The whole inference relation |~⪯ (or |~ʷ⪯) as a consequence relation.
inline consequence_relation inference_relation(const entrenchment_relation& rel, bool weak) {
  const class_lattice& lat = lattice_for(*rel.universe());
  std::vector<class_set> rows(lat.size());
  for (class_id a = 0; a < lat.size(); ++a)
    rows[a] = lat.up(detail::sceptical_generator(detail::extension_generators(rel, a, weak)));
  return {rel.universe(), std::move(rows)};
}

}  // namespace entrench
