#pragma once

// Translations between entrenchment relations and consequence relations.
//
//   N    α |~ β  iff  ¬β ⪯ ¬α
//   P    α ⪯ β   iff  ¬β |~ ¬α
//   N→   α |~ β  iff  ¬α∨¬β ⪯ ¬α
//   P→   α ⪯ β   iff  ¬α∨¬β |~ ¬α
//   Ptr  α ⪯ β   iff  ¬β |~ δ1 |~ … |~ δn |~ ¬α for some n ≥ 0

#include <vector>

#include "entrench/consequence.hpp"
#include "entrench/entrenchment.hpp"

namespace entrench {

inline consequence_relation map_N(const entrenchment_relation& rel) {
  const class_lattice& lat = lattice_for(*rel.universe());
  std::vector<class_set> rows(lat.size());
  for (class_id a = 0; a < lat.size(); ++a)
    rel.below(lat.negate(a)).for_each([&](class_id nb) { rows[a].insert(lat.negate(nb)); });
  return {rel.universe(), std::move(rows)};
}

inline entrenchment_relation map_P(const consequence_relation& cons) {
  const class_lattice& lat = lattice_for(*cons.universe());
  std::vector<class_set> cols(lat.size());
  for (class_id b = 0; b < lat.size(); ++b)
    cons.above(lat.negate(b)).for_each([&](class_id na) { cols[b].insert(lat.negate(na)); });
  return {cons.universe(), std::move(cols)};
}

inline consequence_relation map_N_arrow(const entrenchment_relation& rel) {
  const class_lattice& lat = lattice_for(*rel.universe());
  std::vector<class_set> rows(lat.size());
  for (class_id a = 0; a < lat.size(); ++a) {
    const class_id na = lat.negate(a);
    for (class_id b = 0; b < lat.size(); ++b)
      if (rel.below(na).contains(na | lat.negate(b))) rows[a].insert(b);
  }
  return {rel.universe(), std::move(rows)};
}

inline entrenchment_relation map_P_arrow(const consequence_relation& cons) {
  const class_lattice& lat = lattice_for(*cons.universe());
  std::vector<class_set> cols(lat.size());
  for (class_id a = 0; a < lat.size(); ++a) {
    const class_id na = lat.negate(a);
    for (class_id b = 0; b < lat.size(); ++b)
      if (cons.holds(na | lat.negate(b), na)) cols[b].insert(a);
  }
  return {cons.universe(), std::move(cols)};
}

inline entrenchment_relation map_P_tr(const consequence_relation& cons) {
  const class_lattice& lat = lattice_for(*cons.universe());
  // Paths of length ≥ 1 in the |~ graph; the direct step is the n = 0 chain.
  const auto reach = detail::transitive_closure(cons.rows());
  std::vector<class_set> cols(lat.size());
  for (class_id b = 0; b < lat.size(); ++b)
    reach[lat.negate(b)].for_each([&](class_id na) { cols[b].insert(lat.negate(na)); });
  return {cons.universe(), std::move(cols)};
}

}  // namespace entrench
