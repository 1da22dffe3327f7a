#pragma once

// The penguin demo: the shipped frame, its coherent set at p and
// the extensions at p, b and true.

#include <string>
#include <string_view>
#include <vector>

#include "entrench/maxiconsistent.hpp"
#include "entrench/naming.hpp"
#include "entrench/theory_file.hpp"

namespace entrench {

/// Same content as theories/figure1.ent.
inline constexpr std::string_view figure1_theory_text =
    "# penguins: a transitive entrenchment frame over p (penguin), b (bird), f (flies)\n"
    "atoms: p b f\n"
    "profile: base+transitivity\n"
    "stmt: f <= ~p\n"
    "stmt: ~f <= ~b\n"
    "stmt: ~b <= ~p\n"
    "stmt: ~p <= true\n"
    "stmt: ~p <= p -> ~f\n"
    "stmt: true <= p -> ~f\n";

inline constexpr std::string_view figure1_note =
    "note: the informal walkthrough of this frame concludes that p nonmonotonically\n"
    "implies ~f and that true has two extensions. It reasons over the sentences\n"
    "labelled in the diagram only. Over all deductively closed theories, as the\n"
    "definitions require, Cn(p & b) is a maximal base at p that does not contain\n"
    "p -> ~f, so p does not infer ~f here. The statements that would reproduce the\n"
    "walkthrough are not given, and none are added.\n";

inline constexpr const char* figure1_premises[] = {"p", "b", "true"};

struct demo_premise {
  std::string premise;
  std::vector<class_id> strong;
  std::vector<class_id> weak;
};

/// Everything the demo prints, as class ids, so an independent computation
/// can be rendered identically.
struct demo_view {
  theory_file theory;
  std::size_t coh_size = 0;
  std::vector<class_id> coh_minimal;
  std::vector<demo_premise> premises;
  bool p_infers_not_f_strong = false;
  bool p_infers_not_f_weak = false;
};

inline theory_file figure1_theory() { return parse_theory(figure1_theory_text, "figure1.ent"); }

inline demo_view figure1_demo() {
  demo_view view;
  view.theory = figure1_theory();
  const auto& u = view.theory.universe;
  const auto rel = view.theory.frame();
  const class_lattice& lat = lattice_for(*u);
  const auto p = parse_class("p", u);
  const class_set coh = make_coherent_set(rel, p).members;
  view.coh_size = coh.size();
  view.coh_minimal = detail::minimal_members(coh, lat);
  for (const char* premise : figure1_premises) {
    const auto a = parse_class(premise, u);
    demo_premise d{premise, {}, {}};
    for (const auto& t : extensions(rel, a, false).extensions) d.strong.push_back(t.generator().mask());
    for (const auto& t : extensions(rel, a, true).extensions) d.weak.push_back(t.generator().mask());
    view.premises.push_back(std::move(d));
  }
  const auto not_f = parse_class("~f", u);
  view.p_infers_not_f_strong = infers(rel, p, not_f, false);
  view.p_infers_not_f_weak = infers(rel, p, not_f, true);
  return view;
}

inline std::string render_demo(const demo_view& view) {
  const class_namer name(view.theory.universe);
  std::string out = "penguin frame\n";
  out += "atoms:";
  for (const auto& a : view.theory.universe->atoms()) out += " " + a;
  out += "\nprofile: " + view.theory.profile_name + "\nstatements:\n";
  for (const auto& [l, r] : view.theory.entrenchment_statements) out += "  " + to_string(l) + " <= " + to_string(r) + "\n";
  out += "\nCoh(p): " + std::to_string(view.coh_size) + " of " +
         std::to_string(view.theory.universe->class_count()) + " classes, minimal members:\n";
  for (class_id c : view.coh_minimal) out += "  " + name(c) + "\n";
  auto list = [&](const std::string& label, const std::vector<class_id>& gens) {
    out += label + ": " + std::to_string(gens.size()) + "\n";
    for (class_id g : gens) out += "  Cn(" + name(g) + ")\n";
  };
  for (const auto& d : view.premises) {
    out += "\n";
    list("extensions at " + d.premise, d.strong);
    list("weak extensions at " + d.premise, d.weak);
  }
  out += "\np |~ ~f: ";
  out += view.p_infers_not_f_strong ? "yes" : "no";
  out += "\np |~w ~f: ";
  out += view.p_infers_not_f_weak ? "yes" : "no";
  out += "\n\n";
  out += figure1_note;
  return out;
}

}  // namespace entrench
