#pragma once

// The penguin demo computed by the brute-force oracle over all 256 classes
// and rendered with the demo's printer.

#include <algorithm>
#include <string>

#include "entrench/demo.hpp"
#include "oracle.hpp"

inline std::string oracle_figure1_text() {
  using namespace entrench;
  demo_view view;
  view.theory = figure1_theory();
  const auto& u = view.theory.universe;
  const oracle::lang L(3);

  std::vector<std::pair<oracle::mask, oracle::mask>> pairs;
  for (const auto& [l, r] : view.theory.entrenchment_statements) pairs.push_back({classify(l).mask(), classify(r).mask()});
  const auto m = oracle::close_frame(L, pairs, {rule::transitivity});

  const oracle::mask p = parse_class("p", u).mask();
  const oracle::set coh = oracle::coh(L, m, p);
  view.coh_size = coh.count();
  for (oracle::mask b = 0; b < L.count; ++b) {
    if (!coh[b]) continue;
    bool minimal = true;
    for (oracle::mask c = 0; c < L.count && minimal; ++c)
      if (c != b && coh[c] && oracle::lang::entails(c, b)) minimal = false;
    if (minimal) view.coh_minimal.push_back(b);
  }
  auto gens = [&](oracle::mask a, bool weak) {
    std::vector<class_id> out;
    for (const auto& t : oracle::extensions(L, m, a, weak)) out.push_back(oracle::generator(L, t));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const char* premise : figure1_premises) {
    const oracle::mask a = parse_class(premise, u).mask();
    view.premises.push_back({premise, gens(a, false), gens(a, true)});
  }
  const oracle::mask not_f = parse_class("~f", u).mask();
  view.p_infers_not_f_strong = oracle::sceptical(L, oracle::extensions(L, m, p, false))[not_f];
  view.p_infers_not_f_weak = oracle::sceptical(L, oracle::extensions(L, m, p, true))[not_f];
  return render_demo(view);
}
