#pragma once

#include <string>
#include <vector>

#include "entrench/formula.hpp"

namespace entrench {

/// Readable names for semantic classes. For universes of up to three atoms
/// each class is named by a smallest formula denoting it (fewest symbols,
/// ties broken by generation order: atoms, constants, &, |, ->, negation).
/// Larger universes fall back to a disjunction of minterms.
class class_namer {
 public:
  explicit class_namer(universe_ptr universe) : universe_(std::move(universe)) {
    if (universe_->size() <= max_relation_atoms) build_shortest();
  }

  const universe_ptr& universe() const noexcept { return universe_; }

  std::string operator()(class_id c) const {
    if (!names_.empty()) return names_.at(c).text;
    return minterm_name(c);
  }
  std::string operator()(const semantic_class& c) const {
    require_same_universe(*c.universe(), *universe_);
    return (*this)(c.mask());
  }

 private:
  struct entry {
    std::string text;
    int precedence = 0;
    std::size_t size = 0;
    bool known = false;
  };

  static std::string wrap(const entry& e, bool parens) { return parens ? "(" + e.text + ")" : e.text; }

  void build_shortest() {
    const class_lattice& lat = lattice_for(*universe_);
    const std::size_t count = lat.size();
    names_.assign(count, entry{});
    std::vector<std::vector<class_id>> by_size(1);
    std::size_t found = 0;
    auto offer = [&](class_id c, std::string text, int prec, std::size_t size) {
      if (names_[c].known) return;
      names_[c] = entry{std::move(text), prec, size, true};
      if (by_size.size() <= size) by_size.resize(size + 1);
      by_size[size].push_back(c);
      ++found;
    };
    for (std::size_t i = 0; i < universe_->size(); ++i)
      offer(universe_->atom_mask(i), universe_->atoms()[i], 5, 1);
    offer(lat.top(), "true", 5, 1);
    offer(0, "false", 5, 1);
    for (std::size_t size = 2; found < count; ++size) {
      if (by_size.size() <= size) by_size.resize(size + 1);
      // Snapshot level contents: offers during this round only add `size`.
      for (std::size_t ls = 1; ls + 1 < size; ++ls) {
        const std::size_t rs = size - 1 - ls;
        if (rs >= by_size.size() || ls >= by_size.size()) continue;
        const std::vector<class_id> lefts = by_size[ls];
        const std::vector<class_id> rights = by_size[rs];
        for (class_id a : lefts)
          for (class_id b : rights) {
            const entry& ea = names_[a];
            const entry& eb = names_[b];
            offer(a & b, wrap(ea, ea.precedence < 3) + " & " + wrap(eb, eb.precedence <= 3), 3, size);
            offer(a | b, wrap(ea, ea.precedence < 2) + " | " + wrap(eb, eb.precedence <= 2), 2, size);
            offer(lat.negate(a) | b, wrap(ea, ea.precedence <= 1) + " -> " + wrap(eb, eb.precedence < 1), 1,
                  size);
          }
      }
      for (class_id c : std::vector<class_id>(by_size[size - 1]))
        offer(lat.negate(c), "~" + wrap(names_[c], names_[c].precedence < 4), 4, size);
    }
  }

  std::string minterm_name(class_id c) const {
    if (c == 0) return "false";
    if (c == universe_->top_mask()) return "true";
    std::string out;
    for (std::size_t v = 0; v < universe_->valuation_count(); ++v) {
      if (!((c >> v) & 1U)) continue;
      if (!out.empty()) out += " | ";
      std::string term;
      for (std::size_t i = 0; i < universe_->size(); ++i) {
        if (!term.empty()) term += " & ";
        if (!((v >> i) & 1U)) term += '~';
        term += universe_->atoms()[i];
      }
      out += universe_->size() > 1 ? "(" + term + ")" : term;
    }
    return out;
  }

  universe_ptr universe_;
  std::vector<entry> names_;
};

}  // namespace entrench
