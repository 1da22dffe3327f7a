#pragma once

// Propositional core: atom universes, semantic classes (formulas modulo
// classical equivalence) and principal theories over a finite language.
//
// A class is identified with the set of valuations that satisfy it, encoded
// as a bitmask: valuation v assigns atom i the value bit i of v, and bit v of
// the mask is set iff v is a model. Classical entailment is mask inclusion.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entrench/class_set.hpp"

namespace entrench {

inline constexpr std::size_t max_atoms = 4;
/// Relations are dense matrices over classes; beyond three atoms there are
/// 65536 classes and a matrix no longer fits comfortably in memory.
inline constexpr std::size_t max_relation_atoms = 3;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class universe_mismatch : public error {
 public:
  universe_mismatch() : error("operands belong to different atom universes") {}
};

class parse_error : public error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class unknown_atom : public error {
 public:
  explicit unknown_atom(std::string name)
      : error("unknown atom '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// `[a-z][a-z0-9_]*`, excluding the constant keywords.
inline bool is_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return name != "true" && name != "false";
}

class atom_universe {
 public:
  explicit atom_universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() > max_atoms)
      throw error("at most " + std::to_string(max_atoms) + " atoms are supported, got " +
                  std::to_string(atoms_.size()));
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!is_atom_name(atoms_[i])) throw error("invalid atom name '" + atoms_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (atoms_[j] == atoms_[i]) throw error("duplicate atom '" + atoms_[i] + "'");
    }
  }

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::size_t valuation_count() const noexcept { return std::size_t{1} << atoms_.size(); }
  std::size_t class_count() const noexcept { return std::size_t{1} << valuation_count(); }

  class_id top_mask() const noexcept {
    return static_cast<class_id>((std::uint64_t{1} << valuation_count()) - 1);
  }

  /// Mask of the valuations where atom `index` is true.
  class_id atom_mask(std::size_t index) const {
    if (index >= atoms_.size()) throw error("atom index out of range");
    class_id m = 0;
    for (std::size_t v = 0; v < valuation_count(); ++v)
      if ((v >> index) & 1U) m |= class_id{1} << v;
    return m;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == name) return i;
    return std::nullopt;
  }

  bool supports_relations() const noexcept { return atoms_.size() <= max_relation_atoms; }

  bool operator==(const atom_universe&) const = default;

 private:
  std::vector<std::string> atoms_;
};

using universe_ptr = std::shared_ptr<const atom_universe>;

inline universe_ptr make_universe(std::vector<std::string> atoms) {
  return std::make_shared<const atom_universe>(std::move(atoms));
}

inline void require_same_universe(const atom_universe& a, const atom_universe& b) {
  if (&a != &b && !(a == b)) throw universe_mismatch();
}

/// A formula modulo classical equivalence over a fixed universe.
class semantic_class {
 public:
  semantic_class(universe_ptr universe, class_id mask) : universe_(std::move(universe)), mask_(mask) {
    if (!universe_) throw error("semantic class without universe");
    if ((mask_ & ~universe_->top_mask()) != 0) throw error("mask outside the valuation space");
  }

  static semantic_class top(universe_ptr u) {
    const class_id m = u->top_mask();
    return {std::move(u), m};
  }
  static semantic_class bottom(universe_ptr u) { return {std::move(u), 0}; }

  class_id mask() const noexcept { return mask_; }
  const universe_ptr& universe() const noexcept { return universe_; }
  bool is_top() const noexcept { return mask_ == universe_->top_mask(); }
  bool is_bottom() const noexcept { return mask_ == 0; }
  std::size_t model_count() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

  friend bool operator==(const semantic_class& a, const semantic_class& b) {
    return a.mask_ == b.mask_ && (a.universe_ == b.universe_ || *a.universe_ == *b.universe_);
  }

 private:
  universe_ptr universe_;
  class_id mask_;
};

/// Classical entailment: every model of `a` is a model of `b`.
inline bool entails(const semantic_class& a, const semantic_class& b) {
  require_same_universe(*a.universe(), *b.universe());
  return (a.mask() & ~b.mask()) == 0;
}

enum class connective { conjunction, disjunction, implication };

inline semantic_class negate(const semantic_class& a) {
  return {a.universe(), a.universe()->top_mask() & ~a.mask()};
}

inline semantic_class combine(connective kind, const semantic_class& a, const semantic_class& b) {
  require_same_universe(*a.universe(), *b.universe());
  const class_id top = a.universe()->top_mask();
  switch (kind) {
    case connective::conjunction:
      return {a.universe(), a.mask() & b.mask()};
    case connective::disjunction:
      return {a.universe(), a.mask() | b.mask()};
    case connective::implication:
      return {a.universe(), (top & ~a.mask()) | b.mask()};
  }
  throw error("unknown connective");
}

inline semantic_class conjoin(const semantic_class& a, const semantic_class& b) {
  return combine(connective::conjunction, a, b);
}
inline semantic_class disjoin(const semantic_class& a, const semantic_class& b) {
  return combine(connective::disjunction, a, b);
}
inline semantic_class implies(const semantic_class& a, const semantic_class& b) {
  return combine(connective::implication, a, b);
}

/// Deductively closed set Cn(generator). Over a finite language every
/// closed set is principal, so the generator determines the theory.
class theory {
 public:
  explicit theory(semantic_class generator) : generator_(std::move(generator)) {}

  const semantic_class& generator() const noexcept { return generator_; }
  bool contains(const semantic_class& d) const { return entails(generator_, d); }
  bool consistent() const noexcept { return !generator_.is_bottom(); }
  /// Cn(this) ⊆ Cn(other)
  bool subset_of(const theory& other) const { return entails(other.generator_, generator_); }

  friend bool operator==(const theory&, const theory&) = default;

 private:
  semantic_class generator_;
};

/// The up-set of the generator, ascending by mask.
inline std::vector<semantic_class> consequences(const theory& t) {
  const auto& u = t.generator().universe();
  const class_id g = t.generator().mask();
  const class_id free = u->top_mask() & ~g;
  std::vector<semantic_class> out;
  // Subsets of the complement in increasing order; each gives one superset of g.
  class_id sub = 0;
  do {
    out.emplace_back(u, g | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

/// Precomputed order structure of the class lattice for universes with at
/// most three atoms: the down-set and up-set of every class.
class class_lattice {
 public:
  static const class_lattice& of(std::size_t atom_count) {
    static const std::array<class_lattice, max_relation_atoms + 1> lattices = {
        class_lattice(0), class_lattice(1), class_lattice(2), class_lattice(3)};
    if (atom_count > max_relation_atoms)
      throw error("relations support at most " + std::to_string(max_relation_atoms) + " atoms");
    return lattices[atom_count];
  }

  std::size_t size() const noexcept { return size_; }
  class_id top() const noexcept { return top_; }
  class_id negate(class_id c) const noexcept { return top_ & ~c; }
  const class_set& all() const noexcept { return all_; }
  /// {x : x ⊢ c}
  const class_set& down(class_id c) const { return down_[c]; }
  /// {x : c ⊢ x}
  const class_set& up(class_id c) const { return up_[c]; }

 private:
  explicit class_lattice(std::size_t atom_count)
      : size_(std::size_t{1} << (std::size_t{1} << atom_count)),
        top_(static_cast<class_id>(size_ - 1)),
        all_(class_set::first(size_)),
        down_(size_),
        up_(size_) {
    for (class_id a = 0; a < size_; ++a)
      for (class_id b = 0; b < size_; ++b)
        if ((a & ~b) == 0) {
          down_[b].insert(a);
          up_[a].insert(b);
        }
  }

  std::size_t size_ = 0;
  class_id top_ = 0;
  class_set all_;
  std::vector<class_set> down_;
  std::vector<class_set> up_;
};

inline const class_lattice& lattice_for(const atom_universe& u) { return class_lattice::of(u.size()); }

}  // namespace entrench
