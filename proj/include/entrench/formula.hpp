#pragma once

// Formula syntax trees, the ASCII parser and printer, and classification of
// formulas into semantic classes by truth-table enumeration.
//
// Grammar (lowest to highest precedence):
//   implication := disjunction ( "->" implication )?        right-associative
//   disjunction := conjunction ( "|" conjunction )*
//   conjunction := unary ( "&" unary )*
//   unary       := ( "~" | "!" ) unary | primary
//   primary     := atom | "true" | "false" | "(" implication ")"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "entrench/prop.hpp"

namespace entrench {

class formula {
 public:
  enum class kind { atom, top, bottom, negation, conjunction, disjunction, implication };

  static formula atom(universe_ptr u, std::size_t index) {
    if (index >= u->size()) throw error("atom index out of range");
    return formula(std::move(u), std::make_shared<const node>(node{kind::atom, index, {}, {}}));
  }
  static formula atom(universe_ptr u, std::string_view name) {
    auto index = u->find(name);
    if (!index) throw unknown_atom(std::string(name));
    return atom(std::move(u), *index);
  }
  static formula top(universe_ptr u) { return formula(std::move(u), leaf(kind::top)); }
  static formula bottom(universe_ptr u) { return formula(std::move(u), leaf(kind::bottom)); }

  friend formula operator~(const formula& f) {
    return formula(f.universe_, std::make_shared<const node>(node{kind::negation, 0, f.root_, {}}));
  }
  friend formula operator&(const formula& a, const formula& b) { return binary(kind::conjunction, a, b); }
  friend formula operator|(const formula& a, const formula& b) { return binary(kind::disjunction, a, b); }
  static formula implication(const formula& a, const formula& b) { return binary(kind::implication, a, b); }

  kind type() const noexcept { return root_->type; }
  std::size_t atom_index() const noexcept { return root_->atom; }
  /// Operand of a negation, or left operand of a binary connective.
  formula left() const { return {universe_, root_->left}; }
  formula right() const { return {universe_, root_->right}; }
  const universe_ptr& universe() const noexcept { return universe_; }

  /// Structural equality (same tree, same universe).
  friend bool operator==(const formula& a, const formula& b) {
    if (!(*a.universe_ == *b.universe_)) return false;
    return same_tree(a.root_.get(), b.root_.get());
  }

 private:
  struct node {
    kind type;
    std::size_t atom;
    std::shared_ptr<const node> left;
    std::shared_ptr<const node> right;
  };
  using node_ptr = std::shared_ptr<const node>;

  formula(universe_ptr u, node_ptr root) : universe_(std::move(u)), root_(std::move(root)) {}

  static node_ptr leaf(kind k) { return std::make_shared<const node>(node{k, 0, {}, {}}); }

  static formula binary(kind k, const formula& a, const formula& b) {
    require_same_universe(*a.universe_, *b.universe_);
    return formula(a.universe_, std::make_shared<const node>(node{k, 0, a.root_, b.root_}));
  }

  static bool same_tree(const node* a, const node* b) {
    if (a == b) return true;
    if (a->type != b->type) return false;
    switch (a->type) {
      case kind::atom:
        return a->atom == b->atom;
      case kind::top:
      case kind::bottom:
        return true;
      case kind::negation:
        return same_tree(a->left.get(), b->left.get());
      default:
        return same_tree(a->left.get(), b->left.get()) && same_tree(a->right.get(), b->right.get());
    }
  }

  universe_ptr universe_;
  node_ptr root_;
};

namespace detail {

class formula_parser {
 public:
  formula_parser(std::string_view text, universe_ptr u) : text_(text), universe_(std::move(u)) {}

  formula parse() {
    formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  formula implication() {
    formula lhs = disjunction();
    if (accept("->")) return formula::implication(lhs, implication());
    return lhs;
  }

  formula disjunction() {
    formula f = conjunction();
    while (peek_single('|')) {
      ++pos_;
      f = f | conjunction();
    }
    return f;
  }

  formula conjunction() {
    formula f = unary();
    while (peek_single('&')) {
      ++pos_;
      f = f & unary();
    }
    return f;
  }

  formula unary() {
    skip_space();
    if (pos_ < text_.size() && (text_[pos_] == '~' || text_[pos_] == '!')) {
      ++pos_;
      return ~unary();
    }
    return primary();
  }

  formula primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      formula inner = implication();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                     std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "true") return formula::top(universe_);
      if (word == "false") return formula::bottom(universe_);
      if (!universe_->find(word)) throw unknown_atom(std::string(word));
      return formula::atom(universe_, word);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool peek_single(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

  std::string_view text_;
  universe_ptr universe_;
  std::size_t pos_ = 0;
};

inline int precedence(formula::kind k) {
  switch (k) {
    case formula::kind::implication:
      return 1;
    case formula::kind::disjunction:
      return 2;
    case formula::kind::conjunction:
      return 3;
    case formula::kind::negation:
      return 4;
    default:
      return 5;
  }
}

inline void print(const formula& f, std::string& out) {
  using k = formula::kind;
  auto child = [&out](const formula& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (f.type()) {
    case k::atom:
      out += f.universe()->atoms()[f.atom_index()];
      return;
    case k::top:
      out += "true";
      return;
    case k::bottom:
      out += "false";
      return;
    case k::negation:
      out += '~';
      child(f.left(), precedence(f.left().type()) < precedence(k::negation));
      return;
    default:
      break;
  }
  const int p = precedence(f.type());
  const bool right_assoc = f.type() == k::implication;
  const char* op = f.type() == k::conjunction ? " & " : f.type() == k::disjunction ? " | " : " -> ";
  const int lp = precedence(f.left().type());
  const int rp = precedence(f.right().type());
  child(f.left(), right_assoc ? lp <= p : lp < p);
  out += op;
  child(f.right(), right_assoc ? rp < p : rp <= p);
}

inline class_id evaluate_mask(const formula& f) {
  const class_id top = f.universe()->top_mask();
  switch (f.type()) {
    case formula::kind::atom:
      return f.universe()->atom_mask(f.atom_index());
    case formula::kind::top:
      return top;
    case formula::kind::bottom:
      return 0;
    case formula::kind::negation:
      return top & ~evaluate_mask(f.left());
    case formula::kind::conjunction:
      return evaluate_mask(f.left()) & evaluate_mask(f.right());
    case formula::kind::disjunction:
      return evaluate_mask(f.left()) | evaluate_mask(f.right());
    case formula::kind::implication:
      return (top & ~evaluate_mask(f.left())) | evaluate_mask(f.right());
  }
  return 0;
}

}  // namespace detail

inline formula parse_formula(std::string_view text, const universe_ptr& universe) {
  return detail::formula_parser(text, universe).parse();
}

inline std::string to_string(const formula& f) {
  std::string out;
  detail::print(f, out);
  return out;
}

/// The semantic class of `f`: exactly its satisfying valuations.
inline semantic_class classify(const formula& f) { return {f.universe(), detail::evaluate_mask(f)}; }

inline semantic_class parse_class(std::string_view text, const universe_ptr& universe) {
  return classify(parse_formula(text, universe));
}

}  // namespace entrench
