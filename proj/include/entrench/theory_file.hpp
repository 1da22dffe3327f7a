#pragma once

// Theory files: a small line-oriented format describing either an
// entrenchment frame or a consequence relation.
//
//   # comment
//   atoms: p b f
//   profile: base+transitivity        (or  rules: Transitivity, RightConjunction)
//   stmt: f <= ~p                     entrenchment statement, left ⪯ right
//   cstmt: p |~ ~f                    consequence statement
//
// A file holds statements of one kind only. Inside `cstmt:` lines the first
// `|~` separates premise from conclusion; write `| ~` for a disjunction with
// a negated disjunct.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entrench/consequence.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"

namespace entrench {

class theory_file_error : public error {
 public:
  theory_file_error(const std::string& source, std::size_t line, const std::string& message)
      : error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct theory_file {
  universe_ptr universe;
  /// Profile as written, e.g. "base+transitivity"; empty when defaulted.
  std::string profile_name;
  std::vector<std::pair<formula, formula>> entrenchment_statements;
  std::vector<std::pair<formula, formula>> consequence_statements;

  bool describes_consequence() const { return !consequence_statements.empty(); }

  rule_profile frame_profile() const {
    return profile_name.empty() ? rule_profile::frame() : rule_profile::parse(profile_name);
  }
  nm_profile consequence_profile() const {
    return profile_name.empty() ? nm_profile::core() : nm_profile::parse(profile_name);
  }

  std::vector<class_pair> class_pairs(const std::vector<std::pair<formula, formula>>& stmts) const {
    std::vector<class_pair> out;
    for (const auto& [l, r] : stmts) out.push_back({classify(l).mask(), classify(r).mask()});
    return out;
  }

  entrenchment_relation frame() const {
    if (describes_consequence()) throw error("theory describes a consequence relation, not a frame");
    const auto pairs = class_pairs(entrenchment_statements);
    return close_entrenchment(universe, std::span<const class_pair>(pairs), frame_profile());
  }

  consequence_relation consequence() const {
    if (!entrenchment_statements.empty()) throw error("theory describes a frame, not a consequence relation");
    const auto pairs = class_pairs(consequence_statements);
    return close_consequence(universe, std::span<const class_pair>(pairs), consequence_profile());
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline theory_file parse_theory(std::string_view text, const std::string& source = "<input>") {
  theory_file out;
  std::optional<std::string> profile;
  std::size_t profile_line = 0;
  std::size_t atoms_line = 0;
  std::size_t line_no = 0;
  struct pending {
    std::size_t line;
    bool consequence;
    std::string left, right;
  };
  std::vector<pending> statements;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw theory_file_error(source, line_no, "expected 'key: value'");
    const std::string_view key = detail::trim(line.substr(0, colon));
    const std::string_view value = detail::trim(line.substr(colon + 1));
    auto fail = [&](const std::string& msg) { throw theory_file_error(source, line_no, msg); };

    if (key == "atoms") {
      if (out.universe) fail("duplicate atoms line");
      atoms_line = line_no;
      std::vector<std::string> atoms;
      std::istringstream in{std::string(value)};
      for (std::string a; in >> a;) atoms.push_back(a);
      try {
        out.universe = make_universe(std::move(atoms));
      } catch (const error& e) {
        fail(e.what());
      }
    } else if (key == "profile" || key == "rules") {
      if (profile) fail("duplicate profile line");
      std::string p(value);
      if (key == "rules") {
        std::string joined;
        std::istringstream in(p);
        for (std::string r; std::getline(in, r, ',');) {
          const auto t = detail::trim(r);
          if (t.empty()) continue;
          if (!joined.empty()) joined += '+';
          joined += t;
        }
        p = joined;
      }
      if (p.empty()) fail("empty profile");
      profile = p;
      profile_line = line_no;
    } else if (key == "stmt" || key == "cstmt") {
      const bool cons = key == "cstmt";
      const std::string_view sep = cons ? "|~" : "<=";
      const auto at = value.find(sep);
      if (at == std::string_view::npos) fail("expected '" + std::string(sep) + "' in statement");
      statements.push_back({line_no, cons, std::string(detail::trim(value.substr(0, at))),
                            std::string(detail::trim(value.substr(at + sep.size())))});
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }

  if (!out.universe) throw theory_file_error(source, line_no, "missing atoms line");
  if (!out.universe->supports_relations())
    throw theory_file_error(source, atoms_line,
                            "relations support at most " + std::to_string(max_relation_atoms) + " atoms");

  bool seen_frame = false, seen_cons = false;
  for (const auto& s : statements) {
    (s.consequence ? seen_cons : seen_frame) = true;
    if (seen_cons && seen_frame)
      throw theory_file_error(source, s.line, "a theory file cannot mix 'stmt' and 'cstmt' lines");
    try {
      auto pair = std::make_pair(parse_formula(s.left, out.universe), parse_formula(s.right, out.universe));
      (s.consequence ? out.consequence_statements : out.entrenchment_statements).push_back(std::move(pair));
    } catch (const error& e) {
      throw theory_file_error(source, s.line, e.what());
    }
  }

  if (profile) {
    out.profile_name = *profile;
    try {
      if (seen_cons)
        (void)nm_profile::parse(*profile);
      else
        (void)rule_profile::parse(*profile);
    } catch (const error& e) {
      throw theory_file_error(source, profile_line, e.what());
    }
  }
  return out;
}

inline theory_file load_theory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str(), path);
}

}  // namespace entrench
