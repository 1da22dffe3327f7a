#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "entrench/class_set.hpp"
#include "entrench/prop.hpp"

namespace entrench {

enum class property_status { holds, fails };

struct property_result {
  std::string name;
  property_status status = property_status::holds;
  /// Instantiating classes of a violated instance, in the order the rule
  /// names its variables (chains list every link).
  std::vector<class_id> witness;
  /// Non-Horn properties are reported but never used as closure rules.
  bool check_only = false;
  /// Rules whose reading is uncertain are reported as provisional.
  bool provisional = false;

  bool holds() const noexcept { return status == property_status::holds; }
};

struct property_report {
  std::vector<property_result> entries;

  const property_result& at(const std::string& name) const {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const property_result& r) { return r.name == name; });
    if (it == entries.end()) throw error("no property named '" + name + "'");
    return *it;
  }
  bool holds(const std::string& name) const { return at(name).holds(); }
};

/// Normalised rule name: lower case with '-', '_' and spaces removed, so
/// "RightConjunction", "right-conjunction" and "right_conjunction" agree.
inline std::string normalize_rule_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  }
  return out;
}

}  // namespace entrench
