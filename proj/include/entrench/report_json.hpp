#pragma once

// Text and JSON renderings of verification and property reports.

#include <string>

#include <nlohmann/json.hpp>

#include "entrench/naming.hpp"
#include "entrench/report.hpp"
#include "entrench/verify.hpp"

namespace entrench {

inline nlohmann::ordered_json to_json(const verification_failure& f) {
  nlohmann::ordered_json j;
  j["sample"] = f.sample;
  j["sample_seed"] = f.sample_seed;
  j["relation"] = f.relation;
  j["profile"] = f.profile;
  j["statements"] = f.statements;
  j["check"] = f.check;
  j["instantiation"] = f.instantiation;
  j["expected"] = f.expected;
  j["actual"] = f.actual;
  return j;
}

inline nlohmann::ordered_json to_json(const verification_report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["description"] = r.description;
  j["atoms"] = r.n_atoms;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["checks"] = r.checks;
  j["failure_count"] = r.failure_count;
  j["passed"] = r.passed();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back(to_json(f));
  j["informational"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.informational) j["informational"][k] = v;
  return j;
}

inline std::string render_text(const verification_report& r) {
  std::string out = "suite " + r.suite + ": " + r.description + "\n";
  out += "atoms " + std::to_string(r.n_atoms) + ", samples " + std::to_string(r.samples) + ", seed " +
         std::to_string(r.seed) + "\n";
  out += "checks " + std::to_string(r.checks) + ", failures " + std::to_string(r.failure_count) + "\n";
  for (const auto& f : r.failures) {
    out += "FAIL sample " + std::to_string(f.sample) + " (seed " + std::to_string(f.sample_seed) + ") " + f.check +
           "\n";
    if (!f.profile.empty()) out += "  " + f.relation + " profile: " + f.profile + "\n";
    for (const auto& s : f.statements) out += "  stmt: " + s + "\n";
    if (!f.instantiation.empty()) out += "  at: " + f.instantiation + "\n";
    out += "  expected " + f.expected + ", got " + f.actual + "\n";
  }
  if (r.failure_count > r.failures.size())
    out += "(" + std::to_string(r.failure_count - r.failures.size()) + " more failures not shown)\n";
  for (const auto& [k, v] : r.informational) out += "info: " + k + ": " + std::to_string(v) + "\n";
  out += r.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

inline nlohmann::ordered_json to_json(const property_report& r, const class_namer& name) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json item;
    item["property"] = e.name;
    item["holds"] = e.holds();
    if (e.check_only) item["check_only"] = true;
    if (e.provisional) item["provisional"] = true;
    if (!e.holds()) {
      item["witness"] = nlohmann::ordered_json::array();
      for (class_id c : e.witness) item["witness"].push_back(name(c));
    }
    j.push_back(std::move(item));
  }
  return j;
}

inline std::string render_text(const property_report& r, const class_namer& name) {
  std::string out;
  for (const auto& e : r.entries) {
    out += e.name + ": " + (e.holds() ? "holds" : "fails");
    if (e.check_only) out += " (check only)";
    if (e.provisional) out += " (provisional)";
    if (!e.holds()) {
      out += " at (";
      for (std::size_t i = 0; i < e.witness.size(); ++i) out += (i ? ", " : "") + name(e.witness[i]);
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace entrench
