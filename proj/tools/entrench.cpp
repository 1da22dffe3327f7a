// entrench: command line front end for theory files and verification suites.
//
// Exit status: 0 on success, 1 when a verification suite reports failures,
// 2 on usage, parse or input errors.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entrench/entrench.hpp"
#include "entrench/report_json.hpp"

namespace {

using namespace entrench;

int run_query(const std::string& path, const std::string& premise, const std::string& conclusion, bool weak,
              bool credulous) {
  const auto t = load_theory(path);
  const auto rel = t.frame();
  const auto a = parse_class(premise, t.universe);
  const auto b = parse_class(conclusion, t.universe);
  const bool yes = credulous ? credulous_infers(rel, a, b, weak) : infers(rel, a, b, weak);
  std::cout << premise << (weak ? " |~w " : " |~ ") << conclusion << (credulous ? " (credulous)" : "") << ": "
            << (yes ? "yes" : "no") << "\n";
  return 0;
}

int run_extensions(const std::string& path, const std::string& premise, bool weak) {
  const auto t = load_theory(path);
  const auto rel = t.frame();
  const class_namer name(t.universe);
  const auto a = parse_class(premise, t.universe);
  const auto ext = extensions(rel, a, weak);
  std::cout << (weak ? "weak extensions at " : "extensions at ") << premise << ": " << ext.size() << "\n";
  for (const auto& e : ext.extensions) std::cout << "  Cn(" << name(e.generator()) << ")\n";
  std::cout << "sceptical: Cn(" << name(sceptical(rel, a, weak).generator()) << ")\n";
  return 0;
}

int run_properties(const std::string& path, const std::string& format) {
  const auto t = load_theory(path);
  const class_namer name(t.universe);
  const auto report =
      t.describes_consequence() ? check_nm_properties(t.consequence()) : check_entrenchment_properties(t.frame());
  if (format == "json")
    std::cout << to_json(report, name).dump(2) << "\n";
  else
    std::cout << render_text(report, name);
  return 0;
}

// Pairs that are not already forced: dominance pairs for frames, classical
// consequences for consequence relations.
void print_relation(const entrenchment_relation& rel, const class_namer& name) {
  const auto dom = dominance_relation(rel.universe());
  const auto n = static_cast<class_id>(rel.universe()->class_count());
  std::cout << "entrenchment relation: " << rel.pair_count() << " pairs, non-dominance pairs:\n";
  for (class_id a = 0; a < n; ++a)
    for (class_id b = 0; b < n; ++b)
      if (rel.holds(a, b) && !dom.holds(a, b)) std::cout << "  " << name(a) << " <= " << name(b) << "\n";
}

void print_relation(const consequence_relation& rel, const class_namer& name) {
  const auto cl = classical_consequence(rel.universe());
  const auto n = static_cast<class_id>(rel.universe()->class_count());
  std::cout << "consequence relation: " << rel.pair_count() << " pairs, non-classical pairs:\n";
  for (class_id a = 0; a < n; ++a)
    for (class_id b = 0; b < n; ++b)
      if (rel.holds(a, b) && !cl.holds(a, b)) std::cout << "  " << name(a) << " |~ " << name(b) << "\n";
}

int run_dual(const std::string& path, const std::string& map) {
  const auto t = load_theory(path);
  const class_namer name(t.universe);
  if (map == "N" || map == "Nw") {
    if (t.describes_consequence()) throw error("map " + map + " takes an entrenchment frame");
    const auto rel = t.frame();
    print_relation(map == "N" ? map_N(rel) : map_N_arrow(rel), name);
  } else {
    if (!t.describes_consequence() && !t.entrenchment_statements.empty())
      throw error("map " + map + " takes a consequence relation");
    const auto cons = t.consequence();
    print_relation(map == "P" ? map_P(cons) : map == "Pw" ? map_P_arrow(cons) : map_P_tr(cons), name);
  }
  return 0;
}

int run_verify(const std::string& suite, std::size_t atoms, std::size_t samples, std::uint64_t seed,
               const std::string& format, bool list) {
  if (list) {
    for (const auto& s : verification_suites()) std::cout << s.name << "  " << s.description << "\n";
    return 0;
  }
  if (suite.empty()) throw error("--suite is required");
  const auto report = verify_suite(suite, atoms, samples, seed);
  if (format == "json")
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << render_text(report);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrenchment relations and maxiconsistent inference"};
  app.require_subcommand(1);

  std::string file, premise, conclusion, map, suite, format = "text", demo_name;
  bool weak = false, credulous = false, list = false;
  std::size_t atoms = 2, samples = 100;
  std::uint64_t seed = 1;

  auto* query = app.add_subcommand("query", "decide premise |~ conclusion over a frame");
  query->add_option("file", file, "theory file")->required();
  query->add_option("--premise", premise)->required();
  query->add_option("--conclusion", conclusion)->required();
  query->add_flag("--weak", weak, "weak maxiconsistent inference");
  query->add_flag("--credulous", credulous, "membership in some extension");

  auto* ext = app.add_subcommand("extensions", "list the extensions at a premise");
  ext->add_option("file", file, "theory file")->required();
  ext->add_option("--premise", premise)->required();
  ext->add_flag("--weak", weak, "weak maxiconsistent inference");

  auto* props = app.add_subcommand("properties", "check every rule on the closed relation");
  props->add_option("file", file, "theory file")->required();
  props->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* dual = app.add_subcommand("dual", "apply a duality map");
  dual->add_option("file", file, "theory file")->required();
  dual->add_option("--map", map)->required()->check(CLI::IsMember({"N", "P", "Nw", "Pw", "Ptr"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite);
  verify->add_option("--atoms", atoms)->check(CLI::Range(0, 3));
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--list", list, "list suites");

  auto* demo = app.add_subcommand("demo", "shipped demonstrations");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"figure1"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*query) return run_query(file, premise, conclusion, weak, credulous);
    if (*ext) return run_extensions(file, premise, weak);
    if (*props) return run_properties(file, format);
    if (*dual) return run_dual(file, map);
    if (*verify) return run_verify(suite, atoms, samples, seed, format, list);
    if (*demo) {
      std::cout << render_demo(figure1_demo());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "entrench: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
