#pragma once

// Seeded generation of random frames and consequence relations. Draws use
// mt19937_64 with a fixed rejection scheme so that results are identical
// across standard library implementations.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "entrench/consequence.hpp"
#include "entrench/entrenchment.hpp"

namespace entrench {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform value in [0, bound) by rejection.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw error("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline std::vector<class_pair> random_pairs(std::uint64_t seed, std::size_t class_count, std::size_t k) {
  std::mt19937_64 rng(seed);
  std::vector<class_pair> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<class_id>(bounded_draw(rng, class_count));
    const auto b = static_cast<class_id>(bounded_draw(rng, class_count));
    out.push_back({a, b});
  }
  return out;
}

/// `k` uniformly drawn class pairs a ⪯ b, closed under `profile`.
inline entrenchment_relation random_frame(std::uint64_t seed, const universe_ptr& universe, std::size_t k,
                                          const rule_profile& profile) {
  const auto pairs = random_pairs(seed, universe->class_count(), k);
  return close_entrenchment(universe, std::span<const class_pair>(pairs), profile);
}

/// `k` uniformly drawn class pairs a |~ b, closed under `profile`.
inline consequence_relation random_consequence(std::uint64_t seed, const universe_ptr& universe, std::size_t k,
                                               const nm_profile& profile) {
  const auto pairs = random_pairs(seed, universe->class_count(), k);
  return close_consequence(universe, std::span<const class_pair>(pairs), profile);
}

/// Universe of the first `n` atoms of p, q, r, s.
inline universe_ptr standard_universe(std::size_t n) {
  static const char* names[] = {"p", "q", "r", "s"};
  if (n > max_atoms) throw error("at most " + std::to_string(max_atoms) + " atoms are supported");
  std::vector<std::string> atoms(names, names + n);
  return make_universe(std::move(atoms));
}

}  // namespace entrench
