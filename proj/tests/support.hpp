#pragma once

// Independent oracles and random generators shared by the test binaries.
// Nothing here calls the library routine it is used to check.

#include "juror/juror.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace juror::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Rational strictly between lo and hi with denominator up to max_den.
inline Rational random_rational_between(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den = 97) {
  for (;;) {
    std::int64_t den = uniform_int(rng, 2, max_den);
    std::int64_t num = uniform_int(rng, 0, den);
    Rational r = lo + (hi - lo) * Rational(num, den);
    if (r > lo && r < hi) return r;
  }
}

// Closed interval [lo, hi], endpoints included with some probability.
inline Rational random_rational_closed(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den = 97) {
  switch (uniform_int(rng, 0, 9)) {
    case 0: return lo;
    case 1: return hi;
    default: return random_rational_between(rng, lo, hi, max_den);
  }
}

inline PointSet random_subset(Rng& rng, std::size_t ground) {
  PointSet s(ground);
  for (std::size_t p = 0; p < ground; ++p) {
    if (uniform_int(rng, 0, 1) == 1) s.set(p);
  }
  return s;
}

// Random probability vector of length k with the given number of forced zeros.
inline std::vector<Rational> random_masses(Rng& rng, std::size_t k, std::size_t zeros = 0) {
  std::vector<std::int64_t> weights(k);
  for (auto& w : weights) w = uniform_int(rng, 1, 20);
  for (std::size_t z = 0; z < zeros && z < k; ++z) weights[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(k) - 1))] = 0;
  std::int64_t total = 0;
  for (auto w : weights) total += w;
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  std::vector<Rational> masses;
  for (auto w : weights) masses.emplace_back(w, total);
  return masses;
}

// Random partition of {0..ground-1} into at most max_blocks nonempty blocks.
inline std::vector<PointSet> random_partition(Rng& rng, std::size_t ground, std::size_t max_blocks) {
  std::vector<std::size_t> label(ground);
  for (auto& l : label) l = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_blocks) - 1));
  std::map<std::size_t, PointSet> blocks;
  for (std::size_t p = 0; p < ground; ++p) {
    auto [it, inserted] = blocks.try_emplace(label[p], PointSet(ground));
    it->second.set(p);
  }
  std::vector<PointSet> out;
  for (auto& [l, b] : blocks) out.push_back(b);
  return out;
}

// --- oracles -------------------------------------------------------------

// Cells of the sign-pattern equivalence: points grouped by which generators
// contain them. Returned in order of smallest point.
inline std::vector<PointSet> sign_pattern_cells(std::size_t ground, const std::vector<PointSet>& generators) {
  std::map<std::vector<bool>, PointSet> cells;
  std::vector<std::vector<bool>> order;
  for (std::size_t p = 0; p < ground; ++p) {
    std::vector<bool> pattern;
    for (const auto& g : generators) pattern.push_back(g.test(p));
    auto [it, inserted] = cells.try_emplace(pattern, PointSet(ground));
    if (inserted) order.push_back(pattern);
    it->second.set(p);
  }
  std::vector<PointSet> out;
  for (const auto& pat : order) out.push_back(cells.at(pat));
  return out;
}

// Literal definition: for every member A other than empty and ground,
// A n B and A^c n B are both nonempty.
inline bool literal_independence(const PointSet& b, const std::vector<PointSet>& members) {
  for (const auto& a : members) {
    if (a.none() || a.all()) continue;
    if (!(a & b).any() || !((~a) & b).any()) return false;
  }
  return true;
}

// Value of an event under a charge by summing atoms point by point.
inline Rational oracle_measure(const Charge& charge, const PointSet& event) {
  Rational total = 0;
  const auto& atoms = charge.algebra().atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    bool all_in = true;
    bool any_in = false;
    for (std::size_t p = 0; p < atoms[a].size(); ++p) {
      if (!atoms[a].test(p)) continue;
      all_in = all_in && event.test(p);
      any_in = any_in || event.test(p);
    }
    if (any_in && !all_in) throw std::logic_error("oracle_measure: event not expressible");
    if (all_in) total += charge.mass(a);
  }
  return total;
}

// sup of the value of members inside `set` and inf of members containing it,
// by enumerating every member.
inline std::pair<Rational, Rational> oracle_inner_outer(const Charge& charge, const PointSet& set) {
  Rational lower = 0;
  Rational upper = 1;
  for (const auto& m : charge.algebra().members()) {
    Rational v = oracle_measure(charge, m);
    if (m.is_subset_of(set) && v > lower) lower = v;
    if (set.is_subset_of(m) && v < upper) upper = v;
  }
  return {lower, upper};
}

}  // namespace juror::testing
