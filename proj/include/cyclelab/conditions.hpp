#pragma once

// Good-pair enumeration and the four degree-condition predicates. A good
// pair is a non-adjacent pair sharing a common in- or out-neighbour; the
// conditions differ in which pairs they constrain and which degree sums
// they bound.

#include <string_view>
#include <vector>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

enum class ConditionTag { theorem_a, theorem_b, theorem_c, meyniel };

ConditionTag condition_from_name(std::string_view name);  // a|b|c|meyniel
std::string_view condition_name(ConditionTag tag);

struct GoodPair {
  int x = 0;  // x < y
  int y = 0;
  int witness = 0;        // smallest-label common neighbour
  bool witness_out = false;  // true: x->z and y->z; false: z->x and z->y
  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// Non-adjacent pairs with a common in- or out-neighbour, ascending (x,y).
/// Witness is the smallest-label common neighbour; a vertex witnessing both
/// directions is recorded with the out direction.
std::vector<GoodPair> good_pairs(const Digraph& d);

struct PairStat {
  int x = 0;
  int y = 0;
  int degree_sum = 0;    // d(x) + d(y)
  int min_degree = 0;    // min{d(x), d(y)}
  int semi_sum_min = 0;  // min{d+(x)+d-(y), d-(x)+d+(y)}
  bool ok = false;
  friend bool operator==(const PairStat&, const PairStat&) = default;
};

struct ConditionReport {
  ConditionTag which = ConditionTag::theorem_c;
  int n = 0;
  bool verdict = false;
  bool vacuous = false;  // no pairs required checking (implies verdict)
  std::vector<PairStat> pairs;  // every checked pair, not only failures
};

/// Required pairs per tag: theorem_a constrains non-adjacent pairs with a
/// common in-neighbour only; theorem_b and theorem_c constrain good pairs;
/// meyniel constrains all non-adjacent pairs.
ConditionReport check_condition(const Digraph& d, ConditionTag which);

/// Allocation-free equivalent of check_condition(d, theorem_c).verdict,
/// for enumeration hot loops.
bool satisfies_condition_star(const Digraph& d);

}  // namespace cyclelab
