#pragma once

// Exact cycle search. Cycles are anchored at their minimum-label vertex and
// searched depth-first in ascending label order, so the witness returned for
// any length is the lexicographically least representation; every search is
// exact (no false negatives). oracle_all_cycles recomputes the spectrum by
// blind enumeration of all anchored vertex subsequences and is kept free of
// the search pruning so the two routes stay independent.

#include <map>
#include <optional>
#include <vector>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

/// Lexicographically least cycle on exactly k vertices, if any. 2 <= k <= n.
std::optional<Cycle> find_cycle_of_length(const Digraph& d, int k);
bool has_cycle_of_length(const Digraph& d, int k);

std::optional<Cycle> hamiltonian_cycle(const Digraph& d);

/// Longest cycle of length < n, or nullopt when every cycle is Hamiltonian
/// or no cycle exists. Requires n >= 3.
std::optional<Cycle> longest_non_hamiltonian_cycle(const Digraph& d);

struct SpectrumReport {
  std::vector<int> lengths;        // ascending, subset of [2, n]
  std::map<int, Cycle> witnesses;  // one witness per present length

  bool has(int k) const { return witnesses.count(k) != 0; }
  friend bool operator==(const SpectrumReport& a, const SpectrumReport& b) {
    return a.lengths == b.lengths;
  }
};

SpectrumReport cycle_spectrum(const Digraph& d);

/// Brute-force spectrum via full subsequence enumeration; guarded to n <= 8.
SpectrumReport oracle_all_cycles(const Digraph& d);

}  // namespace cyclelab
