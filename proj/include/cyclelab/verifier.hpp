#pragma once

// Enumeration of labelled digraphs by arc mask, filter chains, and the two
// verification sweeps: "main" (every strong, non-directed-cycle digraph
// satisfying condition (*) has a cycle of length n-1 or n-2) and "c" (every
// strong digraph satisfying condition (*) is Hamiltonian). Mining collects
// the condition-(*) survivors with no (n-1)-cycle and classifies them
// against the known extremal families.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclelab/conditions.hpp"
#include "cyclelab/cycle_engine.hpp"
#include "cyclelab/digraph.hpp"

namespace cyclelab {

enum class TheoremTag { main_theorem, theorem_c };

TheoremTag theorem_from_name(std::string_view name);  // main|c
std::string_view theorem_name(TheoremTag tag);

/// Half-open index interval [lo, hi) over arc masks.
struct MaskRange {
  ArcMask lo = 0;
  ArcMask hi = 0;
  friend bool operator==(const MaskRange&, const MaskRange&) = default;
};

/// Full mask space for order n: [0, 2^(n(n-1))).
MaskRange full_range(int n);

struct SampleParams {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const SampleParams&, const SampleParams&) = default;
};

// splitmix64: state advances by 0x9E3779B97F4A7C15 per draw and the k-th
// draw from a seed is mix(seed + (k+1)*0x9E3779B97F4A7C15), so any position
// in the stream is addressable directly.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
  static std::uint64_t at(std::uint64_t seed, std::uint64_t index);
};

/// Mask of the i-th sample of a seeded sweep at order n: consecutive 64-bit
/// draws fill the mask words low to high (draw i*words+w gives bits
/// [64w, 64w+64)), truncated to n(n-1) bits. Requires n <= 10.
ArcMask sampled_mask(int n, std::uint64_t seed, std::uint64_t i);

struct ScanFilters {
  bool strong = true;
  bool not_directed_cycle = true;
  bool condition_star = true;
};

/// Yields (mask, digraph) for every mask in the range passing the chained
/// filters, in index order. Exhaustive scans are limited to n <= 6.
void scan(int n, MaskRange range, const ScanFilters& filters,
          const std::function<void(ArcMask, const Digraph&)>& yield);

struct VerificationCounts {
  std::uint64_t total = 0;
  std::uint64_t strong = 0;
  std::uint64_t strong_condition_star = 0;
  std::uint64_t directed_cycles_excluded = 0;
  std::uint64_t hamiltonian = 0;
  std::uint64_t with_n_minus_1 = 0;
  std::uint64_t with_n_minus_2 = 0;
  friend bool operator==(const VerificationCounts&,
                         const VerificationCounts&) = default;
};

enum class ExtremalTag {
  complete_bipartite,
  complete_bipartite_minus_one_arc,
  directed_cycle,
  other
};

std::string_view extremal_name(ExtremalTag tag);

struct CounterexampleRecord {
  int n = 0;
  ArcMask mask = 0;
  ConditionReport condition;
  SpectrumReport spectrum;
  ExtremalTag classification = ExtremalTag::other;
};

struct VerificationSummary {
  TheoremTag theorem = TheoremTag::main_theorem;
  int n = 0;
  MaskRange range;
  std::optional<SampleParams> sample;
  VerificationCounts counts;
  std::vector<CounterexampleRecord> counterexamples;

  bool verified() const { return counterexamples.empty(); }
};

/// Scans [range.lo, range.hi): survivors of strong + not-directed-cycle +
/// condition (*) must contain a cycle of length n-1 or n-2; the rest become
/// counterexample records. The scan always completes; nothing aborts early.
VerificationSummary verify_main_theorem(int n, MaskRange range, int jobs = 1);

/// Scans survivors of strong + condition (*) (directed cycles included)
/// for Hamiltonicity.
VerificationSummary verify_theorem_c(int n, MaskRange range, int jobs = 1);

/// Same sweeps over `count` seeded-random masks (with replacement).
VerificationSummary verify_sampled(TheoremTag theorem, int n,
                                   SampleParams sample, int jobs = 1);

/// Survivors of the main-theorem filter chain with no (n-1)-cycle, each
/// classified. Every record must still have an (n-2)-cycle; callers check
/// the recorded spectra and escalate when one does not.
std::vector<CounterexampleRecord> mine_conjecture(int n, MaskRange range);

/// Bipartition recovery by non-adjacency with vertex 0, then verification.
/// Directed cycles are tagged first, so the digon reports directed-cycle.
ExtremalTag classify_extremal(const Digraph& d);

/// Appends `next` onto `into`: counts add, counterexamples concatenate.
/// Ranges must be adjacent (into.range.hi == next.range.lo).
void merge(VerificationSummary& into, const VerificationSummary& next);

}  // namespace cyclelab
