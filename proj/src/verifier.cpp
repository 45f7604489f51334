#include "cyclelab/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cyclelab {

TheoremTag theorem_from_name(std::string_view name) {
  if (name == "main") return TheoremTag::main_theorem;
  if (name == "c") return TheoremTag::theorem_c;
  throw std::invalid_argument("unknown theorem tag: " + std::string(name));
}

std::string_view theorem_name(TheoremTag tag) {
  return tag == TheoremTag::main_theorem ? "main" : "c";
}

MaskRange full_range(int n) {
  if (n < 1 || n > 11)
    throw std::invalid_argument("mask index space supports order <= 11");
  return {0, ArcMask{1} << (n * (n - 1))};
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state += kGolden;
  return mix(state);
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + (index + 1) * kGolden);
}

ArcMask sampled_mask(int n, std::uint64_t seed, std::uint64_t i) {
  if (n < 2 || n > 10)
    throw std::invalid_argument("sampled masks support 2 <= n <= 10");
  const int bits = n * (n - 1);
  const int words = (bits + 63) / 64;
  ArcMask mask = 0;
  for (int w = 0; w < words; ++w)
    mask |= static_cast<ArcMask>(
                SplitMix64::at(seed, i * static_cast<std::uint64_t>(words) +
                                         static_cast<std::uint64_t>(w)))
            << (64 * w);
  return mask & ((ArcMask{1} << bits) - 1);
}

namespace {

void check_range(int n, MaskRange range) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("exhaustive scans support 2 <= n <= 6");
  if (range.lo > range.hi || range.hi > full_range(n).hi)
    throw std::out_of_range("mask range out of bounds");
}

// Applies the filter chain to one digraph, keeping the chain counts.
// Returns true when the digraph survives every enabled filter.
bool apply_filters(const Digraph& d, const ScanFilters& filters,
                   VerificationCounts& counts) {
  ++counts.total;
  const bool strong = d.is_strong();
  if (strong) ++counts.strong;
  if (filters.strong && !strong) return false;
  const bool dc = d.is_directed_cycle();
  const bool star = !filters.condition_star || satisfies_condition_star(d);
  if (strong && star && filters.condition_star)
    ++counts.strong_condition_star;
  if (filters.not_directed_cycle && dc) {
    if (strong && star && filters.condition_star)
      ++counts.directed_cycles_excluded;
    return false;
  }
  return star;
}

}  // namespace

void scan(int n, MaskRange range, const ScanFilters& filters,
          const std::function<void(ArcMask, const Digraph&)>& yield) {
  check_range(n, range);
  VerificationCounts counts;
  for (ArcMask m = range.lo; m < range.hi; ++m) {
    Digraph d = Digraph::from_mask(n, m);
    if (apply_filters(d, filters, counts)) yield(m, d);
  }
}

namespace {

ScanFilters filters_for(TheoremTag theorem) {
  ScanFilters f;
  f.not_directed_cycle = theorem == TheoremTag::main_theorem;
  return f;
}

CounterexampleRecord make_record(int n, ArcMask mask, const Digraph& d) {
  CounterexampleRecord rec;
  rec.n = n;
  rec.mask = mask;
  rec.condition = check_condition(d, ConditionTag::theorem_c);
  rec.spectrum = cycle_spectrum(d);
  rec.classification = classify_extremal(d);
  return rec;
}

// One survivor under either theorem's sweep: update the cycle counts and
// append a record when the theorem's conclusion fails.
void examine_survivor(TheoremTag theorem, int n, ArcMask mask,
                      const Digraph& d, VerificationCounts& counts,
                      std::vector<CounterexampleRecord>& cx) {
  const bool ham = has_cycle_of_length(d, n);
  const bool n1 = n >= 3 && has_cycle_of_length(d, n - 1);
  const bool n2 = n >= 4 && has_cycle_of_length(d, n - 2);
  if (ham) ++counts.hamiltonian;
  if (n1) ++counts.with_n_minus_1;
  if (n2) ++counts.with_n_minus_2;
  const bool ok = theorem == TheoremTag::main_theorem ? (n1 || n2) : ham;
  if (!ok) cx.push_back(make_record(n, mask, d));
}

VerificationSummary verify_chunk(TheoremTag theorem, int n, MaskRange range) {
  VerificationSummary s;
  s.theorem = theorem;
  s.n = n;
  s.range = range;
  const ScanFilters filters = filters_for(theorem);
  for (ArcMask m = range.lo; m < range.hi; ++m) {
    Digraph d = Digraph::from_mask(n, m);
    if (apply_filters(d, filters, s.counts))
      examine_survivor(theorem, n, m, d, s.counts, s.counterexamples);
  }
  return s;
}

VerificationSummary verify_sampled_chunk(TheoremTag theorem, int n,
                                         std::uint64_t seed,
                                         std::uint64_t first,
                                         std::uint64_t last) {
  VerificationSummary s;
  s.theorem = theorem;
  s.n = n;
  const ScanFilters filters = filters_for(theorem);
  for (std::uint64_t i = first; i < last; ++i) {
    ArcMask m = sampled_mask(n, seed, i);
    Digraph d = Digraph::from_mask(n, m);
    if (apply_filters(d, filters, s.counts))
      examine_survivor(theorem, n, m, d, s.counts, s.counterexamples);
  }
  return s;
}

void add_counts(VerificationCounts& into, const VerificationCounts& c) {
  into.total += c.total;
  into.strong += c.strong;
  into.strong_condition_star += c.strong_condition_star;
  into.directed_cycles_excluded += c.directed_cycles_excluded;
  into.hamiltonian += c.hamiltonian;
  into.with_n_minus_1 += c.with_n_minus_1;
  into.with_n_minus_2 += c.with_n_minus_2;
}

// Runs `chunk(j)` for j in [0, jobs) on its own thread and folds the
// summaries in chunk order, so the result is independent of scheduling.
template <typename ChunkFn>
VerificationSummary run_parallel(int jobs, ChunkFn chunk) {
  std::vector<VerificationSummary> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j)
    threads.emplace_back(
        [&parts, &chunk, j] { parts[static_cast<std::size_t>(j)] = chunk(j); });
  for (auto& t : threads) t.join();
  VerificationSummary merged = std::move(parts.front());
  for (std::size_t j = 1; j < parts.size(); ++j) {
    add_counts(merged.counts, parts[j].counts);
    std::move(parts[j].counterexamples.begin(),
              parts[j].counterexamples.end(),
              std::back_inserter(merged.counterexamples));
    merged.range.hi = parts[j].range.hi;
  }
  return merged;
}

VerificationSummary verify_range(TheoremTag theorem, int n, MaskRange range,
                                 int jobs) {
  check_range(n, range);
  if (theorem == TheoremTag::main_theorem && n < 4)
    throw std::invalid_argument("main-theorem verification needs n >= 4");
  const ArcMask span = range.hi - range.lo;
  if (jobs < 1) jobs = 1;
  if (static_cast<ArcMask>(jobs) > span && span > 0)
    jobs = static_cast<int>(span);
  if (jobs == 1 || span == 0) return verify_chunk(theorem, n, range);
  auto summary = run_parallel(jobs, [&](int j) {
    MaskRange part{range.lo + span * static_cast<unsigned>(j) /
                                static_cast<unsigned>(jobs),
                   range.lo + span * (static_cast<unsigned>(j) + 1) /
                                static_cast<unsigned>(jobs)};
    return verify_chunk(theorem, n, part);
  });
  summary.range = range;
  return summary;
}

}  // namespace

VerificationSummary verify_main_theorem(int n, MaskRange range, int jobs) {
  return verify_range(TheoremTag::main_theorem, n, range, jobs);
}

VerificationSummary verify_theorem_c(int n, MaskRange range, int jobs) {
  if (n < 2) throw std::invalid_argument("theorem-c verification needs n >= 2");
  return verify_range(TheoremTag::theorem_c, n, range, jobs);
}

VerificationSummary verify_sampled(TheoremTag theorem, int n,
                                   SampleParams sample, int jobs) {
  if (n < 4 || n > 10)
    throw std::invalid_argument("sampled sweeps support 4 <= n <= 10");
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > sample.count && sample.count > 0)
    jobs = static_cast<int>(sample.count);
  VerificationSummary summary;
  if (sample.count == 0 || jobs == 1) {
    summary = verify_sampled_chunk(theorem, n, sample.seed, 0, sample.count);
  } else {
    summary = run_parallel(jobs, [&](int j) {
      const std::uint64_t first =
          sample.count * static_cast<std::uint64_t>(j) /
          static_cast<std::uint64_t>(jobs);
      const std::uint64_t last =
          sample.count * (static_cast<std::uint64_t>(j) + 1) /
          static_cast<std::uint64_t>(jobs);
      return verify_sampled_chunk(theorem, n, sample.seed, first, last);
    });
  }
  summary.theorem = theorem;
  summary.n = n;
  summary.range = {0, 0};
  summary.sample = sample;
  return summary;
}

std::vector<CounterexampleRecord> mine_conjecture(int n, MaskRange range) {
  check_range(n, range);
  if (n < 4) throw std::invalid_argument("mining needs n >= 4");
  std::vector<CounterexampleRecord> mined;
  ScanFilters filters;  // strong, not directed cycle, condition (*)
  scan(n, range, filters, [&](ArcMask m, const Digraph& d) {
    if (!has_cycle_of_length(d, n - 1)) mined.push_back(make_record(n, m, d));
  });
  return mined;
}

std::string_view extremal_name(ExtremalTag tag) {
  switch (tag) {
    case ExtremalTag::complete_bipartite: return "complete-bipartite";
    case ExtremalTag::complete_bipartite_minus_one_arc:
      return "complete-bipartite-minus-one-arc";
    case ExtremalTag::directed_cycle: return "directed-cycle";
    case ExtremalTag::other: return "other";
  }
  throw std::invalid_argument("unknown extremal tag");
}

ExtremalTag classify_extremal(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("classify_extremal needs n >= 2");
  if (d.is_directed_cycle()) return ExtremalTag::directed_cycle;

  // Side of vertex 0 = vertices non-adjacent to 0. In a complete bipartite
  // digraph, possibly minus one arc, cross pairs keep at least one arc, so
  // non-adjacency recovers the bipartition exactly.
  VertexSet side_a{0};
  VertexSet side_b;
  for (int v = 1; v < n; ++v)
    (d.adjacent(0, v) ? side_b : side_a).add(v);
  if (side_b.empty()) return ExtremalTag::other;

  int missing_cross = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (side_a.contains(x) == side_a.contains(y)) {
        if (d.has_arc(x, y)) return ExtremalTag::other;
      } else if (!d.has_arc(x, y)) {
        ++missing_cross;
      }
    }
  }
  if (missing_cross == 0) return ExtremalTag::complete_bipartite;
  if (missing_cross == 1)
    return ExtremalTag::complete_bipartite_minus_one_arc;
  return ExtremalTag::other;
}

void merge(VerificationSummary& into, const VerificationSummary& next) {
  if (into.theorem != next.theorem || into.n != next.n)
    throw std::invalid_argument("summaries describe different sweeps");
  if (into.sample || next.sample)
    throw std::invalid_argument("sampled summaries do not merge");
  if (into.range.hi != next.range.lo)
    throw std::invalid_argument("summary ranges are not adjacent");
  add_counts(into.counts, next.counts);
  into.counterexamples.insert(into.counterexamples.end(),
                              next.counterexamples.begin(),
                              next.counterexamples.end());
  into.range.hi = next.range.hi;
}

}  // namespace cyclelab
