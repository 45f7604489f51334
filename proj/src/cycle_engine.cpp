#include "cyclelab/cycle_engine.hpp"

#include <stdexcept>

namespace cyclelab {

namespace {

// DFS for a k-cycle anchored at its minimum-label vertex. Candidates are
// tried in ascending order, so the first hit is the lexicographically least
// sequence for this anchor.
struct CycleSearch {
  const Digraph& d;
  int k;
  int anchor;
  std::uint32_t above_anchor;  // vertices with label > anchor
  std::array<int, kMaxOrder> seq{};

  // Can the anchor be reached from `from` through `allowed` vertices?
  bool anchor_reachable(int from, std::uint32_t allowed) const {
    const std::uint32_t target = 1u << anchor;
    std::uint32_t reach = 1u << from;
    std::uint32_t frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        next |= d.out_row(v);
      }
      if (next & target) return true;
      frontier = next & allowed & ~reach;
      reach |= frontier;
    }
    return false;
  }

  bool extend(int last, int depth, std::uint32_t used) {
    if (depth == k) return d.has_arc(last, anchor);
    std::uint32_t cands = d.out_row(last) & above_anchor & ~used;
    while (cands) {
      int v = __builtin_ctz(cands);
      cands &= cands - 1;
      std::uint32_t left = above_anchor & ~used & ~(1u << v);
      if (__builtin_popcount(left) < k - depth - 1) continue;
      if (!anchor_reachable(v, left)) continue;
      seq[static_cast<std::size_t>(depth)] = v;
      if (extend(v, depth + 1, used | (1u << v))) return true;
    }
    return false;
  }

  std::optional<Cycle> run() {
    seq[0] = anchor;
    if (!extend(anchor, 1, 1u << anchor)) return std::nullopt;
    return Cycle{std::vector<int>(seq.begin(), seq.begin() + k)};
  }
};

}  // namespace

std::optional<Cycle> find_cycle_of_length(const Digraph& d, int k) {
  const int n = d.order();
  if (k < 2 || k > n)
    throw std::out_of_range("cycle length must be in [2, n]");
  for (int anchor = 0; anchor + k <= n; ++anchor) {
    std::uint32_t above = ((1u << n) - 1u) & ~((2u << anchor) - 1u);
    CycleSearch search{d, k, anchor, above};
    if (auto c = search.run()) return c;
  }
  return std::nullopt;
}

bool has_cycle_of_length(const Digraph& d, int k) {
  return find_cycle_of_length(d, k).has_value();
}

std::optional<Cycle> hamiltonian_cycle(const Digraph& d) {
  if (d.order() < 2) return std::nullopt;
  return find_cycle_of_length(d, d.order());
}

std::optional<Cycle> longest_non_hamiltonian_cycle(const Digraph& d) {
  if (d.order() < 3)
    throw std::invalid_argument("longest_non_hamiltonian_cycle needs n >= 3");
  for (int k = d.order() - 1; k >= 2; --k)
    if (auto c = find_cycle_of_length(d, k)) return c;
  return std::nullopt;
}

SpectrumReport cycle_spectrum(const Digraph& d) {
  if (d.order() < 2)
    throw std::invalid_argument("cycle_spectrum needs n >= 2");
  SpectrumReport report;
  for (int k = 2; k <= d.order(); ++k) {
    if (auto c = find_cycle_of_length(d, k)) {
      report.lengths.push_back(k);
      report.witnesses.emplace(k, std::move(*c));
    }
  }
  return report;
}

namespace {

// Enumerates every vertex subsequence that starts at its minimum label,
// in lexicographic order, testing all arcs directly at each length.
struct BlindEnumerator {
  const Digraph& d;
  SpectrumReport& report;
  std::array<int, kMaxOrder> seq{};

  void record(int len) {
    // arcs checked here and nowhere else: consecutive plus the closing one
    for (int i = 0; i + 1 < len; ++i)
      if (!d.has_arc(seq[static_cast<std::size_t>(i)],
                     seq[static_cast<std::size_t>(i + 1)]))
        return;
    if (!d.has_arc(seq[static_cast<std::size_t>(len - 1)], seq[0])) return;
    if (report.witnesses.count(len)) return;
    report.witnesses.emplace(
        len, Cycle{std::vector<int>(seq.begin(), seq.begin() + len)});
  }

  void extend(int depth, std::uint32_t used) {
    if (depth >= 2) record(depth);
    if (depth == d.order()) return;
    for (int v = seq[0] + 1; v < d.order(); ++v) {
      if ((used >> v) & 1u) continue;
      seq[static_cast<std::size_t>(depth)] = v;
      extend(depth + 1, used | (1u << v));
    }
  }
};

}  // namespace

SpectrumReport oracle_all_cycles(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("oracle_all_cycles needs n >= 2");
  if (n > 8)
    throw std::invalid_argument("oracle_all_cycles is guarded to n <= 8");
  SpectrumReport report;
  BlindEnumerator e{d, report};
  for (int anchor = 0; anchor < n; ++anchor) {
    e.seq[0] = anchor;
    e.extend(1, 1u << anchor);
  }
  for (auto& [k, c] : report.witnesses) report.lengths.push_back(k);
  return report;
}

}  // namespace cyclelab
