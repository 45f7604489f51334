#pragma once

// Loop-free digraph on dense labels 0..n-1, stored as one out-neighbour bit
// row and one mirrored in-neighbour bit row per vertex. All queries are O(1)
// bit tests or popcounts; values are cheap to copy and immutable by
// convention once built, so they can be shared freely across workers.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cyclelab {

inline constexpr int kMaxOrder = 16;

// Arc-presence mask over ordered pairs, row-major, skipping the diagonal:
// pair (u,v) sits at bit u*(n-1) + v - (v > u ? 1 : 0). 128 bits cover
// every order up to 11; exhaustive scans only ever need n <= 6.
using ArcMask = unsigned __int128;

inline constexpr int arc_bit_position(int n, int u, int v) {
  return u * (n - 1) + v - (v > u ? 1 : 0);
}

/// Subset of 0..n-1 as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static VertexSet all(int n) { return VertexSet((1u << n) - 1u); }

  void add(int v) { bits_ |= 1u << v; }
  void remove(int v) { bits_ &= ~(1u << v); }
  bool contains(int v) const { return (bits_ >> v) & 1u; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  VertexSet without(int v) const {
    VertexSet s = *this;
    s.remove(v);
    return s;
  }
  VertexSet complement(int n) const {
    return VertexSet(~bits_ & ((1u << n) - 1u));
  }

  /// Members in ascending order.
  std::vector<int> to_vector() const;

  friend bool operator==(VertexSet a, VertexSet b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct DegreeTriple {
  int out = 0;
  int in = 0;
  int total = 0;
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

struct InducedSubdigraph;

class Digraph {
 public:
  /// Digraph with n vertices and no arcs. Throws if n is out of [1, 16].
  explicit Digraph(int n);

  static Digraph from_mask(int n, ArcMask mask);
  static Digraph from_arcs(int n,
                           std::initializer_list<std::pair<int, int>> arcs);

  // Stock constructions used throughout tests and docs.
  static Digraph complete(int n);                  // K*_n, all digons
  static Digraph directed_cycle(int n);            // 0 -> 1 -> ... -> 0
  static Digraph complete_bipartite(int p, int q); // K*_{p,q}, sides
                                                   // {0..p-1}, {p..p+q-1}

  int order() const { return n_; }
  int arc_count() const;
  ArcMask mask() const;  // inverse of from_mask; requires n <= 11

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  bool has_arc(int u, int v) const {
    return (out_[static_cast<std::size_t>(u)] >> v) & 1u;
  }

  std::uint32_t out_row(int v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  std::uint32_t in_row(int v) const {
    return in_[static_cast<std::size_t>(v)];
  }
  int out_degree(int v) const { return __builtin_popcount(out_row(v)); }
  int in_degree(int v) const { return __builtin_popcount(in_row(v)); }

  /// (d+(v), d-(v), d(v)).
  DegreeTriple degrees(int v) const;
  /// Degrees restricted to a set not containing v: (d+(v,A), d-(v,A), d(v,A)).
  DegreeTriple degrees(int v, VertexSet a) const;

  /// a(x,y): number of arcs among {(x,y),(y,x)}; 0 means non-adjacent.
  int adjacency_count(int x, int y) const;
  bool adjacent(int x, int y) const { return adjacency_count(x, y) != 0; }

  /// Every ordered pair joined by a path. n = 1 is strong (vacuous).
  bool is_strong() const;

  /// Exactly one spanning directed cycle and nothing else.
  bool is_directed_cycle() const;

  Digraph converse() const;

  InducedSubdigraph induced(VertexSet a) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  void check_vertex(int v) const;
  void check_pair(int u, int v) const;

  int n_;
  std::array<std::uint32_t, kMaxOrder> out_{};
  std::array<std::uint32_t, kMaxOrder> in_{};
};

struct InducedSubdigraph {
  Digraph d;
  std::vector<int> old_to_new;  // -1 for vertices outside the set
};

/// Sequence of >= 2 distinct vertices; consecutive pairs must be arcs.
struct Path {
  std::vector<int> verts;

  int order() const { return static_cast<int>(verts.size()); }
  int length() const { return order() - 1; }  // arc count
  bool contains(int v) const;
  bool valid_in(const Digraph& d) const;
  Path reversed() const;
};

/// Path plus the closing arc from the last vertex back to the first.
struct Cycle {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }
  bool contains(int v) const;
  bool valid_in(const Digraph& d) const;
  VertexSet vertex_set() const;
  int position_of(int v) const;  // -1 if absent
  /// Arc count of the cycle segment from x to y in cycle direction.
  int segment_length(int x, int y) const;
};

std::string to_string(const Path& p);
std::string to_string(const Cycle& c);

}  // namespace cyclelab
