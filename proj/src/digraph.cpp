#include "cyclelab/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclelab {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  std::uint32_t b = bits_;
  while (b) {
    out.push_back(__builtin_ctz(b));
    b &= b - 1;
  }
  return out;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("digraph order must be in [1, 16]");
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

void Digraph::check_pair(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop arcs are not allowed");
}

Digraph Digraph::from_mask(int n, ArcMask mask) {
  Digraph d(n);
  const int row_bits = n - 1;
  if (n > 11) throw std::invalid_argument("mask form supports order <= 11");
  if ((mask >> (n * row_bits)) != 0)
    throw std::invalid_argument("mask has bits beyond n*(n-1)");
  for (int u = 0; u < n; ++u) {
    auto slice = static_cast<std::uint32_t>((mask >> (u * row_bits)) &
                                            ((ArcMask{1} << row_bits) - 1));
    // re-insert the skipped diagonal bit at position u
    std::uint32_t row = (slice & ((1u << u) - 1u)) | ((slice >> u) << (u + 1));
    d.out_[static_cast<std::size_t>(u)] = row;
    while (slice) {
      int j = __builtin_ctz(slice);
      slice &= slice - 1;
      int v = j < u ? j : j + 1;
      d.in_[static_cast<std::size_t>(v)] |= 1u << u;
    }
  }
  return d;
}

ArcMask Digraph::mask() const {
  if (n_ > 11) throw std::invalid_argument("mask form supports order <= 11");
  ArcMask m = 0;
  const int row_bits = n_ - 1;
  for (int u = 0; u < n_; ++u) {
    std::uint32_t row = out_[static_cast<std::size_t>(u)];
    std::uint32_t slice = (row & ((1u << u) - 1u)) | ((row >> (u + 1)) << u);
    m |= static_cast<ArcMask>(slice) << (u * row_bits);
  }
  return m;
}

Digraph Digraph::from_arcs(int n,
                           std::initializer_list<std::pair<int, int>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

Digraph Digraph::complete(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

Digraph Digraph::directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
  Digraph d(n);
  for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

Digraph Digraph::complete_bipartite(int p, int q) {
  Digraph d(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) {
      d.add_arc(u, v);
      d.add_arc(v, u);
    }
  return d;
}

int Digraph::arc_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += out_degree(v);
  return m;
}

void Digraph::add_arc(int u, int v) {
  check_pair(u, v);
  out_[static_cast<std::size_t>(u)] |= 1u << v;
  in_[static_cast<std::size_t>(v)] |= 1u << u;
}

void Digraph::remove_arc(int u, int v) {
  check_pair(u, v);
  out_[static_cast<std::size_t>(u)] &= ~(1u << v);
  in_[static_cast<std::size_t>(v)] &= ~(1u << u);
}

DegreeTriple Digraph::degrees(int v) const {
  check_vertex(v);
  int o = out_degree(v);
  int i = in_degree(v);
  return {o, i, o + i};
}

DegreeTriple Digraph::degrees(int v, VertexSet a) const {
  check_vertex(v);
  if (a.contains(v))
    throw std::invalid_argument("restriction set must not contain the vertex");
  if ((a.bits() >> n_) != 0)
    throw std::out_of_range("restriction set has members >= n");
  int o = __builtin_popcount(out_row(v) & a.bits());
  int i = __builtin_popcount(in_row(v) & a.bits());
  return {o, i, o + i};
}

int Digraph::adjacency_count(int x, int y) const {
  check_pair(x, y);
  return static_cast<int>(has_arc(x, y)) + static_cast<int>(has_arc(y, x));
}

namespace {

// Closure of {0} under the given neighbour rows.
std::uint32_t sweep(const std::uint32_t* rows, int n) {
  std::uint32_t reach = 1u;
  std::uint32_t frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      next |= rows[v];
    }
    frontier = next & ~reach;
    reach |= next;
  }
  (void)n;
  return reach;
}

}  // namespace

bool Digraph::is_strong() const {
  if (n_ == 1) return true;
  const std::uint32_t all = (1u << n_) - 1u;
  if (sweep(out_.data(), n_) != all) return false;
  return sweep(in_.data(), n_) == all;
}

bool Digraph::is_directed_cycle() const {
  if (n_ < 2) return false;
  for (int v = 0; v < n_; ++v)
    if (out_degree(v) != 1 || in_degree(v) != 1) return false;
  return is_strong();
}

Digraph Digraph::converse() const {
  Digraph d(n_);
  d.out_ = in_;
  d.in_ = out_;
  return d;
}

InducedSubdigraph Digraph::induced(VertexSet a) const {
  if (a.empty()) throw std::invalid_argument("induced set must be non-empty");
  if ((a.bits() >> n_) != 0)
    throw std::out_of_range("induced set has members >= n");
  std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
  std::vector<int> members = a.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    old_to_new[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  Digraph sub(static_cast<int>(members.size()));
  for (int u : members) {
    std::uint32_t row = out_row(u) & a.bits();
    while (row) {
      int v = __builtin_ctz(row);
      row &= row - 1;
      sub.add_arc(old_to_new[static_cast<std::size_t>(u)],
                  old_to_new[static_cast<std::size_t>(v)]);
    }
  }
  return {std::move(sub), std::move(old_to_new)};
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.out_.begin(), a.out_.begin() + a.n_, b.out_.begin());
}

bool Path::contains(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool Path::valid_in(const Digraph& d) const {
  if (verts.size() < 2) return false;
  std::uint32_t seen = 0;
  for (int v : verts) {
    if (v < 0 || v >= d.order()) return false;
    if ((seen >> v) & 1u) return false;
    seen |= 1u << v;
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (!d.has_arc(verts[i], verts[i + 1])) return false;
  return true;
}

Path Path::reversed() const {
  Path p = *this;
  std::reverse(p.verts.begin(), p.verts.end());
  return p;
}

bool Cycle::contains(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool Cycle::valid_in(const Digraph& d) const {
  Path p{verts};
  return p.valid_in(d) && d.has_arc(verts.back(), verts.front());
}

VertexSet Cycle::vertex_set() const {
  VertexSet s;
  for (int v : verts) s.add(v);
  return s;
}

int Cycle::position_of(int v) const {
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == v) return static_cast<int>(i);
  return -1;
}

int Cycle::segment_length(int x, int y) const {
  int px = position_of(x);
  int py = position_of(y);
  if (px < 0 || py < 0)
    throw std::invalid_argument("segment endpoints must lie on the cycle");
  return (py - px + length()) % length();
}

namespace {

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Path& p) { return join(p.verts); }
std::string to_string(const Cycle& c) { return join(c.verts); }

}  // namespace cyclelab
