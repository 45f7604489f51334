#include "cyclelab/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclelab {

ConditionTag condition_from_name(std::string_view name) {
  if (name == "a") return ConditionTag::theorem_a;
  if (name == "b") return ConditionTag::theorem_b;
  if (name == "c") return ConditionTag::theorem_c;
  if (name == "meyniel") return ConditionTag::meyniel;
  throw std::invalid_argument("unknown condition tag: " + std::string(name));
}

std::string_view condition_name(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::theorem_a: return "a";
    case ConditionTag::theorem_b: return "b";
    case ConditionTag::theorem_c: return "c";
    case ConditionTag::meyniel: return "meyniel";
  }
  throw std::invalid_argument("unknown condition tag");
}

std::vector<GoodPair> good_pairs(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("good_pairs needs n >= 2");
  std::vector<GoodPair> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (d.adjacent(x, y)) continue;
      std::uint32_t common_out = d.out_row(x) & d.out_row(y);
      std::uint32_t common_in = d.in_row(x) & d.in_row(y);
      std::uint32_t common = common_out | common_in;
      if (!common) continue;
      int z = __builtin_ctz(common);
      out.push_back({x, y, z, ((common_out >> z) & 1u) != 0});
    }
  }
  return out;
}

namespace {

PairStat make_stat(const Digraph& d, int x, int y) {
  DegreeTriple dx = d.degrees(x);
  DegreeTriple dy = d.degrees(y);
  PairStat s;
  s.x = x;
  s.y = y;
  s.degree_sum = dx.total + dy.total;
  s.min_degree = std::min(dx.total, dy.total);
  s.semi_sum_min = std::min(dx.out + dy.in, dx.in + dy.out);
  return s;
}

bool stat_ok(const PairStat& s, ConditionTag which, int n) {
  switch (which) {
    case ConditionTag::theorem_a:
      return s.min_degree >= n - 1 && s.degree_sum >= 2 * n - 1;
    case ConditionTag::theorem_b:
      return s.semi_sum_min >= n;
    case ConditionTag::theorem_c:
      return s.semi_sum_min >= n - 1 && s.degree_sum >= 2 * n - 1;
    case ConditionTag::meyniel:
      return s.degree_sum >= 2 * n - 1;
  }
  return false;
}

bool pair_required(const Digraph& d, int x, int y, ConditionTag which) {
  if (d.adjacent(x, y)) return false;
  switch (which) {
    case ConditionTag::theorem_a:
      return (d.in_row(x) & d.in_row(y)) != 0;
    case ConditionTag::theorem_b:
    case ConditionTag::theorem_c:
      return ((d.out_row(x) & d.out_row(y)) | (d.in_row(x) & d.in_row(y))) !=
             0;
    case ConditionTag::meyniel:
      return true;
  }
  return false;
}

}  // namespace

ConditionReport check_condition(const Digraph& d, ConditionTag which) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("check_condition needs n >= 2");
  ConditionReport report;
  report.which = which;
  report.n = n;
  report.verdict = true;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!pair_required(d, x, y, which)) continue;
      PairStat s = make_stat(d, x, y);
      s.ok = stat_ok(s, which, n);
      report.verdict = report.verdict && s.ok;
      report.pairs.push_back(s);
    }
  }
  report.vacuous = report.pairs.empty();
  return report;
}

bool satisfies_condition_star(const Digraph& d) {
  const int n = d.order();
  for (int x = 0; x < n; ++x) {
    const std::uint32_t ox = d.out_row(x);
    const std::uint32_t ix = d.in_row(x);
    for (int y = x + 1; y < n; ++y) {
      if (((ox >> y) | (d.out_row(y) >> x)) & 1u) continue;  // adjacent
      const std::uint32_t oy = d.out_row(y);
      const std::uint32_t iy = d.in_row(y);
      if (((ox & oy) | (ix & iy)) == 0) continue;  // not a good pair
      const int dxo = __builtin_popcount(ox);
      const int dxi = __builtin_popcount(ix);
      const int dyo = __builtin_popcount(oy);
      const int dyi = __builtin_popcount(iy);
      if (dxo + dxi + dyo + dyi < 2 * n - 1) return false;
      if (std::min(dxo + dyi, dxi + dyo) < n - 1) return false;
    }
  }
  return true;
}

}  // namespace cyclelab
