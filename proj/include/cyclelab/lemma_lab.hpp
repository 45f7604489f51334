#pragma once

// Vertex-insertion machinery and cycle bypasses. find_partner looks for an
// arc x_i x_{i+1} of a path P with x_i -> x and x -> x_{i+1} (a partner of
// x on P, enabling insertion); lemma2_hypotheses evaluates the degree
// hypotheses under any of which a partner must exist; lemma1_witnesses
// exhibits cycles of every length in [2, m+1] around a cycle plus one
// outside vertex of high degree to it; lemma3_audit probes the
// no-consecutive-pair degree bound; find_bypass returns a minimum-gap
// bypass of a cycle.

#include <map>
#include <optional>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

struct InsertionResult {
  int index = 0;  // 1-based position i on the path: x_i -> x -> x_{i+1}
  Path extended;  // the path with x spliced in after x_i
};

struct Lemma2Hypotheses {
  int degree_on_path = 0;  // d(x, P)
  // with m = |P|, x1 the first and xm the last path vertex:
  bool h_degree_plus_two = false;    // d(x,P) >= m+2
  bool h_degree_plus_one = false;    // d(x,P) >= m+1 and (x->x1 or xm->x absent)
  bool h_degree_plain = false;       // d(x,P) >= m and x->x1 and xm->x absent
  bool any() const {
    return h_degree_plus_two || h_degree_plus_one || h_degree_plain;
  }
};

/// Evaluates the three insertion hypotheses for x against p. Whenever any
/// of them holds, find_partner is guaranteed to succeed.
Lemma2Hypotheses lemma2_hypotheses(const Digraph& d, const Path& p, int x);

/// Smallest partner index for x on p, with the extended path; nullopt when
/// no arc of p is a partner of x. Throws if p is invalid or x lies on it.
std::optional<InsertionResult> find_partner(const Digraph& d, const Path& p,
                                            int x);

/// Witness cycles of every length in [2, m+1] inside V(c) + {x}. Requires
/// x off c and d(x, C) >= m+1; violating the degree bound is an error.
std::map<int, Cycle> lemma1_witnesses(const Digraph& d, const Cycle& c,
                                      int x);

struct Lemma3Audit {
  bool pair_found = false;  // some consecutive x_i,x_{i+1}: x_i->x, y->x_{i+1}
  int in_degree_x = 0;      // d-(x, P)
  int out_degree_y = 0;     // d+(y, P)
  int epsilon = 0;          // 1 if xm->x is an arc
  int path_order = 0;       // m
  bool verdict = false;     // pair_found or in+out <= m+epsilon; always true
};

/// x and y off p, possibly equal. The verdict can only be false if the
/// implementation is wrong; the operation exists as a property probe.
Lemma3Audit lemma3_audit(const Digraph& d, const Path& p, int x, int y);

struct Bypass {
  Path path;    // u1 .. us with s >= 3, endpoints on the cycle,
                // interior disjoint from it
  int gap = 0;  // arc length of the cycle segment from u1 to us
};

/// Minimum-gap bypass of c, ties broken by least (start label, sequence);
/// nullopt when no bypass exists. Requires some vertex off c.
std::optional<Bypass> find_bypass(const Digraph& d, const Cycle& c);

}  // namespace cyclelab
