// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Criteria cover the exhaustive sweeps at n = 4 and 5, conjecture
// mining, the lemma property suite, oracle equivalence, converse symmetry,
// and the seeded n = 6 sample sweep.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "cyclelab/conditions.hpp"
#include "cyclelab/cycle_engine.hpp"
#include "cyclelab/digraph.hpp"
#include "cyclelab/io.hpp"
#include "cyclelab/lemma_lab.hpp"
#include "cyclelab/verifier.hpp"
#include "../tests/test_util.hpp"

using namespace cyclelab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << detail << "\n";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion_1() {
  auto start = Clock::now();
  auto summary = verify_main_theorem(4, full_range(4), 1);
  double elapsed = seconds_since(start);
  bool pass = summary.verified() && summary.counts.total == 4096 &&
              elapsed < 1.0;
  report(1, pass,
         "main theorem n=4 exhaustive: scanned " +
             std::to_string(summary.counts.total) + " masks, " +
             std::to_string(summary.counterexamples.size()) +
             " counterexamples, " + std::to_string(elapsed) + " s");
}

void criterion_2() {
  auto start = Clock::now();
  auto full = verify_main_theorem(5, full_range(5), 1);
  double elapsed = seconds_since(start);

  VerificationSummary merged;
  const ArcMask hi = full_range(5).hi;
  for (unsigned part = 0; part < 4; ++part) {
    auto piece = verify_main_theorem(
        5, {hi * part / 4, hi * (part + 1) / 4}, 1);
    if (part == 0)
      merged = piece;
    else
      merge(merged, piece);
  }
  const bool identical =
      io::report_verify(merged) == io::report_verify(full);
  bool pass = full.verified() && full.counts.total == 1048576 &&
              elapsed < 300.0 && identical;
  report(2, pass,
         "main theorem n=5 exhaustive: scanned " +
             std::to_string(full.counts.total) + " masks, " +
             std::to_string(full.counterexamples.size()) +
             " counterexamples, " + std::to_string(elapsed) +
             " s single-threaded, partitioned merge " +
             (identical ? "identical" : "DIFFERS"));
}

void criterion_3() {
  auto four = verify_theorem_c(4, full_range(4), 1);
  auto five = verify_theorem_c(5, full_range(5), 2);
  bool pass = four.verified() && five.verified() &&
              four.counts.total == 4096 && five.counts.total == 1048576;
  report(3, pass,
         "theorem c n=4 and n=5 exhaustive: " +
             std::to_string(four.counterexamples.size()) + " and " +
             std::to_string(five.counterexamples.size()) +
             " counterexamples");
}

void criterion_4() {
  auto mined = mine_conjecture(4, full_range(4));
  std::set<ArcMask> masks;
  std::size_t with_short_cycle = 0, tagged_other = 0;
  for (const auto& rec : mined) {
    masks.insert(rec.mask);
    if (rec.spectrum.has(2)) ++with_short_cycle;
    if (rec.classification == ExtremalTag::other) ++tagged_other;
  }

  bool has_all_k22 = true;
  for (int mate = 1; mate <= 3; ++mate) {
    auto side = [mate](int v) { return v == 0 || v == mate; };
    Digraph k(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v)
        if (side(u) != side(v)) {
          k.add_arc(u, v);
          k.add_arc(v, u);
        }
    has_all_k22 = has_all_k22 && masks.count(k.mask()) == 1;
  }

  bool closed = true;
  std::vector<int> perm{0, 1, 2, 3};
  do {
    for (ArcMask m : masks)
      closed = closed &&
               masks.count(testutil::permuted(Digraph::from_mask(4, m), perm)
                               .mask()) == 1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  bool pass = !mined.empty() && has_all_k22 &&
              with_short_cycle == mined.size() && closed;
  report(4, pass,
         "conjecture mining n=4: " + std::to_string(mined.size()) +
             " records, all K*_{2,2} copies " +
             (has_all_k22 ? "present" : "MISSING") + ", " +
             std::to_string(with_short_cycle) + " with an (n-2)-cycle, " +
             std::to_string(tagged_other) +
             " flagged other for review, permutation-closed: " +
             (closed ? "yes" : "NO"));
}

void criterion_5() {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> order(4, 9);
  std::uniform_real_distribution<double> density(0.0, 1.0);

  std::uint64_t partner_triggers = 0, partner_violations = 0;
  std::uint64_t audit_runs = 0, audit_violations = 0;
  std::uint64_t witness_triggers = 0, witness_violations = 0;

  for (int trial = 0; trial < 10000; ++trial) {
    const int n = order(rng);
    Digraph d = testutil::random_digraph(rng, n, density(rng));

    std::uniform_int_distribution<int> path_order(2, n - 1);
    if (auto p = testutil::find_path_of_order(d, path_order(rng))) {
      if (auto x = testutil::off_vertex(rng, d, p->verts)) {
        auto hyp = lemma2_hypotheses(d, *p, *x);
        auto ins = find_partner(d, *p, *x);
        if (hyp.any()) {
          ++partner_triggers;
          if (!ins || !ins->extended.valid_in(d)) ++partner_violations;
        }
      }
      auto x = testutil::off_vertex(rng, d, p->verts);
      auto y = testutil::off_vertex(rng, d, p->verts);
      if (x && y) {
        ++audit_runs;
        if (!lemma3_audit(d, *p, *x, *y).verdict) ++audit_violations;
      }
    }

    std::uniform_int_distribution<int> cycle_len(2, n - 1);
    if (auto c = find_cycle_of_length(d, cycle_len(rng))) {
      for (int x = 0; x < n; ++x) {
        if (c->contains(x)) continue;
        if (d.degrees(x, c->vertex_set()).total < c->length() + 1) continue;
        ++witness_triggers;
        auto witnesses = lemma1_witnesses(d, *c, x);
        bool complete = true;
        for (int k = 2; k <= c->length() + 1; ++k)
          complete = complete && witnesses.count(k) == 1 &&
                     witnesses.at(k).length() == k &&
                     witnesses.at(k).valid_in(d);
        if (!complete) ++witness_violations;
      }
    }
  }

  bool pass = partner_violations == 0 && audit_violations == 0 &&
              witness_violations == 0 && partner_triggers >= 100 &&
              audit_runs >= 1000 && witness_triggers >= 100;
  report(5, pass,
         "lemma property suite over 10000 digraphs: insertion " +
             std::to_string(partner_triggers) + " triggers / " +
             std::to_string(partner_violations) + " violations, audit " +
             std::to_string(audit_runs) + " / " +
             std::to_string(audit_violations) + ", witnesses " +
             std::to_string(witness_triggers) + " / " +
             std::to_string(witness_violations));
}

void criterion_6() {
  std::uint64_t mismatches = 0;
  for (ArcMask m = 0; m < full_range(4).hi; ++m) {
    Digraph d = Digraph::from_mask(4, m);
    if (!(cycle_spectrum(d) == oracle_all_cycles(d))) ++mismatches;
  }
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    Digraph d = testutil::random_digraph(rng, 7, density(rng));
    if (!(cycle_spectrum(d) == oracle_all_cycles(d))) ++mismatches;
  }
  report(6, mismatches == 0,
         "oracle equivalence on 4096 masks at n=4 plus 1000 digraphs at "
         "n=7: " +
             std::to_string(mismatches) + " mismatches");
}

void criterion_7() {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> order(4, 9);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::uint64_t violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Digraph d = testutil::random_digraph(rng, order(rng), density(rng));
    Digraph back = d.converse();
    if (satisfies_condition_star(d) != satisfies_condition_star(back))
      ++violations;
    if (d.is_strong() != back.is_strong()) ++violations;
    if (!(cycle_spectrum(d).lengths == cycle_spectrum(back).lengths))
      ++violations;
  }
  report(7, violations == 0,
         "converse symmetry on 10000 digraphs: " +
             std::to_string(violations) + " violations");
}

void criterion_8() {
  const SampleParams params{10000000, 2026};
  const int jobs = 4;
  auto main_1 = verify_sampled(TheoremTag::main_theorem, 6, params, jobs);
  auto main_2 = verify_sampled(TheoremTag::main_theorem, 6, params, jobs);
  auto c_1 = verify_sampled(TheoremTag::theorem_c, 6, params, jobs);
  auto c_2 = verify_sampled(TheoremTag::theorem_c, 6, params, jobs);
  const bool reproducible =
      io::report_verify(main_1) == io::report_verify(main_2) &&
      io::report_verify(c_1) == io::report_verify(c_2);
  bool pass = main_1.verified() && c_1.verified() &&
              main_1.counts.total == params.count && reproducible;
  report(8, pass,
         "n=6 sampled sweep, 10^7 masks each for main and c: " +
             std::to_string(main_1.counterexamples.size()) + " and " +
             std::to_string(c_1.counterexamples.size()) +
             " counterexamples, reruns " +
             (reproducible ? "byte-identical" : "DIFFER"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria FAILED\n";
  return 1;
}
