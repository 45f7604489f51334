#pragma once

// Text formats, report lines, and checkpoints.
//
// Digraph input comes in two forms:
//   edge list   "n <order>" then one "u v" line per arc; '#' starts a
//               comment, blank lines are skipped
//   mask        "mask <n> <integer>", the integer's bits row-major over
//               ordered pairs skipping the diagonal: pair (u,v) at bit
//               u*(n-1) + v - (1 if v > u else 0)
//
// Reports are single lines of space-separated key=value fields in a fixed
// key order, so runs diff cleanly and outputs stream. A checkpoint is one
// such line holding the cursor and partial counts of a verify sweep; it is
// written to a temp file and renamed into place.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclelab/conditions.hpp"
#include "cyclelab/cycle_engine.hpp"
#include "cyclelab/digraph.hpp"
#include "cyclelab/verifier.hpp"

namespace cyclelab::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string mask_to_string(ArcMask mask);
/// Decimal to mask; rejects values needing more than max_bits bits.
ArcMask mask_from_string(const std::string& text, int max_bits = 128);

/// Reads either input form (first significant line decides which).
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);

std::string emit_arc_list(const Digraph& d);
std::string emit_mask(const Digraph& d);

// Report lines. Key order is frozen; identical inputs give identical bytes.
std::string report_check_pair(const ConditionReport& report,
                              const PairStat& pair);
std::string report_check(const ConditionReport& report);
std::string report_spectrum(const Digraph& d, const SpectrumReport& spectrum);
std::string report_classify(const Digraph& d, ExtremalTag tag);
std::string report_record(const CounterexampleRecord& record);
std::string report_verify(const VerificationSummary& summary);
std::string report_mine(int n, MaskRange range, std::uint64_t scanned,
                        std::uint64_t mined, std::uint64_t escalations);

struct Checkpoint {
  int n = 0;
  TheoremTag theorem = TheoremTag::main_theorem;
  MaskRange range;
  ArcMask next = 0;
  VerificationCounts counts;
  std::vector<ArcMask> counterexample_masks;
};

std::string checkpoint_line(const Checkpoint& cp);
Checkpoint parse_checkpoint_line(const std::string& line);

/// nullopt when the file does not exist; ParseError when it is malformed.
std::optional<Checkpoint> read_checkpoint(const std::string& path);
/// Write-temp-then-rename, so readers never observe a torn checkpoint.
void write_checkpoint_atomic(const std::string& path, const Checkpoint& cp);

}  // namespace cyclelab::io
