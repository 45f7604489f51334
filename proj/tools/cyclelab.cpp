// cyclelab command line: condition checks, cycle spectra, verification
// sweeps over all labelled digraphs of a given order, conjecture mining,
// and extremal classification.
//
// Exit codes: 0 success / verdict true; 2 condition verdict false;
// 3 counterexamples found; 64 usage error; 74 input or I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclelab/conditions.hpp"
#include "cyclelab/cycle_engine.hpp"
#include "cyclelab/digraph.hpp"
#include "cyclelab/io.hpp"
#include "cyclelab/lemma_lab.hpp"
#include "cyclelab/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionFalse = 2;
constexpr int kExitCounterexamples = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

using cyclelab::ArcMask;
using cyclelab::Digraph;
using cyclelab::MaskRange;

Digraph load_digraph(const std::string& file) {
  if (file == "-") return cyclelab::io::parse_digraph(std::cin);
  std::ifstream in(file);
  if (!in.is_open())
    throw std::runtime_error("cannot open input file: " + file);
  return cyclelab::io::parse_digraph(in);
}

MaskRange parse_range(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--range", "expected LO:HI");
  MaskRange range;
  try {
    range.lo = cyclelab::io::mask_from_string(text.substr(0, colon));
    range.hi = cyclelab::io::mask_from_string(text.substr(colon + 1));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--range", e.what());
  }
  const MaskRange full = cyclelab::full_range(n);
  if (range.lo > range.hi || range.hi > full.hi)
    throw CLI::ValidationError("--range", "range out of bounds for this n");
  return range;
}

int default_jobs() {
  if (const char* env = std::getenv("CYCLELAB_JOBS")) {
    try {
      int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid CYCLELAB_JOBS value\n";
  }
  return 1;
}

struct VerifyArgs {
  int n = 0;
  std::string theorem = "main";
  std::string range_text;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  int jobs = default_jobs();
  std::string checkpoint_file;
  std::uint64_t checkpoint_every = 1u << 16;
};

int run_verify(const VerifyArgs& args) {
  const auto theorem = cyclelab::theorem_from_name(args.theorem);

  if (args.sample) {
    cyclelab::SampleParams params{*args.sample, args.seed};
    auto summary =
        cyclelab::verify_sampled(theorem, args.n, params, args.jobs);
    std::cout << cyclelab::io::report_verify(summary) << "\n";
    for (const auto& rec : summary.counterexamples)
      std::cout << cyclelab::io::report_record(rec) << "\n";
    return summary.verified() ? kExitOk : kExitCounterexamples;
  }

  MaskRange range = args.range_text.empty()
                        ? cyclelab::full_range(args.n)
                        : parse_range(args.range_text, args.n);

  cyclelab::VerificationSummary acc;
  acc.theorem = theorem;
  acc.n = args.n;
  acc.range = {range.lo, range.lo};
  ArcMask cursor = range.lo;

  if (!args.checkpoint_file.empty()) {
    if (auto cp = cyclelab::io::read_checkpoint(args.checkpoint_file)) {
      if (cp->n != args.n || cp->theorem != theorem ||
          !(cp->range == range))
        throw std::runtime_error(
            "checkpoint does not match the requested sweep");
      cursor = cp->next;
      acc.range.hi = cp->next;
      acc.counts = cp->counts;
      for (ArcMask m : cp->counterexample_masks) {
        cyclelab::CounterexampleRecord rec;
        rec.n = args.n;
        rec.mask = m;
        Digraph d = Digraph::from_mask(args.n, m);
        rec.condition = cyclelab::check_condition(
            d, cyclelab::ConditionTag::theorem_c);
        rec.spectrum = cyclelab::cycle_spectrum(d);
        rec.classification = cyclelab::classify_extremal(d);
        acc.counterexamples.push_back(std::move(rec));
      }
    }
  }

  const auto save_checkpoint = [&] {
    if (args.checkpoint_file.empty()) return;
    cyclelab::io::Checkpoint cp;
    cp.n = args.n;
    cp.theorem = theorem;
    cp.range = range;
    cp.next = cursor;
    cp.counts = acc.counts;
    for (const auto& rec : acc.counterexamples)
      cp.counterexample_masks.push_back(rec.mask);
    cyclelab::io::write_checkpoint_atomic(args.checkpoint_file, cp);
  };

  while (cursor < range.hi) {
    ArcMask block_hi = cursor + args.checkpoint_every;
    if (block_hi > range.hi || block_hi < cursor) block_hi = range.hi;
    auto block =
        theorem == cyclelab::TheoremTag::main_theorem
            ? cyclelab::verify_main_theorem(args.n, {cursor, block_hi},
                                            args.jobs)
            : cyclelab::verify_theorem_c(args.n, {cursor, block_hi},
                                         args.jobs);
    cyclelab::merge(acc, block);
    cursor = block_hi;
    save_checkpoint();
  }

  std::cout << cyclelab::io::report_verify(acc) << "\n";
  for (const auto& rec : acc.counterexamples)
    std::cout << cyclelab::io::report_record(rec) << "\n";
  return acc.verified() ? kExitOk : kExitCounterexamples;
}

int run_check(const std::string& file, const std::string& condition) {
  Digraph d = load_digraph(file);
  auto report =
      cyclelab::check_condition(d, cyclelab::condition_from_name(condition));
  for (const auto& pair : report.pairs)
    std::cout << cyclelab::io::report_check_pair(report, pair) << "\n";
  std::cout << cyclelab::io::report_check(report) << "\n";
  return report.verdict ? kExitOk : kExitConditionFalse;
}

int run_spectrum(const std::string& file) {
  Digraph d = load_digraph(file);
  std::cout << cyclelab::io::report_spectrum(d, cyclelab::cycle_spectrum(d))
            << "\n";
  return kExitOk;
}

int run_classify(const std::string& file) {
  Digraph d = load_digraph(file);
  std::cout << cyclelab::io::report_classify(d,
                                             cyclelab::classify_extremal(d))
            << "\n";
  return kExitOk;
}

int run_mine(int n, const std::string& range_text,
             const std::string& out_file) {
  MaskRange range = range_text.empty() ? cyclelab::full_range(n)
                                       : parse_range(range_text, n);
  auto mined = cyclelab::mine_conjecture(n, range);

  std::ofstream out_stream;
  if (!out_file.empty()) {
    out_stream.open(out_file, std::ios::app);
    if (!out_stream.is_open())
      throw std::runtime_error("cannot open output file: " + out_file);
  }
  std::ostream& out = out_file.empty() ? std::cout : out_stream;

  std::uint64_t escalations = 0;
  for (const auto& rec : mined) {
    out << cyclelab::io::report_record(rec) << "\n";
    if (!rec.spectrum.has(n - 2)) {
      ++escalations;
      std::cerr << "escalation: mined record without an (n-2)-cycle, mask="
                << cyclelab::io::mask_to_string(rec.mask) << "\n";
    }
  }
  if (!out.good()) throw std::runtime_error("failed writing mined records");
  std::cout << cyclelab::io::report_mine(
                   n, range, static_cast<std::uint64_t>(range.hi - range.lo),
                   mined.size(), escalations)
            << "\n";
  return escalations == 0 ? kExitOk : kExitCounterexamples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle structure toolkit for small digraphs"};
  app.require_subcommand(1);

  std::string check_file, check_condition = "c";
  auto* check = app.add_subcommand(
      "check", "evaluate a degree condition on a digraph file");
  check->add_option("file", check_file, "digraph file, or - for stdin")
      ->required();
  check
      ->add_option("--condition", check_condition,
                   "condition to check: a, b, c, or meyniel")
      ->check(CLI::IsMember({"a", "b", "c", "meyniel"}));

  std::string spectrum_file;
  auto* spectrum = app.add_subcommand(
      "spectrum", "report every cycle length present, with witnesses");
  spectrum->add_option("file", spectrum_file, "digraph file, or - for stdin")
      ->required();

  std::string classify_file;
  auto* classify = app.add_subcommand(
      "classify", "match a digraph against the extremal families");
  classify->add_option("file", classify_file, "digraph file, or - for stdin")
      ->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "sweep labelled digraphs of order n for counterexamples");
  verify->add_option("--n", verify_args.n, "digraph order")
      ->required()
      ->check(CLI::Range(2, 10));
  verify
      ->add_option("--theorem", verify_args.theorem,
                   "main: cycle of length n-1 or n-2 in every strong, "
                   "non-directed-cycle digraph meeting condition (*); "
                   "c: Hamiltonicity of every strong digraph meeting it")
      ->check(CLI::IsMember({"main", "c"}));
  auto* range_opt =
      verify->add_option("--range", verify_args.range_text,
                         "mask interval LO:HI, default the full space");
  auto* sample_opt = verify->add_option(
      "--sample", verify_args.sample,
      "sample this many seeded-random masks instead of an index scan");
  auto* seed_opt = verify->add_option("--seed", verify_args.seed,
                                      "seed for --sample (default 0)");
  verify->add_option("--jobs", verify_args.jobs,
                     "worker count (default from CYCLELAB_JOBS, else 1)");
  auto* checkpoint_opt =
      verify->add_option("--checkpoint", verify_args.checkpoint_file,
                         "resume from and update this cursor file");
  verify->add_option("--checkpoint-every", verify_args.checkpoint_every,
                     "masks per checkpoint block (default 65536)")
      ->check(CLI::PositiveNumber);
  sample_opt->excludes(range_opt)->excludes(checkpoint_opt);
  seed_opt->needs(sample_opt);

  int mine_n = 0;
  std::string mine_range, mine_out;
  auto* mine = app.add_subcommand(
      "mine", "collect condition-(*) digraphs with no (n-1)-cycle");
  mine->add_option("--n", mine_n, "digraph order")
      ->required()
      ->check(CLI::Range(4, 6));
  mine->add_option("--range", mine_range, "mask interval LO:HI");
  mine->add_option("--out", mine_out, "append records to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(check_file, check_condition);
    if (*spectrum) return run_spectrum(spectrum_file);
    if (*classify) return run_classify(classify_file);
    if (*verify) return run_verify(verify_args);
    if (*mine) return run_mine(mine_n, mine_range, mine_out);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
