// Golden-run checks for the cyclelab binary: output lines and exit codes.
// Usage: cli_golden <path-to-cyclelab>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    std::cerr << "[FAIL] cannot spawn: " << command << "\n";
    std::exit(1);
  }
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    ++failures;
    std::cout << "[FAIL] " << what << "\n";
  }
}

void expect_exit(const RunResult& r, int code, const std::string& what) {
  expect(r.exit_code == code,
         what + " (exit " + std::to_string(r.exit_code) + ", wanted " +
             std::to_string(code) + ")");
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Value of a key=value field in a report line.
std::string field(const std::string& line, const std::string& key) {
  auto at = line.find(key + "=");
  if (at == std::string::npos) return "";
  at += key.size() + 1;
  auto end = line.find_first_of(" \n", at);
  return line.substr(at, end == std::string::npos ? end : end - at);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_golden <path-to-cyclelab>\n";
    return 2;
  }
  const std::string cli = argv[1];

  const std::string k22 = write_temp(
      "cyclelab_k22.txt", "n 4\n0 2\n0 3\n1 2\n1 3\n2 0\n2 1\n3 0\n3 1\n");
  const std::string k23 = write_temp(
      "cyclelab_k23.txt",
      "n 5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 0\n2 1\n3 0\n3 1\n4 0\n4 1\n");
  const std::string c5 = write_temp("cyclelab_c5.txt",
                                    "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const std::string bad = write_temp("cyclelab_bad.txt", "n 3\n0 0\n");

  auto check_true = run(cli + " check " + k22 + " --condition c");
  expect_exit(check_true, 0, "check condition c on K*_{2,2}");
  expect(contains(check_true.output,
                  "kind=check condition=c n=4 pairs=2 vacuous=false "
                  "verdict=true"),
         "check summary line for K*_{2,2}");

  auto check_false = run(cli + " check " + k23 + " --condition c");
  expect_exit(check_false, 2, "failing condition exits 2");
  expect(contains(check_false.output, "verdict=false"),
         "check summary line for K*_{2,3}");

  auto check_default = run(cli + " check " + k22);
  expect_exit(check_default, 0, "default condition is c");

  auto spectrum = run(cli + " spectrum " + c5);
  expect_exit(spectrum, 0, "spectrum exits 0");
  expect(contains(spectrum.output,
                  "kind=spectrum n=5 mask=99361 lengths=5 "
                  "witness_5=0-1-2-3-4"),
         "spectrum line for the 5-cycle");

  auto mask_input = run("echo 'mask 3 63' | " + cli + " spectrum -");
  expect_exit(mask_input, 0, "mask form on stdin");
  expect(contains(mask_input.output, "lengths=2,3"),
         "complete digraph spectrum from mask input");

  auto verify4 = run(cli + " verify --n 4 --theorem main");
  expect_exit(verify4, 0, "verify --n 4 --theorem main");
  expect(contains(verify4.output,
                  "kind=verify theorem=main n=4 mode=range lo=0 hi=4096"),
         "verify summary header");
  expect(contains(verify4.output, "total=4096"), "verify scans 4096 masks");
  expect(contains(verify4.output, "counterexamples=0"),
         "no counterexamples at n=4");

  auto verify_c = run(cli + " verify --n 4 --theorem c --jobs 2");
  expect_exit(verify_c, 0, "verify --theorem c");

  auto verify_range =
      run(cli + " verify --n 4 --range 0:2048 --theorem main");
  expect(contains(verify_range.output, "lo=0 hi=2048"),
         "sub-range is honoured");

  auto sampled = run(cli + " verify --n 6 --sample 2000 --seed 7");
  expect_exit(sampled, 0, "sampled verify");
  expect(contains(sampled.output, "mode=sample"), "sample mode reported");
  auto sampled_again = run(cli + " verify --n 6 --sample 2000 --seed 7");
  expect(sampled.output == sampled_again.output,
         "sampled run reproduces byte-for-byte");

  // checkpointed run: interrupt-free resume gives the same summary
  auto cp_path = (std::filesystem::temp_directory_path() /
                  "cyclelab_cp_test.txt")
                     .string();
  std::remove(cp_path.c_str());
  auto direct = run(cli + " verify --n 4 --theorem main");
  auto half = run(cli + " verify --n 4 --theorem main --range 0:4096" +
                  " --checkpoint " + cp_path + " --checkpoint-every 1024");
  expect_exit(half, 0, "checkpointed run");
  auto resumed = run(cli + " verify --n 4 --theorem main --range 0:4096" +
                     " --checkpoint " + cp_path +
                     " --checkpoint-every 1024");
  expect(contains(resumed.output, "total=4096"),
         "resume from a finished checkpoint keeps the counts");
  expect(resumed.output == half.output,
         "finished checkpoint reproduces the summary");
  std::ifstream cp_in(cp_path);
  std::string cp_line;
  std::getline(cp_in, cp_line);
  expect(contains(cp_line, "next=4096"), "checkpoint cursor at the end");
  expect(direct.output == half.output,
         "checkpointed summary equals the direct one");
  std::remove(cp_path.c_str());

  // resume from a hand-built mid-sweep checkpoint: counts of [0, 1024)
  // plus cursor 1024 must finish into the same summary as a direct run
  auto partial = run(cli + " verify --n 4 --theorem main --range 0:1024");
  std::string cp_content = "checkpoint v=1 theorem=main n=4 lo=0 hi=4096";
  cp_content += " next=1024";
  for (const char* key : {"total", "strong", "strong_condition_c",
                          "directed_cycles_excluded", "hamiltonian",
                          "with_n1", "with_n2"})
    cp_content += std::string(" ") + key + "=" + field(partial.output, key);
  cp_content += " cx=none\n";
  auto mid_cp = write_temp("cyclelab_cp_mid.txt", cp_content);
  auto finished = run(cli + " verify --n 4 --theorem main --range 0:4096" +
                      " --checkpoint " + mid_cp);
  expect_exit(finished, 0, "resume from a mid-sweep checkpoint");
  expect(finished.output == direct.output,
         "mid-sweep resume completes to the direct summary");
  std::remove(mid_cp.c_str());

  auto env_jobs = run("CYCLELAB_JOBS=3 " + cli + " verify --n 4");
  expect_exit(env_jobs, 0, "CYCLELAB_JOBS sets the default worker count");
  expect(env_jobs.output == direct.output,
         "env-controlled jobs leave the summary unchanged");

  auto mine_out = (std::filesystem::temp_directory_path() /
                   "cyclelab_mine_test.txt")
                      .string();
  std::remove(mine_out.c_str());
  auto mine = run(cli + " mine --n 4 --out " + mine_out);
  expect_exit(mine, 0, "mine --n 4");
  expect(contains(mine.output, "kind=mine n=4"), "mine summary line");
  expect(contains(mine.output, "escalations=0"), "no escalations at n=4");
  std::ifstream mined(mine_out);
  std::string first_record;
  std::getline(mined, first_record);
  expect(contains(first_record, "kind=record n=4"),
         "records land in the output file");
  std::remove(mine_out.c_str());

  auto classify = run(cli + " classify " + k22);
  expect_exit(classify, 0, "classify exits 0");
  expect(contains(classify.output, "classification=complete-bipartite"),
         "K*_{2,2} classifies as complete bipartite");

  auto usage = run(cli + " verify --n 4 --no-such-flag");
  expect_exit(usage, 64, "unknown flag exits 64");
  auto missing = run(cli + " spectrum /no/such/file");
  expect_exit(missing, 74, "missing input exits 74");
  auto malformed = run(cli + " spectrum " + bad);
  expect_exit(malformed, 74, "malformed input exits 74");
  auto conflict = run(cli + " verify --n 6 --sample 10 --range 0:5");
  expect_exit(conflict, 64, "--sample with --range exits 64");
  auto bad_range = run(cli + " verify --n 4 --range 9:1");
  expect_exit(bad_range, 64, "inverted range exits 64");
  auto too_big = run(cli + " verify --n 8");
  expect_exit(too_big, 64, "exhaustive scan beyond n=6 exits 64");

  std::cout << (failures == 0 ? "all cli checks passed\n"
                              : "cli checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
