#include "cyclelab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace cyclelab::io {

std::string mask_to_string(ArcMask mask) {
  if (mask == 0) return "0";
  std::string out;
  while (mask != 0) {
    out += static_cast<char>('0' + static_cast<int>(mask % 10));
    mask /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ArcMask mask_from_string(const std::string& text, int max_bits) {
  if (text.empty()) throw std::invalid_argument("empty mask value");
  ArcMask value = 0;
  const ArcMask limit =
      max_bits >= 128 ? ~ArcMask{0} : (ArcMask{1} << max_bits) - 1;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("mask value is not a decimal integer");
    if (value > limit / 10) throw std::invalid_argument("mask value too large");
    value = value * 10 + static_cast<unsigned>(ch - '0');
    if (value > limit) throw std::invalid_argument("mask value too large");
  }
  return value;
}

namespace {

// Significant lines of the input: comments stripped, blanks dropped,
// original line numbers kept for error messages.
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream trim(line);
    std::string word, rebuilt;
    while (trim >> word) {
      if (!rebuilt.empty()) rebuilt += ' ';
      rebuilt += word;
    }
    if (!rebuilt.empty()) out.emplace_back(number, rebuilt);
  }
  return out;
}

Digraph parse_arc_list(const std::vector<std::pair<int, std::string>>& lines) {
  std::istringstream header(lines.front().second);
  std::string tag;
  int n = 0;
  char extra;
  header >> tag >> n;
  if (tag != "n" || n < 1 || (header >> extra))
    throw ParseError(lines.front().first, "malformed header, expected 'n <order>'");
  if (n > kMaxOrder)
    throw ParseError(lines.front().first, "order exceeds the supported 16");
  Digraph d(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    std::istringstream arc(text);
    int u = -1, v = -1;
    arc >> u >> v;
    if (arc.fail() || (arc >> extra))
      throw ParseError(number, "malformed arc line, expected 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(number, "vertex label out of range");
    if (u == v) throw ParseError(number, "loop arc");
    if (d.has_arc(u, v)) throw ParseError(number, "duplicate arc");
    d.add_arc(u, v);
  }
  return d;
}

Digraph parse_mask_line(int line_number, const std::string& text) {
  std::istringstream in(text);
  std::string tag, value;
  int n = 0;
  char extra;
  in >> tag >> n >> value;
  if (tag != "mask" || n < 1 || value.empty() || (in >> extra))
    throw ParseError(line_number, "malformed mask, expected 'mask <n> <integer>'");
  if (n > 11) throw ParseError(line_number, "mask form supports order <= 11");
  try {
    return Digraph::from_mask(n, mask_from_string(value, n * (n - 1)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_number, e.what());
  }
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, "empty input");
  if (lines.front().second.starts_with("mask")) {
    if (lines.size() > 1)
      throw ParseError(lines[1].first, "unexpected content after mask line");
    return parse_mask_line(lines.front().first, lines.front().second);
  }
  return parse_arc_list(lines);
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

std::string emit_arc_list(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v)
      if (u != v && d.has_arc(u, v))
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string emit_mask(const Digraph& d) {
  return "mask " + std::to_string(d.order()) + " " +
         mask_to_string(d.mask()) + "\n";
}

namespace {

const char* bool_name(bool b) { return b ? "true" : "false"; }

std::string lengths_field(const SpectrumReport& spectrum) {
  if (spectrum.lengths.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < spectrum.lengths.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spectrum.lengths[i]);
  }
  return out;
}

std::string mask_field(const Digraph& d) {
  if (d.order() > 11) return "none";
  return mask_to_string(d.mask());
}

}  // namespace

std::string report_check_pair(const ConditionReport& report,
                              const PairStat& pair) {
  std::string out = "kind=check-pair condition=";
  out += condition_name(report.which);
  out += " n=" + std::to_string(report.n);
  out += " x=" + std::to_string(pair.x) + " y=" + std::to_string(pair.y);
  out += " degree_sum=" + std::to_string(pair.degree_sum);
  out += " min_degree=" + std::to_string(pair.min_degree);
  out += " semi_sum_min=" + std::to_string(pair.semi_sum_min);
  out += " ok=";
  out += bool_name(pair.ok);
  return out;
}

std::string report_check(const ConditionReport& report) {
  std::string out = "kind=check condition=";
  out += condition_name(report.which);
  out += " n=" + std::to_string(report.n);
  out += " pairs=" + std::to_string(report.pairs.size());
  out += " vacuous=";
  out += bool_name(report.vacuous);
  out += " verdict=";
  out += bool_name(report.verdict);
  return out;
}

std::string report_spectrum(const Digraph& d, const SpectrumReport& spectrum) {
  std::string out = "kind=spectrum n=" + std::to_string(d.order());
  out += " mask=" + mask_field(d);
  out += " lengths=" + lengths_field(spectrum);
  for (const auto& [k, cycle] : spectrum.witnesses)
    out += " witness_" + std::to_string(k) + "=" + to_string(cycle);
  return out;
}

std::string report_classify(const Digraph& d, ExtremalTag tag) {
  std::string out = "kind=classify n=" + std::to_string(d.order());
  out += " mask=" + mask_field(d);
  out += " classification=";
  out += extremal_name(tag);
  return out;
}

std::string report_record(const CounterexampleRecord& record) {
  std::string out = "kind=record n=" + std::to_string(record.n);
  out += " mask=" + mask_to_string(record.mask);
  out += " condition_c=";
  out += bool_name(record.condition.verdict);
  out += " vacuous=";
  out += bool_name(record.condition.vacuous);
  out += " pairs=" + std::to_string(record.condition.pairs.size());
  out += " lengths=" + lengths_field(record.spectrum);
  out += " classification=";
  out += extremal_name(record.classification);
  return out;
}

std::string report_verify(const VerificationSummary& summary) {
  std::string out = "kind=verify theorem=";
  out += theorem_name(summary.theorem);
  out += " n=" + std::to_string(summary.n);
  if (summary.sample) {
    out += " mode=sample lo=none hi=none";
    out += " sample=" + std::to_string(summary.sample->count);
    out += " seed=" + std::to_string(summary.sample->seed);
  } else {
    out += " mode=range lo=" + mask_to_string(summary.range.lo);
    out += " hi=" + mask_to_string(summary.range.hi);
    out += " sample=none seed=none";
  }
  const VerificationCounts& c = summary.counts;
  out += " total=" + std::to_string(c.total);
  out += " strong=" + std::to_string(c.strong);
  out += " strong_condition_c=" + std::to_string(c.strong_condition_star);
  out += " directed_cycles_excluded=" +
         std::to_string(c.directed_cycles_excluded);
  out += " hamiltonian=" + std::to_string(c.hamiltonian);
  out += " with_n1=" + std::to_string(c.with_n_minus_1);
  out += " with_n2=" + std::to_string(c.with_n_minus_2);
  out += " counterexamples=" + std::to_string(summary.counterexamples.size());
  return out;
}

std::string report_mine(int n, MaskRange range, std::uint64_t scanned,
                        std::uint64_t mined, std::uint64_t escalations) {
  std::string out = "kind=mine n=" + std::to_string(n);
  out += " lo=" + mask_to_string(range.lo);
  out += " hi=" + mask_to_string(range.hi);
  out += " scanned=" + std::to_string(scanned);
  out += " mined=" + std::to_string(mined);
  out += " escalations=" + std::to_string(escalations);
  return out;
}

std::string checkpoint_line(const Checkpoint& cp) {
  std::string out = "checkpoint v=1 theorem=";
  out += theorem_name(cp.theorem);
  out += " n=" + std::to_string(cp.n);
  out += " lo=" + mask_to_string(cp.range.lo);
  out += " hi=" + mask_to_string(cp.range.hi);
  out += " next=" + mask_to_string(cp.next);
  const VerificationCounts& c = cp.counts;
  out += " total=" + std::to_string(c.total);
  out += " strong=" + std::to_string(c.strong);
  out += " strong_condition_c=" + std::to_string(c.strong_condition_star);
  out += " directed_cycles_excluded=" +
         std::to_string(c.directed_cycles_excluded);
  out += " hamiltonian=" + std::to_string(c.hamiltonian);
  out += " with_n1=" + std::to_string(c.with_n_minus_1);
  out += " with_n2=" + std::to_string(c.with_n_minus_2);
  out += " cx=";
  if (cp.counterexample_masks.empty()) {
    out += "none";
  } else {
    for (std::size_t i = 0; i < cp.counterexample_masks.size(); ++i) {
      if (i) out += ';';
      out += mask_to_string(cp.counterexample_masks[i]);
    }
  }
  return out;
}

namespace {

std::uint64_t parse_u64(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t value = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return value;
}

std::string expect_field(std::istringstream& in, const std::string& key,
                         const std::string& context) {
  std::string token;
  if (!(in >> token) || !token.starts_with(key + "="))
    throw ParseError(1, context + ": expected field " + key);
  return token.substr(key.size() + 1);
}

}  // namespace

Checkpoint parse_checkpoint_line(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  in >> tag;
  if (tag != "checkpoint") throw ParseError(1, "not a checkpoint line");
  const std::string ctx = "checkpoint";
  try {
    if (expect_field(in, "v", ctx) != "1")
      throw ParseError(1, "unsupported checkpoint version");
    Checkpoint cp;
    cp.theorem = theorem_from_name(expect_field(in, "theorem", ctx));
    cp.n = static_cast<int>(parse_u64(expect_field(in, "n", ctx)));
    cp.range.lo = mask_from_string(expect_field(in, "lo", ctx));
    cp.range.hi = mask_from_string(expect_field(in, "hi", ctx));
    cp.next = mask_from_string(expect_field(in, "next", ctx));
    cp.counts.total = parse_u64(expect_field(in, "total", ctx));
    cp.counts.strong = parse_u64(expect_field(in, "strong", ctx));
    cp.counts.strong_condition_star =
        parse_u64(expect_field(in, "strong_condition_c", ctx));
    cp.counts.directed_cycles_excluded =
        parse_u64(expect_field(in, "directed_cycles_excluded", ctx));
    cp.counts.hamiltonian = parse_u64(expect_field(in, "hamiltonian", ctx));
    cp.counts.with_n_minus_1 = parse_u64(expect_field(in, "with_n1", ctx));
    cp.counts.with_n_minus_2 = parse_u64(expect_field(in, "with_n2", ctx));
    std::string cx = expect_field(in, "cx", ctx);
    if (cx != "none") {
      std::istringstream items(cx);
      std::string item;
      while (std::getline(items, item, ';'))
        cp.counterexample_masks.push_back(mask_from_string(item));
    }
    return cp;
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, std::string("checkpoint: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(1, std::string("checkpoint: ") + e.what());
  }
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty checkpoint file");
  return parse_checkpoint_line(line);
}

void write_checkpoint_atomic(const std::string& path, const Checkpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out.is_open())
      throw std::runtime_error("cannot open checkpoint temp file: " + tmp);
    out << checkpoint_line(cp) << "\n";
    out.flush();
    if (!out.good())
      throw std::runtime_error("failed writing checkpoint temp file: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("failed renaming checkpoint into place: " + path);
}

}  // namespace cyclelab::io
