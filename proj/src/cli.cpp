#include "ordersum/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "ordersum/error.hpp"
#include "ordersum/parallel.hpp"
#include "ordersum/psi.hpp"

namespace ordersum {

namespace {

struct CorpusOptions
{
  std::size_t max_order = 360;
  std::string file;
  unsigned workers = 1;
  std::size_t cap = kDefaultCap;
};

std::vector<CorpusEntry> load_corpus(CorpusOptions const &o)
{
  std::vector<CorpusEntry> corpus = o.file.empty() ? builtin_corpus(o.max_order, o.workers, o.cap)
                                                   : load_group_file(o.file, o.cap);
  sort_corpus(corpus);
  return corpus;
}

bool is_decimal(std::string const &s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string approx6(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_psi(std::string const &target, std::size_t cap, std::ostream &out)
{
  if (is_decimal(target)) {
    out << psi_cyclic(std::stoull(target)).get_str() << "\n";
    return kExitOk;
  }
  out << psi_group(build_group(parse_spec(target), cap)).get_str() << "\n";
  return kExitOk;
}

int cmd_check(std::string const &target, std::size_t cap, std::string const &format,
              std::ostream &out)
{
  GroupSpec spec = parse_spec(target);
  EnumeratedGroup g = build_group(spec, cap);
  CriterionVerdict v = criterion_verdict(g);
  bool solvable = derived_series(g).solvable;

  ReportJson rec;
  rec["spec"] = spec.canonical();
  rec["n"] = v.n;
  rec["psi_G"] = v.psi_g.get_str();
  rec["psi_Cn"] = v.psi_cn.get_str();
  rec["comparison"] = to_string(v.comparison);
  rec["conclusion"] = to_string(v.conclusion);
  rec["solvable"] = solvable;

  if (format == "json") {
    out << rec.dump(2) << "\n";
  } else {
    for (auto const &[k, val] : rec.items())
      out << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }

  bool counterexample = v.comparison == Comparison::Greater && !solvable;
  return counterexample ? kExitCounterexample : kExitOk;
}

int cmd_scan(CorpusOptions const &o, std::string const &format, std::ostream &out)
{
  auto corpus = load_corpus(o);
  std::vector<ReportJson> rows(corpus.size());
  parallel_for(corpus.size(), o.workers, [&](std::size_t i) { rows[i] = scan_row(corpus[i]); });

  static char const *const columns[] = {"spec",         "order",      "psi_G",   "psi_Cn", "ratio",
                                        "ratio_approx", "comparison", "solvable"};

  auto cell = [](ReportJson const &v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };

  if (format == "json") {
    out << ReportJson(rows).dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t c = 0; c < std::size(columns); ++c)
      out << (c ? "," : "") << columns[c];
    out << "\n";
    for (auto const &r : rows) {
      for (std::size_t c = 0; c < std::size(columns); ++c)
        out << (c ? "," : "") << csv_field(cell(r[columns[c]]));
      out << "\n";
    }
  } else {
    std::vector<std::size_t> width(std::size(columns));
    for (std::size_t c = 0; c < std::size(columns); ++c) {
      width[c] = std::string(columns[c]).size();
      for (auto const &r : rows)
        width[c] = std::max(width[c], cell(r[columns[c]]).size());
    }
    auto line = [&](auto get) {
      std::string s;
      for (std::size_t c = 0; c < std::size(columns); ++c) {
        std::string v = get(c);
        s += v;
        if (c + 1 < std::size(columns))
          s += std::string(width[c] - v.size() + 2, ' ');
      }
      out << s << "\n";
    };
    line([&](std::size_t c) { return std::string(columns[c]); });
    for (auto const &r : rows)
      line([&](std::size_t c) { return cell(r[columns[c]]); });
  }
  return kExitOk;
}

std::vector<std::uint64_t> parse_m_list(std::string const &text)
{
  std::vector<std::uint64_t> ms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!is_decimal(item))
      throw ParseError(pos, "--m-list expects comma-separated positive integers");
    ms.push_back(std::stoull(item));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return ms;
}

int cmd_verify(CorpusOptions const &o, std::string const &suite, std::string const &m_list,
               std::string const &out_dir, std::ostream &out)
{
  bool all = suite == "all";
  RunOptions run{o.workers, o.cap};
  std::size_t m = o.max_order;
  std::vector<CheckReport> reports;

  std::vector<std::uint64_t> ms;
  if (all || suite == "family")
    ms = parse_m_list(m_list);

  std::vector<CorpusEntry> corpus;
  if (all || suite == "main" || suite == "lemmas" || suite == "sylow")
    corpus = load_corpus(o);

  if (all || suite == "main") {
    reports.push_back(verify_solvability_criterion(corpus, run));
    reports.push_back(verify_cyclic_index_witness(corpus, run));
  }
  if (all || suite == "lemmas") {
    std::vector<CorpusEntry> sample;
    for (auto const &spec : direct_product_sample())
      sample.push_back(make_entry(spec, o.cap));

    reports.push_back(verify_psi_bounds(corpus, run));
    reports.push_back(verify_direct_product(sample, 2000, run));
    reports.push_back(verify_quotient_bound(corpus, run, std::min<std::size_t>(m, 200)));
    reports.push_back(verify_normal_cyclic_sylow(corpus, run, std::min<std::size_t>(m, 200)));
    reports.push_back(verify_cyclic_core_index(corpus, run, std::min<std::size_t>(m, 120)));
    reports.push_back(verify_small_cyclic_index(corpus, run, std::min<std::size_t>(m, 120)));
    reports.push_back(verify_prime_power_supermult(13, 6));
    reports.push_back(verify_smooth_square(10000));
    reports.push_back(verify_cyclic_psi_lower_bound(10000, 1000000000, kLowerBoundSeed));
  }
  if (all || suite == "family")
    reports.push_back(verify_equality_family(ms, 4620, run));
  if (all || suite == "sylow")
    reports.push_back(verify_sylow_counts(corpus, run));

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (auto const &r : reports) {
      std::ofstream f(std::filesystem::path(out_dir) / (r.name + ".json"));
      if (!f)
        throw FormatError("cannot write report into " + out_dir);
      f << to_json(r).dump(2) << "\n";
    }
  }

  bool pass = true;
  for (auto const &r : reports) {
    pass = pass && r.pass();
    out << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " population=" << r.population
        << " cases=" << r.cases << " violations=" << r.violations.size()
        << " observations=" << r.observations.size() << " skipped=" << r.skipped.size() << "\n";
    for (auto const &v : r.violations)
      out << "  violation " << v.subject << " " << v.details.dump() << "\n";
  }
  out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitViolations;
}

void add_corpus_flags(CLI::App *cmd, CorpusOptions &o, bool with_file)
{
  cmd->add_option("--max-order", o.max_order, "Largest order in the builtin corpus")
    ->check(CLI::PositiveNumber);
  if (with_file)
    cmd->add_option("--file", o.file, "Group file (JSON) instead of the builtin corpus");
  cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", o.cap, "Largest table order to enumerate")->check(CLI::PositiveNumber);
}

} // namespace

ReportJson scan_row(CorpusEntry const &entry)
{
  CriterionVerdict v = criterion_verdict(*entry.group);
  ReportJson row;
  row["spec"] = entry.key;
  row["order"] = entry.order;
  row["psi_G"] = v.psi_g.get_str();
  row["psi_Cn"] = v.psi_cn.get_str();
  row["ratio"] = v.ratio().to_string();
  row["ratio_approx"] = approx6(v.ratio().approx());
  row["comparison"] = to_string(v.comparison);
  row["solvable"] = derived_series(*entry.group).solvable;
  return row;
}

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Sums of element orders and the 211/1617 solvability criterion"};
  app.require_subcommand(1);

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  std::string target;
  std::size_t cap = kDefaultCap;
  std::string format = "text";

  auto *psi = app.add_subcommand("psi", "Print psi of a group spec, or of C_n for an integer n");
  psi->add_option("target", target, "Group spec or positive integer")->required();
  psi->add_option("--cap", cap, "Largest table order to enumerate")->check(CLI::PositiveNumber);

  auto *check = app.add_subcommand("check", "Evaluate the criterion against solvability");
  check->add_option("spec", target, "Group spec")->required();
  check->add_option("--cap", cap, "Largest table order to enumerate")->check(CLI::PositiveNumber);
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CorpusOptions scan_opts;
  scan_opts.workers = hw;
  std::string scan_format = "text";
  auto *scan = app.add_subcommand("scan", "Tabulate psi and the criterion over a corpus");
  add_corpus_flags(scan, scan_opts, true);
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv", "text"}));

  CorpusOptions verify_opts;
  verify_opts.workers = hw;
  std::string suite = "all";
  std::string m_list = "1,7,11,13,49,77,91";
  std::string out_dir;
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  add_corpus_flags(verify, verify_opts, true);
  verify->add_option("--suite", suite)->check(
    CLI::IsMember({"all", "main", "lemmas", "family", "sylow"}));
  verify->add_option("--m-list", m_list, "Comma-separated m for the equality family");
  verify->add_option("--out", out_dir, "Directory for one JSON report per check");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const &e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*psi)
      return cmd_psi(target, cap, out);
    if (*check)
      return cmd_check(target, cap, format, out);
    if (*scan)
      return cmd_scan(scan_opts, scan_format, out);
    return cmd_verify(verify_opts, suite, m_list, out_dir, out);
  } catch (CapExceeded const &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (std::out_of_range const &e) {
    err << "error: number out of range\n";
    return kExitParse;
  }
}

} // namespace ordersum
