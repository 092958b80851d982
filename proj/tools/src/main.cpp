#include <CLI11.hpp>

#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

#include "rscheck/cli/families.hpp"
#include "rscheck/cli/report.hpp"
#include "rscheck/sequences.hpp"

namespace {

using namespace rscheck;
using namespace rscheck::cli;

struct Flags {
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  bool timestamp = false;
  std::optional<unsigned long> n, p, k, d, m, max_n, max_p;
  std::optional<std::string> a, b, variant, kernel;
  std::string target;
  bool all = false;
  unsigned long max = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", f.out, "write to this file instead of standard output");
}

void add_run_flags(CLI::App* cmd, Flags& f) {
  add_output_flags(cmd, f);
  cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--timestamp", f.timestamp, "record the run time in the report");
  cmd->add_option("--n", f.n, "single n");
  cmd->add_option("--p", f.p, "single prime p");
  cmd->add_option("--k", f.k, "single k");
  cmd->add_option("--d", f.d, "single d");
  cmd->add_option("--m", f.m, "m, or the largest m of a grid");
  cmd->add_option("--max-n", f.max_n, "upper bound for n");
  cmd->add_option("--max-p", f.max_p, "primes below this bound");
  cmd->add_option("--a", f.a, "a value or comma-separated list");
  cmd->add_option("--b", f.b, "b value or comma-separated list");
  cmd->add_option("--variant", f.variant, "variant of a family (thm15i, thm43 strength, lemma42 sequence)");
  cmd->add_option("--kernel", f.kernel, "registered kernel name or sign=..;num=..;den=..");
}

RunOptions to_options(const Flags& f) {
  RunOptions o;
  o.n = f.n;
  o.p = f.p;
  o.k = f.k;
  o.d = f.d;
  o.m = f.m;
  o.max_n = f.max_n;
  o.max_p = f.max_p;
  if (f.a) {
    o.a = parse_int_list(*f.a);
    if (!o.a) throw UsageError("--a expects comma-separated integers");
  }
  if (f.b) {
    o.b = parse_int_list(*f.b);
    if (!o.b) throw UsageError("--b expects comma-separated integers");
  }
  o.variant = f.variant;
  o.kernel = f.kernel;
  return o;
}

void write(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + f.out);
  file << text;
}

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int run_report(const std::string& command, const std::string& family, const Flags& f, const std::vector<Task>& tasks,
               const RunOptions& o) {
  Report report;
  report.version = RSCHECK_VERSION;
  if (f.timestamp) report.timestamp = now_utc();
  report.config.emplace_back("command", command);
  report.config.emplace_back("family", family);
  for (auto& kv : o.echo()) report.config.push_back(std::move(kv));
  report.results = run_tasks(tasks, f.jobs);
  write(f, emit_report(report, *parse_format(f.format)));
  return exit_code(report.summary());
}

int run_family(const std::string& command, const std::string& name, const Flags& f) {
  const Family* fam = find_family(name);
  if (!fam) throw UsageError("unknown family " + name + " (see `rscheck list`)");
  const RunOptions o = to_options(f);
  return run_report(command, fam->name, f, fam->tasks(o), o);
}

const std::map<std::string, Integer (*)(unsigned long)>& sequences() {
  static const std::map<std::string, Integer (*)(unsigned long)> table{
      {"R", seq::R},           {"S", seq::S},           {"schroder", seq::schroder}, {"t", seq::t_seq},
      {"T", seq::T_seq},       {"Tplus", seq::T_plus},  {"Tminus", seq::T_minus},    {"s", seq::s_small},
      {"Splus", seq::S_cplus}, {"Sminus", seq::S_cminus}};
  return table;
}

int run_seq(const Flags& f) {
  const auto it = sequences().find(f.target);
  if (it == sequences().end()) throw UsageError("unknown sequence " + f.target);
  std::vector<std::string> values;
  for (unsigned long n = 0; n <= f.max; ++n) values.push_back(it->second(n).get_str());
  std::string out;
  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["sequence"] = f.target;
    j["values"] = values;
    out = j.dump(2) + "\n";
  } else {
    out = f.format == "csv" ? "n,value\n" : "";
    const char sep = f.format == "csv" ? ',' : ' ';
    for (std::size_t n = 0; n < values.size(); ++n) out += std::to_string(n) + sep + values[n] + "\n";
  }
  write(f, out);
  return 0;
}

int run_poly(const Flags& f) {
  if (!f.n) throw UsageError("poly needs --n");
  IntPolynomial p;
  if (f.target == "R") p = seq::R_poly(*f.n);
  else if (f.target == "S") p = seq::S_poly(*f.n);
  else if (f.target == "Sm") {
    if (!f.m) throw UsageError("poly Sm needs --m");
    p = seq::S_m_poly(*f.m, *f.n);
  } else throw UsageError("unknown polynomial " + f.target);
  const auto coeffs = coefficient_strings(p);
  std::string out;
  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["polynomial"] = f.target;
    j["n"] = *f.n;
    if (f.target == "Sm") j["m"] = *f.m;
    j["coefficients"] = coeffs;
    out = j.dump(2) + "\n";
  } else if (f.format == "csv") {
    out = "degree,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += std::to_string(i) + "," + coeffs[i] + "\n";
  } else {
    out = to_string(p) + "\n";
  }
  write(f, out);
  return 0;
}

std::string alias(const std::string& name, const std::map<std::string, std::string>& table) {
  const auto it = table.find(name);
  return it == table.end() ? name : it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of binomial-sum identities, congruences and conjectures"};
  app.require_subcommand(1);
  Flags f;

  auto* seq_cmd = app.add_subcommand("seq", "print a sequence from index 0");
  seq_cmd->add_option("name", f.target, "R, S, schroder, t, T, Tplus, Tminus, s, Splus, Sminus")->required();
  seq_cmd->add_option("--max", f.max, "last index")->required();
  add_output_flags(seq_cmd, f);

  auto* poly_cmd = app.add_subcommand("poly", "print R_n(x), S_n(x) or S^(m)_n(x), coefficients low to high");
  poly_cmd->add_option("name", f.target, "R, S or Sm")->required();
  poly_cmd->add_option("--n", f.n, "index")->required();
  poly_cmd->add_option("--m", f.m, "exponent for Sm");
  add_output_flags(poly_cmd, f);

  auto* verify_cmd = app.add_subcommand("verify", "run one family, or every family with --all");
  verify_cmd->add_option("family", f.target, "family name");
  verify_cmd->add_flag("--all", f.all, "run every family with its default range");
  add_run_flags(verify_cmd, f);

  auto* scan_cmd = app.add_subcommand("scan", "scan a conjecture family");
  scan_cmd->add_option("family", f.target, "conj51 .. conj58, conj58i, rem52, rem53")->required();
  add_run_flags(scan_cmd, f);

  auto* q_cmd = app.add_subcommand("qverify", "run a q-polynomial family");
  q_cmd->add_option("family", f.target, "thm31, thm32, lemma32, conj57, conj58, qlucas, qdegen")->required();
  add_run_flags(q_cmd, f);

  auto* list_cmd = app.add_subcommand("list", "list the verification families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (list_cmd->parsed()) {
      std::cout << list_families();
      return 0;
    }
    if (seq_cmd->parsed()) return run_seq(f);
    if (poly_cmd->parsed()) return run_poly(f);
    if (verify_cmd->parsed()) {
      if (f.all == !f.target.empty()) throw UsageError("verify needs a family or --all, not both");
      if (f.all) {
        const RunOptions o = to_options(f);
        return run_report("verify", "all", f, all_tasks(o), o);
      }
      return run_family("verify", f.target, f);
    }
    if (scan_cmd->parsed()) {
      const std::string name = alias(f.target, {{"conj58", "conj58q"}});
      const Family* fam = find_family(name);
      if (!fam || fam->group != Group::Conjecture) throw UsageError("not a conjecture family: " + f.target);
      return run_family("scan", name, f);
    }
    if (q_cmd->parsed()) {
      const std::string name = alias(f.target, {{"conj58", "conj58q"}});
      const Family* fam = find_family(name);
      const bool q_family = fam && (fam->group == Group::Q || name == "conj57" || name == "conj58q");
      if (!q_family) throw UsageError("not a q family: " + f.target);
      return run_family("qverify", name, f);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
