// Command-line front end for the guspin shared library.  All computation
// goes through the C interface in guspin.h; this file only parses flags,
// routes options, and formats reports.
//
// Machine-readable results (JSON / JSON lines) go to stdout, human summaries
// to stderr.  Exit status: 0 when every check passed (or the command
// succeeded), 1 when some check failed, 2 on usage or library errors.
// GUSPIN_OUT_DIR selects the directory for emitted fixture files.

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "guspin.h"
#include "json.hpp"

namespace {

struct SessionDeleter {
  void operator()(guspin_session* s) const { guspin_session_free(s); }
};
using SessionPtr = std::unique_ptr<guspin_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { guspin_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "guspin: " << message << "\n";
  std::exit(2);
}

void check_status(const guspin_session* s, guspin_status st, const std::string& what) {
  if (st != GUSPIN_OK) die(what + ": " + guspin_last_error(s));
}

// One flag that maps straight onto a library option key.
struct OptionFlag {
  CLI::Option* opt = nullptr;
  std::string key;
  std::string value;
};

class OptionSet {
 public:
  void add(CLI::App* cmd, const std::string& flag, const std::string& key,
           const std::string& help) {
    flags_.push_back(std::make_unique<OptionFlag>());
    OptionFlag* f = flags_.back().get();
    f->key = key;
    f->opt = cmd->add_option(flag, f->value, help);
  }

  // Config file first, then explicitly given flags, so flags win.
  void apply(guspin_session* s, const std::string& config_path) const {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) die("cannot open config file '" + config_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      check_status(s, guspin_load_config(s, buf.str().c_str()), "config");
    }
    for (const auto& f : flags_)
      if (f->opt->count() > 0)
        check_status(s, guspin_set_option(s, f->key.c_str(), f->value.c_str()), "option");
  }

 private:
  std::vector<std::unique_ptr<OptionFlag>> flags_;
};

struct SuiteOutput {
  std::string jsonl;
  bool all_pass = false;
};

SuiteOutput run_one_suite(guspin_session* s, const std::string& suite) {
  char* raw = nullptr;
  int all = 0;
  check_status(s, guspin_run_suite(s, suite.c_str(), &raw, &all), "suite " + suite);
  CString owned(raw);
  return SuiteOutput{std::string(owned.get()), all != 0};
}

// Counts records and prints the per-suite human summary to stderr.
void summarize(const std::string& title, const std::string& jsonl) {
  long total = 0, passed = 0;
  std::vector<std::string> failures;
  std::istringstream in(jsonl);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++total;
    auto j = nlohmann::json::parse(line);
    if (j.value("pass", false)) {
      ++passed;
    } else {
      failures.push_back(j.value("name", "?"));
    }
  }
  std::cerr << title << ": " << total << " checks, " << passed << " passed, "
            << (total - passed) << " failed\n";
  for (const std::string& f : failures) std::cerr << "  FAIL " << f << "\n";
}

std::complex<double> parse_rendered_number(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  double re = std::strtod(p, &end);
  double im = 0.0;
  if (end != p && end && *end != '\0' && *end != 'i') {
    char* end2 = nullptr;
    double second = std::strtod(end, &end2);
    if (end2 != end) im = second;
  }
  return {re, im};
}

int finish_suites(const std::vector<std::pair<std::string, SuiteOutput>>& runs) {
  bool all = true;
  for (const auto& [title, out] : runs) {
    std::cout << out.jsonl;
    summarize(title, out.jsonl);
    all = all && out.all_pass;
  }
  return all ? 0 : 1;
}

std::string output_dir() {
  const char* dir = std::getenv("GUSPIN_OUT_DIR");
  if (!dir || !*dir) return ".";
  return dir;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites and evaluators for the degree-six "
               "similitude-group computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(guspin_version()));

  std::string config_path;
  app.add_option("--config", config_path,
                 "Flat key = value file applied before command-line flags");

  SessionPtr session(guspin_session_new());
  if (!session) die("cannot allocate session");

  // verify-group
  auto* cmd_group = app.add_subcommand("verify-group", "Exact similitude-group checks");
  bool with_modularity = false;
  cmd_group->add_flag("--modularity", with_modularity,
                      "Also run the series modularity checks");
  OptionSet group_opts;
  group_opts.add(cmd_group, "--seed", "seed", "Deterministic sampling seed");
  group_opts.add(cmd_group, "--weight", "weight", "Series weight for --modularity");
  group_opts.add(cmd_group, "--bound", "bound", "Height bound for --modularity");

  // euler
  auto* cmd_euler = app.add_subcommand("euler", "Print a reciprocal Euler factor");
  std::string euler_rep, euler_params;
  cmd_euler->add_option("--rep", euler_rep, "wedge2 | std | gsp4-spin | gsp4-std | spin6")
      ->required();
  cmd_euler->add_option("--params", euler_params, "Comma-separated rational parameters")
      ->required();

  // verify-ait
  auto* cmd_ait = app.add_subcommand("verify-ait", "Quaternion-transfer checks");
  OptionSet ait_opts;
  ait_opts.add(cmd_ait, "--seed", "seed", "Deterministic sampling seed");

  // verify-padic
  auto* cmd_padic = app.add_subcommand("verify-padic", "Local character-sum checks");
  OptionSet padic_opts;
  padic_opts.add(cmd_padic, "--p", "p", "Single prime (default: 2, 3 and 5)");
  padic_opts.add(cmd_padic, "--splitting", "splitting", "inert | split | both");
  padic_opts.add(cmd_padic, "--window", "window", "Coset window 'a,b'");
  padic_opts.add(cmd_padic, "--seed", "seed", "Deterministic sampling seed");

  // reps
  auto* cmd_reps = app.add_subcommand("reps", "Enumerate the series index set");
  OptionSet reps_opts;
  reps_opts.add(cmd_reps, "--d", "d", "Imaginary quadratic parameter (1 or 3)");
  reps_opts.add(cmd_reps, "--T", "T", "Four 'a+b*w' entries, row major");
  reps_opts.add(cmd_reps, "--bound", "bound", "Height bound");

  // eval-pt
  auto* cmd_eval = app.add_subcommand("eval-pt", "Evaluate the truncated series at a point");
  OptionSet eval_opts;
  eval_opts.add(cmd_eval, "--d", "d", "Imaginary quadratic parameter (1 or 3)");
  eval_opts.add(cmd_eval, "--T", "T", "Four 'a+b*w' entries, row major");
  eval_opts.add(cmd_eval, "--r", "weight", "Series weight (>= 7)");
  eval_opts.add(cmd_eval, "--Z", "Z", "Eight reals: row-major re,im pairs");
  eval_opts.add(cmd_eval, "--bound", "bound", "Height bound");

  // verify-arch
  auto* cmd_arch = app.add_subcommand("verify-arch", "Archimedean quadrature checks");
  std::string arch_which;
  cmd_arch->add_option("--which", arch_which, "norm | fourier | gamma | assembly")
      ->required()
      ->check(CLI::IsMember({"norm", "fourier", "gamma", "assembly"}));
  OptionSet arch_opts;
  arch_opts.add(cmd_arch, "--r", "weight", "Weight");
  arch_opts.add(cmd_arch, "--grid", "grid", "Comma-separated s grid");
  arch_opts.add(cmd_arch, "--dett", "dett", "det(T) for the Gamma integrals");
  arch_opts.add(cmd_arch, "--seed", "seed", "Deterministic sampling seed");

  // emit-fixture
  auto* cmd_fixture = app.add_subcommand("emit-fixture", "Write a deterministic fixture");
  std::string fixture_name;
  cmd_fixture->add_option("name", fixture_name,
                          "reps-Qi-T=I-bound3 | euler-wedge2-sample | A-matrix")
      ->required();

  CLI11_PARSE(app, argc, argv);
  guspin_session* s = session.get();

  if (*cmd_group) {
    group_opts.apply(s, config_path);
    std::vector<std::pair<std::string, SuiteOutput>> runs;
    runs.emplace_back("group", run_one_suite(s, "group"));
    if (with_modularity) runs.emplace_back("modularity", run_one_suite(s, "modularity"));
    return finish_suites(runs);
  }

  if (*cmd_euler) {
    char* raw = nullptr;
    check_status(s, guspin_euler_factor(s, euler_rep.c_str(), euler_params.c_str(), &raw),
                 "euler");
    CString owned(raw);
    std::string joined(owned.get());
    std::string pretty = "[";
    for (char c : joined) pretty += (c == ',') ? std::string(", ") : std::string(1, c);
    pretty += "]";
    std::cout << pretty << "\n";
    std::cerr << "euler " << euler_rep << "(" << euler_params << "): degree "
              << std::count(joined.begin(), joined.end(), ',') << "\n";
    return 0;
  }

  if (*cmd_ait) {
    ait_opts.apply(s, config_path);
    return finish_suites({{"ait", run_one_suite(s, "ait")}});
  }

  if (*cmd_padic) {
    padic_opts.apply(s, config_path);
    return finish_suites({{"padic", run_one_suite(s, "padic")}});
  }

  if (*cmd_reps) {
    reps_opts.apply(s, config_path);
    char* raw = nullptr;
    check_status(s, guspin_enumerate_reps(s, &raw), "reps");
    CString owned(raw);
    std::cout << owned.get();
    auto j = nlohmann::json::parse(std::string(owned.get()));
    std::cerr << "reps: " << j.value("count", -1) << " index vectors\n";
    return 0;
  }

  if (*cmd_eval) {
    eval_opts.apply(s, config_path);
    char* raw = nullptr;
    check_status(s, guspin_eval_pt(s, &raw), "eval-pt");
    CString owned(raw);
    std::cout << owned.get();
    auto j = nlohmann::json::parse(std::string(owned.get()));
    std::cerr << "eval-pt: value " << j.value("value", std::string("?")) << " from "
              << j.value("terms", -1) << " terms (tail bound "
              << j.value("tail_error", 0.0) << ")\n";
    return 0;
  }

  if (*cmd_arch) {
    arch_opts.apply(s, config_path);
    SuiteOutput out = run_one_suite(s, "arch-" + arch_which);
    // Headline record -> {value, reference, rel_err}.
    std::istringstream in(out.jsonl);
    std::string line;
    nlohmann::json headline;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      std::string name = j.value("name", "");
      if (name.size() >= 9 && name.compare(name.size() - 9, 9, "/headline") == 0) {
        headline = j;
        break;
      }
    }
    if (headline.is_null()) die("suite arch-" + arch_which + " produced no headline record");
    std::string value = headline.value("lhs", "");
    std::string reference = headline.value("rhs", "");
    std::complex<double> lhs = parse_rendered_number(value);
    std::complex<double> rhs = parse_rendered_number(reference);
    double denom = std::max(std::abs(rhs), 1e-300);
    nlohmann::ordered_json result;
    result["value"] = value;
    result["reference"] = reference;
    result["rel_err"] = std::abs(lhs - rhs) / denom;
    std::cout << result.dump() << "\n";
    summarize("arch-" + arch_which, out.jsonl);
    return out.all_pass ? 0 : 1;
  }

  if (*cmd_fixture) {
    char* raw = nullptr;
    check_status(s, guspin_emit_fixture(s, fixture_name.c_str(), &raw), "emit-fixture");
    CString owned(raw);
    std::string path = output_dir() + "/" + fixture_name + ".json";
    std::ofstream outfile(path);
    if (!outfile) die("cannot write '" + path + "'");
    outfile << owned.get();
    outfile.close();
    std::cout << owned.get();
    std::cerr << "emit-fixture: wrote " << path << "\n";
    return 0;
  }

  return 2;  // unreachable: require_subcommand(1)
}
