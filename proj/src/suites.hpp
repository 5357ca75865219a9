#pragma once
// Named verification suites assembling the module-level checks into
// reports, the Euler-factor dispatch by representation name, and the
// deterministic JSON fixtures.

#include <map>
#include <string>
#include <vector>

#include "rat.hpp"
#include "report.hpp"

namespace guspin {

// String-keyed options (from a config file or command-line flags); keys not
// used by a suite are ignored.  Common keys: seed, d, weight, bound, p,
// splitting, window, grid, dett.
using Options = std::map<std::string, std::string>;

// Suites: group, modularity, ait, padic, arch-norm, arch-fourier,
// arch-gamma, arch-assembly.
std::vector<std::string> suite_names();
Report run_suite(const std::string& suite, const Options& opts = {});

// Reciprocal Euler factor coefficients (constant term first) for a named
// representation: wedge2, std, gsp4-spin, gsp4-std (3 parameters each) or
// spin6 (4 parameters = inert place, 6 = split place).
std::vector<Rat> euler_coefficients(const std::string& rep, const std::vector<Rat>& params);
std::vector<std::string> euler_rep_names();

// Deterministic JSON fixtures: reps-Qi-T=I-bound3, euler-wedge2-sample,
// A-matrix.
std::string emit_fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Option access helpers (shared with the command-line tool).
long opt_long(const Options& o, const std::string& key, long dflt);
double opt_double(const Options& o, const std::string& key, double dflt);
std::string opt_str(const Options& o, const std::string& key, const std::string& dflt);
std::vector<double> parse_double_list(const std::string& text);
std::vector<Rat> parse_rat_list(const std::string& text);

}  // namespace guspin
