#pragma once
// Check records and reports: every verification emits one record with the
// compared sides, the tolerance used, and the pass flag, so that a report
// serializes to JSON lines deterministically and summarizes for humans.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "quadring.hpp"

namespace guspin {

// One verified comparison. `pass` is true exactly when the two sides agree
// to within `tolerance` (0 for exact checks). `anchor` names the statement
// the check exercises; `inputs` describes the sampled data.
struct CheckRecord {
  std::string name;
  std::string anchor;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  double tolerance = 0.0;
  bool pass = false;
};

// Rendering helpers used for the lhs/rhs fields.
std::string render(double x);
std::string render(const std::complex<double>& z);
std::string render(const Rat& r);
std::string render(const EElem& e);
std::string render(bool b);
std::string render(long n);

class Report {
 public:
  // Exact comparison: pass iff lhs == rhs; tolerance recorded as 0.
  template <typename T>
  void exact(const std::string& name, const std::string& anchor,
             const std::string& inputs, const T& lhs, const T& rhs) {
    add({name, anchor, inputs, render(lhs), render(rhs), 0.0, lhs == rhs});
  }

  // Approximate comparison: pass iff |lhs - rhs| <= tolerance.
  void close(const std::string& name, const std::string& anchor,
             const std::string& inputs, double lhs, double rhs, double tolerance);
  void close(const std::string& name, const std::string& anchor,
             const std::string& inputs, const std::complex<double>& lhs,
             const std::complex<double>& rhs, double tolerance);

  // Predicate check: lhs is the observed truth value, rhs the expected one.
  void expect(const std::string& name, const std::string& anchor,
              const std::string& inputs, bool observed, bool expected = true);

  void add(CheckRecord rec);
  void merge(const Report& other);

  bool all_pass() const;
  std::size_t size() const { return records_.size(); }
  std::size_t failed_count() const;

  // Records sorted by name (stable); assembly order is independent of the
  // order checks were run in.
  std::vector<CheckRecord> assembled() const;

  // One JSON object per line, keys in fixed order, byte-deterministic for
  // identical inputs.
  std::string to_jsonl() const;

  // Short human-readable summary (for stderr), listing failures by name.
  std::string summary(const std::string& title) const;

 private:
  std::vector<CheckRecord> records_;
};

// Flat key=value configuration text: one pair per line, '#' comments and
// blank lines allowed. Unknown keys are preserved; values are raw strings.
// Throws domain_error("config: line L, column C: ...") on malformed input.
std::map<std::string, std::string> parse_config(const std::string& text);

// Directory for generated files; the only environment influence on the
// tool (GUSPIN_OUT_DIR), defaulting to the current directory.
std::string output_directory();
std::string output_path(const std::string& filename);

}  // namespace guspin
