#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace guspin {

std::string render(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string render(const std::complex<double>& z) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string render(const Rat& r) { return r.get_str(); }

std::string render(const EElem& e) { return e.str(); }

std::string render(bool b) { return b ? "true" : "false"; }

std::string render(long n) { return std::to_string(n); }

void Report::close(const std::string& name, const std::string& anchor,
                   const std::string& inputs, double lhs, double rhs,
                   double tolerance) {
  bool ok = std::abs(lhs - rhs) <= tolerance;
  add({name, anchor, inputs, render(lhs), render(rhs), tolerance, ok});
}

void Report::close(const std::string& name, const std::string& anchor,
                   const std::string& inputs, const std::complex<double>& lhs,
                   const std::complex<double>& rhs, double tolerance) {
  bool ok = std::abs(lhs - rhs) <= tolerance;
  add({name, anchor, inputs, render(lhs), render(rhs), tolerance, ok});
}

void Report::expect(const std::string& name, const std::string& anchor,
                    const std::string& inputs, bool observed, bool expected) {
  add({name, anchor, inputs, render(observed), render(expected), 0.0,
       observed == expected});
}

void Report::add(CheckRecord rec) { records_.push_back(std::move(rec)); }

void Report::merge(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::all_pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

std::size_t Report::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [](const CheckRecord& r) { return !r.pass; }));
}

std::vector<CheckRecord> Report::assembled() const {
  std::vector<CheckRecord> out = records_;
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.name < b.name;
                   });
  return out;
}

std::string Report::to_jsonl() const {
  std::string out;
  for (const CheckRecord& r : assembled()) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["inputs"] = r.inputs;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string Report::summary(const std::string& title) const {
  std::ostringstream os;
  std::size_t failed = failed_count();
  os << title << ": " << records_.size() << " checks, " << records_.size() - failed
     << " passed, " << failed << " failed\n";
  if (failed) {
    for (const CheckRecord& r : assembled())
      if (!r.pass)
        os << "  FAIL " << r.name << "  lhs=" << r.lhs << "  rhs=" << r.rhs
           << "  tol=" << r.tolerance << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config: line " + std::to_string(lineno) + ", column " +
                         std::to_string(line.size() + 1) +
                         ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw domain_error("config: line " + std::to_string(lineno) +
                         ", column 1: empty key");
    std::string value = trim(line.substr(eq + 1));
    out[key] = value;
  }
  return out;
}

std::string output_directory() {
  const char* dir = std::getenv("GUSPIN_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return ".";
  return dir;
}

std::string output_path(const std::string& filename) {
  std::string dir = output_directory();
  if (!dir.empty() && dir.back() == '/') return dir + filename;
  return dir + "/" + filename;
}

}  // namespace guspin
