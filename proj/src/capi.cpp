#include "guspin.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "poincare.hpp"
#include "reps.hpp"
#include "suites.hpp"

namespace {

using guspin::Options;

constexpr const char* kVersion = "1.0.0";

}  // namespace

struct guspin_session {
  Options options;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body(), mapping exceptions to statuses and recording the message.
template <typename Fn>
guspin_status guarded(guspin_session* s, Fn&& body) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  try {
    s->last_error.clear();
    return body();
  } catch (const guspin::domain_error& e) {
    s->last_error = e.what();
    return GUSPIN_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
    return GUSPIN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return GUSPIN_ERR_INTERNAL;
  } catch (...) {
    s->last_error = "unknown error";
    return GUSPIN_ERR_INTERNAL;
  }
}

guspin_status invalid(guspin_session* s, const std::string& message) {
  if (s) s->last_error = message;
  return GUSPIN_ERR_INVALID_ARGUMENT;
}

bool known_name(const std::vector<std::string>& names, const char* name) {
  return std::find(names.begin(), names.end(), std::string(name)) != names.end();
}

guspin::QuadAlgebra algebra_from_options(const Options& o) {
  long d = guspin::opt_long(o, "d", 1);
  if (d <= 0) throw guspin::domain_error("option d: expected a positive square-free integer");
  return guspin::QuadAlgebra::imaginary_quadratic(d);
}

guspin::Mat<2, guspin::EElem> matrix_T_from_options(const guspin::QuadAlgebra& alg,
                                                    const Options& o) {
  std::string text = guspin::opt_str(o, "T", "1,0,0,1");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw guspin::domain_error("option T: expected four comma-separated entries");
  guspin::Mat<2, guspin::EElem> t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t(i, j) = guspin::EElem::parse(alg, parts[2 * i + j]);
  if (!guspin::is_hermitian(t)) throw guspin::domain_error("option T: matrix is not Hermitian");
  return t;
}

guspin::Mat<2, guspin::Cplx> point_Z_from_options(const Options& o) {
  std::vector<double> v =
      guspin::parse_double_list(guspin::opt_str(o, "Z", "0,1,0,0,0,0,0,1"));
  if (v.size() != 8)
    throw guspin::domain_error("option Z: expected eight comma-separated reals (re,im pairs)");
  guspin::Mat<2, guspin::Cplx> z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      z(i, j) = guspin::Cplx(v[2 * (2 * i + j)], v[2 * (2 * i + j) + 1]);
  return z;
}

}  // namespace

extern "C" {

const char* guspin_version(void) { return kVersion; }

guspin_session* guspin_session_new(void) { return new (std::nothrow) guspin_session{}; }

void guspin_session_free(guspin_session* s) { delete s; }

const char* guspin_last_error(const guspin_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

guspin_status guspin_set_option(guspin_session* s, const char* key, const char* value) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!key || !*key) return invalid(s, "set_option: key must be non-empty");
  if (!value) return invalid(s, "set_option: value must be non-null");
  return guarded(s, [&]() {
    s->options[key] = value;
    return GUSPIN_OK;
  });
}

guspin_status guspin_load_config(guspin_session* s, const char* text) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!text) return invalid(s, "load_config: text must be non-null");
  return guarded(s, [&]() {
    for (const auto& [key, value] : guspin::parse_config(text)) s->options[key] = value;
    return GUSPIN_OK;
  });
}

void guspin_string_free(char* str) { std::free(str); }

guspin_status guspin_euler_factor(guspin_session* s, const char* rep, const char* params,
                                  char** out_coeffs) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!rep || !params || !out_coeffs)
    return invalid(s, "euler_factor: rep, params and out_coeffs must be non-null");
  if (!known_name(guspin::euler_rep_names(), rep))
    return invalid(s, std::string("euler_factor: unknown representation '") + rep + "'");
  return guarded(s, [&]() {
    std::vector<guspin::Rat> coeffs =
        guspin::euler_coefficients(rep, guspin::parse_rat_list(params));
    std::string joined;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) joined += ',';
      joined += coeffs[i].get_str();
    }
    char* out = dup_string(joined);
    if (!out) throw std::bad_alloc();
    *out_coeffs = out;
    return GUSPIN_OK;
  });
}

guspin_status guspin_enumerate_reps(guspin_session* s, char** out_json) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!out_json) return invalid(s, "enumerate_reps: out_json must be non-null");
  return guarded(s, [&]() {
    guspin::QuadAlgebra alg = algebra_from_options(s->options);
    guspin::Mat<2, guspin::EElem> t = matrix_T_from_options(alg, s->options);
    long bound = guspin::opt_long(s->options, "bound", 3);
    nlohmann::ordered_json j;
    j["algebra"] = "d=" + std::to_string(guspin::opt_long(s->options, "d", 1));
    auto tj = nlohmann::ordered_json::array();
    for (int i = 0; i < 2; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < 2; ++k) row.push_back(t(i, k).str());
      tj.push_back(std::move(row));
    }
    j["T"] = std::move(tj);
    j["bound"] = bound;
    j["key_order"] = {"alpha", "delta", "h11", "h22", "w1", "w2"};
    long count = 0;
    auto entries = nlohmann::ordered_json::array();
    guspin::for_each_rep(alg, t, bound, [&](const std::array<long, 6>& k) {
      ++count;
      entries.push_back(nlohmann::ordered_json::array({k[0], k[1], k[2], k[3], k[4], k[5]}));
    });
    j["count"] = count;
    j["entries"] = std::move(entries);
    char* out = dup_string(j.dump() + "\n");
    if (!out) throw std::bad_alloc();
    *out_json = out;
    return GUSPIN_OK;
  });
}

guspin_status guspin_eval_pt(guspin_session* s, char** out_json) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!out_json) return invalid(s, "eval_pt: out_json must be non-null");
  return guarded(s, [&]() {
    guspin::QuadAlgebra alg = algebra_from_options(s->options);
    guspin::Mat<2, guspin::EElem> t = matrix_T_from_options(alg, s->options);
    int weight = static_cast<int>(guspin::opt_long(s->options, "weight", 10));
    long bound = guspin::opt_long(s->options, "bound", 10);
    guspin::Mat<2, guspin::Cplx> z = point_Z_from_options(s->options);
    guspin::SeriesValue v = guspin::eval_PT(alg, t, weight, z, bound);
    nlohmann::ordered_json j;
    j["value"] = guspin::render(v.value);
    j["tail_error"] = v.tail_error;
    j["terms"] = v.terms;
    char* out = dup_string(j.dump() + "\n");
    if (!out) throw std::bad_alloc();
    *out_json = out;
    return GUSPIN_OK;
  });
}

guspin_status guspin_run_suite(guspin_session* s, const char* suite, char** out_jsonl,
                               int* all_pass) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!suite || !out_jsonl || !all_pass)
    return invalid(s, "run_suite: suite, out_jsonl and all_pass must be non-null");
  if (!known_name(guspin::suite_names(), suite))
    return invalid(s, std::string("run_suite: unknown suite '") + suite + "'");
  return guarded(s, [&]() {
    guspin::Report rep = guspin::run_suite(suite, s->options);
    char* out = dup_string(rep.to_jsonl());
    if (!out) throw std::bad_alloc();
    *out_jsonl = out;
    *all_pass = rep.all_pass() ? 1 : 0;
    return GUSPIN_OK;
  });
}

guspin_status guspin_emit_fixture(guspin_session* s, const char* name, char** out_json) {
  if (!s) return GUSPIN_ERR_INVALID_ARGUMENT;
  if (!name || !out_json) return invalid(s, "emit_fixture: name and out_json must be non-null");
  if (!known_name(guspin::fixture_names(), name))
    return invalid(s, std::string("emit_fixture: unknown fixture '") + name + "'");
  return guarded(s, [&]() {
    char* out = dup_string(guspin::emit_fixture(name));
    if (!out) throw std::bad_alloc();
    *out_json = out;
    return GUSPIN_OK;
  });
}

}  // extern "C"
