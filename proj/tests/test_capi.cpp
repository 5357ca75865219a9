#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "guspin.h"
#include "json.hpp"

namespace {

struct Session {
  guspin_session* s = guspin_session_new();
  ~Session() { guspin_session_free(s); }
};

std::string take(char* p) {
  REQUIRE(p != nullptr);
  std::string out(p);
  guspin_string_free(p);
  return out;
}

}  // namespace

TEST_CASE("version and session lifecycle") {
  CHECK(std::string(guspin_version()) == "1.0.0");
  Session s;
  REQUIRE(s.s != nullptr);
  CHECK(std::string(guspin_last_error(s.s)) == "");
  guspin_string_free(nullptr);  // safe no-op
}

TEST_CASE("option handling validates keys and null arguments") {
  Session s;
  CHECK(guspin_set_option(s.s, "bound", "2") == GUSPIN_OK);
  CHECK(guspin_set_option(s.s, nullptr, "2") == GUSPIN_ERR_INVALID_ARGUMENT);
  CHECK(guspin_set_option(s.s, "", "2") == GUSPIN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(guspin_last_error(s.s)) != "");
  CHECK(guspin_set_option(nullptr, "bound", "2") == GUSPIN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("euler factors through the C boundary") {
  Session s;
  char* out = nullptr;
  REQUIRE(guspin_euler_factor(s.s, "gsp4-spin", "1,1,1", &out) == GUSPIN_OK);
  CHECK(take(out) == "1,-4,6,-4,1");

  out = nullptr;
  CHECK(guspin_euler_factor(s.s, "nonsense", "1,1,1", &out) ==
        GUSPIN_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::string(guspin_last_error(s.s)).find("nonsense") != std::string::npos);

  out = nullptr;
  CHECK(guspin_euler_factor(s.s, "wedge2", "1,2", &out) == GUSPIN_ERR_DOMAIN);
  CHECK(guspin_euler_factor(s.s, "wedge2", "1,x,3", &out) == GUSPIN_ERR_DOMAIN);

  // a later successful call clears the error slot
  REQUIRE(guspin_euler_factor(s.s, "wedge2", "1,1,1", &out) == GUSPIN_OK);
  CHECK(std::string(guspin_last_error(s.s)) == "");
  take(out);
}

TEST_CASE("orbit enumeration respects session options") {
  Session s;
  REQUIRE(guspin_set_option(s.s, "bound", "2") == GUSPIN_OK);
  char* out = nullptr;
  REQUIRE(guspin_enumerate_reps(s.s, &out) == GUSPIN_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["bound"] == 2);
  CHECK(j["count"] == 676);
  CHECK(j["entries"].size() == 676);

  REQUIRE(guspin_set_option(s.s, "bound", "3") == GUSPIN_OK);
  REQUIRE(guspin_enumerate_reps(s.s, &out) == GUSPIN_OK);
  auto j3 = nlohmann::json::parse(take(out));
  CHECK(j3["count"] == 3476);

  // non-Hermitian T is a domain failure
  REQUIRE(guspin_set_option(s.s, "T", "1,1,0,1") == GUSPIN_OK);
  out = nullptr;
  CHECK(guspin_enumerate_reps(s.s, &out) == GUSPIN_ERR_DOMAIN);
  CHECK(out == nullptr);
}

TEST_CASE("series evaluation guards its weight floor") {
  Session s;
  REQUIRE(guspin_set_option(s.s, "weight", "6") == GUSPIN_OK);
  char* out = nullptr;
  CHECK(guspin_eval_pt(s.s, &out) == GUSPIN_ERR_DOMAIN);

  REQUIRE(guspin_set_option(s.s, "weight", "10") == GUSPIN_OK);
  REQUIRE(guspin_set_option(s.s, "bound", "4") == GUSPIN_OK);
  REQUIRE(guspin_eval_pt(s.s, &out) == GUSPIN_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j.contains("value"));
  CHECK(j.contains("tail_error"));
  CHECK(j["terms"].get<long>() > 0);
}

TEST_CASE("suites run to a sorted JSON-lines report") {
  Session s;
  char* out = nullptr;
  int all_pass = 0;
  REQUIRE(guspin_run_suite(s.s, "group", &out, &all_pass) == GUSPIN_OK);
  CHECK(all_pass == 1);
  std::string jsonl = take(out);
  std::vector<std::string> names;
  size_t pos = 0;
  while (pos < jsonl.size()) {
    size_t nl = jsonl.find('\n', pos);
    if (nl == std::string::npos) break;
    auto j = nlohmann::json::parse(jsonl.substr(pos, nl - pos));
    names.push_back(j["name"].get<std::string>());
    CHECK(j["pass"].get<bool>());
    pos = nl + 1;
  }
  CHECK(names.size() > 10);
  for (size_t i = 0; i + 1 < names.size(); ++i) CHECK(names[i] <= names[i + 1]);

  out = nullptr;
  CHECK(guspin_run_suite(s.s, "no-such-suite", &out, &all_pass) ==
        GUSPIN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fixtures emit deterministic JSON") {
  Session s;
  char* out = nullptr;
  REQUIRE(guspin_emit_fixture(s.s, "A-matrix", &out) == GUSPIN_OK);
  std::string text1 = take(out);
  auto j = nlohmann::json::parse(text1);
  CHECK(j["size"] == 6);
  CHECK(j["trace"] == "4");
  REQUIRE(guspin_emit_fixture(s.s, "A-matrix", &out) == GUSPIN_OK);
  CHECK(take(out) == text1);

  out = nullptr;
  CHECK(guspin_emit_fixture(s.s, "no-such-fixture", &out) ==
        GUSPIN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("configuration text loads as session options, later set calls override") {
  Session s;
  REQUIRE(guspin_load_config(s.s, "# settings\nbound = 3\nd = 1\n") == GUSPIN_OK);
  char* out = nullptr;
  REQUIRE(guspin_enumerate_reps(s.s, &out) == GUSPIN_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == 3476);

  REQUIRE(guspin_set_option(s.s, "bound", "2") == GUSPIN_OK);
  REQUIRE(guspin_enumerate_reps(s.s, &out) == GUSPIN_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == 676);

  CHECK(guspin_load_config(s.s, "broken line\n") == GUSPIN_ERR_DOMAIN);
  CHECK(std::string(guspin_last_error(s.s)).find("line 1") != std::string::npos);
}
