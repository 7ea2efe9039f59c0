// Exercises the shared library through its C header only.
#include "wilf/wilf.h"

#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wilf_string_free(s);
  return out;
}

wilf_scheme* find(const char* patterns, int depth, int symmetries = 0) {
  wilf_search_options o;
  wilf_search_options_init(&o);
  o.max_depth = depth;
  o.symmetries = symmetries;
  wilf_scheme* s = nullptr;
  REQUIRE(wilf_scheme_find(patterns, &o, &s, nullptr) == WILF_OK);
  REQUIRE(s != nullptr);
  return s;
}

} // namespace

TEST_CASE("defaults") {
  wilf_search_options o;
  wilf_search_options_init(&o);
  CHECK(o.max_depth == 4);
  CHECK(o.mode == WILF_MODE_CERTIFIED);
  CHECK(o.horizon == 8);
  CHECK(o.symmetries == 0);
  CHECK(o.explain == 0);
  CHECK(std::string(wilf_status_name(WILF_NOT_FOUND)) == "not-found");
}

TEST_CASE("find, count, sequence") {
  wilf_scheme* s = find("123,132", 2);
  char* out = nullptr;
  REQUIRE(wilf_count(s, 3, &out) == WILF_OK);
  CHECK(take(out) == "4");
  REQUIRE(wilf_sequence(s, 6, &out) == WILF_OK);
  CHECK(take(out) == "1\n2\n4\n8\n16\n32\n");
  CHECK(wilf_scheme_depth(s) == 2);
  CHECK(std::string(wilf_scheme_symmetry(s)) == "identity");
  wilf_scheme_free(s);

  wilf_scheme* c = find("123", 2);
  int values[] = {3};
  REQUIRE(wilf_count_class(c, "1", 5, values, 1, &out) == WILF_OK);
  CHECK(take(out) == "9"); // binom(6,4) - binom(6,5)
  REQUIRE(wilf_count(c, 30, &out) == WILF_OK);
  CHECK(take(out) == "3814986502092304");
  wilf_scheme_free(c);
}

TEST_CASE("document round trip and verify") {
  wilf_scheme* s = find("123", 2);
  char* doc = nullptr;
  REQUIRE(wilf_scheme_document(s, &doc) == WILF_OK);
  wilf_scheme* t = nullptr;
  REQUIRE(wilf_scheme_load(doc, &t) == WILF_OK);
  char* doc2 = nullptr;
  REQUIRE(wilf_scheme_document(t, &doc2) == WILF_OK);
  CHECK(std::string(doc) == std::string(doc2));
  int agrees = 0;
  char* report = nullptr;
  REQUIRE(wilf_scheme_verify(t, 7, &agrees, &report) == WILF_OK);
  CHECK(agrees == 1);
  CHECK(take(report).find("\"agrees\":true") != std::string::npos);
  wilf_string_free(doc);
  wilf_string_free(doc2);
  wilf_scheme_free(s);
  wilf_scheme_free(t);
}

TEST_CASE("negative results and errors") {
  wilf_search_options o;
  wilf_search_options_init(&o);
  o.max_depth = 1;
  wilf_scheme* s = reinterpret_cast<wilf_scheme*>(1);
  CHECK(wilf_scheme_find("123", &o, &s, nullptr) == WILF_NOT_FOUND);
  CHECK(s == nullptr);
  CHECK(std::string(wilf_last_error()).find("depth") != std::string::npos);

  CHECK(wilf_scheme_find("12x", nullptr, &s, nullptr) == WILF_PARSE_ERROR);
  o.max_depth = 0;
  CHECK(wilf_scheme_find("123", &o, &s, nullptr) == WILF_INVALID_INPUT);
  o.max_depth = 2;
  o.mode = WILF_MODE_EMPIRICAL;
  o.explain = 1;
  CHECK(wilf_scheme_find("123", &o, &s, nullptr) == WILF_INVALID_INPUT);

  CHECK(wilf_scheme_load("{", &s) == WILF_PARSE_ERROR);
  CHECK(wilf_scheme_load(R"({"patterns":[[1,2]],"mode":"certified","expa":[{"sigma":[],"gaps":[],"refinements":[[1]]}],"redu":[{"sigma":[1],"delete_rank":5,"gaps":[]}],"zero":[]})",
                         &s) == WILF_INTEGRITY_ERROR);

  wilf_scheme* c = find("123", 2);
  char* out = nullptr;
  int bad[] = {2, 1};
  CHECK(wilf_count_class(c, "12", 3, bad, 2, &out) == WILF_INVALID_INPUT);
  CHECK(wilf_count(c, -1, &out) == WILF_INVALID_INPUT);
  CHECK(wilf_count(nullptr, 3, &out) == WILF_INVALID_INPUT);
  wilf_scheme_free(c);
}

TEST_CASE("explain") {
  wilf_search_options o;
  wilf_search_options_init(&o);
  o.max_depth = 2;
  o.explain = 1;
  wilf_scheme* s = nullptr;
  char* log = nullptr;
  REQUIRE(wilf_scheme_find("123", &o, &s, &log) == WILF_OK);
  std::string text = take(log);
  CHECK(text.find("\"schema_version\"") != std::string::npos);
  CHECK(text.find("\"bailed-out\"") != std::string::npos);
  wilf_scheme_free(s);
}

TEST_CASE("symmetries, empirical mode") {
  wilf_scheme* s = find("321", 2, 1);
  CHECK(std::string(wilf_scheme_symmetry(s)) == "identity");
  wilf_scheme_free(s);

  wilf_search_options o;
  wilf_search_options_init(&o);
  o.max_depth = 2;
  o.mode = WILF_MODE_EMPIRICAL;
  REQUIRE(wilf_scheme_find("132", &o, &s, nullptr) == WILF_OK);
  char* doc = nullptr;
  REQUIRE(wilf_scheme_document(s, &doc) == WILF_OK);
  CHECK(take(doc).find("\"mode\":\"empirical\"") != std::string::npos);
  char* out = nullptr;
  REQUIRE(wilf_count(s, 8, &out) == WILF_OK);
  CHECK(take(out) == "1430");
  wilf_scheme_free(s);
}

TEST_CASE("guess") {
  char* out = nullptr;
  REQUIRE(wilf_guess("1 2 6 24 120 720 5040 40320 362880 3628800 39916800 479001600 6227020800 "
                     "87178291200 1307674368000 20922789888000 355687428096000",
                     2, 2, 5, &out) == WILF_OK);
  CHECK(take(out).find("a(n+1) - (n+1)*a(n) = 0") != std::string::npos);
  CHECK(wilf_guess("1,2,3", 2, 2, 5, &out) == WILF_INVALID_INPUT);
  CHECK(std::string(wilf_last_error()).find("need at least 16") != std::string::npos);
  CHECK(wilf_guess("1 x", 0, 0, 0, &out) == WILF_PARSE_ERROR);
}

TEST_CASE("oracle") {
  char* out = nullptr;
  REQUIRE(wilf_oracle_count("123", 6, &out) == WILF_OK);
  CHECK(take(out) == "132");
  int values[] = {2, 3, 5};
  REQUIRE(wilf_oracle_members("1234,1432", 5, "132", values, 3, &out) == WILF_OK);
  CHECK(take(out) == "25314\n25341\n");
  REQUIRE(wilf_oracle_members("12", 3, nullptr, nullptr, 0, &out) == WILF_OK);
  CHECK(take(out) == "321\n");
}

TEST_CASE("distinct handles in parallel threads") {
  std::vector<std::string> results(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&results, i] {
      wilf_search_options o;
      wilf_search_options_init(&o);
      o.max_depth = 2;
      wilf_scheme* s = nullptr;
      if (wilf_scheme_find("123", &o, &s, nullptr) != WILF_OK)
        return;
      char* out = nullptr;
      if (wilf_count(s, 20 + i, &out) == WILF_OK)
        results[static_cast<std::size_t>(i)] = take(out);
      wilf_scheme_free(s);
    });
  for (auto& t : pool)
    t.join();
  CHECK(results == std::vector<std::string>{"6564120420", "24466267020", "91482563640", "343059613650"});
}
