#include "cox/report.hpp"

#include "doctest.h"

using namespace cox;
using nlohmann::json;

TEST_CASE("rationals serialize as strings") {
  json j = q_json(Q(163, 672));
  CHECK(j["num"] == "163");
  CHECK(j["den"] == "672");
  CHECK(j["decimal"] == "0.242560");
  CHECK(q_json(Q(-1, 84))["num"] == "-1");
  CHECK(q_json(Q(4))["den"] == "1");
}

TEST_CASE("documents carry the fixed top-level schema in sorted order") {
  json doc = make_document("ends", "file.cox", json::object(), json::object(), {"w"}, {});
  std::string text = dump_document(doc);
  const char* keys[] = {"\"command\"", "\"errors\"",  "\"input\"",   "\"parameters\"",
                        "\"results\"", "\"version\"", "\"warnings\""};
  std::size_t last = 0;
  for (const char* key : keys) {
    std::size_t pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos > last);
    last = pos;
  }
  CHECK(doc["version"] == kVersion);
  CHECK(text.back() == '\n');
}

TEST_CASE("ends estimates serialize with verdict strings") {
  EndsEstimate est;
  est.verdict = EndsVerdict::Two;
  est.schedule = {{2, 4, 2}, {3, 6, 2}};
  json j = to_json(est);
  CHECK(j["verdict"] == "TWO");
  CHECK(j["saturated"] == false);
  CHECK(j["schedule"].size() == 2);
  CHECK(j["schedule"][0]["components"] == 2);
}

TEST_CASE("bound reports serialize optionals as null") {
  BoundReport report = splitting_criterion(7, {2, 3, 7});
  json j = to_json(report);
  CHECK(j["minimal_n"].is_null());
  CHECK(j["index_threshold"].is_null());
  CHECK(j["sufficient_criterion_holds"] == false);
  CHECK(j["lower_bound_W"]["num"] == "-65");
  CHECK(j["lower_bound_W"]["den"] == "294");

  json j8 = to_json(splitting_criterion(8, {2, 3, 7}, true));
  CHECK(j8["minimal_n"] == 8);
  CHECK(j8["index_threshold"]["num"] == "4");
  CHECK(j8["index_threshold"]["den"] == "163");
}

TEST_CASE("paper-examples documents are byte-identical across runs") {
  std::string a = dump_document(paper_examples_document());
  std::string b = dump_document(paper_examples_document());
  CHECK(a == b);
  CHECK(a.find("\"all_pass\": true") != std::string::npos);
  CHECK(a.find("\"command\": \"paper-examples\"") != std::string::npos);
}

TEST_CASE("crossing entries name their corners") {
  WordProblem wp(CoxeterSystem(3, {{{1, 2}, 3}, {{2, 3}, 3}, {{1, 3}, 3}}));
  CrossingReport report = crossing_obstruction(wp, 1, 3);
  json j = to_json(report);
  CHECK(j["tested"] == report.entries.size());
  CHECK(j["entries"][0]["g"] == "e");
  CHECK(j["entries"][0]["exact"] == true);
  CHECK(j["entries"][0]["verdict"] == "NESTED-AT-THIS-RADIUS");
  CHECK(j["entries"][0]["corners"][0]["corner"] == "A&gA");
  CHECK(j["entries"][0]["corners"][0]["witness"] == "e");
}

TEST_CASE("profiles serialize verdict names") {
  WordProblem wp(CoxeterSystem(3, {{{1, 2}, 3}, {{2, 3}, 3}, {{1, 3}, 3}}));
  MembershipOracle H = centralizer_oracle(wp, 1);
  json growing = to_json(conjugate_intersection_profile(wp, H, wp.identity(), {2, 4, 6}));
  CHECK(growing["verdict"] == "GROWING");
  json stable = to_json(conjugate_intersection_profile(wp, H, wp.reduce({2}), {4, 6}));
  CHECK(stable["verdict"] == "STABILIZED");
  CHECK(stable["g"] == "2");
}
