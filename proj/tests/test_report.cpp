#include <doctest.h>
#include <json.hpp>

#include "liftcat/report.hpp"

using namespace liftcat;

TEST_CASE("status is derived from witnesses and children") {
  Report r("top");
  CHECK(r.status() == Status::pass);
  Report c("child");
  c.not_checkable("no coproduct");
  r.add(c);
  CHECK(r.status() == Status::not_checkable);
  Report d("other");
  d.fail("law.x", {"a"}, "1", "0");
  r.add(d);
  CHECK(r.status() == Status::fail);
  CHECK(r.find("other") != nullptr);
  CHECK(r.has_law("law.x"));
  CHECK_FALSE(r.has_law("law.y"));
  REQUIRE(r.first_witness() != nullptr);
  CHECK(r.first_witness()->actual == "0");
}

TEST_CASE("not checkable keeps its reason") {
  Report r("s");
  r.not_checkable("division unavailable");
  CHECK(r.reason() == "division unavailable");
  CHECK(r.to_text().find("reason=division unavailable") != std::string::npos);
}

TEST_CASE("witness cap is explicit") {
  Report r("s");
  r.set_witness_cap(2);
  for (int i = 0; i < 5; ++i) r.fail("w", {std::to_string(i)}, "a", "b");
  CHECK(r.witnesses().size() == 2);
  CHECK(r.violations() == 5);
  CHECK(r.to_text().find("witness.more=+3 more") != std::string::npos);
  auto j = nlohmann::json::parse(r.to_json())["report"];
  CHECK(j["witness_more"] == "+3 more");
}

TEST_CASE("text format is versioned key=value") {
  Report r("suite", Mode::sampling(7, 1000));
  r.count(3);
  r.skip("missing-coproduct", 2);
  auto t = r.to_text();
  CHECK(t.rfind("liftcat-report v1\n", 0) == 0);
  CHECK(t.find("mode=sampled(seed=7,n=1000)") != std::string::npos);
  CHECK(t.find("checked=3") != std::string::npos);
  CHECK(t.find("skipped.missing-coproduct=2") != std::string::npos);
  CHECK(r.summary_line() == "suite: pass [sampled(seed=7,n=1000), checked 3, skipped 2]");
}

TEST_CASE("json mirrors the tree") {
  Report r("a");
  Report c("b");
  c.count(4);
  c.fail("x.y", {"p", "q"}, "e", "f");
  r.add(c);
  auto doc = nlohmann::json::parse(r.to_json());
  CHECK(doc["format"] == "liftcat-report v1");
  auto j = doc["report"];
  CHECK(j["suite"] == "a");
  CHECK(j["status"] == "fail");
  CHECK(j["children"][0]["checked"] == 4);
  CHECK(j["children"][0]["witnesses"][0]["inputs"][1] == "q");
  CHECK(r.checked_total() == 4);
  CHECK(r.violations_total() == 1);
}

TEST_CASE("merge_counts folds a report in") {
  Report a("a"), b("b");
  a.count(2);
  b.count(3);
  b.fail("l", {}, "", "");
  a.merge_counts(b);
  CHECK(a.checked() == 5);
  CHECK(a.failed());
}
