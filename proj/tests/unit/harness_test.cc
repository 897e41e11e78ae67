#include <doctest.h>

#include <chipkit/harness/suites.hh>

using namespace chipkit;
using namespace chipkit::harness;

TEST_CASE("suite registry")
{
    const auto & suites = registered_suites();
    REQUIRE(suites.size() == 12);
    CHECK(suites.front().id == "S1");
    CHECK(suites.back().id == "PROPS");
    for (const auto & s : suites) {
        CHECK_FALSE(s.anchor.empty());
        CHECK(find_suite(s.id).id == s.id);
        CHECK(find_suite(s.name).id == s.id);
    }
    CHECK(find_suite("s4").id == "S4");
    CHECK_THROWS_AS(find_suite("S12"), UnknownClaim);
    CHECK_THROWS_AS(run_suite("nope", {}), UnknownClaim);
}

TEST_CASE("S1 reproduces the subdivided clique values")
{
    auto r = run_suite("S1", {});
    CHECK(r.passed());
    CHECK(r.instances.size() == 9);
    CHECK(r.claim == "S1");
    CHECK(r.anchor == find_suite("S1").anchor);
    auto j = to_json(r);
    CHECK(j["summary"]["pass"] == true);
    CHECK(j["summary"]["instances"] == 9);
    CHECK(j["anchor"] == r.anchor);
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
}

TEST_CASE("S7 single block and S9 single k")
{
    SuiteConfig c;
    c.params = {{"g", "5"}, {"omega", "2"}, {"copies", "1"}};
    auto r = run_suite("S7", c);
    REQUIRE(r.instances.size() == 1);
    CHECK(r.passed());
    CHECK(r.instances[0].measured["holes"] == 1);
    CHECK(r.instances[0].expected["holes"] == "1");

    SuiteConfig k1;
    k1.params = {{"k", "1"}};
    auto d = run_suite("S9", k1);
    REQUIRE(d.instances.size() == 1);
    CHECK(d.passed());
}

TEST_CASE("reports are deterministic across runs and job counts")
{
    SuiteConfig a;
    a.seed = 7;
    a.cap_n = 5;
    SuiteConfig b = a;
    b.jobs = 3;
    for (const char * id : {"S2", "S5", "S11", "PROPS"}) {
        auto x = to_json(run_suite(id, a), false).dump();
        CHECK(x == to_json(run_suite(id, a), false).dump());
        CHECK(x == to_json(run_suite(id, b), false).dump());
    }
    SuiteConfig other = a;
    other.seed = 8;
    CHECK(to_json(run_suite("S5", a), false) != to_json(run_suite("S5", other), false));
}

TEST_CASE("failing instances are reported with their witness")
{
    VerificationReport r;
    r.instances.push_back({"@", json::object(), json{{"x", 1}}, json{{"x", 1}}, true, std::nullopt});
    r.instances.push_back({"A_", json::object(), json{{"x", 2}}, json{{"x", 1}}, false, json{{"edge", {0, 1}}}});
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    auto j = to_json(r, false);
    CHECK(j["summary"]["failed"] == 1);
    CHECK(j["summary"]["pass"] == false);
    CHECK(j["instances"][1]["witness"]["edge"][1] == 1);
    CHECK_FALSE(j["instances"][0].contains("witness"));
}

TEST_CASE("run_tasks keeps task order")
{
    std::vector<std::function<InstanceRecord()>> tasks;
    for (int i = 0; i < 40; ++i)
        tasks.push_back([i] {
            InstanceRecord rec;
            rec.params = {{"i", i}};
            rec.pass = true;
            return rec;
        });
    for (int jobs : {1, 4}) {
        auto out = run_tasks(tasks, jobs);
        REQUIRE(out.size() == 40);
        for (int i = 0; i < 40; ++i)
            CHECK(out[i].params["i"] == i);
    }
}

TEST_CASE("bad suite parameters are usage errors")
{
    SuiteConfig c;
    c.params = {{"g", "five"}};
    CHECK_THROWS_AS(run_suite("S7", c), std::invalid_argument);
    c.params = {{"g", "6"}};
    CHECK_THROWS(run_suite("S7", c));
}
