#include "doctest.h"

#include "iqbraid/report.hpp"
#include "iqbraid/suites.hpp"

#include <filesystem>

using namespace iqbraid;
namespace fs = std::filesystem;

namespace {

RunConfig tiny(std::string suite)
{
    RunConfig c;
    c.suite = std::move(suite);
    c.a = 1;
    c.b = 0;
    c.dmax = 2;
    c.dimCap = 2;
    c.wordCap = 4;
    return c;
}

}  // namespace

TEST_CASE("config validation names the offending flag")
{
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    auto bad = [](auto edit, const char* what) {
        RunConfig c;
        edit(c);
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains(what), std::invalid_argument);
    };
    bad([](RunConfig& c) { c.suite = "nope"; }, "suite");
    bad([](RunConfig& c) { c.primes = {4}; }, "--q");
    bad([](RunConfig& c) { c.primes = {}; }, "--q");
    bad([](RunConfig& c) { c.a = 0; }, "--a");
    bad([](RunConfig& c) { c.dmax = 0; }, "--dmax");
    bad([](RunConfig& c) { c.dimCap = 0; }, "--dim-cap");
    bad([](RunConfig& c) { c.wordCap = 0; }, "--word-cap");
    bad([](RunConfig& c) { c.jobs = 0; }, "--jobs");
    bad([](RunConfig& c) { c.parities = {2}; }, "--parity");
    bad([](RunConfig& c) { c.format = "xml"; }, "--format");
}

TEST_CASE("reports are reproducible without timings")
{
    for (const char* s : {"identities", "inverse"}) {
        RunConfig c = tiny(s);
        Report r1 = runSuite(c);
        Report r2 = runSuite(c);
        CHECK(r1.records.size() > 0);
        CHECK(r1.failures() == 0);
        CHECK(reportJson(r1, false).dump() == reportJson(r2, false).dump());
        c.jobs = 2;
        Report r3 = runSuite(c);
        CHECK(reportJson(r1, false)["records"].dump() == reportJson(r3, false)["records"].dump());
        CHECK(reportJson(r1, true).contains("timing"));
        CHECK_FALSE(reportJson(r1, false).contains("timing"));
    }
}

TEST_CASE("empty report renders")
{
    Report r;
    auto j = reportJson(r, false);
    CHECK(j["records"].empty());
    CHECK(j["version"] == kArtifactVersion);
    CHECK(renderTable(r).find("total 0") != std::string::npos);
    CHECK_THROWS_AS(render(r, "xml"), std::invalid_argument);
}

TEST_CASE("record helpers")
{
    CheckRecord p = makeRecord("s", "n", {{"x", 1}}, true);
    CHECK(p.status == Status::Pass);
    CHECK(p.witness.is_null());
    CheckRecord f = makeRecord("s", "n", {}, false, {{"lhs", "1"}});
    CHECK(f.status == Status::Fail);
    CheckRecord k = skippedRecord("s", "n", {}, "bound: too long");
    CHECK(k.status == Status::Skipped);
    CHECK(statusName(k.status) == "skipped");
}

TEST_CASE("task results keep task order")
{
    std::vector<Task> tasks;
    for (int i = 0; i < 12; ++i)
        tasks.push_back([i] { return std::vector<CheckRecord>{makeRecord("t", std::to_string(i), {}, true)}; });
    for (int jobs : {1, 3}) {
        auto out = runTasks(tasks, jobs);
        REQUIRE(out.size() == 12);
        for (int i = 0; i < 12; ++i)
            CHECK(out[i].name == std::to_string(i));
    }
}

TEST_CASE("catalog cache round trip")
{
    RunConfig c = tiny("modules");
    CHECK_THROWS_AS(cacheBuild(c), std::invalid_argument);
    fs::path dir = fs::temp_directory_path() / "iqbraid-cache-test";
    fs::remove_all(dir);
    c.cacheDir = dir.string();

    CHECK_FALSE(cacheVerify(c).ok);
    CacheStatus b = cacheBuild(c);
    CHECK(b.ok);
    CHECK_FALSE(b.lines.empty());
    CHECK(cacheVerify(c).ok);

    Report r = runSuite(c);
    CHECK(r.failures() == 0);

    CHECK(cachePurge(c).ok);
    CHECK_FALSE(cacheVerify(c).ok);
    fs::remove_all(dir);
}
