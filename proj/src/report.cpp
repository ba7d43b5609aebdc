#include "iqbraid/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace iqbraid {

using nlohmann::ordered_json;

std::string statusName(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "?";
}

CheckRecord makeRecord(std::string suite, std::string name, ordered_json params, bool holds, ordered_json witness)
{
    CheckRecord r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    r.status = holds ? Status::Pass : Status::Fail;
    if (!holds)
        r.witness = std::move(witness);
    return r;
}

CheckRecord skippedRecord(std::string suite, std::string name, ordered_json params, std::string reason)
{
    CheckRecord r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    r.status = Status::Skipped;
    r.reason = std::move(reason);
    return r;
}

void RunConfig::validate() const
{
    static const std::vector<std::string> suites{"identities", "modules", "hall", "braid", "inverse", "all"};
    bool known = false;
    for (auto& s : suites)
        known = known || s == suite;
    if (!known)
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (primes.empty())
        throw std::invalid_argument("--q: at least one prime is required");
    for (int p : primes)
        if (p != 2 && p != 3 && p != 5)
            throw std::invalid_argument("--q: primes must be 2, 3 or 5");
    if (a < 1 || b < 0)
        throw std::invalid_argument("--a/--b: bounds must be positive (b may be 0)");
    if (dmax < 1)
        throw std::invalid_argument("--dmax must be positive");
    if (dimCap < 1)
        throw std::invalid_argument("--dim-cap must be positive");
    if (wordCap < 1)
        throw std::invalid_argument("--word-cap must be positive");
    if (jobs < 1)
        throw std::invalid_argument("--jobs must be positive");
    for (int p : parities)
        if (p != 0 && p != 1)
            throw std::invalid_argument("--parity must be 0 or 1");
    if (format != "json" && format != "table")
        throw std::invalid_argument("--format must be json or table");
}

ordered_json configJson(const RunConfig& c)
{
    ordered_json j;
    j["suite"] = c.suite;
    j["primes"] = c.primes;
    j["a"] = c.a;
    j["b"] = c.b;
    j["dmax"] = c.dmax;
    j["parities"] = c.parities;
    j["dim_cap"] = c.dimCap;
    j["word_cap"] = c.wordCap;
    j["cache_dir"] = c.cacheDir;
    j["jobs"] = c.jobs;
    return j;
}

size_t Report::count(Status s) const
{
    size_t n = 0;
    for (auto& r : records)
        n += r.status == s;
    return n;
}

ordered_json reportJson(const Report& r, bool withTiming)
{
    ordered_json j;
    j["version"] = r.version;
    j["config"] = r.config;
    ordered_json summary;
    summary["total"] = r.records.size();
    summary["pass"] = r.count(Status::Pass);
    summary["fail"] = r.count(Status::Fail);
    summary["skipped"] = r.count(Status::Skipped);
    j["summary"] = summary;
    ordered_json recs = ordered_json::array();
    for (auto& c : r.records) {
        ordered_json x;
        x["suite"] = c.suite;
        x["name"] = c.name;
        x["params"] = c.params;
        x["status"] = statusName(c.status);
        if (!c.reason.empty())
            x["reason"] = c.reason;
        if (!c.witness.is_null())
            x["witness"] = c.witness;
        recs.push_back(x);
    }
    j["records"] = recs;
    if (withTiming) {
        ordered_json t = ordered_json::array();
        double total = 0;
        for (auto& c : r.records) {
            t.push_back(c.ms);
            total += c.ms;
        }
        j["timing"] = {{"total_ms", total}, {"record_ms", t}};
    }
    return j;
}

std::string renderTable(const Report& r)
{
    std::ostringstream os;
    for (auto& c : r.records) {
        os << std::left << std::setw(8) << statusName(c.status) << std::setw(11) << c.suite << std::setw(34) << c.name
           << c.params.dump();
        if (!c.reason.empty())
            os << "  (" << c.reason << ")";
        os << "\n";
    }
    os << "total " << r.records.size() << "  pass " << r.count(Status::Pass) << "  fail " << r.count(Status::Fail)
       << "  skipped " << r.count(Status::Skipped) << "\n";
    return os.str();
}

std::string render(const Report& r, const std::string& fmt)
{
    if (fmt == "json")
        return reportJson(r).dump(2) + "\n";
    if (fmt == "table")
        return renderTable(r);
    throw std::invalid_argument("render: unknown format " + fmt);
}

}  // namespace iqbraid
