#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace iqbraid {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Status { Pass, Fail, Skipped };
std::string statusName(Status s);

struct CheckRecord {
    std::string suite;
    std::string name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Status status = Status::Pass;
    // reason for a skip, or a short failure note
    std::string reason;
    // serialized counterexample for failures (null otherwise)
    nlohmann::ordered_json witness = nullptr;
    double ms = 0;
};

CheckRecord makeRecord(std::string suite, std::string name, nlohmann::ordered_json params, bool holds,
                       nlohmann::ordered_json witness = nullptr);
CheckRecord skippedRecord(std::string suite, std::string name, nlohmann::ordered_json params, std::string reason);

struct RunConfig {
    std::string suite = "all";
    std::vector<int> primes{2};
    int a = 2;        // split / quasi-split a bound
    int b = 1;        // quasi-split b bound
    int dmax = 8;     // identity degree bound
    std::vector<int> parities{0, 1};
    int dimCap = 5;   // module total-dimension bound
    int wordCap = 8;  // word length bound for Hall evaluation of composite maps
    std::string cacheDir;
    int jobs = 1;
    std::string out;
    std::string format = "table";

    // throws std::invalid_argument naming the bad field
    void validate() const;
};

nlohmann::ordered_json configJson(const RunConfig& c);

struct Report {
    std::string version = kArtifactVersion;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<CheckRecord> records;

    size_t count(Status s) const;
    size_t failures() const { return count(Status::Fail); }
};

// Records are emitted in order without timings; wall times live under
// "timing" so that the rest of the document is reproducible byte for byte.
nlohmann::ordered_json reportJson(const Report& r, bool withTiming = true);
std::string renderTable(const Report& r);
// fmt is "json" or "table"
std::string render(const Report& r, const std::string& fmt);

}  // namespace iqbraid
