#include "iqbraid/report.hpp"
#include "iqbraid/suites.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

using namespace iqbraid;

namespace {

void addRunFlags(CLI::App& app, RunConfig& cfg)
{
    app.add_option("--q", cfg.primes, "primes q (2, 3 or 5), comma separated")->delimiter(',');
    app.add_option("--a", cfg.a, "arrow bound a for split and quasi-split quivers");
    app.add_option("--b", cfg.b, "second arrow bound b for quasi-split quivers");
    app.add_option("--dmax", cfg.dmax, "degree bound for the identity suite");
    app.add_option("--parity", cfg.parities, "parities for tau-fixed vertices, comma separated")->delimiter(',');
    app.add_option("--dim-cap", cfg.dimCap, "total-dimension bound for module catalogs");
    app.add_option("--word-cap", cfg.wordCap, "word-length bound for Hall evaluation of symmetry images");
    app.add_option("--cache-dir", cfg.cacheDir, "catalog cache directory");
    app.add_option("--jobs", cfg.jobs, "worker threads");
    app.add_option("--out", cfg.out, "write the report to this file instead of stdout");
    app.add_option("--format", cfg.format, "json or table");
}

int emit(const Report& r, const RunConfig& cfg)
{
    std::string text = render(r, cfg.format);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return 2;
        }
        f << text;
        std::cerr << "total " << r.records.size() << "  pass " << r.count(Status::Pass) << "  fail "
                  << r.count(Status::Fail) << "  skipped " << r.count(Status::Skipped) << "\n";
    }
    return r.failures() == 0 ? 0 : 1;
}

int emitCache(const CacheStatus& st)
{
    for (auto& l : st.lines)
        std::cout << l << "\n";
    return st.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bounded exact checks for iquantum group symmetries and their Hall algebra models"};
    app.require_subcommand(1);
    RunConfig cfg;
    addRunFlags(app, cfg);

    for (const char* name : {"identities", "modules", "hall", "braid", "inverse", "all"}) {
        std::string n = name;
        auto* sub = app.add_subcommand(n, n == "all" ? "run every suite" : "run the " + n + " suite");
        sub->fallthrough();
        sub->callback([&cfg, n] { cfg.suite = n; });
    }
    auto* cache = app.add_subcommand("cache", "manage the module catalog cache");
    cache->fallthrough();
    cache->require_subcommand(1);
    std::string cacheAction;
    for (const char* name : {"build", "verify", "purge"}) {
        auto* sub = cache->add_subcommand(name);
        sub->fallthrough();
        sub->callback([&cacheAction, n = std::string(name)] { cacheAction = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        cfg.validate();
        if (!cacheAction.empty()) {
            if (cacheAction == "build")
                return emitCache(cacheBuild(cfg));
            if (cacheAction == "verify")
                return emitCache(cacheVerify(cfg));
            return emitCache(cachePurge(cfg));
        }
        return emit(runSuite(cfg), cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
