#pragma once

#include "iqbraid/quiverrep.hpp"
#include "iqbraid/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace iqbraid {

struct NamedQuiver {
    std::string name;
    IQuiver q;
};

// Rank-2 quivers used by the Hall and braid sweeps.
// Split: s<a> with a arrows between 0 and 1.
// Quasi-split: q<a><b> with a arrows 0-2, b arrows 1-2, tau swapping 0 and 1;
// f<a> the variant with 2 tau-fixed. With iSink the orientation makes 0 (and
// tau 0) a sink, otherwise a source.
std::vector<NamedQuiver> splitFamily(int aMax, bool iSink);
std::vector<NamedQuiver> quasiSplitFamily(int aMax, int bMax, bool iSink, bool withFixed);

using Task = std::function<std::vector<CheckRecord>()>;
// Runs tasks on `jobs` threads; the result keeps task order.
std::vector<CheckRecord> runTasks(const std::vector<Task>& tasks, int jobs);

// Each group below returns its records in a fixed order. The Hall-side groups
// return one task per (quiver, prime) so that they can be run in parallel.

// Binomial, km1/kmrd, the C/D sums, partial products and the coefficient
// identity for all degrees d <= dmax (partial products for d <= min(dmax, 6)).
std::vector<Task> identityTasks(int dmax);
// A and A' for a <= aMax, T for a, b <= tMax.
std::vector<Task> vanishingTasks(int aMax, int tMax);
// closedSSS for s, t <= 2 (total dimension <= sssDimCap) on s1..s<aMax>;
// closedBuildBlock for m, n <= 1 on the quasi-split family at the first prime.
std::vector<Task> fastPathTasks(const std::vector<int>& primes, int aMax, int bMax, int sssDimCap = 6);
std::vector<Task> braidSplitTasks(const std::vector<int>& primes, int aMax, const std::vector<int>& parities);
std::vector<Task> braidQuasiSplitTasks(const std::vector<int>& primes, int aMax, int bMax, bool withFixed);
// T'_{0,-1}(T''_{0,1}(B_j)) - B_j under the Hall map, and the torus part symbolically.
std::vector<Task> inverseTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers);
// Every defining relation annihilated by the Hall map.
std::vector<Task> serreTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers,
                             const std::vector<int>& parities);
// psi T'' psi = T'' and T' = sigma T'' sigma on every generator, e = +-1.
std::vector<Task> conjugationTasks(const std::vector<NamedQuiver>& quivers, const std::vector<int>& parities);
// psi^2 = sigma^2 = id, sigma psi = psi sigma on random expressions, normal
// order confluence, torus consistency of the symmetries, B_j fixed when c_ij = 0.
std::vector<Task> involutionTasks(int samples, unsigned seed);
// Mass certificates, Riedtmann-Peng, adjunction, dimension law, the
// factorization and the rank count. dimCap bounds total dimension.
std::vector<Task> moduleTasks(const std::vector<int>& primes, int dimCap, const std::string& cacheDir);
// Associativity, commuting K past modules, divided powers, Gamma as an
// algebra map and its intertwining with T''.
std::vector<Task> hallStructureTasks(const std::vector<int>& primes, int aMax, int bMax, int samples);
// T''_{0,1} maps relations to relations, checked under the Hall map; images
// longer than wordCap are recorded as skipped.
std::vector<Task> homomorphismTasks(const std::vector<int>& primes, const std::vector<NamedQuiver>& quivers,
                                    int wordCap);

// Executes the suite named in cfg (validated first).
Report runSuite(const RunConfig& cfg);

struct CacheStatus {
    bool ok = true;
    std::vector<std::string> lines;
};
// build: enumerates and saves the catalogs the module suite uses;
// verify: reloads each file, re-identifying classes and re-checking certificates;
// purge: removes catalog files from the directory.
CacheStatus cacheBuild(const RunConfig& cfg);
CacheStatus cacheVerify(const RunConfig& cfg);
CacheStatus cachePurge(const RunConfig& cfg);

}  // namespace iqbraid
