#pragma once

#include "iqbraid/quiverrep.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace iqbraid {

// Structure of End(X) for a module X.
struct EndAnalysis {
    int endDim = 0;
    bool local = false;
    // residue field degree when local
    int f = 0;
    // radical when local; rows are flattened block-diagonal matrices
    std::vector<std::vector<int>> radical;
    // an endomorphism that is neither nilpotent nor invertible when !local
    Mat splitter;
};

EndAnalysis analyzeEnd(const BarQuiver& bq, const Rep& x);

// Krull-Schmidt decomposition into indecomposable summands.
std::vector<Rep> decompose(const BarQuiver& bq, const Rep& m);

// Multiset of indecomposable ids with multiplicities, sorted by id.
using ClassKey = std::vector<std::pair<int, int>>;

struct IndecInfo {
    Rep rep;
    int endDim = 0;
    int f = 0;
    std::vector<std::vector<int>> radical;
};

// Registry of indecomposables up to isomorphism for one (bar quiver, q).
// Ids are assigned in discovery order.
class ModRegistry {
public:
    ModRegistry(BarQuiver bq, int q) : bq_(std::move(bq)), q_(q) {}

    const BarQuiver& quiver() const { return bq_; }
    int q() const { return q_; }

    ClassKey classify(const Rep& m);
    int indecId(const Rep& x);
    const IndecInfo& indec(int id) const { return indecs_.at(id); }
    int numIndecs() const { return int(indecs_.size()); }

    DimVec dimOf(const ClassKey& k) const;
    Rep representative(const ClassKey& k) const;
    Int autOrder(const ClassKey& k);
    std::string keyString(const ClassKey& k) const;

private:
    bool sameIndec(const IndecInfo& a, const Rep& y);

    BarQuiver bq_;
    int q_;
    std::vector<IndecInfo> indecs_;
    std::map<DimVec, std::vector<int>> byDim_;
    std::map<std::string, ClassKey> cache_;
    std::map<ClassKey, Int> autCache_;
    mutable std::recursive_mutex mu_;
};

std::string repFingerprint(const Rep& m);

}  // namespace iqbraid
