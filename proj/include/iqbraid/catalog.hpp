#pragma once

#include "iqbraid/modclass.hpp"

#include <memory>
#include <string>

namespace iqbraid {

struct RepClass {
    ClassKey key;
    Rep rep;
    Int aut;
    DimVec dim;
    std::string keyStr;
};

struct MassCertificate {
    DimVec dim;
    Rat mass;      // sum over classes of |GL(d)| / |Aut M|
    Int rawCount;  // relation-satisfying tuples
    bool ok = false;
};

// Isoclass catalog of one bar quiver over F_q. With kqOnly the catalog covers
// kQ-modules (eps acting by zero) only.
class Catalog {
public:
    Catalog(const BarQuiver& bq, int q, bool kqOnly = false, int dimCap = 6);
    Catalog(std::shared_ptr<ModRegistry> reg, bool kqOnly, int dimCap);

    const BarQuiver& quiver() const { return reg_->quiver(); }
    int q() const { return reg_->q(); }
    bool kqOnly() const { return kqOnly_; }
    int dimCap() const { return cap_; }
    ModRegistry& registry() { return *reg_; }
    std::shared_ptr<ModRegistry> registryPtr() { return reg_; }

    const std::vector<RepClass>& enumerate(const DimVec& d);
    MassCertificate certify(const DimVec& d);
    RepClass classOf(const Rep& m);
    // every dimension vector with total <= cap
    std::vector<DimVec> allDims(int cap) const;
    const std::map<DimVec, std::vector<RepClass>>& built() const { return byDim_; }
    // inject classes (used by the cache loader)
    void setClasses(const DimVec& d, std::vector<RepClass> cls) { byDim_[d] = std::move(cls); }

private:
    std::shared_ptr<ModRegistry> reg_;
    bool kqOnly_;
    int cap_;
    std::map<DimVec, std::vector<RepClass>> byDim_;
};

// Number of tuples of matrices of dimension d satisfying all relations (eps
// acting by zero when kqOnly).
Int rawTupleCount(const BarQuiver& bq, int q, const DimVec& d, bool kqOnly);

// Catalog cache file: one JSON file per (quiver, q, kqOnly).
std::string cacheFileName(const BarQuiver& bq, int q, bool kqOnly);
void saveCatalog(Catalog& cat, const std::string& path);
// Loads classes into cat, re-identifying every representative and re-checking
// the mass certificate; throws std::runtime_error on failure.
void loadCatalog(Catalog& cat, const std::string& path);

// Reflection-functor helpers.
bool inTorsionClass(const BarQuiver& bq, int ell, const Rep& m);

}  // namespace iqbraid
