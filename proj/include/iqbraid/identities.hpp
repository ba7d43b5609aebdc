#pragma once

#include "iqbraid/exactnum.hpp"

#include <string>
#include <vector>

namespace iqbraid {

struct IdentityReport {
    std::string name;
    std::vector<long> params;
    RatFunc lhs;
    RatFunc rhs;
    bool holds = false;
};

IdentityReport makeReport(std::string name, std::vector<long> params, RatFunc lhs, RatFunc rhs);

// Exponent functions. uM is the multiplicity of the simple at the reflected
// vertex as a direct summand of the basis module.
long pExp(long a, long r, long s, long t, long uM);
long zExp(long a, long r, long s, long k, long m, long n, long uM);
long pPrimeExp(long t, long d, long m, long n);
// cij, ctij are c_{ij} and c_{tau i, j}
long wExp(long cij, long ctij, long m1, long m2, long n1, long n2, long d, long e, long t1, long t3);

// sum_n v^{n(d-1)} [d,n] z^n against prod_{j<d} (1 + v^{2j} z)
IdentityReport checkStdBinomial(long d);

IdentityReport checkKm1(long p);
IdentityReport checkKmrd(long d);
// Both halves; lhs/rhs hold the km1 sides, holds requires both.
IdentityReport checkKmPair(long p, long d);

struct DC {
    RatFunc D0, D1, C0, C1;
};
DC computeDC(long d);
// v^d prod_{l<d}(v^l + v^{-l}) / [d]!
RatFunc dcCommonValue(long d);
// all four sums equal the common value
IdentityReport checkDC(long d);
// C0 + C1 and D0 + D1 against twice the common value
IdentityReport checkDCSum(long d);
// D0 - D1 = 0
IdentityReport checkDDiff(long d);

IdentityReport checkPartialProduct(long d, long k);

bool admissibleA(long a, long d, long u);
RatFunc computeA(long a, long d, long u);
RatFunc computeAprime(long a, long d, long u);

bool admissibleT(long a, long b, long f, long g, long t1, long t3);
RatFunc computeT(long a, long b, long f, long g, long t1, long t3);

// D0 - C0 = 0 and D1 - C1 = 0 from the literal (t,k,m,n) sums
IdentityReport checkCoeff(long d);

}  // namespace iqbraid
