#include "doctest.h"

#include "iqbraid/fp.hpp"

#include <random>

using namespace iqbraid;

namespace {

Mat randomMat(std::mt19937& rng, int r, int c, int p)
{
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = int(rng() % p);
    return m;
}

}  // namespace

TEST_CASE("modular helpers")
{
    CHECK(modp(-1, 3) == 2);
    CHECK(modp(7, 5) == 2);
    for (int p : {2, 3, 5})
        for (int x = 1; x < p; ++x)
            CHECK(modp(long(x) * invModP(x, p), p) == 1);
}

TEST_CASE("rank and nullspace obey rank-nullity")
{
    std::mt19937 rng(3);
    for (int p : {2, 3, 5})
        for (int t = 0; t < 40; ++t) {
            int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
            Mat m = randomMat(rng, r, c, p);
            auto ns = nullspace(m, p);
            CHECK(rank(m, p) + int(ns.size()) == c);
            for (auto& v : ns) {
                Mat col(c, 1);
                for (int j = 0; j < c; ++j)
                    col.at(j, 0) = v[j];
                CHECK(mul(m, col, p).isZero());
            }
        }
}

TEST_CASE("inverse of random invertible matrices")
{
    std::mt19937 rng(5);
    for (int p : {2, 3, 5})
        for (int t = 0; t < 30; ++t) {
            int n = 1 + int(rng() % 4);
            Mat m = randomMat(rng, n, n, p);
            if (!isInvertible(m, p)) {
                CHECK(rank(m, p) < n);
                continue;
            }
            CHECK(mul(m, inverse(m, p), p) == Mat::identity(n));
            CHECK(mul(inverse(m, p), m, p) == Mat::identity(n));
        }
}

TEST_CASE("column basis, kernel and complement")
{
    int p = 3;
    Mat m(3, 3);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(0, 2) = 1;
    m.at(1, 2) = 1;
    CHECK(rank(m, p) == 2);
    CHECK(columnBasis(m, p).cols() == 2);
    Mat k = kernelMatrix(m, p);
    CHECK(k.cols() == 1);
    CHECK(mul(m, k, p).isZero());
    Mat comp = complementColumns(columnBasis(m, p), 3, p);
    CHECK(comp.cols() == 1);
    CHECK(rank(hcat(columnBasis(m, p), comp), p) == 3);
}

TEST_CASE("solveLeft recovers the coefficients")
{
    std::mt19937 rng(9);
    int p = 5;
    for (int t = 0; t < 20; ++t) {
        Mat x = randomMat(rng, 4, 2, p);
        if (rank(x, p) < 2)
            continue;
        Mat a = randomMat(rng, 2, 3, p);
        CHECK(solveLeft(x, mul(x, a, p), p) == a);
    }
}

TEST_CASE("row space membership")
{
    RowSpace rs(3, 2);
    CHECK(rs.insert({1, 1, 0}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 0, 1}));
    CHECK(rs.contains({1, 0, 1}));
    CHECK_FALSE(rs.contains({1, 0, 0}));
    CHECK(rs.dim() == 2);
    CHECK(rs.generators().size() == 2);
}
