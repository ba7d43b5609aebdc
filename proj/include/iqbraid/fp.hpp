#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iqbraid {

// Dense matrix over a prime field F_p, entries in [0, p).
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}

    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    int& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    int at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
    const std::vector<int>& data() const { return a_; }
    bool isZero() const;

    friend bool operator==(const Mat& x, const Mat& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }
    friend bool operator<(const Mat& x, const Mat& y);

    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<int> a_;
};

int modp(long x, int p);
int invModP(int x, int p);

Mat mul(const Mat& x, const Mat& y, int p);
Mat add(const Mat& x, const Mat& y, int p);
Mat sub(const Mat& x, const Mat& y, int p);
Mat scale(const Mat& x, int c, int p);
// [x y] and [x; y]
Mat hcat(const Mat& x, const Mat& y);
Mat vcat(const Mat& x, const Mat& y);
// Block-diagonal / block upper triangular helpers.
Mat blockUpper(const Mat& a, const Mat& b, const Mat& d);
Mat submatrix(const Mat& x, int r0, int c0, int rows, int cols);

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Mat& x, int p);
int rank(Mat x, int p);
// Basis of {v : x v = 0}, each vector of length x.cols().
std::vector<std::vector<int>> nullspace(const Mat& x, int p);
// Columns form a basis of the column space of x.
Mat columnBasis(const Mat& x, int p);
// Columns form a basis of ker x.
Mat kernelMatrix(const Mat& x, int p);
bool isInvertible(const Mat& x, int p);
Mat inverse(const Mat& x, int p);

// Extends the independent columns of `sub` (a subspace basis) by standard
// basis vectors to a basis of F_p^n; returns only the added columns.
Mat complementColumns(const Mat& sub, int n, int p);

// Solves x * a = b for a when x has full column rank and b is in its column
// space.
Mat solveLeft(const Mat& x, const Mat& b, int p);

// Incrementally maintained span of row vectors in echelon form.
class RowSpace {
public:
    RowSpace(int len, int p) : len_(len), p_(p) {}
    // Returns true if v was independent of the current span.
    bool insert(std::vector<int> v);
    bool contains(std::vector<int> v) const;
    int dim() const { return int(rows_.size()); }
    int len() const { return len_; }
    // The inserted independent vectors, in insertion order.
    const std::vector<std::vector<int>>& generators() const { return gens_; }

private:
    void reduce(std::vector<int>& v) const;
    int len_, p_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> piv_;
    std::vector<std::vector<int>> gens_;
};

}  // namespace iqbraid
