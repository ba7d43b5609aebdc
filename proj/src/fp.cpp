#include "iqbraid/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace iqbraid {

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool Mat::isZero() const
{
    for (int x : a_)
        if (x)
            return false;
    return true;
}

bool operator<(const Mat& x, const Mat& y)
{
    if (x.r_ != y.r_)
        return x.r_ < y.r_;
    if (x.c_ != y.c_)
        return x.c_ < y.c_;
    return x.a_ < y.a_;
}

std::string Mat::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        if (i)
            os << ";";
        for (int j = 0; j < c_; ++j)
            os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

int modp(long x, int p)
{
    long r = x % p;
    return int(r < 0 ? r + p : r);
}

int invModP(int x, int p)
{
    x = modp(x, p);
    if (!x)
        throw std::domain_error("inverse of zero mod p");
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1)
            return y;
    throw std::domain_error("no inverse mod p");
}

Mat mul(const Mat& x, const Mat& y, int p)
{
    if (x.cols() != y.rows())
        throw std::invalid_argument("mul: shape mismatch");
    Mat r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            int a = x.at(i, k);
            if (!a)
                continue;
            for (int j = 0; j < y.cols(); ++j)
                r.at(i, j) += a * y.at(k, j);
        }
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.at(i, j) %= p;
    return r;
}

Mat add(const Mat& x, const Mat& y, int p)
{
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("add: shape mismatch");
    Mat r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            r.at(i, j) = (x.at(i, j) + y.at(i, j)) % p;
    return r;
}

Mat sub(const Mat& x, const Mat& y, int p)
{
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("sub: shape mismatch");
    Mat r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            r.at(i, j) = modp(x.at(i, j) - y.at(i, j), p);
    return r;
}

Mat scale(const Mat& x, int c, int p)
{
    Mat r(x.rows(), x.cols());
    c = modp(c, p);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            r.at(i, j) = x.at(i, j) * c % p;
    return r;
}

Mat hcat(const Mat& x, const Mat& y)
{
    if (x.rows() != y.rows())
        throw std::invalid_argument("hcat: row mismatch");
    Mat r(x.rows(), x.cols() + y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j)
            r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols(); ++j)
            r.at(i, x.cols() + j) = y.at(i, j);
    }
    return r;
}

Mat vcat(const Mat& x, const Mat& y)
{
    if (x.cols() != y.cols())
        throw std::invalid_argument("vcat: column mismatch");
    Mat r(x.rows() + y.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j)
            r.at(x.rows() + i, j) = y.at(i, j);
    return r;
}

Mat blockUpper(const Mat& a, const Mat& b, const Mat& d)
{
    // [[a, b], [0, d]]
    Mat r(a.rows() + d.rows(), a.cols() + d.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            r.at(i, a.cols() + j) = b.at(i, j);
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            r.at(a.rows() + i, a.cols() + j) = d.at(i, j);
    return r;
}

Mat submatrix(const Mat& x, int r0, int c0, int rows, int cols)
{
    Mat r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r.at(i, j) = x.at(r0 + i, c0 + j);
    return r;
}

std::vector<int> rref(Mat& x, int p)
{
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < x.cols() && row < x.rows(); ++c) {
        int sel = -1;
        for (int i = row; i < x.rows(); ++i)
            if (x.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            for (int j = 0; j < x.cols(); ++j)
                std::swap(x.at(sel, j), x.at(row, j));
        int iv = invModP(x.at(row, c), p);
        for (int j = c; j < x.cols(); ++j)
            x.at(row, j) = x.at(row, j) * iv % p;
        for (int i = 0; i < x.rows(); ++i) {
            if (i == row || !x.at(i, c))
                continue;
            int f = x.at(i, c);
            for (int j = c; j < x.cols(); ++j)
                x.at(i, j) = modp(x.at(i, j) - f * x.at(row, j), p);
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

int rank(Mat x, int p) { return int(rref(x, p).size()); }

std::vector<std::vector<int>> nullspace(const Mat& x, int p)
{
    Mat r = x;
    std::vector<int> piv = rref(r, p);
    std::vector<char> isPiv(x.cols(), 0);
    for (int c : piv)
        isPiv[c] = 1;
    std::vector<std::vector<int>> basis;
    for (int f = 0; f < x.cols(); ++f) {
        if (isPiv[f])
            continue;
        std::vector<int> v(x.cols(), 0);
        v[f] = 1;
        for (size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = modp(-r.at(int(k), f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat columnBasis(const Mat& x, int p)
{
    Mat r = x;
    std::vector<int> piv = rref(r, p);
    Mat out(x.rows(), int(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < x.rows(); ++i)
            out.at(i, int(k)) = x.at(i, piv[k]);
    return out;
}

Mat kernelMatrix(const Mat& x, int p)
{
    auto b = nullspace(x, p);
    Mat out(x.cols(), int(b.size()));
    for (size_t k = 0; k < b.size(); ++k)
        for (int i = 0; i < x.cols(); ++i)
            out.at(i, int(k)) = b[k][i];
    return out;
}

bool isInvertible(const Mat& x, int p)
{
    return x.rows() == x.cols() && rank(x, p) == x.rows();
}

Mat inverse(const Mat& x, int p)
{
    int n = x.rows();
    Mat a = hcat(x, Mat::identity(n));
    std::vector<int> piv = rref(a, p);
    if (int(piv.size()) < n || piv[n - 1] != n - 1)
        throw std::domain_error("matrix not invertible");
    return submatrix(a, 0, n, n, n);
}

Mat complementColumns(const Mat& sub, int n, int p)
{
    Mat cur = sub.cols() ? columnBasis(sub, p) : Mat(n, 0);
    int rk = cur.cols();
    Mat added(n, 0);
    for (int i = 0; i < n && rk < n; ++i) {
        Mat e(n, 1);
        e.at(i, 0) = 1;
        Mat trial = hcat(cur, e);
        if (rank(trial, p) > rk) {
            cur = trial;
            added = hcat(added, e);
            ++rk;
        }
    }
    return added;
}

Mat solveLeft(const Mat& x, const Mat& b, int p)
{
    // x (n x k, full column rank), b (n x m): find a (k x m) with x a = b.
    int k = x.cols(), m = b.cols();
    Mat aug = hcat(x, b);
    std::vector<int> piv = rref(aug, p);
    for (int c : piv)
        if (c >= k)
            throw std::domain_error("solveLeft: not in column space");
    if (int(piv.size()) != k)
        throw std::domain_error("solveLeft: rank deficient");
    Mat out(k, m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) = aug.at(i, k + j);
    return out;
}

void RowSpace::reduce(std::vector<int>& v) const
{
    for (size_t k = 0; k < rows_.size(); ++k) {
        int c = v[piv_[k]];
        if (!c)
            continue;
        const auto& r = rows_[k];
        for (int j = piv_[k]; j < len_; ++j)
            if (r[j])
                v[j] = modp(v[j] - long(c) * r[j], p_);
    }
}

bool RowSpace::insert(std::vector<int> v)
{
    std::vector<int> orig = v;
    reduce(v);
    int pv = -1;
    for (int j = 0; j < len_; ++j)
        if (v[j]) {
            pv = j;
            break;
        }
    if (pv < 0)
        return false;
    int iv = invModP(v[pv], p_);
    for (int j = pv; j < len_; ++j)
        v[j] = v[j] * iv % p_;
    // keep rows fully reduced so reduce() works in one pass
    for (auto& r : rows_) {
        int c = r[pv];
        if (c)
            for (int j = pv; j < len_; ++j)
                r[j] = modp(r[j] - long(c) * v[j], p_);
    }
    rows_.push_back(std::move(v));
    piv_.push_back(pv);
    gens_.push_back(std::move(orig));
    return true;
}

bool RowSpace::contains(std::vector<int> v) const
{
    reduce(v);
    for (int x : v)
        if (x)
            return false;
    return true;
}

}  // namespace iqbraid
