#include "iqbraid/quiverrep.hpp"

#include <stdexcept>

namespace iqbraid {

namespace {

std::vector<int> reflectedVertices(const IQuiver& q, int ell)
{
    if (q.tau[ell] == ell)
        return {ell};
    return {ell, q.tau[ell]};
}

bool inV(const std::vector<int>& vs, int v)
{
    for (int x : vs)
        if (x == v)
            return true;
    return false;
}

void checkTarget(const BarQuiver& bq, const BarQuiver& target, const std::vector<int>& vs)
{
    if (target.numArrows() != bq.numArrows())
        throw std::invalid_argument("reflect: target quiver has a different arrow count");
    for (int k = 0; k < bq.numBase(); ++k) {
        const Arrow& a = bq.arrows[k];
        const Arrow& b = target.arrows[k];
        bool flip = inV(vs, a.src) || inV(vs, a.tgt);
        if (flip ? (b.src != a.tgt || b.tgt != a.src) : (b.src != a.src || b.tgt != a.tgt))
            throw std::invalid_argument("reflect: target is not the reflected quiver");
    }
}

}  // namespace

Rep reflectPlus(const BarQuiver& bq, const BarQuiver& target, int ell, const Rep& m)
{
    const IQuiver& Q = bq.base;
    if (!Q.isSink(ell))
        throw std::invalid_argument("reflectPlus: vertex is not a sink");
    auto vs = reflectedVertices(Q, ell);
    checkTarget(bq, target, vs);
    int p = m.q;
    int nv = Q.n;

    // T_v = sum over arrows a into v of M_{src a}; N_v = ker(in_v)
    std::vector<std::vector<int>> inArrows(nv);
    std::vector<std::vector<int>> compOff(nv);
    std::vector<Mat> kerB(nv);
    std::vector<int> tdim(nv, 0);
    for (int v : vs) {
        for (int k = 0; k < bq.numBase(); ++k)
            if (Q.arrows[k].tgt == v)
                inArrows[v].push_back(k);
        compOff[v].push_back(0);
        for (int k : inArrows[v])
            compOff[v].push_back(compOff[v].back() + m.dim[Q.arrows[k].src]);
        tdim[v] = compOff[v].back();
        Mat in(m.dim[v], tdim[v]);
        for (size_t c = 0; c < inArrows[v].size(); ++c) {
            const Mat& a = m.mats[inArrows[v][c]];
            for (int r = 0; r < a.rows(); ++r)
                for (int s = 0; s < a.cols(); ++s)
                    in.at(r, compOff[v][c] + s) = a.at(r, s);
        }
        kerB[v] = tdim[v] ? kernelMatrix(in, p) : Mat(0, 0);
        if (m.dim[v] == 0 && tdim[v])
            kerB[v] = Mat::identity(tdim[v]);
    }

    Rep r;
    r.q = p;
    r.dim = m.dim;
    for (int v : vs)
        r.dim[v] = kerB[v].cols();
    for (int k = 0; k < bq.numArrows(); ++k) {
        const Arrow& ta = target.arrows[k];
        if (k >= bq.numBase()) {
            int v = ta.src;
            if (!inV(vs, v)) {
                r.mats.push_back(m.mats[k]);
                continue;
            }
            // eps on T: component a (from i) -> component tau a (from tau i) via eps_i
            int tv = Q.tau[v];
            Mat et(tdim[tv], tdim[v]);
            for (size_t c = 0; c < inArrows[v].size(); ++c) {
                int a = inArrows[v][c];
                int ta2 = Q.tauArrow[a];
                size_t c2 = 0;
                while (inArrows[tv][c2] != ta2)
                    ++c2;
                const Mat& e = m.mats[bq.eps(Q.arrows[a].src)];
                for (int x = 0; x < e.rows(); ++x)
                    for (int y = 0; y < e.cols(); ++y)
                        et.at(compOff[tv][c2] + x, compOff[v][c] + y) = e.at(x, y);
            }
            if (r.dim[v] == 0 || r.dim[tv] == 0)
                r.mats.emplace_back(r.dim[tv], r.dim[v]);
            else
                r.mats.push_back(solveLeft(kerB[tv], mul(et, kerB[v], p), p));
            continue;
        }
        const Arrow& a = Q.arrows[k];
        if (!inV(vs, a.tgt)) {
            r.mats.push_back(m.mats[k]);
            continue;
        }
        // reversed arrow v -> src: projection of N_v onto the component of k
        int v = a.tgt;
        size_t c = 0;
        while (inArrows[v][c] != k)
            ++c;
        int sd = m.dim[a.src];
        Mat proj(sd, r.dim[v]);
        for (int x = 0; x < sd; ++x)
            for (int y = 0; y < r.dim[v]; ++y)
                proj.at(x, y) = kerB[v].at(compOff[v][c] + x, y);
        r.mats.push_back(proj);
    }
    return r;
}

Rep reflectMinus(const BarQuiver& bq, const BarQuiver& target, int ell, const Rep& m)
{
    const IQuiver& Q = bq.base;
    if (!Q.isSource(ell))
        throw std::invalid_argument("reflectMinus: vertex is not a source");
    auto vs = reflectedVertices(Q, ell);
    checkTarget(bq, target, vs);
    int p = m.q;
    int nv = Q.n;

    // C_v = sum over arrows a out of v of M_{tgt a}; new space coker(out_v)
    std::vector<std::vector<int>> outArrows(nv);
    std::vector<std::vector<int>> compOff(nv);
    std::vector<Mat> projB(nv), compB(nv);  // coordinates on the complement, complement basis
    std::vector<int> cdim(nv, 0);
    DimVec nd = m.dim;
    for (int v : vs) {
        for (int k = 0; k < bq.numBase(); ++k)
            if (Q.arrows[k].src == v)
                outArrows[v].push_back(k);
        compOff[v].push_back(0);
        for (int k : outArrows[v])
            compOff[v].push_back(compOff[v].back() + m.dim[Q.arrows[k].tgt]);
        cdim[v] = compOff[v].back();
        Mat out(cdim[v], m.dim[v]);
        for (size_t c = 0; c < outArrows[v].size(); ++c) {
            const Mat& a = m.mats[outArrows[v][c]];
            for (int r = 0; r < a.rows(); ++r)
                for (int s = 0; s < a.cols(); ++s)
                    out.at(compOff[v][c] + r, s) = a.at(r, s);
        }
        Mat im = (cdim[v] && m.dim[v]) ? columnBasis(out, p) : Mat(cdim[v], 0);
        Mat w = complementColumns(im, cdim[v], p);
        compB[v] = w;
        nd[v] = w.cols();
        if (cdim[v]) {
            Mat inv = inverse(hcat(im, w), p);
            projB[v] = submatrix(inv, im.cols(), 0, w.cols(), cdim[v]);
        } else {
            projB[v] = Mat(0, 0);
        }
    }

    Rep r;
    r.q = p;
    r.dim = nd;
    for (int k = 0; k < bq.numArrows(); ++k) {
        const Arrow& ta = target.arrows[k];
        if (k >= bq.numBase()) {
            int v = ta.src;
            if (!inV(vs, v)) {
                r.mats.push_back(m.mats[k]);
                continue;
            }
            int tv = Q.tau[v];
            Mat ec(cdim[tv], cdim[v]);
            for (size_t c = 0; c < outArrows[v].size(); ++c) {
                int a = outArrows[v][c];
                int ta2 = Q.tauArrow[a];
                size_t c2 = 0;
                while (outArrows[tv][c2] != ta2)
                    ++c2;
                const Mat& e = m.mats[bq.eps(Q.arrows[a].tgt)];
                for (int x = 0; x < e.rows(); ++x)
                    for (int y = 0; y < e.cols(); ++y)
                        ec.at(compOff[tv][c2] + x, compOff[v][c] + y) = e.at(x, y);
            }
            if (nd[v] == 0 || nd[tv] == 0)
                r.mats.emplace_back(nd[tv], nd[v]);
            else
                r.mats.push_back(mul(projB[tv], mul(ec, compB[v], p), p));
            continue;
        }
        const Arrow& a = Q.arrows[k];
        if (!inV(vs, a.src)) {
            r.mats.push_back(m.mats[k]);
            continue;
        }
        // reversed arrow tgt -> v: include into the component, then project
        int v = a.src;
        size_t c = 0;
        while (outArrows[v][c] != k)
            ++c;
        int td = m.dim[a.tgt];
        Mat inc(nd[v], td);
        for (int x = 0; x < nd[v]; ++x)
            for (int y = 0; y < td; ++y)
                inc.at(x, y) = projB[v].at(x, compOff[v][c] + y);
        r.mats.push_back(inc);
    }
    return r;
}

Rep reflect(const BarQuiver& bq, const BarQuiver& target, int ell, ReflectDir dir, const Rep& m)
{
    return dir == ReflectDir::Plus ? reflectPlus(bq, target, ell, m) : reflectMinus(bq, target, ell, m);
}

}  // namespace iqbraid
