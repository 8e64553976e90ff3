#pragma once

#include <array>
#include <string>

#include "cyquot/cyclo.hpp"

namespace cyquot {

using CycVec = std::array<CycNum, 3>;

// 3x3 matrix over Q(zeta_m), entries share the cyclotomic order.
struct CycMatrix {
    int order = 3;
    std::array<CycNum, 9> e;

    CycMatrix() : e{CycNum(3), CycNum(3), CycNum(3), CycNum(3), CycNum(3),
                    CycNum(3), CycNum(3), CycNum(3), CycNum(3)} {}
    explicit CycMatrix(int m) : order(m) {
        for (auto& x : e) x = CycNum(m);
    }

    CycNum& at(int i, int j) { return e[i * 3 + j]; }
    const CycNum& at(int i, int j) const { return e[i * 3 + j]; }

    static CycMatrix identity(int m = 3) {
        CycMatrix r(m);
        for (int i = 0; i < 3; ++i) r.at(i, i) = CycNum(m, Rat(1));
        return r;
    }

    static CycMatrix scalar(const CycNum& s) {
        CycMatrix r(s.order);
        for (int i = 0; i < 3; ++i) r.at(i, i) = s;
        return r;
    }

    friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
        CycMatrix r(x.order);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CycNum s(x.order);
                for (int k = 0; k < 3; ++k) s = s + x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    friend CycVec operator*(const CycMatrix& m, const CycVec& v) {
        CycVec r{CycNum(m.order), CycNum(m.order), CycNum(m.order)};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r[i] = r[i] + m.at(i, k) * v[k];
        return r;
    }

    friend CycMatrix operator+(const CycMatrix& x, const CycMatrix& y) {
        CycMatrix r(x.order);
        for (int i = 0; i < 9; ++i) r.e[i] = x.e[i] + y.e[i];
        return r;
    }
    friend CycMatrix operator-(const CycMatrix& x, const CycMatrix& y) {
        CycMatrix r(x.order);
        for (int i = 0; i < 9; ++i) r.e[i] = x.e[i] - y.e[i];
        return r;
    }

    friend CycMatrix operator*(const CycNum& s, const CycMatrix& x) {
        CycMatrix r(x.order);
        for (int i = 0; i < 9; ++i) r.e[i] = s * x.e[i];
        return r;
    }

    friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
        return x.order == y.order && x.e == y.e;
    }
    friend bool operator!=(const CycMatrix& x, const CycMatrix& y) { return !(x == y); }

    CycMatrix conj() const {
        CycMatrix r(order);
        for (int i = 0; i < 9; ++i) r.e[i] = e[i].conj();
        return r;
    }

    CycNum trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

    CycNum det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    CycMatrix inverse() const {
        CycNum d = det();
        if (d.is_zero()) throw std::domain_error("CycMatrix: singular");
        CycNum di = d.inverse();
        CycMatrix adj(order);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                adj.at(j, i) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
            }
        return di * adj;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 9; ++i) {
            if (i) s += ";";
            s += e[i].str();
        }
        return s;
    }
};

// permutation matrix of the 3-cycle z -> (z3, z1, z2)
inline CycMatrix cyclic_shift_matrix(int m = 3) {
    CycMatrix p(m);
    p.at(0, 2) = CycNum(m, Rat(1));
    p.at(1, 0) = CycNum(m, Rat(1));
    p.at(2, 1) = CycNum(m, Rat(1));
    return p;
}

inline CycMatrix diag(const CycNum& a, const CycNum& b, const CycNum& c) {
    CycMatrix r(a.order);
    r.at(0, 0) = a;
    r.at(1, 1) = b;
    r.at(2, 2) = c;
    return r;
}

} // namespace cyquot
