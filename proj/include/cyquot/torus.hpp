#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "cyquot/lattice.hpp"

namespace cyquot {

// Canonical coset representative of a point of A = C^3/Lambda (order 3
// lattices only). Coordinates are stored scaled by kScale and reduced into
// the half-open fundamental parallelepiped of the HNF basis, so equality
// of points is equality of representations.
struct TorusPoint {
    const Lattice* lat = nullptr;
    std::array<i64, 6> n{}; // kScale * coordinates

    bool is_zero() const {
        for (i64 v : n)
            if (v) return false;
        return true;
    }

    CycVec coords() const {
        std::vector<Rat> flat(6);
        for (int i = 0; i < 6; ++i) flat[i] = Rat(n[i], kScale);
        return unflatten(3, flat);
    }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.lat == b.lat && a.n == b.n;
    }
    friend bool operator!=(const TorusPoint& a, const TorusPoint& b) { return !(a == b); }
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.n < b.n; }
};

namespace detail {

// reduce a scaled vector into the fundamental parallelepiped of the basis
inline std::array<i64, 6> reduce_scaled(const Lattice& lat, std::array<i64, 6> p) {
    // coordinates c = p * adj / det; subtract floor(c_i) * basis row i.
    // The HNF basis is upper triangular, so one forward sweep suffices.
    for (int i = 0; i < 6; ++i) {
        i64 s = 0;
        for (int k = 0; k < 6; ++k) s += p[k] * lat.adjugate.at(k, i);
        i64 q = Rat(s, lat.det).floor();
        if (q)
            for (int k = 0; k < 6; ++k) p[k] -= q * lat.basis.at(i, k);
    }
    return p;
}

} // namespace detail

// canonical representative of x modulo Lambda; the coordinates must have
// denominator dividing kScale
inline TorusPoint reduce(const Lattice& lat, const std::vector<Rat>& x) {
    if (!lat.square()) throw std::logic_error("reduce: need square lattice");
    std::array<i64, 6> p{};
    for (int i = 0; i < 6; ++i) {
        Rat s = Rat(kScale) * x[i];
        if (!s.is_integer()) throw std::domain_error("reduce: denominator overflow");
        p[i] = s.num;
    }
    return TorusPoint{&lat, detail::reduce_scaled(lat, p)};
}

inline TorusPoint reduce(const Lattice& lat, const CycVec& v) { return reduce(lat, flatten(v)); }

inline TorusPoint torus_zero(const Lattice& lat) { return TorusPoint{&lat, {}}; }

inline TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
    if (a.lat != b.lat) throw std::invalid_argument("TorusPoint: lattice mismatch");
    std::array<i64, 6> p;
    for (int i = 0; i < 6; ++i) p[i] = a.n[i] + b.n[i];
    return TorusPoint{a.lat, detail::reduce_scaled(*a.lat, p)};
}

inline TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) {
    if (a.lat != b.lat) throw std::invalid_argument("TorusPoint: lattice mismatch");
    std::array<i64, 6> p;
    for (int i = 0; i < 6; ++i) p[i] = a.n[i] - b.n[i];
    return TorusPoint{a.lat, detail::reduce_scaled(*a.lat, p)};
}

inline TorusPoint operator-(const TorusPoint& a) {
    std::array<i64, 6> p;
    for (int i = 0; i < 6; ++i) p[i] = -a.n[i];
    return TorusPoint{a.lat, detail::reduce_scaled(*a.lat, p)};
}

// image of a point under a C-linear (or, with conjugate=true, C-antilinear)
// matrix preserving the lattice
inline TorusPoint apply(const CycMatrix& m, const TorusPoint& x, bool conjugate = false) {
    CycVec v = x.coords();
    if (conjugate)
        for (auto& c : v) c = c.conj();
    return reduce(*x.lat, m * v);
}

// Number of fixed points of the torus automorphism induced by M, i.e.
// |det| of M - id on the lattice. M - id must be nonsingular.
inline i64 fixed_point_count(const Lattice& lat, const CycMatrix& m) {
    CycMatrix shifted = m - CycMatrix::identity(m.order);
    auto zmat = matrix_of(lat, shifted);
    if (!zmat) throw std::domain_error("fixed_point_count: map does not preserve the lattice");
    i64 d = det_bareiss(*zmat);
    if (d == 0) throw std::domain_error("fixed_point_count: fixed locus not finite");
    return d < 0 ? -d : d;
}

// Full enumeration of ker(M - id) on the torus: ((M-id)^{-1} Lambda)/Lambda.
// Sorted, size = fixed_point_count.
inline std::vector<TorusPoint> kernel_on_torus(const Lattice& lat, const CycMatrix& m) {
    CycMatrix shifted = m - CycMatrix::identity(m.order);
    auto zmat = matrix_of(lat, shifted);
    if (!zmat) throw std::domain_error("kernel_on_torus: map does not preserve the lattice");
    auto st = snf_row_transform(*zmat);
    i64 total = 1;
    for (i64 d : st.diag) {
        if (d == 0) throw std::domain_error("kernel_on_torus: fixed locus not finite");
        total *= d;
    }

    // T = E^{-1} D F^{-1}; x = c * basis with c * T integral iff
    // c = w * E, w_i in (1/d_i) Z. Enumerate w over the box.
    IntMatrix eb = st.rowT * lat.basis; // rows scaled by kScale
    std::vector<TorusPoint> out;
    out.reserve((size_t)total);
    std::vector<i64> idx(6, 0);
    while (true) {
        std::array<i64, 6> p{};
        bool ok = true;
        for (int j = 0; j < 6 && ok; ++j) {
            Rat s(0);
            for (int i = 0; i < 6; ++i)
                if (idx[i]) s = s + Rat(idx[i], st.diag[i]) * Rat(eb.at(i, j));
            if (!s.is_integer()) throw std::logic_error("kernel_on_torus: scale overflow");
            p[j] = s.num;
        }
        out.push_back(TorusPoint{&lat, detail::reduce_scaled(lat, p)});
        int k = 5;
        while (k >= 0 && ++idx[k] == st.diag[k]) idx[k--] = 0;
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if ((i64)out.size() != total) throw std::logic_error("kernel_on_torus: enumeration mismatch");
    return out;
}

// A point of E[3] as (u + v*zeta_3)/3 modulo Z[zeta_3]; arithmetic is
// componentwise mod 3.
struct E3Point {
    int u = 0, v = 0;

    static E3Point normal(int u, int v) {
        u %= 3; if (u < 0) u += 3;
        v %= 3; if (v < 0) v += 3;
        return E3Point{u, v};
    }
    friend E3Point operator+(const E3Point& a, const E3Point& b) {
        return normal(a.u + b.u, a.v + b.v);
    }
    friend E3Point operator-(const E3Point& a, const E3Point& b) {
        return normal(a.u - b.u, a.v - b.v);
    }
    E3Point operator-() const { return normal(-u, -v); }
    // multiplication by zeta_3: (u + v z)/3 -> (-v + (u - v) z)/3
    E3Point zeta() const { return normal(-v, u - v); }
    E3Point zeta2() const { return zeta().zeta(); }
    bool is_zero() const { return u == 0 && v == 0; }
    friend bool operator==(const E3Point& a, const E3Point& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const E3Point& a, const E3Point& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }

    CycNum value() const { return cyc_rat(3, u, 3) + Rat(v, 3) * CycNum::zeta(3); }
};

// the identification F_3 -> Fix_{zeta3}(E), 1 -> t = (1 + 2 zeta)/3
inline E3Point e3_from_f3(int s) { return E3Point::normal(s, 2 * s); }

inline std::array<E3Point, 9> e3_all() {
    std::array<E3Point, 9> out;
    int k = 0;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) out[k++] = E3Point{u, v};
    return out;
}

} // namespace cyquot
