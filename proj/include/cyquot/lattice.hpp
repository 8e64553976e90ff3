#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyquot/cycmat.hpp"
#include "cyquot/intmat.hpp"
#include "cyquot/kernel.hpp"

namespace cyquot {

// Real coordinates: a vector in Q(zeta_m)^3 is flattened to 3*(m-1)
// rationals via the power basis of each complex coordinate. All lattice
// and point data is stored scaled by kScale = 27, which is an exact common
// denominator for everything the artifact touches (lattice entries have
// denominator dividing 3, torsion points denominator dividing 27).
inline constexpr i64 kScale = 27;

inline std::vector<Rat> flatten(const CycVec& v) {
    int phi = v[0].order - 1;
    std::vector<Rat> out;
    out.reserve(3 * phi);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < phi; ++j) out.push_back(v[i].coeffs[j]);
    return out;
}

inline CycVec unflatten(int m, const std::vector<Rat>& flat) {
    int phi = m - 1;
    CycVec v{CycNum(m), CycNum(m), CycNum(m)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < phi; ++j) v[i].coeffs[j] = flat[i * phi + j];
    return v;
}

// t = (1 + 2*zeta_3)/3, the generator of Fix_{zeta3}(E)
inline CycNum fixed_point_t() { return cyc_rat(3, 1, 3) + Rat(2, 3) * CycNum::zeta(3); }

// Rank-6 lattice in Q(zeta_m)^3. For m = 3 the basis is square (6x6),
// HNF-canonical, and caches its adjugate for fast membership/reduction;
// the single m = 7 CM lattice keeps a 6x18 basis and only supports the
// determinant machinery.
struct Lattice {
    int order = 3;
    IntMatrix basis;    // rank x ambient, rows are kScale * basis vectors
    std::optional<Kernel> kernel;

    // caches for the square (order 3) case
    IntMatrix adjugate; // adj(basis), so that basis * adjugate = det * I
    i64 det = 0;

    int ambient() const { return basis.cols; }
    int rank() const { return basis.rows; }

    bool square() const { return basis.rows == basis.cols; }

    // index of kScale-scaled Z[zeta_3]^3 inside this lattice's scale:
    // [Lambda : Z[zeta_3]^3] for order 3 lattices
    i64 index_over_eisenstein() const {
        if (!square()) throw std::logic_error("Lattice: index only for square lattices");
        i64 full = 1;
        for (int i = 0; i < 6; ++i) full *= kScale;
        return full / det;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.order == b.order && a.basis == b.basis;
    }
};

namespace detail {

inline IntMatrix adjugate_of(const IntMatrix& m) {
    int n = m.rows;
    IntMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            i64 cof = det_bareiss(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

inline Lattice finish_square_lattice(IntMatrix rows, std::optional<Kernel> k) {
    IntMatrix h = hnf_rows(rows);
    Lattice lat;
    lat.order = 3;
    lat.basis = IntMatrix(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) lat.basis.at(i, j) = h.at(i, j);
    lat.kernel = std::move(k);
    lat.det = det_bareiss(lat.basis);
    if (lat.det <= 0) throw std::logic_error("Lattice: degenerate basis");
    lat.adjugate = adjugate_of(lat.basis);
    return lat;
}

} // namespace detail

inline Lattice lattice_eisenstein3() {
    IntMatrix rows(6, 6);
    for (int i = 0; i < 6; ++i) rows.at(i, i) = kScale;
    return detail::finish_square_lattice(rows, Kernel::from_generators({}));
}

// Lambda_K = Z[zeta_3]^3 + sum of Z * (t * v) over v in K
inline Lattice lattice_from_kernel(const Kernel& k) {
    int extra = (int)k.elements.size();
    IntMatrix rows(6 + extra, 6);
    for (int i = 0; i < 6; ++i) rows.at(i, i) = kScale;
    for (int e = 0; e < extra; ++e) {
        const F3Vec& v = k.elements[e];
        for (int i = 0; i < 3; ++i) {
            // v[i] * t = v[i] * (1 + 2 zeta)/3  ->  scaled by 27: (9 v, 18 v)
            rows.at(6 + e, 2 * i) = 9 * v[i];
            rows.at(6 + e, 2 * i + 1) = 18 * v[i];
        }
    }
    IntMatrix h = hnf_rows(rows);
    IntMatrix top(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) top.at(i, j) = h.at(i, j);
    return detail::finish_square_lattice(top, k);
}

// The CM lattice with basis {(zeta7^k, zeta7^(2k), zeta7^(4k)) | k=0..5}.
inline Lattice lattice_cm_zeta7() {
    Lattice lat;
    lat.order = 7;
    lat.basis = IntMatrix(6, 18);
    for (int k = 0; k < 6; ++k) {
        CycVec v{CycNum::zeta(7, k), CycNum::zeta(7, 2 * k), CycNum::zeta(7, 4 * k)};
        auto flat = flatten(v);
        for (int j = 0; j < 18; ++j) {
            Rat s = Rat(kScale) * flat[j];
            if (!s.is_integer()) throw std::logic_error("CM lattice: unexpected denominator");
            lat.basis.at(k, j) = s.num;
        }
    }
    return lat;
}

// Coordinates of a scaled vector w.r.t. the lattice basis, as exact
// rationals: c with c * basis = scaled.
inline std::vector<Rat> lattice_coords(const Lattice& lat, const std::vector<i64>& scaled) {
    if (!lat.square()) throw std::logic_error("lattice_coords: need square lattice");
    std::vector<Rat> c(6);
    for (int j = 0; j < 6; ++j) {
        i64 s = 0;
        for (int i = 0; i < 6; ++i) s += scaled[i] * lat.adjugate.at(i, j);
        c[j] = Rat(s, lat.det);
    }
    return c;
}

// x in Lambda, for x given as exact rationals (unscaled coordinates)
inline bool member(const Lattice& lat, const std::vector<Rat>& x) {
    if (!lat.square()) throw std::logic_error("member: need square lattice");
    // c = kScale*x * adj / det must be integral
    for (int j = 0; j < 6; ++j) {
        Rat s(0);
        for (int i = 0; i < 6; ++i) s = s + x[i] * Rat(lat.adjugate.at(i, j));
        s = s * Rat(kScale, lat.det);
        if (!s.is_integer()) return false;
    }
    return true;
}

inline bool member(const Lattice& lat, const CycVec& v) { return member(lat, flatten(v)); }

// Z-matrix of a linear map on the lattice, rows = coordinates of the
// images of the basis vectors. Empty if the map does not preserve the
// lattice's rational span integrally.
inline std::optional<IntMatrix> matrix_of(const Lattice& lat,
                                          const std::function<CycVec(const CycVec&)>& map) {
    int amb = lat.ambient();
    IntMatrix system(amb, lat.rank()); // basis^T
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = 0; j < amb; ++j) system.at(j, i) = lat.basis.at(i, j);

    IntMatrix out(lat.rank(), lat.rank());
    for (int i = 0; i < lat.rank(); ++i) {
        std::vector<Rat> flat(amb);
        for (int j = 0; j < amb; ++j) flat[j] = Rat(lat.basis.at(i, j), kScale);
        CycVec img = map(unflatten(lat.order, flat));
        auto imgflat = flatten(img);
        std::vector<i64> rhs(amb);
        for (int j = 0; j < amb; ++j) {
            Rat s = Rat(kScale) * imgflat[j];
            if (!s.is_integer()) return std::nullopt;
            rhs[j] = s.num;
        }
        auto sol = solve_integral(system, rhs);
        if (!sol) return std::nullopt;
        for (int j = 0; j < lat.rank(); ++j) out.at(i, j) = (*sol)[j];
    }
    return out;
}

inline std::optional<IntMatrix> matrix_of(const Lattice& lat, const CycMatrix& m) {
    return matrix_of(lat, [&](const CycVec& v) { return m * v; });
}

// |det| of the Z-matrix of the map in the lattice basis.
inline i64 det_int(const Lattice& lat, const std::function<CycVec(const CycVec&)>& map) {
    auto m = matrix_of(lat, map);
    if (!m) throw std::domain_error("det_int: map does not preserve the lattice");
    i64 d = det_bareiss(*m);
    return d < 0 ? -d : d;
}

inline i64 det_int(const Lattice& lat, const CycMatrix& m) {
    return det_int(lat, [&](const CycVec& v) { return m * v; });
}

} // namespace cyquot
