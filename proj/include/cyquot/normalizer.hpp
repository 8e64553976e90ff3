#pragma once

#include <cmath>
#include <map>

#include "cyquot/cocycle.hpp"
#include "cyquot/semilinear.hpp"

namespace cyquot {

struct NormalizerElement {
    SemilinearMap map;
    Automorphism phi;
};

enum class Flavor { Complex, Real };

namespace detail {

inline std::vector<SemilinearMap> close_under_composition(std::vector<SemilinearMap> gens,
                                                          size_t cap) {
    std::map<std::string, SemilinearMap> seen;
    seen.emplace(SemilinearMap{}.str(), SemilinearMap{});
    std::vector<SemilinearMap> frontier{SemilinearMap{}};
    while (!frontier.empty()) {
        std::vector<SemilinearMap> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                SemilinearMap y = x * g;
                if (seen.emplace(y.str(), y).second) next.push_back(y);
                if (seen.size() > cap)
                    throw std::logic_error("normalizer closure exceeds the sanity bound");
            }
        frontier = std::move(next);
    }
    std::vector<SemilinearMap> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

inline SemilinearMap conjugation_map() { return SemilinearMap{CycMatrix::identity(3), true}; }

} // namespace detail

// generators of N_C(Lambda_i) for the Heisenberg lattices
inline std::vector<SemilinearMap> heis_normalizer_generators(Flavor flavor) {
    CycNum z = CycNum::zeta(3), z2 = CycNum::zeta(3, 2), one = cyc_rat(3, 1);
    CycNum t = fixed_point_t();
    CycMatrix c1 = diag(z, z2, one);
    CycMatrix c2(3), c3(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            c2.at(i, j) = (CycNum(3) - t) * (i == j ? one : z2);
            c3.at(i, j) = t * CycNum::zeta(3, (i * j * 2) % 3); // Fourier-type matrix
        }
    std::vector<SemilinearMap> gens{{c1, false}, {c2, false}, {c3, false}};
    if (flavor == Flavor::Real) gens.push_back(detail::conjugation_map());
    return gens;
}

inline std::vector<NormalizerElement> normalizer_heis(const Lattice& lat, Flavor flavor) {
    auto maps = detail::close_under_composition(heis_normalizer_generators(flavor), 25920);
    Rep rep = analytic_rep(GroupId::Heis3);
    std::vector<NormalizerElement> out;
    out.reserve(maps.size());
    for (const auto& c : maps) {
        if (!maps_lattice(c, lat, lat))
            throw std::logic_error("normalizer_heis: element does not preserve the lattice");
        out.push_back(NormalizerElement{c, induced_aut(c, GroupId::Heis3, rep)});
    }
    return out;
}

// image of a kernel under a monomial (or conjugated monomial) map: each
// coordinate of the image of a lift must land back in Fix_{zeta3}(E)
inline std::optional<Kernel> kernel_image(const SemilinearMap& c, const Kernel& k) {
    CycNum t = fixed_point_t();
    Lattice l0 = lattice_eisenstein3();
    std::vector<F3Vec> img;
    for (const auto& e : k.elements) {
        CycVec lift{Rat(e[0]) * t, Rat(e[1]) * t, Rat(e[2]) * t};
        CycVec w = c(lift);
        F3Vec f{};
        for (int i = 0; i < 3; ++i) {
            bool found = false;
            for (int s = 0; s < 3 && !found; ++s)
                if (member(l0, CycVec{w[i] - Rat(s) * t, CycNum(3), CycNum(3)})) {
                    f[i] = s;
                    found = true;
                }
            if (!found) return std::nullopt;
        }
        img.push_back(f);
    }
    return Kernel::from_generators(img);
}

// The normalizer of the diagonal Z3^2 representation inside Aut(E^3):
// monomial matrices with unit entries; the real flavor adds entrywise
// conjugation. Filtered by C K = K.
inline std::vector<NormalizerElement> normalizer_z32(const Kernel& k, Flavor flavor) {
    CycNum z = CycNum::zeta(3);
    CycMatrix g1 = diag(CycNum(3) - z, cyc_rat(3, 1), cyc_rat(3, 1)); // -zeta in slot 1
    CycMatrix g2 = cyclic_shift_matrix();
    CycMatrix g3(3);
    g3.at(0, 1) = cyc_rat(3, 1);
    g3.at(1, 0) = cyc_rat(3, 1);
    g3.at(2, 2) = cyc_rat(3, 1);
    std::vector<SemilinearMap> gens{{g1, false}, {g2, false}, {g3, false}};
    if (flavor == Flavor::Real) gens.push_back(detail::conjugation_map());
    auto maps = detail::close_under_composition(gens, 25920);

    Rep rep = analytic_rep(GroupId::Z3x2);
    std::vector<NormalizerElement> out;
    for (const auto& c : maps) {
        auto img = kernel_image(c, k);
        if (!img || !(*img == k)) continue;
        out.push_back(NormalizerElement{c, induced_aut(c, GroupId::Z3x2, rep)});
    }
    return out;
}

// C * tau = C . (tau o phi^{-1}), values reduced on the target torus
inline Cocycle star(const NormalizerElement& c, const Cocycle& tau, const Lattice& target) {
    Automorphism phiinv = invert(c.phi);
    Cocycle out;
    out.gid = tau.gid;
    out.lat = &target;
    auto elems = elements(tau.gid);
    out.values.reserve(elems.size());
    for (const auto& u : elems) {
        CycVec v = tau.of(phiinv(u)).coords();
        out.values.push_back(reduce(target, c.map(v)));
    }
    return out;
}

inline Cocycle star(const NormalizerElement& c, const Cocycle& tau) {
    return star(c, tau, *tau.lat);
}

struct KernelOrbit {
    Kernel representative; // least member
    std::vector<Kernel> members;
};

// Orbits of the 15 admissible kernels under the ambient normalizer action
// (Z3^2); for Heis(3) the relevant list is the shift-invariant sublist.
inline std::vector<KernelOrbit> kernel_orbits_z32() {
    auto kernels = kernel_enumerate();
    std::vector<SemilinearMap> action;
    {
        CycNum z = CycNum::zeta(3);
        CycMatrix g1 = diag(CycNum(3) - z, cyc_rat(3, 1), cyc_rat(3, 1));
        CycMatrix g2 = cyclic_shift_matrix();
        CycMatrix g3(3);
        g3.at(0, 1) = cyc_rat(3, 1);
        g3.at(1, 0) = cyc_rat(3, 1);
        g3.at(2, 2) = cyc_rat(3, 1);
        action = detail::close_under_composition({{g1, false}, {g2, false}, {g3, false}}, 25920);
    }

    std::vector<KernelOrbit> out;
    std::set<Kernel> assigned;
    for (const auto& k : kernels) {
        if (assigned.count(k)) continue;
        std::set<Kernel> orbit;
        for (const auto& c : action) {
            auto img = kernel_image(c, k);
            if (!img) throw std::logic_error("kernel_orbits: normalizer does not act on kernels");
            orbit.insert(*img);
        }
        for (const auto& m : orbit) assigned.insert(m);
        KernelOrbit o;
        o.members.assign(orbit.begin(), orbit.end());
        o.representative = o.members.front();
        out.push_back(std::move(o));
    }
    return out;
}

inline std::vector<Kernel> kernel_list_heis() {
    std::vector<Kernel> out;
    for (const auto& k : kernel_enumerate())
        if (k.shift_invariant()) out.push_back(k);
    return out;
}

// Machine-checked emptiness certificate for N_R(Lambda, Lambda').
struct EmptinessCertificate {
    std::string pair;
    i64 candidate_count = 0;
    i64 witnesses_checked = 0;
    bool empty = false;
    std::string method;
};

namespace detail {

inline bool is_rational_cube(const Rat& r) {
    auto cube_root = [](i64 v) -> std::optional<i64> {
        if (v < 0) return std::nullopt;
        i64 c = (i64)std::llround(std::cbrt((double)v));
        for (i64 x = std::max<i64>(0, c - 2); x <= c + 2; ++x)
            if (x * x * x == v) return x;
        return std::nullopt;
    };
    return r.num > 0 && cube_root(r.num) && cube_root(r.den);
}

} // namespace detail

inline EmptinessCertificate cross_lattice_empty(const Lattice& lam, const Lattice& lamp,
                                                GroupId gid) {
    EmptinessCertificate cert;
    cert.pair = std::to_string(lam.index_over_eisenstein()) + ":" +
                std::to_string(lamp.index_over_eisenstein());
    if (lam == lamp) {
        cert.candidate_count = 1;
        cert.witnesses_checked = 1;
        cert.empty = false;
        cert.method = "identity witness";
        return cert;
    }
    if (gid == GroupId::Z3x2) {
        // Schur forces a (possibly conjugated) monomial shape with unit
        // entries: 6 permutations x 6^3 unit diagonals x {1, conj}
        auto units = eisenstein_units();
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p)
            for (const auto& u0 : units)
                for (const auto& u1 : units)
                    for (const auto& u2 : units)
                        for (int conj = 0; conj < 2; ++conj) {
                            CycMatrix m(3);
                            m.at(0, perms[p][0]) = u0;
                            m.at(1, perms[p][1]) = u1;
                            m.at(2, perms[p][2]) = u2;
                            SemilinearMap c{m, conj == 1};
                            ++cert.candidate_count;
                            ++cert.witnesses_checked;
                            if (maps_lattice(c, lam, lamp))
                                throw std::logic_error(
                                    "cross_lattice_empty: unexpected witness found");
                        }
        cert.empty = true;
        cert.method = "exhaustive monomial candidate scan";
        return cert;
    }
    if (gid == GroupId::Heis3) {
        // any member would be mu * C0 with C0 preserving the source
        // lattice, so mu Lambda = Lambda' and the covolume ratio
        // norm(mu)^3 would be a rational cube
        Rat ratio(lam.index_over_eisenstein(), lamp.index_over_eisenstein());
        cert.candidate_count = 2592; // the group any witness factors through
        cert.witnesses_checked = 1;
        if (detail::is_rational_cube(ratio))
            throw std::logic_error("cross_lattice_empty: covolume obstruction vanishes");
        cert.empty = true;
        cert.method = "covolume ratio is not a rational cube";
        return cert;
    }
    throw std::invalid_argument("cross_lattice_empty: unsupported group");
}

} // namespace cyquot
