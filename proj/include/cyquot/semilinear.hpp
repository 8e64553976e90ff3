#pragma once

#include "cyquot/group.hpp"
#include "cyquot/lattice.hpp"

namespace cyquot {

// C-linear or C-antilinear map of C^3, kept in Q(zeta_3) arithmetic:
// z -> M z, or z -> M conj(z) when antilinear.
struct SemilinearMap {
    CycMatrix M = CycMatrix::identity(3);
    bool antilinear = false;

    CycVec operator()(CycVec v) const {
        if (antilinear)
            for (auto& c : v) c = c.conj();
        return M * v;
    }

    friend SemilinearMap operator*(const SemilinearMap& x, const SemilinearMap& y) {
        return SemilinearMap{x.M * (x.antilinear ? y.M.conj() : y.M),
                             x.antilinear != y.antilinear};
    }

    SemilinearMap inverse() const {
        CycMatrix inv = M.inverse();
        return SemilinearMap{antilinear ? inv.conj() : inv, antilinear};
    }

    friend bool operator==(const SemilinearMap& x, const SemilinearMap& y) {
        return x.antilinear == y.antilinear && x.M == y.M;
    }

    std::string str() const { return (antilinear ? "~" : "") + M.str(); }
};

// Z-matrix of C from the basis of `from` to the basis of `to`; empty if
// some image has non-integral coordinates.
inline std::optional<IntMatrix> matrix_between(const SemilinearMap& c, const Lattice& from,
                                               const Lattice& to) {
    IntMatrix system(6, 6); // basis(to)^T
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) system.at(j, i) = to.basis.at(i, j);
    IntMatrix out(6, 6);
    for (int i = 0; i < 6; ++i) {
        std::vector<Rat> flat(6);
        for (int j = 0; j < 6; ++j) flat[j] = Rat(from.basis.at(i, j), kScale);
        auto imgflat = flatten(c(unflatten(3, flat)));
        std::vector<i64> rhs(6);
        for (int j = 0; j < 6; ++j) {
            Rat s = Rat(kScale) * imgflat[j];
            if (!s.is_integer()) return std::nullopt;
            rhs[j] = s.num;
        }
        auto sol = solve_integral(system, rhs);
        if (!sol) return std::nullopt;
        for (int j = 0; j < 6; ++j) out.at(i, j) = (*sol)[j];
    }
    return out;
}

// C Lambda = Lambda' (bijectively)
inline bool maps_lattice(const SemilinearMap& c, const Lattice& from, const Lattice& to) {
    auto m = matrix_between(c, from, to);
    if (!m) return false;
    i64 d = det_bareiss(*m);
    return d == 1 || d == -1;
}

// The unique phi with C rho(u) C^{-1} = rho(phi(u)) (rho(u) conjugated
// entrywise first when C is antilinear). Throws if C does not normalize
// the image of rho.
inline Automorphism induced_aut(const SemilinearMap& c, GroupId gid, const Rep& rep) {
    auto elems = elements(gid);
    CycMatrix minv = c.M.inverse();
    auto image_of = [&](const GroupElem& u) -> GroupElem {
        CycMatrix src = c.antilinear ? rep.of(u).conj() : rep.of(u);
        CycMatrix target = c.M * src * minv;
        for (const auto& w : elems)
            if (rep.of(w) == target) return w;
        throw std::domain_error("induced_aut: map does not normalize the representation");
    };
    GroupElem ig, ih;
    if (gid == GroupId::Z3x2) {
        ig = image_of(GroupElem::make(gid, 0, 1, 0));
        ih = image_of(GroupElem::make(gid, 0, 0, 1));
    } else if (gid == GroupId::Heis3) {
        ig = image_of(GroupElem::make(gid, 1, 0, 0));
        ih = image_of(GroupElem::make(gid, 0, 1, 0));
    } else {
        throw std::invalid_argument("induced_aut: unsupported group");
    }
    std::vector<int> table;
    if (!detail::build_hom_table(gid, ig, ih, table))
        throw std::domain_error("induced_aut: induced map is not an automorphism");
    // agreeing on generators suffices: u -> C rho(u)~ C^{-1} is itself a
    // homomorphism, so the identity propagates to all of G
    return Automorphism{gid, table};
}

} // namespace cyquot
