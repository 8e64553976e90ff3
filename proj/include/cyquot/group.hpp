#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyquot/cycmat.hpp"

namespace cyquot {

enum class GroupId { Z3, Z7, Z3x2, Heis3 };

inline int group_order(GroupId g) {
    switch (g) {
        case GroupId::Z3: return 3;
        case GroupId::Z7: return 7;
        case GroupId::Z3x2: return 9;
        case GroupId::Heis3: return 27;
    }
    return 0;
}

inline std::string group_name(GroupId g) {
    switch (g) {
        case GroupId::Z3: return "Z3";
        case GroupId::Z7: return "Z7";
        case GroupId::Z3x2: return "Z3^2";
        case GroupId::Heis3: return "Heis(3)";
    }
    return "?";
}

// Element in normal form g^a h^b k^c. Heis(3) uses all three exponents
// with the rewriting rule h g = g h k^2 (from [g,h] = k, k central);
// Z3^2 = <h,k> uses (0,b,c); the cyclic groups use (a,0,0).
struct GroupElem {
    GroupId gid = GroupId::Heis3;
    std::array<int, 3> e{0, 0, 0};

    static GroupElem make(GroupId gid, int a, int b, int c) {
        int m = (gid == GroupId::Z7) ? 7 : 3;
        auto norm = [m](int x) { x %= m; return x < 0 ? x + m : x; };
        if (gid == GroupId::Z3 || gid == GroupId::Z7) return GroupElem{gid, {norm(a), 0, 0}};
        if (gid == GroupId::Z3x2) return GroupElem{gid, {0, norm(b), norm(c)}};
        return GroupElem{gid, {norm(a), norm(b), norm(c)}};
    }

    bool is_identity() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    friend bool operator==(const GroupElem& x, const GroupElem& y) {
        return x.gid == y.gid && x.e == y.e;
    }
    friend bool operator<(const GroupElem& x, const GroupElem& y) { return x.e < y.e; }

    std::string str() const {
        if (gid == GroupId::Z3 || gid == GroupId::Z7) return "g^" + std::to_string(e[0]);
        if (gid == GroupId::Z3x2)
            return "h^" + std::to_string(e[1]) + " k^" + std::to_string(e[2]);
        return "g^" + std::to_string(e[0]) + " h^" + std::to_string(e[1]) + " k^" +
               std::to_string(e[2]);
    }
};

inline GroupElem identity(GroupId gid) { return GroupElem::make(gid, 0, 0, 0); }

inline GroupElem mul(const GroupElem& x, const GroupElem& y) {
    if (x.gid != y.gid) throw std::invalid_argument("GroupElem: group mismatch");
    if (x.gid == GroupId::Heis3)
        // h^b g^a = g^a h^b k^{-ab}
        return GroupElem::make(x.gid, x.e[0] + y.e[0], x.e[1] + y.e[1],
                               x.e[2] + y.e[2] - x.e[1] * y.e[0]);
    return GroupElem::make(x.gid, x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2]);
}

inline GroupElem inverse(const GroupElem& x) {
    if (x.gid == GroupId::Heis3)
        return GroupElem::make(x.gid, -x.e[0], -x.e[1], -x.e[2] - x.e[0] * x.e[1]);
    return GroupElem::make(x.gid, -x.e[0], -x.e[1], -x.e[2]);
}

inline std::vector<GroupElem> elements(GroupId gid) {
    std::vector<GroupElem> out;
    if (gid == GroupId::Z3 || gid == GroupId::Z7) {
        for (int a = 0; a < group_order(gid); ++a) out.push_back(GroupElem::make(gid, a, 0, 0));
    } else if (gid == GroupId::Z3x2) {
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) out.push_back(GroupElem::make(gid, 0, b, c));
    } else {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) out.push_back(GroupElem::make(gid, a, b, c));
    }
    return out;
}

inline int element_index(const GroupElem& x) {
    if (x.gid == GroupId::Z3 || x.gid == GroupId::Z7) return x.e[0];
    if (x.gid == GroupId::Z3x2) return x.e[1] * 3 + x.e[2];
    return x.e[0] * 9 + x.e[1] * 3 + x.e[2];
}

// the generators whose translation parts determine a standard-form cocycle
inline std::vector<GroupElem> generators(GroupId gid) {
    if (gid == GroupId::Z3 || gid == GroupId::Z7) return {GroupElem::make(gid, 1, 0, 0)};
    if (gid == GroupId::Z3x2)
        return {GroupElem::make(gid, 0, 1, 0), GroupElem::make(gid, 0, 0, 1)};
    return {GroupElem::make(gid, 1, 0, 0), GroupElem::make(gid, 0, 1, 0),
            GroupElem::make(gid, 0, 0, 1)};
}

// Automorphism given by its full permutation table over normal forms.
struct Automorphism {
    GroupId gid = GroupId::Heis3;
    std::vector<int> table; // element index -> element index

    GroupElem operator()(const GroupElem& x) const { return elements(gid)[table[element_index(x)]]; }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.gid == b.gid && a.table == b.table;
    }
    friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.table < b.table; }
};

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
    Automorphism r{a.gid, std::vector<int>(b.table.size())};
    for (size_t i = 0; i < b.table.size(); ++i) r.table[i] = a.table[b.table[i]];
    return r;
}

inline Automorphism invert(const Automorphism& a) {
    Automorphism r{a.gid, std::vector<int>(a.table.size())};
    for (size_t i = 0; i < a.table.size(); ++i) r.table[a.table[i]] = (int)i;
    return r;
}

inline Automorphism identity_automorphism(GroupId gid) {
    int n = group_order(gid);
    Automorphism a{gid, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) a.table[i] = i;
    return a;
}

namespace detail {

// map defined on the two generating exponents, extended by the normal form
inline bool build_hom_table(GroupId gid, const GroupElem& img_g, const GroupElem& img_h,
                            std::vector<int>& table) {
    auto elems = elements(gid);
    int n = (int)elems.size();
    table.assign(n, -1);
    auto power = [&](const GroupElem& x, int k) {
        GroupElem r = identity(gid);
        for (int i = 0; i < k; ++i) r = mul(r, x);
        return r;
    };
    GroupElem img_k = identity(gid);
    if (gid == GroupId::Heis3) {
        // k = [g,h] must map to [img_g, img_h]
        img_k = mul(mul(inverse(img_g), inverse(img_h)), mul(img_g, img_h));
    }
    for (const auto& x : elems) {
        GroupElem y;
        if (gid == GroupId::Z3x2)
            y = mul(power(img_g, x.e[1]), power(img_h, x.e[2])); // images of h, k
        else
            y = mul(mul(power(img_g, x.e[0]), power(img_h, x.e[1])), power(img_k, x.e[2]));
        table[element_index(x)] = element_index(y);
    }
    // homomorphism and bijectivity
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[table[i]]) return false;
        seen[table[i]] = true;
    }
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (table[element_index(mul(x, y))] !=
                element_index(mul(elems[table[element_index(x)]], elems[table[element_index(y)]])))
                return false;
    return true;
}

} // namespace detail

// Brute-force enumeration over generator-image pairs. For Heis(3) this
// recovers the AGL(2,F_3) count 432 without assuming it.
inline std::vector<Automorphism> automorphisms(GroupId gid) {
    if (gid != GroupId::Z3x2 && gid != GroupId::Heis3)
        throw std::invalid_argument("automorphisms: unsupported group");
    auto elems = elements(gid);
    std::vector<Automorphism> out;
    for (const auto& x : elems)
        for (const auto& y : elems) {
            std::vector<int> table;
            if (detail::build_hom_table(gid, x, y, table)) out.push_back(Automorphism{gid, table});
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Analytic representation: exact matrices for every element, indexed by
// normal form.
struct Rep {
    GroupId gid;
    std::vector<CycMatrix> mats;

    const CycMatrix& of(const GroupElem& x) const { return mats[element_index(x)]; }
};

inline Rep analytic_rep(GroupId gid) {
    int m = (gid == GroupId::Z7) ? 7 : 3;
    CycNum z = CycNum::zeta(m);
    CycMatrix rho_g = CycMatrix::identity(m), rho_h = CycMatrix::identity(m),
              rho_k = CycMatrix::identity(m);
    switch (gid) {
        case GroupId::Z3:
            rho_g = CycMatrix::scalar(z);
            break;
        case GroupId::Z7:
            rho_g = diag(z, CycNum::zeta(7, 2), CycNum::zeta(7, 4));
            break;
        case GroupId::Z3x2:
            rho_h = diag(CycNum(3, Rat(1)), CycNum::zeta(3, 2), z);
            rho_k = CycMatrix::scalar(z);
            break;
        case GroupId::Heis3:
            rho_g = cyclic_shift_matrix();
            rho_h = diag(CycNum(3, Rat(1)), CycNum::zeta(3, 2), z);
            rho_k = CycMatrix::scalar(z);
            break;
    }
    Rep rep{gid, {}};
    auto elems = elements(gid);
    rep.mats.resize(elems.size(), CycMatrix::identity(m));
    auto power = [&](const CycMatrix& x, int k) {
        CycMatrix r = CycMatrix::identity(m);
        for (int i = 0; i < k; ++i) r = r * x;
        return r;
    };
    for (const auto& x : elems) {
        CycMatrix mat = power(rho_g, x.e[0]) * power(rho_h, x.e[1]) * power(rho_k, x.e[2]);
        if (gid == GroupId::Z3 || gid == GroupId::Z7) mat = power(rho_g, x.e[0]);
        if (gid == GroupId::Z3x2) mat = power(rho_h, x.e[1]) * power(rho_k, x.e[2]);
        rep.mats[element_index(x)] = mat;
    }
    return rep;
}

enum class CharKind { Full, Complex };

// Automorphisms fixing the trace character of the analytic representation
// (Complex), or of its decomplexification chi + conj(chi) (Full).
inline std::vector<Automorphism> char_stabilizer(GroupId gid, CharKind kind) {
    if (gid != GroupId::Heis3) throw std::invalid_argument("char_stabilizer: unsupported group");
    Rep rep = analytic_rep(gid);
    auto elems = elements(gid);
    std::vector<CycNum> chi(elems.size(), CycNum(3));
    for (const auto& x : elems) chi[element_index(x)] = rep.of(x).trace();

    std::vector<Automorphism> out;
    for (const auto& phi : automorphisms(gid)) {
        bool ok = true;
        for (const auto& x : elems) {
            const CycNum& a = chi[phi.table[element_index(x)]];
            const CycNum& b = chi[element_index(x)];
            bool fixed = (kind == CharKind::Complex) ? (a == b)
                                                     : (a + a.conj() == b + b.conj());
            if (!fixed) { ok = false; break; }
        }
        if (ok) out.push_back(phi);
    }
    return out;
}

} // namespace cyquot
