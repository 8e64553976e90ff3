#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "cyquot/rational.hpp"

namespace cyquot {

using F3Vec = std::array<int, 3>; // entries in {0,1,2}

inline F3Vec f3_add(const F3Vec& x, const F3Vec& y) {
    return {(x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2]) % 3};
}
inline F3Vec f3_scale(int s, const F3Vec& x) {
    s %= 3;
    if (s < 0) s += 3;
    return {(s * x[0]) % 3, (s * x[1]) % 3, (s * x[2]) % 3};
}
inline bool f3_is_zero(const F3Vec& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

// Subgroup of F_3^3 identified with a subgroup of Fix_{zeta3}(E)^3 via
// 1 -> t. Stored as the sorted list of all its elements.
struct Kernel {
    std::vector<F3Vec> elements; // sorted, contains 0

    static Kernel from_generators(const std::vector<F3Vec>& gens) {
        std::set<F3Vec> s;
        s.insert({0, 0, 0});
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<F3Vec> cur(s.begin(), s.end());
            for (const auto& x : cur)
                for (const auto& g : gens) {
                    F3Vec y = f3_add(x, g);
                    if (s.insert(y).second) grew = true;
                }
        }
        Kernel k;
        k.elements.assign(s.begin(), s.end());
        return k;
    }

    size_t size() const { return elements.size(); }

    bool contains(const F3Vec& v) const {
        return std::binary_search(elements.begin(), elements.end(), v);
    }

    // values appearing as i-th coordinate of some element
    std::set<int> coordinate_values(int i) const {
        std::set<int> s;
        for (const auto& e : elements) s.insert(e[i]);
        return s;
    }

    bool has_unit_vector_multiple() const {
        for (const auto& e : elements) {
            if (f3_is_zero(e)) continue;
            int nz = (e[0] != 0) + (e[1] != 0) + (e[2] != 0);
            if (nz == 1) return true;
        }
        return false;
    }

    // stability under the coordinate 3-cycle (k1,k2,k3) -> (k3,k1,k2)
    bool shift_invariant() const {
        for (const auto& e : elements)
            if (!contains({e[2], e[0], e[1]})) return false;
        return true;
    }

    friend bool operator==(const Kernel& a, const Kernel& b) { return a.elements == b.elements; }
    friend bool operator<(const Kernel& a, const Kernel& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    }

    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < elements.size(); ++i) {
            if (i) s += ",";
            s += "(" + std::to_string(elements[i][0]) + "," + std::to_string(elements[i][1]) +
                 "," + std::to_string(elements[i][2]) + ")";
        }
        return s + "}";
    }
};

// All subgroups of F_3^3 (they are exactly the linear subspaces).
inline std::vector<Kernel> all_f3_subgroups() {
    std::vector<F3Vec> vecs;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) vecs.push_back({a, b, c});

    std::set<Kernel> out;
    out.insert(Kernel::from_generators({}));
    for (const auto& v : vecs)
        if (!f3_is_zero(v)) out.insert(Kernel::from_generators({v}));
    for (const auto& v : vecs)
        for (const auto& w : vecs)
            if (!f3_is_zero(v) && !f3_is_zero(w)) out.insert(Kernel::from_generators({v, w}));
    out.insert(Kernel::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    return std::vector<Kernel>(out.begin(), out.end());
}

// The admissible kernels: subgroups of F_3^3 containing no nonzero
// multiple of a unit vector. Deterministic order (by size, then lex).
inline std::vector<Kernel> kernel_enumerate() {
    std::vector<Kernel> out;
    for (const auto& k : all_f3_subgroups())
        if (!k.has_unit_vector_multiple()) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

// orbit representatives under coordinate permutations and sign flips
inline Kernel kernel_K1() { return Kernel::from_generators({}); }
inline Kernel kernel_K2() { return Kernel::from_generators({{1, 1, 0}}); }
inline Kernel kernel_K3() { return Kernel::from_generators({{1, 1, 1}}); }
inline Kernel kernel_K4() { return Kernel::from_generators({{1, 1, 1}, {1, 2, 0}}); }

} // namespace cyquot
