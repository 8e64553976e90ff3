#pragma once

#include <map>
#include <thread>

#include "cyquot/group.hpp"
#include "cyquot/torus.hpp"

namespace cyquot {

using E3Triple = std::array<E3Point, 3>;

inline int e3_index(const E3Point& p) { return p.u * 3 + p.v; }
inline int e3_triple_index(const E3Triple& t) {
    return e3_index(t[0]) * 81 + e3_index(t[1]) * 9 + e3_index(t[2]);
}

inline CycVec e3_value(const E3Triple& t) {
    return CycVec{t[0].value(), t[1].value(), t[2].value()};
}

// Translation parts of a standard-form cocycle: tau(h) = a, tau(k) = 0,
// and for Heis(3) also tau(g) = b. All entries are 3-torsion.
struct StdTuple {
    GroupId gid = GroupId::Z3x2;
    E3Triple a{};
    E3Triple b{}; // unused for Z3^2

    friend bool operator==(const StdTuple& x, const StdTuple& y) {
        return x.gid == y.gid && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const StdTuple& x, const StdTuple& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    }

    std::string str() const {
        auto trip = [](const E3Triple& t) {
            std::string s = "(";
            for (int i = 0; i < 3; ++i) {
                if (i) s += ",";
                s += std::to_string(t[i].u) + "+" + std::to_string(t[i].v) + "z";
            }
            return s + ")/3";
        };
        if (gid == GroupId::Z3x2) return "a=" + trip(a);
        return "a=" + trip(a) + " b=" + trip(b);
    }
};

namespace detail {

// membership of (p1,p2,p3), p_i in E[3], in Lambda: only 729 cases,
// tabulated once per lattice
struct E3MemberTable {
    std::array<bool, 729> in{};

    explicit E3MemberTable(const Lattice& lat) {
        auto all = e3_all();
        for (const auto& p1 : all)
            for (const auto& p2 : all)
                for (const auto& p3 : all)
                    in[e3_triple_index({p1, p2, p3})] =
                        member(lat, CycVec{p1.value(), p2.value(), p3.value()});
    }

    bool operator()(const E3Triple& t) const { return in[e3_triple_index(t)]; }
};

// The relation vectors that must vanish in A = C^3/Lambda. Computed in
// E[3] arithmetic: the normalizations differ from the exact values only
// by elements of Z[zeta_3]^3, which lies in every Lambda.
inline E3Triple wd_v1(const StdTuple& t) {
    return {t.a[0].zeta() - t.a[0], t.a[1].zeta() - t.a[1], t.a[2].zeta() - t.a[2]};
}
inline E3Triple wd_v2(const StdTuple& t) {
    E3Point s = t.b[0] + t.b[1] + t.b[2];
    return {s, s, s};
}
inline E3Triple wd_v3(const StdTuple& t) {
    return {t.b[0].zeta() - t.b[0], t.b[1].zeta() - t.b[1], t.b[2].zeta() - t.b[2]};
}
inline E3Triple wd_v4(const StdTuple& t) {
    return {t.a[0].zeta() - t.a[2] + t.b[0].zeta() - t.b[0],
            t.a[1].zeta() - t.a[0],
            t.a[2].zeta() - t.a[1] + t.b[2].zeta2() - t.b[2]};
}

inline bool well_defined_tab(const StdTuple& t, const E3MemberTable& tab) {
    if (!tab(wd_v1(t))) return false;
    if (t.gid == GroupId::Z3x2) return true;
    return tab(wd_v2(t)) && tab(wd_v3(t)) && tab(wd_v4(t));
}

inline std::array<std::set<E3Point>, 3> kernel_projections(const Kernel& k) {
    std::array<std::set<E3Point>, 3> p;
    for (const auto& e : k.elements)
        for (int i = 0; i < 3; ++i) p[i].insert(e3_from_f3(e[i]));
    return p;
}

} // namespace detail

inline bool is_well_defined(const StdTuple& t, const Lattice& lat) {
    if (!member(lat, e3_value(detail::wd_v1(t)))) return false;
    if (t.gid == GroupId::Z3x2) return true;
    return member(lat, e3_value(detail::wd_v2(t))) && member(lat, e3_value(detail::wd_v3(t))) &&
           member(lat, e3_value(detail::wd_v4(t)));
}

// Freeness of the affine action away from <k>: closed-form criteria in E.
inline bool is_good(const StdTuple& t, const Kernel& k) {
    auto proj = detail::kernel_projections(k);
    if (t.gid == GroupId::Z3x2) {
        for (int i = 0; i < 3; ++i)
            if (proj[i].count(t.a[i])) return false;
        return true;
    }
    // Heis(3): h-type freeness via the first coordinate, g-type via the
    // b-sum, mixed elements via two twisted sums
    if ((t.b[0] + t.b[1] + t.b[2]).is_zero()) return false;
    if (proj[0].count(t.a[0])) return false;
    E3Point c3 = t.b[0].zeta2() + t.b[1].zeta2() + t.b[2] + t.a[0].zeta2() + t.a[2].zeta2() + t.a[1];
    if (c3.is_zero()) return false;
    E3Point c4 = t.b[0].zeta() + t.b[1].zeta() + t.b[2] - t.a[0].zeta() - t.a[1].zeta() - t.a[2];
    if (c4.is_zero()) return false;
    return true;
}

// All well-defined good tuples over Lambda_K, in deterministic (index)
// order. The scan is a pure map over tuple indices; jobs > 1 splits the
// index range and concatenates in order.
inline std::vector<StdTuple> enumerate_good(GroupId gid, const Kernel& k, int jobs = 1) {
    if (gid != GroupId::Z3x2 && gid != GroupId::Heis3)
        throw std::invalid_argument("enumerate_good: unsupported group");
    Lattice lat = lattice_from_kernel(k);
    detail::E3MemberTable tab(lat);
    auto all = e3_all();
    auto proj = detail::kernel_projections(k);

    i64 total = (gid == GroupId::Z3x2) ? 729 : 531441;
    auto tuple_at = [&](i64 idx) {
        StdTuple t;
        t.gid = gid;
        i64 r = idx;
        if (gid == GroupId::Heis3) {
            for (int i = 2; i >= 0; --i) { t.b[i] = all[r % 9]; r /= 9; }
        }
        for (int i = 2; i >= 0; --i) { t.a[i] = all[r % 9]; r /= 9; }
        return t;
    };

    auto scan = [&](i64 lo, i64 hi, std::vector<StdTuple>& out) {
        for (i64 idx = lo; idx < hi; ++idx) {
            StdTuple t = tuple_at(idx);
            if (detail::well_defined_tab(t, tab) && is_good(t, k)) out.push_back(t);
        }
    };

    if (jobs <= 1) {
        std::vector<StdTuple> out;
        scan(0, total, out);
        return out;
    }
    int n = std::min<i64>(jobs, total);
    std::vector<std::vector<StdTuple>> parts(n);
    std::vector<std::thread> threads;
    for (int j = 0; j < n; ++j)
        threads.emplace_back([&, j] { scan(total * j / n, total * (j + 1) / n, parts[j]); });
    for (auto& th : threads) th.join();
    std::vector<StdTuple> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// A cocycle as its full value table over the group, each value reduced
// into A = C^3/Lambda.
struct Cocycle {
    GroupId gid = GroupId::Z3x2;
    const Lattice* lat = nullptr;
    std::vector<TorusPoint> values; // indexed by element_index

    const TorusPoint& of(const GroupElem& u) const { return values[element_index(u)]; }

    friend bool operator==(const Cocycle& x, const Cocycle& y) {
        return x.gid == y.gid && x.lat == y.lat && x.values == y.values;
    }
    friend bool operator<(const Cocycle& x, const Cocycle& y) {
        for (size_t i = 0; i < x.values.size(); ++i)
            if (x.values[i].n != y.values[i].n) return x.values[i].n < y.values[i].n;
        return false;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) s += "|";
            for (int j = 0; j < 6; ++j) {
                if (j) s += ",";
                s += std::to_string(values[i].n[j]);
            }
        }
        return s;
    }
};

namespace detail {

// extend generator values to the whole group by tau(u v) = rho(u) tau(v) + tau(u)
inline Cocycle extend_cocycle(GroupId gid, const Lattice& lat, const Rep& rep,
                              const std::vector<std::pair<GroupElem, TorusPoint>>& gen_values) {
    Cocycle c;
    c.gid = gid;
    c.lat = &lat;
    auto elems = elements(gid);
    c.values.assign(elems.size(), torus_zero(lat));
    std::vector<bool> known(elems.size(), false);
    known[element_index(identity(gid))] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : elems) {
            if (!known[element_index(x)]) continue;
            for (const auto& [gen, tv] : gen_values) {
                GroupElem y = mul(x, gen);
                int yi = element_index(y);
                if (known[yi]) continue;
                c.values[yi] = apply(rep.of(x), tv) + c.values[element_index(x)];
                known[yi] = true;
                grew = true;
            }
        }
    }
    for (bool b : known)
        if (!b) throw std::logic_error("extend_cocycle: generators do not generate");
    return c;
}

} // namespace detail

inline Cocycle cocycle_from_tuple(const StdTuple& t, const Lattice& lat, const Rep& rep) {
    GroupId gid = t.gid;
    std::vector<std::pair<GroupElem, TorusPoint>> gv;
    if (gid == GroupId::Heis3)
        gv.push_back({GroupElem::make(gid, 1, 0, 0), reduce(lat, e3_value(t.b))});
    gv.push_back({GroupElem::make(gid, 0, 1, 0), reduce(lat, e3_value(t.a))});
    gv.push_back({GroupElem::make(gid, 0, 0, 1), torus_zero(lat)});
    return detail::extend_cocycle(gid, lat, rep, gv);
}

// Tuples whose componentwise difference lies in K x K induce the same map
// into A; keep the first representative of each, in input order.
inline std::vector<Cocycle> distinct_cocycles(const std::vector<StdTuple>& tuples,
                                              const Lattice& lat) {
    if (tuples.empty()) return {};
    Rep rep = analytic_rep(tuples[0].gid);
    std::vector<Cocycle> out;
    std::set<std::string> seen;
    for (const auto& t : tuples) {
        Cocycle c = cocycle_from_tuple(t, lat, rep);
        if (seen.insert(c.str()).second) out.push_back(c);
    }
    return out;
}

// u -> (rho(u) - id) d; admissible d are exactly the 27 points with
// (zeta_3 - 1) d = 0, which makes the k-value vanish
inline Cocycle coboundary(const TorusPoint& d, GroupId gid, const Rep& rep) {
    const Lattice& lat = *d.lat;
    CycNum shift = CycNum::zeta(3) - cyc_rat(3, 1);
    CycVec scaled{shift * d.coords()[0], shift * d.coords()[1], shift * d.coords()[2]};
    if (!reduce(lat, scaled).is_zero())
        throw std::domain_error("coboundary: d is not fixed by zeta_3 on the torus");
    Cocycle c;
    c.gid = gid;
    c.lat = &lat;
    auto elems = elements(gid);
    c.values.reserve(elems.size());
    for (const auto& u : elems) c.values.push_back(apply(rep.of(u), d) - d);
    return c;
}

struct CohClass {
    std::vector<Cocycle> members; // sorted
    const Cocycle& representative() const { return members.front(); }
};

// Partition by tau ~ tau' iff tau - tau' is a coboundary; the connecting
// parameters are exactly the 27 points fixed by zeta_3 on the torus.
inline std::vector<CohClass> cohomology_classes(const std::vector<Cocycle>& cocycles,
                                                const Lattice& lat, GroupId gid) {
    Rep rep = analytic_rep(gid);
    std::vector<Cocycle> cbs;
    for (const auto& d : kernel_on_torus(lat, CycMatrix::scalar(CycNum::zeta(3))))
        cbs.push_back(coboundary(d, gid, rep));

    // canonical label: least serialized translate
    std::map<std::string, std::vector<Cocycle>> buckets;
    for (const auto& c : cocycles) {
        std::string best;
        for (const auto& cb : cbs) {
            Cocycle shifted = c;
            for (size_t i = 0; i < c.values.size(); ++i)
                shifted.values[i] = c.values[i] + cb.values[i];
            std::string s = shifted.str();
            if (best.empty() || s < best) best = std::move(s);
        }
        buckets[best].push_back(c);
    }
    std::vector<CohClass> out;
    for (auto& [label, members] : buckets) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(CohClass{std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const CohClass& x, const CohClass& y) {
        return x.representative() < y.representative();
    });
    return out;
}

// The affine maps z -> rho(u) z + tau(u) form a group action iff the
// cocycle identity holds for every pair.
inline bool verify_action(const Cocycle& c, const Rep& rep) {
    auto elems = elements(c.gid);
    for (const auto& u : elems)
        for (const auto& v : elems)
            if (c.of(mul(u, v)) != apply(rep.of(u), c.of(v)) + c.of(u)) return false;
    return true;
}

} // namespace cyquot
