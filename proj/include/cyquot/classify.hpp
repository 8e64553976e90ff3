#pragma once

#include "cyquot/normalizer.hpp"
#include "cyquot/pinned.hpp"

namespace cyquot {

// the admissible translation parts: the 27 points fixed by zeta_3 . id
inline std::vector<TorusPoint> dspace_fixed27(const Lattice& lat) {
    return kernel_on_torus(lat, CycMatrix::scalar(CycNum::zeta(3)));
}

// The same set recovered the hard way: scan the full 9-torsion subgroup
// (9^6 points) and keep the points killed by zeta_3 - 1. Used to certify
// that no translation part outside the 27-point group can occur.
inline std::vector<TorusPoint> dspace_from_nine_torsion(const Lattice& lat) {
    std::vector<TorusPoint> out;
    std::array<std::array<i64, 6>, 6> rows; // basis rows / 9, exact
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (lat.basis.at(i, j) % 9 != 0)
                throw std::logic_error("dspace_from_nine_torsion: basis not 9-divisible");
            rows[i][j] = lat.basis.at(i, j) / 9;
        }
    std::array<int, 6> idx{};
    while (true) {
        std::array<i64, 6> p{};
        for (int i = 0; i < 6; ++i)
            if (idx[i])
                for (int j = 0; j < 6; ++j) p[j] += idx[i] * rows[i][j];
        // (zeta_3 - 1) acts on each coordinate pair (x, y) as
        // (x + y zeta)(zeta - 1) = (-x - y) + (x - 2y) zeta
        std::array<i64, 6> q;
        for (int c = 0; c < 3; ++c) {
            i64 x = p[2 * c], y = p[2 * c + 1];
            q[2 * c] = -x - y;
            q[2 * c + 1] = x - 2 * y;
        }
        TorusPoint img{&lat, detail::reduce_scaled(lat, q)};
        if (img.is_zero()) out.push_back(TorusPoint{&lat, detail::reduce_scaled(lat, p)});
        int k = 5;
        while (k >= 0 && ++idx[k] == 9) idx[k--] = 0;
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// true iff some C in N and d in dspace solve
// (rho(u) - I) d = (C * tau)(u) - tau'(u) for all generators u
inline bool equivalent(const Cocycle& tau, const Cocycle& taup,
                       const std::vector<NormalizerElement>& N,
                       const std::vector<TorusPoint>& dspace) {
    if (tau.lat != taup.lat) throw std::invalid_argument("equivalent: lattice mismatch");
    const Lattice& lat = *tau.lat;
    Rep rep = analytic_rep(tau.gid);
    auto gens = generators(tau.gid);
    CycMatrix id = CycMatrix::identity(3);

    // (rho(u) - I) d, tabulated over the search space
    std::vector<std::vector<TorusPoint>> shifted(dspace.size());
    for (size_t i = 0; i < dspace.size(); ++i)
        for (const auto& u : gens)
            shifted[i].push_back(apply(rep.of(u), dspace[i]) - dspace[i]);

    for (const auto& c : N) {
        Automorphism phiinv = invert(c.phi);
        std::vector<TorusPoint> diff;
        for (const auto& u : gens) {
            CycVec v = tau.of(phiinv(u)).coords();
            diff.push_back(reduce(lat, c.map(v)) - taup.of(u));
        }
        for (size_t i = 0; i < dspace.size(); ++i)
            if (shifted[i] == diff) return true;
    }
    return false;
}

// partition of the classes under the *-action equivalence, by indices;
// orbits sorted by least member
inline std::vector<std::vector<int>> orbit_partition(const std::vector<CohClass>& classes,
                                                     const std::vector<NormalizerElement>& N,
                                                     const std::vector<TorusPoint>& dspace) {
    int n = (int)classes.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (find(i) != find(j) &&
                equivalent(classes[i].representative(), classes[j].representative(), N, dspace))
                parent[find(j)] = find(i);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, members] : groups) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

struct QuotientDescriptor {
    GroupId gid;
    std::string lattice_label;
    std::string action;
    i64 sing_count = 0;
    int sing_n = 3;
    std::array<int, 3> sing_w{1, 1, 1};
    std::string pi1;
    bool uniformized = false;
};

namespace detail {

inline std::string cyc_short(const CycNum& x) {
    int m = x.order;
    if (m == 3) {
        if (x.is_zero()) return "0";
        static const std::vector<std::pair<std::string, CycNum>> named = [] {
            CycNum one = cyc_rat(3, 1), z = CycNum::zeta(3);
            std::vector<std::pair<std::string, CycNum>> v;
            v.push_back({"1", one});
            v.push_back({"-1", CycNum(3) - one});
            v.push_back({"z3", z});
            v.push_back({"-z3", CycNum(3) - z});
            v.push_back({"z3^2", z * z});
            v.push_back({"-z3^2", CycNum(3) - z * z});
            v.push_back({"t", fixed_point_t()});
            v.push_back({"-t", CycNum(3) - fixed_point_t()});
            return v;
        }();
        for (const auto& [n, v] : named)
            if (x == v) return n;
        std::string s;
        if (!x.coeffs[0].is_zero()) s = x.coeffs[0].str();
        if (!x.coeffs[1].is_zero()) {
            std::string zc = x.coeffs[1].str();
            if (!s.empty() && zc[0] != '-') s += "+";
            s += (zc == "1" ? "" : zc == "-1" ? "-" : zc + "*") + std::string("z3");
        }
        return s;
    } else {
        for (int p = 0; p < m; ++p)
            if (x == CycNum::zeta(m, p))
                return p == 0 ? "1" : p == 1 ? "z7" : "z7^" + std::to_string(p);
    }
    return x.str();
}

inline std::string matrix_short(const CycMatrix& m) {
    bool diagonal = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !m.at(i, j).is_zero()) diagonal = false;
    if (diagonal)
        return "diag(" + cyc_short(m.at(0, 0)) + "," + cyc_short(m.at(1, 1)) + "," +
               cyc_short(m.at(2, 2)) + ")";
    if (m == cyclic_shift_matrix(m.order)) return "cyc";
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ";";
        for (int j = 0; j < 3; ++j) {
            if (j) s += ",";
            s += cyc_short(m.at(i, j));
        }
    }
    return s + "]";
}

inline std::string point_short(const CycVec& v) {
    return "(" + cyc_short(v[0]) + "," + cyc_short(v[1]) + "," + cyc_short(v[2]) + ")";
}

inline std::string action_string(GroupId gid, const Rep& rep, const Cocycle* tau) {
    auto one_gen = [&](const char* name, const GroupElem& u) {
        std::string s = std::string(name) + ": " + matrix_short(rep.of(u)) + ".z";
        if (tau) {
            CycVec v = tau->of(u).coords();
            bool zero = v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
            if (!zero) s += "+" + point_short(v);
        }
        return s;
    };
    switch (gid) {
        case GroupId::Z3:
        case GroupId::Z7:
            return one_gen("g", GroupElem::make(gid, 1, 0, 0));
        case GroupId::Z3x2:
            return one_gen("h", GroupElem::make(gid, 0, 1, 0)) + " ; " +
                   one_gen("k", GroupElem::make(gid, 0, 0, 1));
        case GroupId::Heis3:
            return one_gen("g", GroupElem::make(gid, 1, 0, 0)) + " ; " +
                   one_gen("h", GroupElem::make(gid, 0, 1, 0));
    }
    return "";
}

inline std::string lattice_label_of(const Kernel& k) {
    if (k == kernel_K1()) return "Z[z3]^3";
    if (k == kernel_K2()) return "Z[z3]^3+Z(t,t,0)";
    if (k == kernel_K3()) return "Z[z3]^3+Z(t,t,t)";
    if (k == kernel_K4()) return "Z[z3]^3+Z(t,t,t)+Z(t,-t,0)";
    return "Lambda(" + k.str() + ")";
}

} // namespace detail

// the element whose powers have fixed points: the group generator for the
// cyclic cases, the central k otherwise
inline GroupElem stabilizer_generator(GroupId gid) {
    if (gid == GroupId::Z3 || gid == GroupId::Z7) return GroupElem::make(gid, 1, 0, 0);
    return GroupElem::make(gid, 0, 0, 1);
}

inline QuotientDescriptor descriptor(GroupId gid, const Lattice& lat, const Cocycle* tau) {
    Rep rep = analytic_rep(gid);
    GroupElem kgen = stabilizer_generator(gid);
    const CycMatrix& mk = rep.of(kgen);
    int m = mk.order;

    QuotientDescriptor d;
    d.gid = gid;
    d.lattice_label = (gid == GroupId::Z7) ? "Lambda(z7,z7^2,z7^4)"
                                           : detail::lattice_label_of(
                                                 lat.kernel ? *lat.kernel : kernel_K1());
    d.action = detail::action_string(gid, rep, tau);
    // the points of A fixed by <kgen> fall into free orbits of G/<kgen>
    i64 fpc = fixed_point_count(lat, mk);
    d.sing_count = fpc * m / group_order(gid);
    if (fpc * m % group_order(gid) != 0)
        throw std::logic_error("descriptor: fixed points not evenly distributed");
    d.sing_n = m;
    for (int i = 0; i < 3; ++i) {
        bool found = false;
        for (int p = 0; p < m && !found; ++p)
            if (mk.at(i, i) == CycNum::zeta(m, p)) {
                d.sing_w[i] = p;
                found = true;
            }
        if (!found) throw std::logic_error("descriptor: stabilizer generator not diagonal");
    }
    switch (gid) {
        case GroupId::Z3:
        case GroupId::Z7: d.pi1 = "{1}"; break;
        case GroupId::Z3x2: d.pi1 = "Z3"; break;
        case GroupId::Heis3: d.pi1 = "Z3^2"; break;
    }
    d.uniformized = (gid == GroupId::Z3x2 || gid == GroupId::Heis3);
    return d;
}

struct PairCertificate {
    int row_a = 0, row_b = 0; // 1-based row indices
    std::string reason;
};

struct ClassificationReport {
    std::vector<QuotientDescriptor> rows;
    std::vector<PairCertificate> pairs;
    std::vector<std::pair<std::string, i64>> counts; // deterministic order
};

namespace detail {

struct PipelineRow {
    GroupId gid;
    Kernel kernel;
    std::string key; // pinned-count key fragment, e.g. "z3x2.K2"
};

} // namespace detail

// The full pipeline: the two linear rows plus the six computed ones, with
// every intermediate count recorded.
inline ClassificationReport full_report(int jobs = 1) {
    ClassificationReport rep;
    auto count = [&](const std::string& key, i64 v) { rep.counts.push_back({key, v}); };

    count("kernels.total", (i64)kernel_enumerate().size());
    count("kernels.z3x2.orbits", (i64)kernel_orbits_z32().size());
    count("kernels.heis3.invariant", (i64)kernel_list_heis().size());

    // simply connected rows
    {
        Lattice cm = lattice_cm_zeta7();
        rep.rows.push_back(descriptor(GroupId::Z7, cm, nullptr));
        Lattice l0 = lattice_eisenstein3();
        rep.rows.push_back(descriptor(GroupId::Z3, l0, nullptr));
    }

    count("tuples.heis3.K1", (i64)enumerate_good(GroupId::Heis3, kernel_K1(), jobs).size());

    std::vector<detail::PipelineRow> pipeline = {
        {GroupId::Z3x2, kernel_K1(), "z3x2.K1"}, {GroupId::Z3x2, kernel_K2(), "z3x2.K2"},
        {GroupId::Z3x2, kernel_K3(), "z3x2.K3"}, {GroupId::Z3x2, kernel_K4(), "z3x2.K4"},
        {GroupId::Heis3, kernel_K3(), "heis3.L1"}, {GroupId::Heis3, kernel_K4(), "heis3.L2"},
    };

    bool ambient_recorded = false, heis_recorded = false;
    for (const auto& row : pipeline) {
        Lattice lat = lattice_from_kernel(row.kernel);
        auto tuples = enumerate_good(row.gid, row.kernel, jobs);
        count("tuples." + row.key, (i64)tuples.size());
        auto cocycles = distinct_cocycles(tuples, lat);
        count("cocycles." + row.key, (i64)cocycles.size());
        auto classes = cohomology_classes(cocycles, lat, row.gid);
        count("classes." + row.key, (i64)classes.size());

        std::vector<NormalizerElement> N;
        if (row.gid == GroupId::Heis3) {
            N = normalizer_heis(lat, Flavor::Complex);
            if (!heis_recorded) {
                count("normalizer.heis3.complex", (i64)N.size());
                count("normalizer.heis3.real", (i64)normalizer_heis(lat, Flavor::Real).size());
                heis_recorded = true;
            }
        } else {
            if (!ambient_recorded) {
                count("normalizer.z3x2.ambient",
                      (i64)normalizer_z32(kernel_K1(), Flavor::Complex).size());
                ambient_recorded = true;
            }
            N = normalizer_z32(row.kernel, Flavor::Complex);
        }

        auto orbits = orbit_partition(classes, N, dspace_fixed27(lat));
        count("orbits." + row.key, (i64)orbits.size());
        if (orbits.empty()) throw std::logic_error("full_report: empty orbit set");

        const Cocycle& canon = classes[orbits.front().front()].representative();
        rep.rows.push_back(descriptor(row.gid, lat, &canon));
    }
    count("report.rows", (i64)rep.rows.size());
    count("singularities.z7", rep.rows[0].sing_count);
    count("singularities.z3", rep.rows[1].sing_count);
    count("singularities.z3x2", rep.rows[2].sing_count);
    count("singularities.heis3", rep.rows[6].sing_count);

    // pairwise distinction certificates
    auto lattice_of_row = [&](int idx) -> Kernel {
        return pipeline[idx - 2].kernel; // rows 2..7 come from the pipeline
    };
    for (int i = 0; i < (int)rep.rows.size(); ++i)
        for (int j = i + 1; j < (int)rep.rows.size(); ++j) {
            PairCertificate pc;
            pc.row_a = i + 1;
            pc.row_b = j + 1;
            const auto& a = rep.rows[i];
            const auto& b = rep.rows[j];
            if (a.gid != b.gid) {
                if (a.pi1 != b.pi1)
                    pc.reason = "fundamental groups differ (" + a.pi1 + " vs " + b.pi1 + ")";
                else
                    pc.reason = "singularity data differ (" + std::to_string(a.sing_count) +
                                " vs " + std::to_string(b.sing_count) + ")";
            } else {
                Lattice la = lattice_from_kernel(lattice_of_row(i));
                Lattice lb = lattice_from_kernel(lattice_of_row(j));
                auto cert = cross_lattice_empty(la, lb, a.gid);
                if (!cert.empty)
                    throw std::logic_error("full_report: same-group rows not distinguished");
                pc.reason = "no real-linear equivalence of lattices (" + cert.method + ", " +
                            std::to_string(cert.witnesses_checked) + " candidates checked)";
            }
            rep.pairs.push_back(pc);
        }
    return rep;
}

// mismatches between computed counts and their pinned expected values
inline std::vector<std::string> validate_counts(
    const std::vector<std::pair<std::string, i64>>& counts) {
    std::vector<std::string> out;
    const auto& pinned = pinned_counts();
    for (const auto& [key, value] : counts) {
        auto it = pinned.find(key);
        if (it == pinned.end()) continue;
        if (it->second != value)
            out.push_back(key + ": expected " + std::to_string(it->second) + ", computed " +
                          std::to_string(value));
    }
    return out;
}

} // namespace cyquot
