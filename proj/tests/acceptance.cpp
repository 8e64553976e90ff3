// Acceptance gate: one pass/fail line per top-level criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>

#include "cyquot/classify.hpp"

using namespace cyquot;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ("
              << (int)(seconds * 1000) << " ms)\n";
    if (!ok) ++failures;
}

template <typename F> double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool check(bool condition, const std::string& detail) {
    if (!condition) std::cout << "      failed: " << detail << "\n";
    return condition;
}

} // namespace

int main() {
    // 1. kernel enumeration: 15 subgroups, 4 orbits with the fixed
    //    representatives, 3 shift-invariant kernels
    {
        bool ok = true;
        double s = timed([&] {
            auto ks = kernel_enumerate();
            ok &= check(ks.size() == 15, "kernel count");
            auto orbits = kernel_orbits_z32();
            ok &= check(orbits.size() == 4, "orbit count");
            std::multiset<size_t> sizes;
            size_t total = 0;
            for (const auto& o : orbits) {
                sizes.insert(o.members.size());
                total += o.members.size();
            }
            ok &= check(total == 15, "orbits cover all kernels");
            ok &= check(sizes == std::multiset<size_t>{1, 4, 4, 6}, "orbit sizes");
            for (const Kernel& k : {kernel_K1(), kernel_K2(), kernel_K3(), kernel_K4()}) {
                int hits = 0;
                for (const auto& o : orbits)
                    for (const auto& m : o.members)
                        if (m == k) ++hits;
                ok &= check(hits == 1, "representative lies in exactly one orbit");
            }
            auto heis = kernel_list_heis();
            ok &= check(heis.size() == 3, "shift-invariant kernel count");
            ok &= check(heis[0] == kernel_K1() && heis[1] == kernel_K3() &&
                            heis[2] == kernel_K4(),
                        "shift-invariant kernels");
        });
        criterion(1, "kernel enumeration and orbits", ok, s);
    }

    // 2. good-tuple counts
    {
        bool ok = true;
        double s = timed([&] {
            ok &= check(enumerate_good(GroupId::Heis3, kernel_K3()).size() == 486, "Heis L1");
            ok &= check(enumerate_good(GroupId::Heis3, kernel_K4()).size() == 1458, "Heis L2");
            ok &= check(enumerate_good(GroupId::Heis3, kernel_K1()).empty(), "Heis trivial");
            i64 expect[4] = {8, 36, 54, 54};
            Kernel ks[4] = {kernel_K1(), kernel_K2(), kernel_K3(), kernel_K4()};
            for (int i = 0; i < 4; ++i)
                ok &= check((i64)enumerate_good(GroupId::Z3x2, ks[i]).size() == expect[i],
                            "Z3^2 K" + std::to_string(i + 1));
        });
        criterion(2, "good tuple counts", ok, s);
    }

    // 3. cohomology class counts
    {
        bool ok = true;
        double s = timed([&] {
            struct Case { GroupId gid; Kernel k; size_t n; };
            Case cases[] = {{GroupId::Heis3, kernel_K3(), 6}, {GroupId::Heis3, kernel_K4(), 6},
                            {GroupId::Z3x2, kernel_K1(), 8},  {GroupId::Z3x2, kernel_K2(), 4},
                            {GroupId::Z3x2, kernel_K3(), 6},  {GroupId::Z3x2, kernel_K4(), 2}};
            for (const auto& c : cases) {
                Lattice lat = lattice_from_kernel(c.k);
                auto classes = cohomology_classes(
                    distinct_cocycles(enumerate_good(c.gid, c.k), lat), lat, c.gid);
                ok &= check(classes.size() == c.n, group_name(c.gid) + " class count");
            }
        });
        criterion(3, "cohomology class counts", ok, s);
    }

    // 4. normalizer orders
    {
        bool ok = true;
        double s = timed([&] {
            for (const Kernel& k : {kernel_K3(), kernel_K4()}) {
                Lattice lat = lattice_from_kernel(k);
                ok &= check(normalizer_heis(lat, Flavor::Complex).size() == 1296, "N_C order");
                ok &= check(normalizer_heis(lat, Flavor::Real).size() == 2592, "N_R order");
            }
            ok &= check(normalizer_z32(kernel_K1(), Flavor::Complex).size() == 1296,
                        "ambient monomial normalizer");
            size_t filtered_first = normalizer_z32(kernel_K3(), Flavor::Complex).size();
            ok &= check(filtered_first == normalizer_z32(kernel_K3(), Flavor::Complex).size(),
                        "filter determinism");
        });
        criterion(4, "normalizer orders", ok, s);
    }

    // 5. orbit classification and the eight-row report
    {
        bool ok = true;
        double s = timed([&] {
            auto report = full_report();
            ok &= check(report.rows.size() == 8, "row count");
            auto mism = validate_counts(report.counts);
            for (const auto& m : mism) std::cout << "      " << m << "\n";
            ok &= check(mism.empty(), "pinned counts");
            std::vector<i64> sing;
            std::vector<std::string> pi1;
            for (const auto& r : report.rows) {
                sing.push_back(r.sing_count);
                pi1.push_back(r.pi1);
            }
            ok &= check(sing == std::vector<i64>{7, 27, 9, 9, 9, 9, 3, 3}, "singularity counts");
            ok &= check(report.rows[0].sing_n == 7 &&
                            report.rows[0].sing_w == std::array<int, 3>{1, 2, 4},
                        "1/7(1,2,4) type");
            for (int i = 1; i < 8; ++i)
                ok &= check(report.rows[i].sing_n == 3 &&
                                report.rows[i].sing_w == std::array<int, 3>{1, 1, 1},
                            "1/3(1,1,1) type");
            ok &= check(pi1 == std::vector<std::string>{"{1}", "{1}", "Z3", "Z3", "Z3", "Z3",
                                                        "Z3^2", "Z3^2"},
                        "fundamental groups");
            ok &= check(report.pairs.size() == 28, "pairwise certificates");
        });
        criterion(5, "orbit classification and final table", ok, s);
    }

    // 6. property suites
    {
        bool ok = true;
        double s = timed([&] {
            struct Case { GroupId gid; Kernel k; };
            Case cases[] = {{GroupId::Heis3, kernel_K3()}, {GroupId::Heis3, kernel_K4()},
                            {GroupId::Z3x2, kernel_K1()},  {GroupId::Z3x2, kernel_K2()},
                            {GroupId::Z3x2, kernel_K3()},  {GroupId::Z3x2, kernel_K4()}};
            // cocycle condition for 100% of good cocycles
            for (const auto& c : cases) {
                Lattice lat = lattice_from_kernel(c.k);
                Rep rep = analytic_rep(c.gid);
                auto cs = distinct_cocycles(enumerate_good(c.gid, c.k), lat);
                for (const auto& tau : cs)
                    if (!verify_action(tau, rep)) {
                        ok &= check(false, "cocycle condition");
                        break;
                    }
            }
            // *-action group law on one full lattice, all pairs against the
            // good classes
            {
                Lattice lat = lattice_from_kernel(kernel_K2());
                auto cs = distinct_cocycles(enumerate_good(GroupId::Z3x2, kernel_K2()), lat);
                auto classes = cohomology_classes(cs, lat, GroupId::Z3x2);
                auto N = normalizer_z32(kernel_K2(), Flavor::Complex);
                auto label_of = [&](const Cocycle& c) {
                    Rep rep = analytic_rep(GroupId::Z3x2);
                    std::string best;
                    for (const auto& d : dspace_fixed27(lat)) {
                        Cocycle cb = coboundary(d, GroupId::Z3x2, rep);
                        Cocycle sh = c;
                        for (size_t i = 0; i < c.values.size(); ++i)
                            sh.values[i] = c.values[i] + cb.values[i];
                        std::string sstr = sh.str();
                        if (best.empty() || sstr < best) best = sstr;
                    }
                    return best;
                };
                for (size_t i = 0; i < N.size() && ok; i += 11)
                    for (size_t j = 0; j < N.size() && ok; j += 13) {
                        NormalizerElement comp{N[i].map * N[j].map, compose(N[i].phi, N[j].phi)};
                        for (const auto& cl : classes) {
                            const Cocycle& tau = cl.representative();
                            ok &= check(label_of(star(comp, tau)) ==
                                            label_of(star(N[i], star(N[j], tau))),
                                        "star action group law on classes");
                            if (!ok) break;
                        }
                    }
            }
            // determinant route vs explicit enumeration on all six lattices
            for (const auto& c : cases) {
                Lattice lat = lattice_from_kernel(c.k);
                Rep rep = analytic_rep(c.gid);
                for (const auto& u : elements(c.gid)) {
                    if (u.is_identity()) continue;
                    if ((rep.of(u) - CycMatrix::identity(3)).det().is_zero()) continue;
                    ok &= check((i64)kernel_on_torus(lat, rep.of(u)).size() ==
                                    fixed_point_count(lat, rep.of(u)),
                                "fixed point count routes");
                }
            }
            // dual d-search: identical verdicts on the Z3^2 representatives
            for (const Kernel& k : {kernel_K1(), kernel_K2(), kernel_K3(), kernel_K4()}) {
                Lattice lat = lattice_from_kernel(k);
                auto cs = distinct_cocycles(enumerate_good(GroupId::Z3x2, k), lat);
                auto classes = cohomology_classes(cs, lat, GroupId::Z3x2);
                auto N = normalizer_z32(k, Flavor::Complex);
                auto fast = orbit_partition(classes, N, dspace_fixed27(lat));
                auto slow = orbit_partition(classes, N, dspace_from_nine_torsion(lat));
                ok &= check(fast == slow, "dual translation search verdicts");
                ok &= check(dspace_fixed27(lat) == dspace_from_nine_torsion(lat),
                            "9-torsion scan recovers the 27 points");
            }
        });
        criterion(6, "property suites", ok, s);
    }

    std::cout << "note: rigidity, Hodge-theoretic resolution data and the uniformization "
                 "arguments are covered only through the consistency checks above.\n";

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
