#include <catch2/catch_amalgamated.hpp>

#include "cyquot/normalizer.hpp"

using namespace cyquot;

TEST_CASE("semilinear composition and inversion") {
    auto gens = heis_normalizer_generators(Flavor::Real);
    for (const auto& c : gens) {
        CHECK(c * c.inverse() == SemilinearMap{});
        CHECK(c.inverse() * c == SemilinearMap{});
    }
    // antilinear twice is linear
    SemilinearMap conj = gens.back();
    CHECK(conj.antilinear);
    CHECK(!(conj * conj).antilinear);
    // application matches the composition rule on a sample vector
    CycVec v{CycNum::zeta(3), fixed_point_t(), cyc_rat(3, 2, 3)};
    for (const auto& c1 : gens)
        for (const auto& c2 : gens) {
            CycVec lhs = (c1 * c2)(v);
            CycVec rhs = c1(c2(v));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("induced automorphisms") {
    Rep rep = analytic_rep(GroupId::Heis3);
    CHECK(induced_aut(SemilinearMap{}, GroupId::Heis3, rep) ==
          identity_automorphism(GroupId::Heis3));
    for (const auto& mu : eisenstein_units())
        CHECK(induced_aut(SemilinearMap{CycMatrix::scalar(mu), false}, GroupId::Heis3, rep) ==
              identity_automorphism(GroupId::Heis3));

    // pure conjugation inverts the center: conj(zeta I) = zeta^2 I
    Automorphism phi = induced_aut(SemilinearMap{CycMatrix::identity(3), true}, GroupId::Heis3, rep);
    auto k = GroupElem::make(GroupId::Heis3, 0, 0, 1);
    CHECK(phi(k) == mul(k, k));

    // a random invertible non-normalizing matrix is rejected
    CycMatrix bad = CycMatrix::identity(3);
    bad.at(0, 1) = cyc_rat(3, 1);
    CHECK_THROWS_AS(induced_aut(SemilinearMap{bad, false}, GroupId::Heis3, rep),
                    std::domain_error);
}

TEST_CASE("Heisenberg normalizers") {
    Lattice l1 = lattice_from_kernel(kernel_K3());
    Lattice l2 = lattice_from_kernel(kernel_K4());

    for (const Lattice* lat : {&l1, &l2}) {
        auto nc = normalizer_heis(*lat, Flavor::Complex);
        CHECK(nc.size() == 1296);
        auto nr = normalizer_heis(*lat, Flavor::Real);
        CHECK(nr.size() == 2592);

        // unit scalars with trivial phi are the kernel of C -> phi_C
        std::set<std::string> scalars;
        size_t trivial_phi = 0;
        std::set<std::vector<int>> phis_c, phis_r;
        for (const auto& c : nc) {
            phis_c.insert(c.phi.table);
            if (c.phi == identity_automorphism(GroupId::Heis3)) {
                ++trivial_phi;
                scalars.insert(c.map.str());
            }
        }
        CHECK(trivial_phi == 6);
        for (const auto& mu : eisenstein_units())
            CHECK(scalars.count(SemilinearMap{CycMatrix::scalar(mu), false}.str()));

        // the phi-images: 216 for the complex flavor, all 432 for real
        CHECK(phis_c.size() == 216);
        for (const auto& c : nr) phis_r.insert(c.phi.table);
        CHECK(phis_r.size() == 432);
        auto stab = char_stabilizer(GroupId::Heis3, CharKind::Complex);
        std::set<std::vector<int>> stab_tables;
        for (const auto& phi : stab) stab_tables.insert(phi.table);
        CHECK(phis_c == stab_tables);
    }
}

TEST_CASE("Z3^2 normalizers") {
    auto full = normalizer_z32(kernel_K1(), Flavor::Complex);
    CHECK(full.size() == 1296); // trivial kernel: no filtering

    // every element is monomial with unit entries
    for (const auto& c : full) {
        int nonzero = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!c.map.M.at(i, j).is_zero()) {
                    ++nonzero;
                    bool unit = false;
                    for (const auto& mu : eisenstein_units())
                        if (c.map.M.at(i, j) == mu) unit = true;
                    CHECK(unit);
                }
        CHECK(nonzero == 3);
    }

    // K3: kept elements are exactly those whose F_3^3 image fixes the line
    auto n3 = normalizer_z32(kernel_K3(), Flavor::Complex);
    for (const auto& c : n3) {
        auto img = kernel_image(c.map, kernel_K3());
        REQUIRE(img.has_value());
        CHECK(*img == kernel_K3());
    }
    CHECK(n3.size() < full.size());

    // group property: closed under composition (complex flavor, K4)
    auto n4 = normalizer_z32(kernel_K4(), Flavor::Complex);
    std::set<std::string> keys;
    for (const auto& c : n4) keys.insert(c.map.str());
    for (size_t i = 0; i < n4.size(); i += 23)
        for (size_t j = 0; j < n4.size(); j += 31)
            CHECK(keys.count((n4[i].map * n4[j].map).str()));
}

TEST_CASE("kernel orbits") {
    auto orbits = kernel_orbits_z32();
    REQUIRE(orbits.size() == 4);
    std::multiset<size_t> sizes;
    size_t total = 0;
    for (const auto& o : orbits) {
        sizes.insert(o.members.size());
        total += o.members.size();
        // representatives are genuinely in their orbit
        bool found = false;
        for (const auto& m : o.members)
            if (m == o.representative) found = true;
        CHECK(found);
    }
    CHECK(total == 15);
    CHECK(sizes == std::multiset<size_t>{1, 4, 4, 6});

    // the fixed representatives each lie in a distinct orbit
    for (const Kernel& k : {kernel_K1(), kernel_K2(), kernel_K3(), kernel_K4()}) {
        int hits = 0;
        for (const auto& o : orbits)
            for (const auto& m : o.members)
                if (m == k) ++hits;
        CHECK(hits == 1);
    }

    auto heis = kernel_list_heis();
    REQUIRE(heis.size() == 3);
    CHECK(heis[0] == kernel_K1());
    CHECK(heis[1] == kernel_K3());
    CHECK(heis[2] == kernel_K4());
}

TEST_CASE("star action") {
    Lattice l1 = lattice_from_kernel(kernel_K3());
    Rep rep = analytic_rep(GroupId::Heis3);
    auto cocycles = distinct_cocycles(enumerate_good(GroupId::Heis3, kernel_K3()), l1);
    auto nc = normalizer_heis(l1, Flavor::Complex);

    NormalizerElement id{SemilinearMap{}, identity_automorphism(GroupId::Heis3)};
    for (const auto& tau : cocycles) CHECK(star(id, tau) == tau);

    // goodness-preserving sample: the image satisfies the cocycle identity
    // and unit scalars act without leaving the good set
    for (size_t i = 0; i < nc.size(); i += 97)
        for (size_t j = 0; j < cocycles.size(); j += 11) {
            Cocycle img = star(nc[i], cocycles[j]);
            CHECK(verify_action(img, rep));
        }

    // compatibility with composition: (C1 C2) * tau = C1 * (C2 * tau)
    for (size_t i = 0; i < nc.size(); i += 131)
        for (size_t j = 0; j < nc.size(); j += 173) {
            NormalizerElement comp{nc[i].map * nc[j].map,
                                   compose(nc[i].phi, nc[j].phi)};
            for (size_t m = 0; m < cocycles.size(); m += 17)
                CHECK(star(comp, cocycles[m]) == star(nc[i], star(nc[j], cocycles[m])));
        }
}

TEST_CASE("cross-lattice emptiness") {
    Lattice l1 = lattice_from_kernel(kernel_K3());
    Lattice l2 = lattice_from_kernel(kernel_K4());
    auto cert = cross_lattice_empty(l1, l2, GroupId::Heis3);
    CHECK(cert.empty);
    auto same = cross_lattice_empty(l1, l1, GroupId::Heis3);
    CHECK(!same.empty);

    std::vector<Kernel> ks{kernel_K1(), kernel_K2(), kernel_K3(), kernel_K4()};
    for (size_t i = 0; i < ks.size(); ++i)
        for (size_t j = 0; j < ks.size(); ++j) {
            if (i == j) continue;
            Lattice a = lattice_from_kernel(ks[i]);
            Lattice b = lattice_from_kernel(ks[j]);
            auto c = cross_lattice_empty(a, b, GroupId::Z3x2);
            CHECK(c.empty);
            CHECK(c.candidate_count == 2592);
        }
}
