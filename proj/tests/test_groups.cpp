#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cyquot/group.hpp"
#include "cyquot/torus.hpp"

using namespace cyquot;

TEST_CASE("normal form arithmetic") {
    GroupId gid = GroupId::Heis3;
    auto g = GroupElem::make(gid, 1, 0, 0);
    auto h = GroupElem::make(gid, 0, 1, 0);
    auto k = GroupElem::make(gid, 0, 0, 1);

    // k is the commutator [g,h] and central
    CHECK(mul(mul(inverse(g), inverse(h)), mul(g, h)) == k);
    for (const auto& x : elements(gid)) CHECK(mul(k, x) == mul(x, k));

    // group axioms over the full multiplication table
    for (const auto& x : elements(gid)) {
        CHECK(mul(x, inverse(x)).is_identity());
        CHECK(mul(inverse(x), x).is_identity());
        for (const auto& y : elements(gid))
            for (const auto& z : elements(gid)) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }

    // exponent 3: nontrivial elements all have order 3
    for (const auto& x : elements(gid))
        if (!x.is_identity()) {
            CHECK(!mul(x, x).is_identity());
            CHECK(mul(mul(x, x), x).is_identity());
        }

    CHECK(elements(GroupId::Z3).size() == 3);
    CHECK(elements(GroupId::Z7).size() == 7);
    CHECK(elements(GroupId::Z3x2).size() == 9);
    CHECK(elements(gid).size() == 27);
    CHECK(GroupElem::make(gid, 1, 2, 0).str() == "g^1 h^2 k^0");
}

TEST_CASE("automorphism groups") {
    auto a9 = automorphisms(GroupId::Z3x2);
    CHECK(a9.size() == 48); // |GL(2,F_3)|

    auto a27 = automorphisms(GroupId::Heis3);
    CHECK(a27.size() == 432);

    // closure and inverses, spot-checked on a deterministic sample
    for (size_t i = 0; i < a27.size(); i += 37) {
        const auto& phi = a27[i];
        CHECK(compose(phi, invert(phi)) == identity_automorphism(GroupId::Heis3));
        const auto& psi = a27[(i * 7 + 5) % a27.size()];
        auto comp = compose(phi, psi);
        CHECK(std::binary_search(a27.begin(), a27.end(), comp));
        // automorphisms preserve the center <k>
        auto k = GroupElem::make(GroupId::Heis3, 0, 0, 1);
        GroupElem img = phi(k);
        CHECK(img.e[0] == 0);
        CHECK(img.e[1] == 0);
        CHECK(img.e[2] != 0);
    }
}

TEST_CASE("analytic representations are faithful homomorphisms") {
    for (GroupId gid : {GroupId::Z3, GroupId::Z7, GroupId::Z3x2, GroupId::Heis3}) {
        Rep rep = analytic_rep(gid);
        std::set<std::string> images;
        for (const auto& x : elements(gid)) {
            images.insert(rep.of(x).str());
            for (const auto& y : elements(gid)) CHECK(rep.of(mul(x, y)) == rep.of(x) * rep.of(y));
        }
        CHECK(images.size() == elements(gid).size());
    }
}

TEST_CASE("representation matrices act on the lattices") {
    // every Heis(3) matrix has determinant 1 on each Lambda_K and fixes
    // only finitely many torus points unless it lies in the center trivially
    Rep rep = analytic_rep(GroupId::Heis3);
    // the cyclic shift rho(g) preserves Lambda_K only for shift-invariant K
    for (const Kernel& kn : {kernel_K1(), kernel_K3(), kernel_K4()}) {
        Lattice lat = lattice_from_kernel(kn);
        for (const auto& x : elements(GroupId::Heis3)) {
            auto zm = matrix_of(lat, rep.of(x));
            REQUIRE(zm.has_value());
            CHECK(std::abs(det_bareiss(*zm)) == 1);
        }
    }
    CHECK(!matrix_of(lattice_from_kernel(kernel_K2()),
                     rep.of(GroupElem::make(GroupId::Heis3, 1, 0, 0)))
               .has_value());
    // the diagonal Z3^2 subrepresentation preserves every Lambda_K
    Rep rep9 = analytic_rep(GroupId::Z3x2);
    for (const Kernel& kn : kernel_enumerate()) {
        Lattice lat = lattice_from_kernel(kn);
        for (const auto& x : elements(GroupId::Z3x2)) {
            auto zm = matrix_of(lat, rep9.of(x));
            REQUIRE(zm.has_value());
            CHECK(std::abs(det_bareiss(*zm)) == 1);
        }
    }
    // the central generator acts as multiplication by zeta_3
    auto k = GroupElem::make(GroupId::Heis3, 0, 0, 1);
    CHECK(rep.of(k) == CycMatrix::scalar(CycNum::zeta(3)));
    // determinant 1 as complex matrices (volume preserving)
    for (const auto& x : elements(GroupId::Heis3))
        CHECK(rep.of(x).det() == cyc_rat(3, 1));
    Rep r7 = analytic_rep(GroupId::Z7);
    for (const auto& x : elements(GroupId::Z7)) CHECK(r7.of(x).det() == cyc_rat(7, 1));
}

TEST_CASE("character stabilizers") {
    auto full = char_stabilizer(GroupId::Heis3, CharKind::Full);
    auto cplx = char_stabilizer(GroupId::Heis3, CharKind::Complex);
    CHECK(full.size() == 432);
    CHECK(cplx.size() == 216);
    // complex stabilizer is an index 2 subgroup of the full one
    std::set<Automorphism> fs(full.begin(), full.end());
    for (const auto& phi : cplx) CHECK(fs.count(phi));
}
