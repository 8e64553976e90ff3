#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cyquot/torus.hpp"

using namespace cyquot;

namespace {

CycVec vec3(const CycNum& a, const CycNum& b, const CycNum& c) { return {a, b, c}; }

} // namespace

TEST_CASE("kernel enumeration") {
    auto all = all_f3_subgroups();
    CHECK(all.size() == 28);

    auto ks = kernel_enumerate();
    REQUIRE(ks.size() == 15);

    bool has_diag = false, has_unit = false;
    for (const auto& k : ks) {
        CHECK(k.contains({0, 0, 0}));
        if (k == kernel_K3()) has_diag = true;
        if (k == Kernel::from_generators({{1, 0, 0}})) has_unit = true;
        // closure under addition
        for (const auto& x : k.elements)
            for (const auto& y : k.elements) CHECK(k.contains(f3_add(x, y)));
    }
    CHECK(has_diag);
    CHECK(!has_unit);
}

TEST_CASE("lattices from kernels") {
    Lattice l0 = lattice_eisenstein3();
    CHECK(l0.index_over_eisenstein() == 1);

    Lattice l1 = lattice_from_kernel(kernel_K3());
    CHECK(l1.index_over_eisenstein() == 3);

    Lattice l2 = lattice_from_kernel(kernel_K4());
    CHECK(l2.index_over_eisenstein() == 9);

    // [Lambda_K : Z[zeta_3]^3] = |K| for every admissible kernel
    for (const auto& k : kernel_enumerate()) {
        Lattice lk = lattice_from_kernel(k);
        CHECK(lk.index_over_eisenstein() == (i64)k.size());
        // stability under coordinatewise multiplication by zeta_3
        CycMatrix zI = CycMatrix::scalar(CycNum::zeta(3));
        CHECK(matrix_of(lk, zI).has_value());
    }
}

TEST_CASE("membership") {
    Lattice l0 = lattice_eisenstein3();
    Lattice l1 = lattice_from_kernel(kernel_K3());
    CycNum t = fixed_point_t();
    CycNum zero(3);

    CHECK(member(l1, vec3(t, t, t)));
    CHECK(!member(l1, vec3(t, zero, zero)));
    CHECK(!member(l0, vec3(t, t, t)));
    CHECK(member(l0, vec3(cyc_rat(3, 1), zero, zero)));
    CHECK(member(l1, vec3(zero, zero, zero)));
}

TEST_CASE("reduce gives canonical representatives") {
    Lattice l0 = lattice_eisenstein3();
    Lattice l1 = lattice_from_kernel(kernel_K3());
    CycNum t = fixed_point_t();
    CycNum zero(3);

    CHECK(reduce(l0, vec3(cyc_rat(3, 1), zero, zero)).is_zero());
    CHECK(reduce(l1, vec3(t, t, t)).is_zero());

    TorusPoint p = reduce(l0, vec3(t, t, t));
    CHECK(!p.is_zero());
    CHECK((p + p + p).is_zero()); // 3-torsion

    // reduce(x + y) = reduce(reduce(x) + reduce(y)) on random 27-denominator vectors
    unsigned long long s = 12345;
    auto rnd = [&]() { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return (i64)((s >> 40) % 54) - 27; };
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rat> x(6), y(6), sum(6);
        for (int i = 0; i < 6; ++i) {
            x[i] = Rat(rnd(), kScale);
            y[i] = Rat(rnd(), kScale);
            sum[i] = x[i] + y[i];
        }
        CHECK(reduce(l1, sum) == reduce(l1, x) + reduce(l1, y));
        TorusPoint rx = reduce(l1, x);
        CHECK(TorusPoint{&l1, rx.n} == reduce(l1, std::vector<Rat>{Rat(rx.n[0], kScale), Rat(rx.n[1], kScale), Rat(rx.n[2], kScale), Rat(rx.n[3], kScale), Rat(rx.n[4], kScale), Rat(rx.n[5], kScale)})); // idempotent
    }
}

TEST_CASE("fixed point counts") {
    CycMatrix zI = CycMatrix::scalar(CycNum::zeta(3));
    CHECK(fixed_point_count(lattice_eisenstein3(), zI) == 27);
    CHECK(fixed_point_count(lattice_from_kernel(kernel_K3()), zI) == 27);
    CHECK(fixed_point_count(lattice_from_kernel(kernel_K4()), zI) == 27);

    // (zeta_3 - 1) * id has determinant norm(zeta_3 - 1)^3 = 27
    CycMatrix m = CycMatrix::scalar(CycNum::zeta(3) - cyc_rat(3, 1) + cyc_rat(3, 1));
    CHECK(det_int(lattice_eisenstein3(), CycMatrix::scalar(CycNum::zeta(3) - cyc_rat(3, 1))) == 27);
    CHECK(det_int(lattice_eisenstein3(), CycMatrix::identity(3)) == 1);
}

TEST_CASE("the zeta_7 CM lattice") {
    Lattice cm = lattice_cm_zeta7();
    CycMatrix m = diag(CycNum::zeta(7), CycNum::zeta(7, 2), CycNum::zeta(7, 4));
    CHECK(fixed_point_count(cm, m) == 7);
    // the matrix of multiplication by the diagonal map is the companion
    // matrix of 1 + x + ... + x^6 in this basis
    auto zmat = matrix_of(cm, m);
    REQUIRE(zmat.has_value());
    CHECK(std::abs(det_bareiss(*zmat)) == 1);
}

TEST_CASE("kernel of a torus automorphism") {
    Lattice l0 = lattice_eisenstein3();
    CycMatrix zI = CycMatrix::scalar(CycNum::zeta(3));
    auto pts = kernel_on_torus(l0, zI);
    REQUIRE(pts.size() == 27);

    // they are exactly {0, t, -t}^3
    CycNum t = fixed_point_t();
    std::set<TorusPoint> expect;
    std::array<CycNum, 3> vals{CycNum(3), t, (-reduce(l0, vec3(t, t, t))).coords()[0]};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                expect.insert(reduce(l0, vec3(vals[a], vals[b], vals[c])));
    CHECK(std::set<TorusPoint>(pts.begin(), pts.end()) == expect);

    // closure under the group operations, here and on the bigger lattices
    for (const Kernel& k : {kernel_K2(), kernel_K3(), kernel_K4()}) {
        Lattice lk = lattice_from_kernel(k);
        auto ps = kernel_on_torus(lk, zI);
        CHECK(ps.size() == 27);
        std::set<TorusPoint> set(ps.begin(), ps.end());
        for (const auto& x : ps) {
            CHECK(set.count(-x));
            for (const auto& y : ps) CHECK(set.count(x + y));
        }
    }
}

TEST_CASE("kernel lifts are fixed by zeta_3") {
    CycNum z = CycNum::zeta(3);
    for (const auto& k : kernel_enumerate())
        for (const auto& e : k.elements)
            for (int i = 0; i < 3; ++i) {
                CycNum lift = Rat(e[i]) * fixed_point_t();
                CHECK(member(lattice_eisenstein3(),
                             CycVec{z * lift - lift, CycNum(3), CycNum(3)}));
            }
}

TEST_CASE("E[3] arithmetic") {
    // e3_from_f3 matches t = (1 + 2 zeta)/3
    CHECK(e3_from_f3(1).value() == fixed_point_t());
    for (int s = 0; s < 3; ++s) {
        E3Point p = e3_from_f3(s);
        CHECK(p.zeta() == p); // lifts are fixed by zeta_3
    }
    for (const auto& p : e3_all()) {
        CHECK((p + p + p).is_zero());
        CHECK(p.zeta().zeta().zeta() == p);
        // consistency with exact arithmetic
        CycNum v = p.value();
        CycNum zv = CycNum::zeta(3) * v;
        CHECK(member(lattice_eisenstein3(), CycVec{zv - p.zeta().value(), CycNum(3), CycNum(3)}));
    }
}
