#include "slicecert/nilorbit.hpp"

#include <doctest.h>

#include <cstdio>

using namespace slicecert;

TEST_CASE("sl2_complete on sl2 itself") {
    auto L = build_chevalley('A', 1);
    LieVec e = L.basis_vector(L.e_index(0));
    LieVec h = L.basis_vector(L.h_index(0));
    auto t = sl2_complete(L, e, h);
    CHECK(t.f == L.basis_vector(L.f_index(0)));
    CHECK(t.valid(L));
}

TEST_CASE("G2 highest-root triple completes to f = f_{hat alpha}") {
    auto L = build_chevalley('G', 2);
    auto top = L.rs.highest_root();
    auto t = sl2_complete(L, L.e_alpha(top), L.coroot(top));
    RootVec neg{-top[0], -top[1]};
    CHECK(t.f == L.e_alpha(neg));
}

TEST_CASE("slice of the regular nilpotent in sl2") {
    auto L = build_chevalley('A', 1);
    auto t = sl2_complete(L, L.basis_vector(L.e_index(0)), L.basis_vector(L.h_index(0)));
    auto s = slodowy_slice(L, t);
    REQUIRE(s.centralizer_basis.size() == 1);
    CHECK(s.weights == std::vector<int>{2});
    CHECK(s.gm_weights == std::vector<int>{4});
}

TEST_CASE("cocharacter from weighted diagram") {
    auto L = build_chevalley('E', 8);
    LieVec zero = cocharacter_from_weighted_diagram(L, {0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(zero == L.zero());
    // E8(a7): labels (0,0,0,0,2,0,0,0), largest ad eigenvalue 10.
    std::vector<int> a7{0, 0, 0, 0, 2, 0, 0, 0};
    CHECK(max_ad_eigenvalue(L, a7) == 10);
    LieVec h = cocharacter_from_weighted_diagram(L, a7);
    CHECK(weighted_diagram_of(L, h) == a7);
    // Largest eigenvalue realized on the highest root vector.
    Rat v = L.root_eval_on_cartan(L.rs.highest_root(), h);
    CHECK(v == Rat(10));
}

TEST_CASE("jordan partitions") {
    RatMatrix z(4, 4);
    CHECK(jordan_partition(z) == Partition{{1, 1, 1, 1}});
    RatMatrix j(3, 3);
    j.at(0, 1) = Rat(1);
    j.at(1, 2) = Rat(1);
    CHECK(jordan_partition(j) == Partition{{3}});
    // N_{s,t} at (s,t) = (1,1): rank-1 square-zero 3x3.
    RatMatrix n(3, 3);
    n.at(0, 0) = Rat(1);
    n.at(0, 1) = Rat(1);
    n.at(1, 0) = Rat(-1);
    n.at(1, 1) = Rat(-1);
    CHECK(jordan_partition(n) == Partition{{2, 1}});
    RatMatrix notnil = RatMatrix::identity(2);
    CHECK_THROWS(jordan_partition(notnil));
}

TEST_CASE("jordan partition is conjugation invariant (Cayley samples)") {
    SmallRng rng(20240801);
    for (int trial = 0; trial < 5; ++trial) {
        // Nilpotent: strictly upper triangular random 4x4.
        RatMatrix n(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) n.at(i, j) = rng.small_rat();
        // Cayley transform of a random antisymmetric matrix.
        RatMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Rat v = rng.small_rat();
                a.at(i, j) = v;
                a.at(j, i) = -v;
            }
        // g = (I - A)(I + A)^{-1}: solve (I + A) X = (I - A).
        RatMatrix ipa = RatMatrix::identity(4) + a;
        RatMatrix ima = RatMatrix::identity(4) - a;
        RatMatrix ginv(4, 4), g(4, 4);
        for (int col = 0; col < 4; ++col) {
            RatVec rhs(4);
            for (int i = 0; i < 4; ++i) rhs[i] = ima.at(i, col);
            auto x = ipa.solve(rhs);
            REQUIRE(x.has_value());
            for (int i = 0; i < 4; ++i) g.at(i, col) = (*x)[i];
        }
        // g^{-1} likewise: (I - A) Y = (I + A).
        for (int col = 0; col < 4; ++col) {
            RatVec rhs(4);
            for (int i = 0; i < 4; ++i) rhs[i] = ipa.at(i, col);
            auto x = ima.solve(rhs);
            REQUIRE(x.has_value());
            for (int i = 0; i < 4; ++i) ginv.at(i, col) = (*x)[i];
        }
        CHECK(jordan_partition(n) == jordan_partition(g * n * ginv));
    }
}

TEST_CASE("orbit catalog: generation, validation, round trip") {
    auto cat = OrbitCatalog::generate();

    auto dim_of = [&](const char* alg, const char* label) {
        const auto* r = cat.find(alg, label);
        REQUIRE(r != nullptr);
        return r->dimension;
    };
    CHECK(dim_of("G2", "A1") == 6);
    CHECK(dim_of("G2", "~A1") == 8);
    CHECK(dim_of("G2", "G2(a1)") == 10);
    CHECK(dim_of("F4", "A2") == 30);
    CHECK(dim_of("F4", "A2+~A1") == 34);
    CHECK(dim_of("F4", "F4(a3)") == 40);
    CHECK(dim_of("E7", "A3+A2+A1") == 100);
    CHECK(dim_of("E7", "A4+A1") == 104);
    CHECK(dim_of("E8", "2A2") == 156);
    CHECK(dim_of("E8", "2A2+2A1") == 168);
    CHECK(dim_of("E8", "D4(a1)+A1") == 176);
    CHECK(dim_of("E8", "A4+A3") == 200);
    CHECK(dim_of("E8", "E8(a7)") == 208);
    CHECK(dim_of("E8", "E8(b6)") == 220);
    CHECK(dim_of("E8", "E8(a6)") == 224);

    // Slice dimension sanity from the paper: codim checks.
    CHECK(dim_of("E8", "E8(a6)") - dim_of("E8", "E8(b6)") == 4);
    CHECK(dim_of("E8", "D4(a1)+A1") - dim_of("E8", "2A2+2A1") == 8);
    CHECK(dim_of("F4", "F4(a3)") - dim_of("F4", "A2+~A1") == 6);
    CHECK(dim_of("F4", "F4(a3)") - dim_of("F4", "A2") == 10);
    CHECK(dim_of("E7", "A4+A1") - dim_of("E7", "A3+A2+A1") == 4);
    CHECK(dim_of("E8", "E8(a7)") - dim_of("E8", "A4+A3") == 8);

    std::string path = "orbits_test.txt";
    cat.save(path);
    auto cat2 = OrbitCatalog::load(path);
    REQUIRE(cat2.records().size() == cat.records().size());
    for (std::size_t i = 0; i < cat.records().size(); ++i) {
        CHECK(cat.records()[i].label == cat2.records()[i].label);
        CHECK(cat.records()[i].dimension == cat2.records()[i].dimension);
        CHECK(cat.records()[i].weighted_dynkin == cat2.records()[i].weighted_dynkin);
        CHECK(cat.records()[i].standard_rep == cat2.records()[i].standard_rep);
        CHECK(cat.records()[i].criteria.size() == cat2.records()[i].criteria.size());
    }
    std::remove(path.c_str());
}

TEST_CASE("validation catches bad records, and G2/F4 records validate") {
    auto cat = OrbitCatalog::generate();
    auto g2 = build_chevalley('G', 2);
    ActionContext ctx{&g2, {}};
    for (const auto& rec : cat.records())
        if (rec.algebra == "G2") OrbitCatalog::validate(rec, g2, ctx);
    // Tampered dimension must be caught.
    OrbitRecord bad = *cat.find("G2", "A1");
    bad.dimension = 8;
    CHECK_THROWS(OrbitCatalog::validate(bad, g2, ctx));
}

TEST_CASE("E8 closure criteria: x = 0 passes, D5+A1 rep fails E8(a7)") {
    auto cat = OrbitCatalog::generate();
    auto e8 = build_chevalley('E', 8);
    ActionContext ctx{&e8, {}};
    const auto* a7 = cat.find("E8", "E8(a7)");
    REQUIRE(a7 != nullptr);
    CHECK(in_closure(ctx, e8.zero(), a7->criteria));
    CHECK(in_closure(ctx, a7->rep_vector(e8), a7->criteria));
    const auto* d5a1 = cat.find("E8", "D5+A1");
    CHECK_FALSE(in_closure(ctx, d5a1->rep_vector(e8), a7->criteria));
    const auto* a6 = cat.find("E8", "A6");
    CHECK_FALSE(in_closure(ctx, a6->rep_vector(e8), a7->criteria));
    // Nilpotency orders 15 and 13 (the paper prints these as "eigenvalues").
    CHECK(max_ad_eigenvalue(e8, d5a1->weighted_dynkin) + 1 == 15);
    CHECK(max_ad_eigenvalue(e8, a6->weighted_dynkin) + 1 == 13);
}

TEST_CASE("slodowy slices: F4 A2+~A1 has an 18-dim centralizer") {
    auto f4 = build_chevalley('F', 4);
    auto cat = OrbitCatalog::generate();
    auto t = standard_triple(f4, *cat.find("F4", "A2+~A1"));
    auto s = slodowy_slice(f4, t);
    CHECK(s.centralizer_basis.size() == 18);
    for (std::size_t i = 0; i < s.centralizer_basis.size(); ++i) {
        // [e, v] = 0 and v is an ad(h)-eigenvector with the stated weight.
        const auto& v = s.centralizer_basis[i];
        LieVec ev = f4.bracket(t.e, v);
        for (const auto& c : ev) CHECK(c.is_zero());
        LieVec hv = f4.bracket(t.h, v);
        LieVec wv = v;
        for (auto& c : wv) c *= Rat(s.weights[i]);
        CHECK(hv == wv);
        CHECK(s.gm_weights[i] == s.weights[i] + 2);
    }
}
