#include "slicecert/chevalley.hpp"

#include <doctest.h>

#include <cstdio>

using namespace slicecert;

TEST_CASE("A1 is the standard sl2") {
    auto L = build_chevalley('A', 1);
    CHECK(L.dim() == 3);
    LieVec e = L.basis_vector(L.e_index(0));
    LieVec f = L.basis_vector(L.f_index(0));
    LieVec h = L.basis_vector(L.h_index(0));
    CHECK(L.bracket(h, e) == [&] { LieVec v = e; for (auto& c : v) c *= Rat(2); return v; }());
    CHECK(L.bracket(h, f) == [&] { LieVec v = f; for (auto& c : v) c *= Rat(-2); return v; }());
    CHECK(L.bracket(e, f) == h);
}

TEST_CASE("structure constants: |N| = p+1 and N_{-a,-b} = -N_{a,b}") {
    for (const char* name : {"G2", "F4", "B3", "C3", "D4", "A3"}) {
        auto L = build_chevalley(name[0], name[1] - '0');
        const auto& rs = L.rs;
        for (int a = 0; a < rs.n_pos(); ++a)
            for (int b = 0; b < rs.n_pos(); ++b) {
                if (a == b) continue;
                RootVec s(rs.rank);
                for (int i = 0; i < rs.rank; ++i) s[i] = rs.positives[a][i] + rs.positives[b][i];
                auto lu = rs.lookup(s);
                if (!lu.found) continue;
                int n = L.n_const(a, b);
                int p = rs.string_down(rs.positives[a], rs.positives[b]);
                CHECK(std::abs(n) == p + 1);
                // f-side bracket carries the opposite constant
                LieVec fa = L.basis_vector(L.f_index(a));
                LieVec fb = L.basis_vector(L.f_index(b));
                LieVec bf = L.bracket(fa, fb);
                CHECK(bf[L.f_index(lu.index)] == Rat(-n));
            }
    }
}

TEST_CASE("G2: dim 14 and [e1,e2] has |N| = 1") {
    auto L = build_chevalley('G', 2);
    CHECK(L.dim() == 14);
    LieVec e1 = L.e_alpha({1, 0});
    LieVec e2 = L.e_alpha({0, 1});
    LieVec b = L.bracket(e1, e2);
    auto lu = L.rs.lookup({1, 1});
    REQUIRE(lu.found);
    CHECK(b[L.e_index(lu.index)].abs() == Rat(1));
}

TEST_CASE("Jacobi identity on random triples") {
    for (const char* name : {"G2", "F4", "B3", "D4"}) {
        auto L = build_chevalley(name[0], name[1] - '0');
        CHECK(jacobi_spot_check(L, 20240801, 1000));
    }
}

TEST_CASE("antisymmetry of the full table") {
    auto L = build_chevalley('F', 4);
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            auto t1 = L.table(i, j);
            auto t2 = L.table(j, i);
            REQUIRE(t1.size() == t2.size());
            for (std::size_t k = 0; k < t1.size(); ++k) {
                CHECK(t1[k].first == t2[k].first);
                CHECK(t1[k].second == -t2[k].second);
            }
        }
}

TEST_CASE("Killing form: nondegenerate and ad-invariant") {
    auto L = build_chevalley('G', 2);
    auto gram = L.killing_gram();
    CHECK(gram.rank() == 14);
    SmallRng rng(11);
    for (int t = 0; t < 10; ++t) {
        LieVec x(L.dim()), y(L.dim()), z(L.dim());
        for (int i = 0; i < L.dim(); ++i) {
            if (rng.below(2)) x[i] = rng.small_rat();
            if (rng.below(2)) y[i] = rng.small_rat();
            if (rng.below(2)) z[i] = rng.small_rat();
        }
        auto kappa = [&](const LieVec& a, const LieVec& b) {
            Rat v;
            for (int i = 0; i < L.dim(); ++i)
                for (int j = 0; j < L.dim(); ++j)
                    if (!a[i].is_zero() && !b[j].is_zero()) v += a[i] * b[j] * gram.at(i, j);
            return v;
        };
        Rat lhs = kappa(L.bracket(x, y), z) + kappa(y, L.bracket(x, z));
        CHECK(lhs.is_zero());
    }
}

TEST_CASE("cache round trip is bit-exact") {
    auto L = build_chevalley('G', 2);
    std::string path = "g2_cache_test.txt";
    save_chevalley_cache(L, path);
    auto L2 = load_chevalley_cache(path, L.convention_hash);
    REQUIRE(L2.has_value());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) CHECK(L.table(i, j) == L2->table(i, j));
    // Mismatched hash is rejected.
    CHECK_FALSE(load_chevalley_cache(path, "deadbeefdeadbeef").has_value());
    std::remove(path.c_str());
}

TEST_CASE("identity diagram automorphism") {
    auto L = build_chevalley('A', 2);
    auto phi = diagram_automorphism(L, {0, 1}, {Rat(1), Rat(1)});
    CHECK(phi.matrix == RatMatrix::identity(L.dim()));
}

TEST_CASE("E6 graph involution fixes an F4") {
    auto e6 = build_chevalley('E', 6);
    // Bourbaki E6: involution swaps 1<->6, 3<->5.
    std::vector<int> perm{5, 1, 4, 3, 2, 0};
    std::vector<Rat> twist(6, Rat(1));
    auto phi = diagram_automorphism(e6, perm, twist);
    auto fixed = fixed_subalgebra_basis(e6, {phi});
    CHECK(fixed.size() == 52);
    auto comps = identify_semisimple(e6, fixed);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].algebra.rs.name() == "F4");
    CHECK(comps[0].embedding.matrix.rank() == 52);
}

TEST_CASE("D4 triality fixes a G2 and the complement splits as 7+7") {
    auto d4 = build_chevalley('D', 4);
    // Triality: 1 -> 3 -> 4 -> 1 (Bourbaki nodes), fixing node 2.
    std::vector<int> perm{2, 1, 3, 0};
    std::vector<Rat> twist(4, Rat(1));
    auto sigma = diagram_automorphism(d4, perm, twist);
    // Order 3.
    RatMatrix third = sigma.matrix * sigma.matrix * sigma.matrix;
    CHECK(third == RatMatrix::identity(d4.dim()));
    auto fixed = fixed_subalgebra_basis(d4, {sigma});
    CHECK(fixed.size() == 14);
    auto comps = identify_semisimple(d4, fixed);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].algebra.rs.name() == "G2");
}

TEST_CASE("F4 inside E6: the 26-dimensional module") {
    auto e6 = build_chevalley('E', 6);
    std::vector<int> perm{5, 1, 4, 3, 2, 0};
    auto phi = diagram_automorphism(e6, perm, std::vector<Rat>(6, Rat(1)));
    auto fixed = fixed_subalgebra_basis(e6, {phi});
    auto comps = identify_semisimple(e6, fixed);
    REQUIRE(comps.size() == 1);
    const auto& f4 = comps[0].algebra;
    auto mod = isotypic_module(e6, f4, comps[0].embedding, {phi}, {Rat(-1)});
    CHECK(mod.dimension == 26);
    CHECK(mod.representation_identity(f4));
}

TEST_CASE("trivial isotypic module: +1 eigenspace of identity is adjoint") {
    auto a2 = build_chevalley('A', 2);
    auto id = diagram_automorphism(a2, {0, 1}, {Rat(1), Rat(1)});
    LieMap emb{RatMatrix::identity(a2.dim())};
    auto mod = isotypic_module(a2, a2, emb, {id}, {Rat(1)});
    CHECK(mod.dimension == a2.dim());
    CHECK(mod.representation_identity(a2));
}
