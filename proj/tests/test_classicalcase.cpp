#include "slicecert/classicalcase.hpp"

#include <doctest.h>

using namespace slicecert;

TEST_CASE("split form algebras have the right dimensions") {
    CHECK(make_so_split(5).dim() == 10);
    CHECK(make_so_split(8).dim() == 28);
    CHECK(make_sp_split(4).dim() == 10);
    CHECK(make_sp_split(6).dim() == 21);
}

TEST_CASE("Cayley samples preserve the form") {
    auto g = make_sp_split(4);
    SmallRng rng(20240801);
    for (int i = 0; i < 3; ++i) {
        RatMatrix u = g.sample_group(rng);
        CHECK(u.transpose() * g.form * u == g.form);
    }
    auto so = make_so_split(5);
    for (int i = 0; i < 3; ++i) {
        RatMatrix u = so.sample_group(rng);
        CHECK(u.transpose() * so.form * u == so.form);
    }
}

TEST_CASE("partition triples") {
    // sp6, [2,2,2]: the paper's (e,h,f) block triple has this type.
    auto t = partition_triple('C', {2, 2, 2});
    CHECK(jordan_partition(t.e) == Partition{{2, 2, 2}});
    // so7 [3,2,2]
    auto t2 = partition_triple('B', {3, 2, 2});
    CHECK(jordan_partition(t2.e) == Partition{{3, 2, 2}});
    // sp6 [4,1,1]
    auto t3 = partition_triple('C', {4, 1, 1});
    CHECK(jordan_partition(t3.e) == Partition{{4, 1, 1}});
    // invalid: odd part with odd multiplicity in sp
    CHECK_THROWS(partition_triple('C', {3, 2, 1}));
}

TEST_CASE("specialness and the surgery") {
    // C-type: [2^3] is special (transpose [3,3] is symplectic);
    // [4,1,1] is not, its special partner is [4,2].
    CHECK(special_piece_partner('C', {2, 2, 2}).empty());
    CHECK(special_piece_partner('C', {4, 1, 1}) == std::vector<int>{4, 2});
    CHECK(special_piece_partner('C', {3, 3}).empty());
    // B-type: so9 [2^4,1] -> [3,2^2,1^2]
    CHECK(special_piece_partner('B', {2, 2, 2, 2, 1}) == std::vector<int>{3, 2, 2, 1, 1});
}

TEST_CASE("classical main theorem check: sp6 special piece of [4,2]") {
    auto res = classical_main_theorem_check('C', {4, 1, 1});
    CHECK(res.lambda == std::vector<int>{4, 2});
    CHECK(res.matches);
    CHECK(res.observed == Partition{{4, 2}});
    CHECK(res.height2);
    CHECK(res.codim == 2);
    REQUIRE(res.factor_ks.size() == 1);
    CHECK(res.factor_ks[0] == 1);  // k_1 = codim/2: C^2/S_2 slice
    CHECK(res.codim == 2 * static_cast<std::size_t>(res.factor_ks[0]));
}

TEST_CASE("classical main theorem check: so9 and a degenerate case") {
    auto res = classical_main_theorem_check('B', {2, 2, 2, 2, 1});
    CHECK(res.lambda == std::vector<int>{3, 2, 2, 1, 1});
    CHECK(res.matches);
    CHECK(res.height2);
    CHECK(res.factor_ks == std::vector<int>{2});  // Sp_4 factor at s = 2
    CHECK(res.codim == 4);

    // Degenerate: nu special, trivial certificate.
    auto triv = classical_main_theorem_check('C', {2, 2, 2});
    CHECK(triv.matches);
    CHECK(triv.lambda == triv.nu);
}

TEST_CASE("a larger sp instance stays within budget") {
    // sp10: nu = [4,3,3] -> lambda = [4,4,2]
    auto res = classical_main_theorem_check('C', {4, 3, 3});
    CHECK(res.lambda == std::vector<int>{4, 4, 2});
    CHECK(res.matches);
    CHECK(res.height2);
}
