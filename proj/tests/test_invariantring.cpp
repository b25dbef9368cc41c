#include <fstream>
#include "slicecert/invariantring.hpp"

#include <doctest.h>

using namespace slicecert;

TEST_CASE("generator counts and degrees") {
    auto g2 = generators_sn(2, 1);
    CHECK(g2.gens.size() == 3);  // tr(x^2), tr(xy), tr(y^2)
    auto g4 = generators_sn(4, 1);
    // three generators of degree 2, four of degree 3, five of degree 4
    std::map<int, int> by_deg;
    for (const auto& g : g4.gens) by_deg[g.degree]++;
    CHECK(by_deg[2] == 3);
    CHECK(by_deg[3] == 4);
    CHECK(by_deg[4] == 5);
    CHECK(g4.gens.size() == 12);
    auto g5 = generators_sn(5, 1);
    CHECK(g5.gens.size() == 18);
    std::map<int, int> by_deg5;
    for (const auto& g : g5.gens) by_deg5[g.degree]++;
    CHECK(by_deg5[5] == 6);  // six more generators, of degree 5
}

TEST_CASE("generators are exactly S_n-invariant") {
    for (int n : {2, 3, 4, 5}) {
        auto g = generators_sn(n, 1);
        CHECK(g.invariance_check());
    }
    auto g22 = generators_sn(2, 2);
    CHECK(g22.invariance_check());
}

TEST_CASE("n=2: the single relation") {
    auto g = generators_sn(2, 1);
    auto rb = relations_up_to_degree(g, 4);
    auto counts = rb.degree_counts();
    REQUIRE(counts.size() == 1);
    CHECK(counts[4] == 1);
    CHECK(rb.total_new() == 1);
    // g20 g02 - g11^2 is the relation (generator order: g02, g11, g20).
    int i02 = rb.gen_ring->var_index("g02");
    int i11 = rb.gen_ring->var_index("g11");
    int i20 = rb.gen_ring->var_index("g20");
    REQUIRE(i02 >= 0);
    Poly cand = Poly::variable(rb.gen_ring, i20) * Poly::variable(rb.gen_ring, i02) -
                Poly::variable(rb.gen_ring, i11) * Poly::variable(rb.gen_ring, i11);
    CHECK(rb.contains(cand));
    // And a non-relation is rejected.
    CHECK_FALSE(rb.contains(Poly::variable(rb.gen_ring, i20) * Poly::variable(rb.gen_ring, i02)));
    CHECK(conjecture_check(2, rb).match);
}

TEST_CASE("n=3: five relations, conjecture matches") {
    auto g = generators_sn(3, 1);
    auto rb = relations_up_to_degree(g, 6);
    auto counts = rb.degree_counts();
    CHECK(rb.total_new() == 5);
    CHECK(counts[5] == 2);
    CHECK(counts[6] == 3);
    auto rep = conjecture_check(3, rb);
    CHECK(rep.match);
    CHECK(rep.total_predicted == 5);
}

TEST_CASE("n=4: fifteen relations with degree counts (6:3, 7:6, 8:6)") {
    auto g = generators_sn(4, 1);
    auto rb = relations_up_to_degree(g, 8);
    auto counts = rb.degree_counts();
    CHECK(counts[6] == 3);
    CHECK(counts[7] == 6);
    CHECK(counts[8] == 6);
    CHECK(rb.total_new() == 15);
    CHECK(conjecture_check(4, rb).match);

    // Determinism across seeds: the mathematical counts do not move.
    auto rb2 = relations_up_to_degree(g, 8, 987654321);
    CHECK(rb2.degree_counts() == counts);
    auto rb3 = relations_up_to_degree(g, 8, 31337);
    CHECK(rb3.degree_counts() == counts);
}

TEST_CASE("relation export is stable") {
    auto g = generators_sn(3, 1);
    auto rb = relations_up_to_degree(g, 6);
    rb.save("rel3.txt");
    auto rb2 = relations_up_to_degree(g, 6);
    rb2.save("rel3b.txt");
    std::ifstream a("rel3.txt"), b("rel3b.txt");
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(!sa.empty());
    std::remove("rel3.txt");
    std::remove("rel3b.txt");
}

TEST_CASE("conjecture counts table") {
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(7, 4) == 35);
    CHECK(binomial(8, 4) == 70);
    auto c6 = conjecture_counts(6);
    CHECK(c6[8] == 5);
    CHECK(c6[9] == 12);
    CHECK(c6[10] == 18);
    CHECK(c6[11] == 20);
    CHECK(c6[12] == 15);
}
