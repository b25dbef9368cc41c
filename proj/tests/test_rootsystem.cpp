#include "slicecert/rootsystem.hpp"

#include <doctest.h>

#include <map>

using namespace slicecert;

TEST_CASE("root counts match the classical numbers") {
    std::map<std::string, int> expect{
        {"A1", 2},  {"A4", 20},  {"B3", 18},  {"C4", 32},  {"D4", 24},
        {"G2", 12}, {"F4", 48},  {"E6", 72},  {"E7", 126}, {"E8", 240},
    };
    for (const auto& [name, count] : expect) {
        auto rs = build_root_system(name[0], name[1] - '0');
        CHECK(rs.n_roots() == count);
    }
}

TEST_CASE("G2 and A1 basics") {
    auto g2 = build_root_system('G', 2);
    CHECK(g2.n_roots() == 12);
    CHECK(g2.highest_root() == RootVec{3, 2});
    auto a1 = build_root_system('A', 1);
    CHECK(a1.positives == std::vector<RootVec>{{1}});
}

TEST_CASE("highest roots: F4 and E8") {
    auto f4 = build_root_system('F', 4);
    CHECK(f4.highest_root() == RootVec{2, 3, 4, 2});
    CHECK(RootSystem::height(f4.highest_root()) == 11);
    auto e8 = build_root_system('E', 8);
    CHECK(e8.positives.size() == 120);
    // Coefficient 5 on the fifth simple root.
    CHECK(e8.highest_root()[4] == 5);
    CHECK(e8.highest_root() == RootVec{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("closure under negation and simple reflections") {
    for (const char* name : {"G2", "F4", "D4", "B3", "C3", "A3", "E6"}) {
        auto rs = build_root_system(name[0], name[1] - '0');
        for (const auto& a : rs.positives) {
            RootVec na(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
            CHECK(rs.is_root(na));
            for (int i = 0; i < rs.rank; ++i) CHECK(rs.is_root(rs.reflect_simple(i, a)));
        }
    }
}

TEST_CASE("Coxeter number table: height of highest root + 1") {
    std::map<std::string, int> cox{{"G2", 6}, {"F4", 12}, {"E6", 12}, {"E7", 18}, {"E8", 30}};
    for (const auto& [name, h] : cox) {
        auto rs = build_root_system(name[0], name[1] - '0');
        CHECK(RootSystem::height(rs.highest_root()) + 1 == h);
    }
}

TEST_CASE("root order is stable across rebuilds") {
    auto a = build_root_system('E', 6);
    auto b = build_root_system('E', 6);
    CHECK(a.positives == b.positives);
}

TEST_CASE("coroot coordinates are integral and pair to 2") {
    for (const char* name : {"G2", "F4", "B4", "C3", "E7"}) {
        auto rs = build_root_system(name[0], name[1] - '0');
        for (const auto& a : rs.positives) {
            auto cc = rs.coroot_coords(a);
            // <alpha, alpha^vee> = 2
            long v = 0;
            for (int i = 0; i < rs.rank; ++i) v += static_cast<long>(cc[i]) * rs.pair_coroot(a, i);
            CHECK(v == 2);
        }
    }
}
