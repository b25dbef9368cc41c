#include "slicecert/matrix.hpp"
#include "slicecert/modp.hpp"
#include "slicecert/poly.hpp"
#include "slicecert/rational.hpp"

#include <doctest.h>

using namespace slicecert;

TEST_CASE("rationals are always reduced with positive denominator") {
    Rat a(3, 6);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rat b(4, -8);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    Rat c = a + b;
    CHECK(c.is_zero());
    CHECK(Rat("-2/7").str() == "-2/7");
    CHECK((Rat(1, 3) * Rat(3, 5)).str() == "1/5");
    CHECK(Rat(7, 3).inv() == Rat(3, 7));

    SmallRng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat x = rng.small_rat(), y = rng.small_rat();
        Rat s = x + y;
        Int g;
        mpz_gcd(g.get_mpz_t(), s.num().get_mpz_t(), s.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(s.den() > 0);
    }
}

TEST_CASE("rank: identity and zero") {
    CHECK(RatMatrix::identity(3).rank() == 3);
    RatMatrix z(5, 7);
    CHECK(z.rank() == 0);
    CHECK(z.kernel_basis().size() == 7);
}

TEST_CASE("kernel of (1 -1) and normal form") {
    RatMatrix m(1, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(-1);
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == Rat(1));
    CHECK(k[0][1] == Rat(1));
    // Idempotent normalization.
    auto k2 = rref_normalize(k);
    CHECK(k2 == k);
}

TEST_CASE("identity kernel empty") {
    CHECK(RatMatrix::identity(4).kernel_basis().empty());
}

TEST_CASE("rank-nullity and invariance under row scaling (random)") {
    SmallRng rng(20240801);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 2 + rng.below(4), c = 2 + rng.below(5);
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng.below(3)) m.at(i, j) = rng.small_rat();
        auto rank = m.rank();
        CHECK(rank + m.kernel_basis().size() == c);

        // Scale a row by a nonzero rational, permute rows: rank unchanged.
        RatMatrix m2 = m;
        Rat s(rng.nonzero(5), rng.range(1, 4));
        std::size_t row = rng.below(r);
        for (std::size_t j = 0; j < c; ++j) m2.at(row, j) *= s;
        CHECK(m2.rank() == rank);
        RatMatrix m3(r, c);
        std::size_t shift = rng.below(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m3.at((i + shift) % r, j) = m.at(i, j);
        CHECK(m3.rank() == rank);

        // Every kernel vector is annihilated.
        for (const auto& v : m.kernel_basis()) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("solve returns the RREF particular solution") {
    RatMatrix m(2, 3);
    m.at(0, 0) = Rat(1);
    m.at(0, 2) = Rat(2);
    m.at(1, 1) = Rat(1);
    RatVec b{Rat(3), Rat(5)};
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(3));
    CHECK((*x)[1] == Rat(5));
    CHECK((*x)[2] == Rat(0));
    RatMatrix bad(2, 1);
    bad.at(0, 0) = Rat(1);
    bad.at(1, 0) = Rat(1);
    CHECK_FALSE(bad.solve({Rat(1), Rat(2)}).has_value());
}

TEST_CASE("polynomial ring laws on random sparse polynomials") {
    auto ring = make_ring({"x", "y", "z"});
    SmallRng rng(99);
    auto random_poly = [&]() {
        Poly p(ring);
        int nt = 1 + static_cast<int>(rng.below(4));
        for (int t = 0; t < nt; ++t) {
            Mono m(3, '\0');
            for (int v = 0; v < 3; ++v) m[v] = static_cast<char>(rng.below(3));
            p.add_term(m, rng.small_rat());
        }
        return p;
    };
    for (int t = 0; t < 40; ++t) {
        Poly p = random_poly(), q = random_poly(), r = random_poly();
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        // Evaluation is a ring homomorphism.
        RatVec pt{rng.small_rat(), rng.small_rat(), rng.small_rat()};
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
}

TEST_CASE("poly eval basics") {
    auto ring = make_ring({"x", "y"});
    Poly p = Poly::variable(ring, 0, 2) + Poly::variable(ring, 1);
    CHECK(p.eval({Rat(2), Rat(3)}) == Rat(7));
    Poly zero(ring);
    CHECK(zero.eval({Rat(5), Rat(11)}).is_zero());
    CHECK(p.derivative(0).str() == "2*x");
}

TEST_CASE("jacobian rank: identity and constant maps") {
    auto ring = make_ring({"a", "b", "c"});
    PolynomialMap id{ring, {Poly::variable(ring, 0), Poly::variable(ring, 1), Poly::variable(ring, 2)}, "id"};
    CHECK(id.jacobian_rank_at({Rat(1), Rat(2), Rat(3)}) == 3);
    PolynomialMap cst{ring, {Poly::constant(ring, Rat(7))}, "const"};
    CHECK(cst.jacobian_rank_at({Rat(1), Rat(2), Rat(3)}) == 0);
}

TEST_CASE("modular kernel agrees with exact kernel") {
    SmallRng rng(5);
    Fp f{kPrimes62[0]};
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t r = 3 + rng.below(3), c = 3 + rng.below(4);
        RatMatrix m(r, c);
        std::vector<std::vector<std::uint64_t>> mm(r, std::vector<std::uint64_t>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long v = rng.range(-4, 4);
                m.at(i, j) = Rat(v);
                mm[i][j] = f.from_int(Int(v));
            }
        auto ker = kernel_mod_p(mm, c, f);
        CHECK(ker.size() == m.kernel_basis().size());
    }
}

TEST_CASE("rational reconstruction round trip") {
    Fp f{kPrimes62[0]};
    Rat x(-341, 79);
    std::uint64_t r = f.from_rat(x);
    auto back = rational_reconstruct(Int(r), Int(f.p));
    REQUIRE(back.has_value());
    CHECK(*back == x);
}

TEST_CASE("crt combine") {
    std::vector<std::uint64_t> primes{kPrimes62[0], kPrimes62[1]};
    Int v("123456789123456789");
    std::vector<std::uint64_t> res;
    for (auto p : primes) {
        Fp f{p};
        res.push_back(f.from_int(v));
    }
    CHECK(crt_combine(res, primes) == v);
}

TEST_CASE("sparse powers columnwise") {
    SparseIntMat n(3, 3);
    n.add(0, 1, Int(1));
    n.add(1, 2, Int(1));  // single Jordan block of size 3
    CHECK_FALSE(n.power_annihilates(2));
    CHECK(n.power_annihilates(3));
    CHECK(n.rank() == 2);
    auto n2 = n.power_columns(2);
    CHECK(n2.rank() == 1);
}
