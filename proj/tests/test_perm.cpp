#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhyper/perm.hpp"

#include <random>

using namespace rhyper;

TEST_CASE("compose basics") {
    Perm id = Perm::identity(3);
    Perm q({1, 2, 0});
    CHECK(compose(id, q) == q);
    CHECK(compose(q, id) == q);
    CHECK(compose(Perm({2, 0, 1}), Perm({1, 2, 0})) == id);
    CHECK_THROWS_WITH_AS(compose(Perm::identity(2), q), "arity mismatch", std::invalid_argument);
}

TEST_CASE("sigma_infinity of the one-vertex two-hyperedge graph") {
    // sigma0 = (0 1 2), sigma1 = (0 1)(2): cycles of sigma0^-1 o sigma1 are {(0),(1,2)}
    Perm s0({1, 2, 0});
    Perm s1({1, 0, 2});
    Perm sinf = compose(s0.inverse(), s1);
    auto cyc = sinf.cycles();
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{0});
    CHECK(cyc[1] == std::vector<int>{1, 2});

    // brute-force cross-check of the composition table
    for (int i = 0; i < 3; ++i) CHECK(sinf(i) == s0.inverse()(s1(i)));
}

TEST_CASE("cycles canonical order") {
    CHECK(Perm::identity(3).cycles() == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(Perm({1, 2, 0}).cycles() == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(Perm({1, 0, 2}).cycles() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("parity") {
    CHECK(Perm::identity(4).parity() == 1);
    CHECK(Perm({1, 0, 2}).parity() == -1);
    CHECK(Perm({1, 2, 0}).parity() == 1);
}

TEST_CASE("not a bijection rejected") {
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("random algebraic properties") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + (int)(rng() % 7);
        auto rand_perm = [&]() {
            std::vector<int> img(k);
            for (int i = 0; i < k; ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            return Perm(img);
        };
        Perm a = rand_perm(), b = rand_perm(), c = rand_perm();
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
        CHECK(compose(a, b).parity() == a.parity() * b.parity());
        CHECK(compose(a, a.inverse()) == Perm::identity(k));

        std::vector<char> seen(k, 0);
        for (const auto& cyc : a.cycles())
            for (int e : cyc) seen[e] = 1;
        for (char s : seen) CHECK(s == 1);
    }
}
