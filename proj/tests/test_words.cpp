#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhyper/words.hpp"

#include <random>

using namespace rhyper;

namespace {
Letter even_letter(int alpha) { return expanded_letter(alpha, 1, 0); }
Letter odd_letter(int alpha) { return plain_letter(alpha, 1); }
}  // namespace

TEST_CASE("koszul_sign basics") {
    CHECK(koszul_sign(Perm({1, 0}), {1, 1}) == -1);
    CHECK(koszul_sign(Perm({1, 0}), {1, 0}) == 1);
    CHECK(koszul_sign(Perm({2, 0, 1}), {0, 0, 0}) == 1);
    // 3-cycle on three odd letters: two odd transpositions
    CHECK(koszul_sign(Perm({1, 2, 0}), {1, 1, 1}) == 1);
    CHECK_THROWS_AS(koszul_sign(Perm({0, 1}), {1}), std::invalid_argument);
}

TEST_CASE("koszul_sign vs sort-by-swaps oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + (int)(rng() % 6);
        std::vector<int> img(k), degs(k);
        for (int i = 0; i < k; ++i) {
            img[i] = i;
            degs[i] = (int)(rng() % 3);
        }
        std::shuffle(img.begin(), img.end(), rng);
        // bubble the permuted sequence back to identity, tracking odd swaps
        std::vector<int> seq = img;
        int sign = 1;
        for (size_t a = 0; a < seq.size(); ++a)
            for (size_t b = 0; b + 1 < seq.size(); ++b)
                if (seq[b] > seq[b + 1]) {
                    if ((degs[seq[b]] & 1) && (degs[seq[b + 1]] & 1)) sign = -sign;
                    std::swap(seq[b], seq[b + 1]);
                }
        CHECK(koszul_sign(Perm(img), degs) == sign);
    }
}

TEST_CASE("koszul_sign is a homomorphism") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + (int)(rng() % 6);
        std::vector<int> a(k), b(k), degs(k);
        for (int i = 0; i < k; ++i) {
            a[i] = b[i] = i;
            degs[i] = (int)(rng() % 2);
        }
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Perm pa(a), pb(b);
        Perm pc = compose(pa, pb);
        std::vector<int> degs_pa(k);
        for (int i = 0; i < k; ++i) degs_pa[i] = degs[pa(i)];
        CHECK(koszul_sign(pc, degs) == koszul_sign(pa, degs) * koszul_sign(pb, degs_pa));
    }
}

TEST_CASE("canonical_cyclic") {
    auto a = even_letter(1), b = even_letter(2);
    auto r = canonical_cyclic({b, a});
    REQUIRE(r);
    CHECK(r->first.letters == std::vector<Letter>{a, b});
    CHECK(r->second == 1);

    // odd letter repeated: rotation stabilizer has sign -1
    auto x = odd_letter(1);
    CHECK(!canonical_cyclic({x, x}));

    auto e = canonical_cyclic({});
    REQUIRE(e);
    CHECK(e->first.length() == 0);
    CHECK(e->second == 1);
}

TEST_CASE("canonical_cyclic rotation invariance and idempotence") {
    std::mt19937_64 rng(17);
    std::vector<Letter> alphabet = {even_letter(1), even_letter(2), odd_letter(1), odd_letter(2)};
    for (int trial = 0; trial < 300; ++trial) {
        int L = 1 + (int)(rng() % 5);
        std::vector<Letter> seq;
        std::vector<int> degs;
        for (int i = 0; i < L; ++i) {
            seq.push_back(alphabet[rng() % alphabet.size()]);
            degs.push_back(seq.back().degree());
        }
        auto base = canonical_cyclic(seq);
        for (int t = 0; t < L; ++t) {
            std::vector<Letter> rot(seq.begin() + t, seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + t);
            auto r = canonical_cyclic(rot);
            if (!base) {
                CHECK(!r);
                continue;
            }
            REQUIRE(r);
            CHECK(r->first == base->first);
            CHECK(r->second == base->second * rotation_sign(degs, t));
        }
        if (base) {
            auto again = canonical_cyclic(base->first.letters);
            REQUIRE(again);
            CHECK(again->first == base->first);
            CHECK(again->second == 1);
        }
    }
}

TEST_CASE("wordsum algebra") {
    WordSum a(1), b(1);
    CycWord w{{even_letter(1)}};
    a.add({w}, Rational(2));
    b.add({w}, Rational(-2));
    a.add_sum(b);
    CHECK(a.empty());

    WordSum c(1);
    c.add_raw({{even_letter(2), even_letter(1)}}, Rational(1));
    REQUIRE(c.size() == 1);
    CHECK(c.terms().begin()->first[0].letters ==
          std::vector<Letter>{even_letter(1), even_letter(2)});

    // killed word contributes nothing
    WordSum d(1);
    d.add_raw({{odd_letter(1), odd_letter(1)}}, Rational(5));
    CHECK(d.empty());
}
