#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhyper/theta.hpp"

using namespace rhyper;

namespace {
Letter e(int alpha, int l, int p) { return expanded_letter(alpha, l, p); }
}  // namespace

TEST_CASE("darboux values") {
    ThetaFamily f = darboux_family(2);
    CHECK(f.eval({e(1, 0, 0), e(1, 1, 0)}) == Rational(1));
    CHECK(f.eval({e(1, 1, 0), e(1, 0, 0)}) == Rational(-1));
    CHECK(f.eval({e(1, 0, 0), e(2, 1, 0)}) == Rational(0));
    CHECK(f.eval({e(1, 0, 0), e(1, 0, 0)}) == Rational(0));
    CHECK(f.eval({e(1, 0, 0)}) == Rational(0));
    CHECK_THROWS_AS(f.eval({plain_letter(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(f.eval({e(3, 0, 0), e(3, 1, 0)}), std::invalid_argument);
}

TEST_CASE("graded family values") {
    ThetaFamily f = graded_family(1);
    // k = 0 slice is the Darboux pairing
    CHECK(f.eval({e(1, 0, 0), e(1, 1, 0)}) == Rational(1));
    CHECK(f.eval({e(1, 1, 0), e(1, 0, 0)}) == Rational(-1));
    // k = 1, j = 1: (-1)^{j(k+1)} = +1
    CHECK(f.eval({e(1, 1, 1), e(1, 0, 1), e(1, 2, 1)}) == Rational(1));
    // k = 1, j = 0: (l) = (0,2,1)
    CHECK(f.eval({e(1, 0, 1), e(1, 2, 1), e(1, 1, 1)}) == Rational(1));
    // k = 1, j = 2: (-1)^{2*2} = +1
    CHECK(f.eval({e(1, 2, 1), e(1, 1, 1), e(1, 0, 1)}) == Rational(1));
    // k = 2, j = 1: (-1)^{1*3} = -1; l-pattern (1,0,3,2)
    CHECK(f.eval({e(1, 1, 2), e(1, 0, 2), e(1, 3, 2), e(1, 2, 2)}) == Rational(-1));
    // wrong p-tags
    CHECK(f.eval({e(1, 0, 1), e(1, 1, 0), e(1, 2, 1)}) == Rational(0));
    // non-descending l-pattern
    CHECK(f.eval({e(1, 0, 1), e(1, 1, 1), e(1, 2, 1)}) == Rational(0));
}

TEST_CASE("cyclic invariance of the built-in families") {
    std::vector<Letter> darboux_letters;
    for (int a = 1; a <= 2; ++a) {
        darboux_letters.push_back(e(a, 0, 0));
        darboux_letters.push_back(e(a, 1, 0));
    }
    auto rep = check_cyclic_invariance(darboux_family(2), darboux_letters, 2);
    CHECK(rep.ok());
    CHECK(rep.cases > 0);

    std::vector<Letter> graded_letters;
    for (int p = 0; p <= 2; ++p)
        for (int l = 0; l <= p + 1; ++l) graded_letters.push_back(e(1, l, p));
    auto rep2 = check_cyclic_invariance(graded_family(1), graded_letters, 5);
    CHECK(rep2.ok());

    auto rep3 = check_cyclic_invariance(zero_family(1), graded_letters, 3);
    CHECK(rep3.ok());
}

TEST_CASE("a sign-flipped pairing violates invariance") {
    // mutation test: a symmetric table on the degree-0 pair cannot be
    // cyclically invariant in the shifted convention
    ThetaFamily bad(
        1, "mutant",
        [](const std::vector<Letter>& seq) {
            if (seq.size() != 2 || seq[0].is_plain() || seq[1].is_plain()) return Rational(0);
            if (seq[0].p != 0 || seq[1].p != 0 || seq[0].alpha != seq[1].alpha) return Rational(0);
            if (seq[0].l != seq[1].l) return Rational(1);
            return Rational(0);
        },
        [](const Letter& w) { return !w.is_plain(); });
    std::vector<Letter> letters = {e(1, 0, 0), e(1, 1, 0)};
    auto rep = check_cyclic_invariance(bad, letters, 2);
    CHECK(!rep.ok());
}

TEST_CASE("rescaling") {
    ThetaFamily f = darboux_family(1);
    ThetaFamily id_scaled = rescale(f, {Rational(1), Rational(1), Rational(1)});
    ThetaFamily doubled = rescale(f, {Rational(1), Rational(2)});
    CHECK(id_scaled.eval({e(1, 0, 0), e(1, 1, 0)}) == Rational(1));
    CHECK(doubled.eval({e(1, 0, 0), e(1, 1, 0)}) == Rational(2));
    CHECK(doubled.eval({e(1, 1, 0), e(1, 0, 0)}) == Rational(-2));

    std::vector<Letter> letters = {e(1, 0, 0), e(1, 1, 0)};
    CHECK(check_cyclic_invariance(doubled, letters, 3).ok());

    ThetaFamily laddered = rescale(graded_family(1), {Rational(1), Rational(2), Rational(-3)});
    CHECK(laddered.eval({e(1, 1, 1), e(1, 0, 1), e(1, 2, 1)}) == Rational(-3));
    std::vector<Letter> graded_letters;
    for (int p = 0; p <= 1; ++p)
        for (int l = 0; l <= p + 1; ++l) graded_letters.push_back(e(1, l, p));
    CHECK(check_cyclic_invariance(laddered, graded_letters, 4).ok());
}

TEST_CASE("custom family from a table") {
    ThetaFamily f =
        custom_family(1, {{{e(1, 0, 0), e(1, 1, 0)}, Rational(1)},
                          {{e(1, 1, 1), e(1, 0, 1), e(1, 2, 1)}, Rational(1)}});
    CHECK(f.eval({e(1, 0, 0), e(1, 1, 0)}) == Rational(1));
    CHECK(f.eval({e(1, 1, 0), e(1, 0, 0)}) == Rational(-1));  // extended by the sign rule
    CHECK(f.eval({e(1, 0, 1), e(1, 2, 1), e(1, 1, 1)}) == Rational(1));
    std::vector<Letter> letters = {e(1, 0, 0), e(1, 1, 0), e(1, 1, 1), e(1, 0, 1), e(1, 2, 1)};
    CHECK(check_cyclic_invariance(f, letters, 3).ok());
}
