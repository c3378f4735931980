#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhyper/rep.hpp"

#include <functional>
#include <random>

using namespace rhyper;

namespace {

// Darboux pairing on the doubled alphabet, all letters of degree zero.
Rational pairing(const Letter& a, const Letter& b) {
    if (a.is_plain() || b.is_plain() || a.p != 0 || b.p != 0 || a.alpha != b.alpha)
        return Rational(0);
    if (a.l == 0 && b.l == 1) return Rational(1);
    if (a.l == 1 && b.l == 0) return Rational(-1);
    return Rational(0);
}

// direct transcription of the displayed bracket on cyclic words (all-even
// case, so every Koszul sign is +1)
WordSum direct_bracket(const CycWord& u, const CycWord& v) {
    WordSum out(1);
    const int n = u.length(), m = v.length();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Rational theta = pairing(u.letters[i], v.letters[j]);
            if (theta.is_zero()) continue;
            std::vector<Letter> word;
            for (int q = 1; q < n; ++q) word.push_back(u.letters[(i + q) % n]);
            for (int q = 1; q < m; ++q) word.push_back(v.letters[(j + q) % m]);
            out.add_raw({word}, theta);
        }
    return out;
}

// direct transcription of the displayed cobracket
WordSum direct_cobracket(const CycWord& u) {
    WordSum out(2);
    const int n = u.length();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational theta = pairing(u.letters[i], u.letters[j]);
            if (theta.is_zero()) continue;
            std::vector<Letter> first, second;
            for (int q = (i + 1) % n; q != j; q = (q + 1) % n) first.push_back(u.letters[q]);
            for (int q = (j + 1) % n; q != i; q = (q + 1) % n) second.push_back(u.letters[q]);
            out.add_raw({first, second}, theta);
        }
    return out;
}

// the bracket and cobracket graphs in canonical layout
GraphTerm bracket_graph() {
    return build_term(2, Perm::identity(2), Perm({1, 0}), {{0, 1}, {1, 2}}, {{0, 1}}, 1, {0, 1},
                      Rational(1));
}
GraphTerm cobracket_graph() {
    return build_term(2, Perm({1, 0}), Perm({1, 0}), {{0, 1}}, {{0, 1}, {1, 2}}, 1, {0, 1},
                      Rational(1));
}

std::vector<CycWord> all_words(const std::vector<Letter>& alphabet, int max_len,
                               bool include_empty) {
    std::vector<CycWord> out;
    if (include_empty) out.push_back(CycWord{});
    std::vector<Letter> seq;
    std::function<void()> rec = [&]() {
        if (!seq.empty()) {
            auto canon = canonical_cyclic(seq);
            if (canon && canon->first.letters == seq) out.push_back(canon->first);
        }
        if ((int)seq.size() >= max_len) return;
        for (const auto& w : alphabet) {
            seq.push_back(w);
            rec();
            seq.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<Letter> doubled(int N) {
    std::vector<Letter> out;
    for (int a = 1; a <= N; ++a) {
        out.push_back(expanded_letter(a, 0, 0));
        out.push_back(expanded_letter(a, 1, 0));
    }
    return out;
}

}  // namespace

TEST_CASE("zero rule: valency exceeding word length") {
    GraphTerm g = build_term(3, Perm({1, 2, 0}), Perm({1, 2, 0}), {{0, 1}},
                             {{0, 1}, {1, 2}, {2, 3}}, 1, {0, 1, 2}, Rational(1));
    ThetaFamily f = darboux_family(1);
    CycWord two{{expanded_letter(1, 0, 0), expanded_letter(1, 1, 0)}};
    CHECK(eval_graph(g, f, {two}).empty());
}

TEST_CASE("vanishing weight factor: 1-valent hyperedge with Theta_1 = 0") {
    GraphTerm g = build_term(1, Perm::identity(1), Perm::identity(1), {{0, 1}}, {{0, 1}}, 1, {0},
                             Rational(1));
    ThetaFamily f = darboux_family(2);
    for (const auto& w : all_words(doubled(2), 3, true)) CHECK(eval_graph(g, f, {w}).empty());
}

TEST_CASE("bracket graph reproduces the cyclic-word bracket") {
    GraphTerm g = bracket_graph();
    ThetaFamily f = darboux_family(2);
    auto words = all_words(doubled(2), 3, true);
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.length() + v.length() > 5) continue;
            WordSum lhs = eval_graph(g, f, {u, v});
            WordSum rhs = direct_bracket(u, v);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("cobracket graph reproduces the cyclic-word cobracket") {
    GraphTerm g = cobracket_graph();
    ThetaFamily f = darboux_family(2);
    for (const auto& u : all_words(doubled(2), 5, true)) {
        WordSum lhs = eval_graph(g, f, {u});
        WordSum rhs = direct_cobracket(u);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bracket of a doubled word with itself vanishes") {
    ThetaFamily f = darboux_family(1);
    CycWord u{{expanded_letter(1, 0, 0), expanded_letter(1, 1, 0)}};
    CHECK(eval_graph(bracket_graph(), f, {u, u}).empty());
}

TEST_CASE("unit graph acts as identity") {
    ThetaFamily f = graded_family(2);
    HSum u(1, 1, 1);
    u.add_term(unit_term(1));
    std::vector<Letter> alphabet;
    for (int a = 1; a <= 2; ++a)
        for (int p = 0; p <= 1; ++p)
            for (int l = 0; l <= p + 1; ++l) alphabet.push_back(expanded_letter(a, l, p));
    for (const auto& w : all_words(alphabet, 2, true)) {
        WordSum ws = eval_graph(u, f, {w});
        REQUIRE(ws.size() == 1);
        CHECK(ws.terms().begin()->first[0] == w);
        CHECK(ws.terms().begin()->second == Rational(1));
    }
}

TEST_CASE("well-defined on isomorphism classes") {
    // the cobracket graph with edges relabeled and orientation mapped along
    GraphTerm g = cobracket_graph();
    GraphTerm moved = build_term(2, Perm({1, 0}), Perm({1, 0}), {{0, 1}}, {{0, 2}, {1, 1}}, 1,
                                 {1, 0}, Rational(1));
    // moved = image of g under the edge swap: boundary labels swap, and the
    // mapped orientation is (1,0)
    ThetaFamily f = darboux_family(2);
    for (const auto& u : all_words(doubled(2), 4, false)) {
        WordSum a = eval_graph(g, f, {u});
        WordSum b = eval_graph(moved, f, {u});
        CHECK(a == b);
    }

    // opposite orientation negates the operator
    GraphTerm opp = g;
    std::swap(opp.orientation[0], opp.orientation[1]);
    for (const auto& u : all_words(doubled(2), 4, false)) {
        WordSum a = eval_graph(g, f, {u});
        WordSum b = eval_graph(opp, f, {u});
        b.add_sum(a);
        CHECK(b.empty());
    }
}

TEST_CASE("letter conservation and degree shift") {
    std::mt19937_64 rng(31);
    ThetaFamily f = graded_family(1);
    std::vector<Letter> alphabet;
    for (int p = 0; p <= 1; ++p)
        for (int l = 0; l <= p + 1; ++l) alphabet.push_back(expanded_letter(1, l, p));
    auto words = all_words(alphabet, 4, false);

    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + (int)(rng() % 4);
        auto rand_perm = [&]() {
            std::vector<int> img(k);
            for (int i = 0; i < k; ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            return Perm(img);
        };
        GraphTerm g;
        g.edges = k;
        g.sigma0 = rand_perm();
        g.sigma1 = rand_perm();
        g.d = 1;
        int nv = 0, nb = 0;
        for (const auto& cyc : g.sigma0.cycles()) g.vertex_labels[cyc.front()] = ++nv;
        for (const auto& cyc : g.sigma_inf().cycles()) g.boundary_labels[cyc.front()] = ++nb;
        g.orientation.resize(k);
        for (int e = 0; e < k; ++e) g.orientation[e] = e;
        g.coeff = Rational(1);

        std::vector<CycWord> input;
        int in_len = 0, in_deg = 0;
        for (int i = 0; i < nv; ++i) {
            input.push_back(words[rng() % words.size()]);
            in_len += input.back().length();
            in_deg += input.back().degree();
        }
        WordSum out = eval_graph(g, f, input);
        for (const auto& [tuple, c] : out.terms()) {
            int len = 0, deg = 0;
            for (const auto& w : tuple) {
                len += w.length();
                deg += w.degree();
            }
            CHECK(len == in_len - g.edges);
            CHECK(deg - in_deg == degree(g));
        }
    }
}

TEST_CASE("linearity in the HSum argument") {
    ThetaFamily f = darboux_family(1);
    GraphTerm g = bracket_graph();
    HSum h(1, 2, 1);
    GraphTerm doubled_coeff = g;
    doubled_coeff.coeff = Rational(3);
    h.add_term(doubled_coeff);
    CycWord u{{expanded_letter(1, 0, 0), expanded_letter(1, 1, 0)}};
    CycWord v{{expanded_letter(1, 0, 0), expanded_letter(1, 0, 0), expanded_letter(1, 1, 0)}};
    WordSum single = eval_graph(g, f, {u, v});
    WordSum triple = eval_graph(h, f, {u, v});
    WordSum expect(1);
    expect.add_sum(single, Rational(3));
    CHECK(triple == expect);
}
