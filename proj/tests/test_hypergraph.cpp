#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhyper/hypergraph.hpp"

#include <random>

using namespace rhyper;

namespace {

// the three displayed graphs of the ribbon-hypergraph section
GraphTerm gamma1(int d = 1) {
    return build_term(3, Perm::identity(3), Perm({1, 2, 0}), {{0, 1}, {1, 2}, {2, 3}}, {{0, 1}},
                      d, d % 2 ? std::vector<int>{0, 1, 2} : std::vector<int>{0}, Rational(1));
}
GraphTerm gamma2(int d = 1) {
    return build_term(3, Perm({1, 2, 0}), Perm({1, 2, 0}), {{0, 1}}, {{0, 1}, {1, 2}, {2, 3}}, d,
                      d % 2 ? std::vector<int>{0, 1, 2} : std::vector<int>{0}, Rational(1));
}
GraphTerm gamma3(int d = 1) {
    return build_term(3, Perm({1, 2, 0}), Perm({1, 0, 2}), {{0, 1}}, {{0, 1}, {1, 2}}, d,
                      d % 2 ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 2}, Rational(1));
}

GraphTerm apply_relabel(const GraphTerm& g, const Perm& pi) {
    GraphTerm out = g;
    std::vector<int> s0(g.edges), s1(g.edges);
    for (int e = 0; e < g.edges; ++e) {
        s0[pi(e)] = pi(g.sigma0(e));
        s1[pi(e)] = pi(g.sigma1(e));
    }
    out.sigma0 = Perm(s0);
    out.sigma1 = Perm(s1);
    out.vertex_labels.clear();
    for (const auto& cyc : out.sigma0.cycles()) {
        // find the old cycle through pi^{-1}
        int old_key = g.edges;
        for (int e : cyc) old_key = std::min(old_key, pi.inverse()(e));
        // old_key is the min old edge; map to its cycle key
        const auto old_cycles = g.sigma0.cycles();
        for (const auto& oc : old_cycles)
            if (std::find(oc.begin(), oc.end(), old_key) != oc.end())
                out.vertex_labels[cyc.front()] = g.vertex_labels.at(oc.front());
    }
    out.boundary_labels.clear();
    Perm sinf_old = g.sigma_inf();
    for (const auto& cyc : out.sigma_inf().cycles()) {
        int old_edge = pi.inverse()(cyc.front());
        for (const auto& oc : sinf_old.cycles())
            if (std::find(oc.begin(), oc.end(), old_edge) != oc.end())
                out.boundary_labels[cyc.front()] = g.boundary_labels.at(oc.front());
    }
    out.orientation.clear();
    if (g.d % 2 != 0) {
        for (int t : g.orientation) out.orientation.push_back(pi(t));
    } else {
        std::vector<int> key_new(g.edges);
        for (const auto& cyc : out.sigma1.cycles())
            for (int e : cyc) key_new[e] = cyc.front();
        for (int h : g.orientation) out.orientation.push_back(key_new[pi(h)]);
    }
    validate_term(out);
    return out;
}

}  // namespace

TEST_CASE("the three displayed graphs have the stated counts") {
    auto counts = [](const GraphTerm& g) {
        return std::tuple<int, int, int, int>(g.n_in(), hyperedge_count(g), g.m_out(), g.edges);
    };
    CHECK(counts(gamma1()) == std::tuple<int, int, int, int>(3, 1, 1, 3));
    CHECK(counts(gamma2()) == std::tuple<int, int, int, int>(1, 1, 3, 3));
    CHECK(counts(gamma3()) == std::tuple<int, int, int, int>(1, 2, 2, 3));

    auto b3 = boundaries(gamma3());
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == std::vector<int>{0});
    CHECK(b3[1] == std::vector<int>{1, 2});
}

TEST_CASE("build validation") {
    CHECK_THROWS_AS(build_term(3, Perm({1, 2, 0}), Perm({1, 2, 0}), {{0, 1}},
                               {{0, 1}, {1, 2}},  // wrong boundary count
                               1, {0, 1, 2}, Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_term(3, Perm::identity(3), Perm({1, 2, 0}), {{0, 1}, {1, 2}, {2, 3}},
                               {{0, 1}}, 1, {0, 1}, Rational(1)),
                    std::invalid_argument);  // malformed orientation
}

TEST_CASE("unit graph") {
    GraphTerm u = unit_term(1);
    CHECK(u.n_in() == 1);
    CHECK(u.m_out() == 1);
    CHECK(degree(u) == 0);
    CHECK(boundaries(u).size() == 1);
}

TEST_CASE("degree formula") {
    CHECK(degree(gamma2(1)) == -1);
    CHECK(degree(gamma1(0)) == 1);   // d=0: #H
    CHECK(degree(gamma3(0)) == 2);
    CHECK(degree(gamma1(1)) == -1);
}

TEST_CASE("boundary corners") {
    // gamma3, boundary (0): the sigma_inf cycle {0} gives one corner at the
    // 3-valent vertex
    auto c = boundary_corners(gamma3(), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].vertex_key == 0);

    // gamma2: each boundary has exactly one corner at the single vertex
    for (int b = 1; b <= 3; ++b) {
        auto cb = boundary_corners(gamma2(), b);
        CHECK(cb.size() == 1);
        CHECK(cb[0].vertex_key == 0);
    }
    CHECK_THROWS_AS(boundary_corners(gamma2(), 9), std::invalid_argument);

    // unit graph: the single formal full-circle corner
    auto cu = boundary_corners(unit_term(1), 1);
    REQUIRE(cu.size() == 1);
    CHECK(cu[0].edge_a == -1);
}

TEST_CASE("canonicalize idempotence and relabel equivariance") {
    std::mt19937_64 rng(23);
    for (int d : {0, 1}) {
        for (int trial = 0; trial < 200; ++trial) {
            int k = 2 + (int)(rng() % 4);
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
            g.d = d;
            int nv = 0, nb = 0;
            for (const auto& cyc : g.sigma0.cycles()) g.vertex_labels[cyc.front()] = ++nv;
            for (const auto& cyc : g.sigma_inf().cycles()) g.boundary_labels[cyc.front()] = ++nb;
            if (d % 2 != 0) {
                g.orientation.resize(k);
                for (int e = 0; e < k; ++e) g.orientation[e] = e;
            } else {
                for (const auto& cyc : g.sigma1.cycles()) g.orientation.push_back(cyc.front());
            }
            g.coeff = Rational(1);

            CanonResult c = canonicalize(g);
            if (!c.zero) {
                CanonResult again = canonicalize(c.term);
                REQUIRE(!again.zero);
                TermLess less;
                CHECK((!less(again.term, c.term) && !less(c.term, again.term)));
                CHECK(again.sign == 1);
            }

            Perm pi = rand_perm();
            GraphTerm moved = apply_relabel(g, pi);
            CanonResult cm = canonicalize(moved);
            CHECK(c.zero == cm.zero);
            if (!c.zero) {
                TermLess less;
                CHECK((!less(cm.term, c.term) && !less(c.term, cm.term)));
            }
            CHECK(degree(moved) == degree(g));
        }
    }
}

TEST_CASE("orientation-reversing automorphism kills the graph") {
    // one 2-valent vertex, two 1-valent hyperedges; swapping the edges is an
    // automorphism of odd parity for both parities of d
    for (int d : {0, 1}) {
        GraphTerm g = build_term(2, Perm({1, 0}), Perm::identity(2), {{0, 1}}, {{0, 1}}, d,
                                 d % 2 ? std::vector<int>{0, 1} : std::vector<int>{0, 1},
                                 Rational(1));
        CanonResult c = canonicalize(g);
        CHECK(c.zero);
    }
}

TEST_CASE("hsum quotient") {
    GraphTerm g = gamma3();
    GraphTerm gopp = g;
    std::swap(gopp.orientation[0], gopp.orientation[1]);

    HSum h(2, 1, 1);
    h.add_term(g);
    h.add_term(gopp);
    CHECK(h.empty());

    HSum h2(2, 1, 1);
    GraphTerm a = g;
    a.coeff = Rational(2);
    GraphTerm b = g;
    b.coeff = Rational(-2);
    h2.add_term(a);
    h2.add_term(b);
    CHECK(h2.empty());

    // relabeled copy folds onto the same key with the relabeling sign
    GraphTerm moved = apply_relabel(g, Perm({1, 0, 2}));
    HSum h3(2, 1, 1);
    h3.add_term(g);
    h3.add_term(moved);
    REQUIRE(h3.size() == 1);
    CHECK(h3.terms().begin()->second == Rational(2));

    CHECK_THROWS_AS(hsum_normalize({g, gamma2()}), std::invalid_argument);
}
