#include "rhyper/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "rhyper/mcstar.hpp"
#include "rhyper/prop.hpp"
#include "rhyper/rep.hpp"

namespace rhyper {

void Report::fail(const std::string& instance, const std::string& residue) {
    if (failures.size() < 64) failures.push_back({instance, residue});
}

std::vector<CycWord> basis_words(const std::vector<Letter>& alphabet, int length) {
    std::vector<CycWord> out;
    std::vector<Letter> seq(length, alphabet.empty() ? Letter{} : alphabet.front());
    std::function<void(int)> rec = [&](int pos) {
        if (pos == length) {
            auto canon = canonical_cyclic(seq);
            if (canon && canon->first.letters == seq) out.push_back(canon->first);
            return;
        }
        for (const auto& w : alphabet) {
            seq[pos] = w;
            rec(pos + 1);
        }
    };
    if (length == 0) return {CycWord{}};
    rec(0);
    return out;
}

std::vector<CycWord> basis_words_upto(const std::vector<Letter>& alphabet, int max_len,
                                      bool include_empty) {
    std::vector<CycWord> out;
    for (int L = include_empty ? 0 : 1; L <= max_len; ++L)
        for (auto& w : basis_words(alphabet, L)) out.push_back(std::move(w));
    return out;
}

std::vector<Letter> doubled_alphabet(int N) {
    std::vector<Letter> out;
    for (int a = 1; a <= N; ++a) {
        out.push_back(expanded_letter(a, 0, 0));
        out.push_back(expanded_letter(a, 1, 0));
    }
    return out;
}

std::vector<Letter> graded_alphabet(int N, int pmax) {
    std::vector<Letter> out;
    for (int p = 0; p <= pmax; ++p)
        for (int l = 0; l <= p + 1; ++l)
            for (int a = 1; a <= N; ++a) out.push_back(expanded_letter(a, l, p));
    return out;
}

namespace {

std::string tuple_str(const std::vector<CycWord>& words) {
    std::string s = "(";
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) s += ", ";
        s += words[i].str();
    }
    return s + ")";
}

// tuples of fixed arity with total length <= max_total over the given pool,
// grouped by length so the enumeration stays tractable
void for_each_tuple(const std::vector<std::vector<CycWord>>& by_len, int arity, int max_total,
                    bool allow_empty, const std::function<void(const std::vector<CycWord>&)>& fn) {
    std::vector<CycWord> tuple(arity);
    std::function<void(int, int)> rec = [&](int slot, int budget) {
        if (slot == arity) {
            fn(tuple);
            return;
        }
        int lo = allow_empty ? 0 : 1;
        for (int L = lo; L <= budget; ++L) {
            if (L >= (int)by_len.size()) break;
            for (const auto& w : by_len[L]) {
                tuple[slot] = w;
                rec(slot + 1, budget - L);
            }
        }
    };
    rec(0, max_total);
}

std::vector<std::vector<CycWord>> pool_by_length(const std::vector<Letter>& alphabet,
                                                 int max_len) {
    std::vector<std::vector<CycWord>> by_len(max_len + 1);
    for (int L = 0; L <= max_len; ++L) by_len[L] = basis_words(alphabet, L);
    return by_len;
}

// ---- classical (all-even) Lie bialgebra residues ----

WordSum bracket_ws(const ThetaFamily& f, OpCache* cache, const WordSum& a, const WordSum& b) {
    WordSum out(1);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            out.add_sum(induced_op(f, GenKey{1, 2, 0}, {ta[0], tb[0]}, cache), ca * cb);
    return out;
}

WordSum single(const CycWord& w) {
    WordSum out(1);
    out.add({w}, Rational(1));
    return out;
}

}  // namespace

Report check_lieb_axioms(const ThetaFamily& family, int N, int max_len) {
    Report rep;
    rep.suite = "lieb";
    rep.params = {{"N", std::to_string(N)}, {"max_len", std::to_string(max_len)},
                  {"family", family.name()}};
    OpCache cache;
    auto by_len = pool_by_length(doubled_alphabet(N), max_len);
    const GenKey kb{1, 2, 0}, kc{2, 1, 0};

    auto bracket = [&](const CycWord& u, const CycWord& v) {
        return induced_op(family, kb, {u, v}, &cache);
    };
    auto cobracket = [&](const CycWord& u) { return induced_op(family, kc, {u}, &cache); };

    // single-word relations: co-Jacobi, involutivity
    for_each_tuple(by_len, 1, max_len, true, [&](const std::vector<CycWord>& t) {
        const CycWord& u = t[0];
        WordSum co = cobracket(u);

        WordSum cojac(3);
        for (const auto& [xy, c] : co.terms()) {
            WordSum left = cobracket(xy[0]);
            for (const auto& [ab, c2] : left.terms()) {
                // (1 + rho + rho^2)(Delta (x) 1)(Delta u), rho the cyclic shift
                cojac.add({ab[0], ab[1], xy[1]}, c * c2);
                cojac.add({xy[1], ab[0], ab[1]}, c * c2);
                cojac.add({ab[1], xy[1], ab[0]}, c * c2);
            }
        }
        ++rep.cases;
        if (!cojac.empty()) rep.fail("cojacobi " + u.str(), cojac.str());

        WordSum invol(1);
        for (const auto& [xy, c] : co.terms()) invol.add_sum(bracket(xy[0], xy[1]), c);
        ++rep.cases;
        if (!invol.empty()) rep.fail("involutivity " + u.str(), invol.str());

        WordSum r1 = ibl_residual(family, GenKey{3, 1, 0}, {u}, &cache);
        ++rep.cases;
        if (!r1.empty()) rep.fail("delta-residual (3,1,0) " + u.str(), r1.str());
        WordSum r2 = ibl_residual(family, GenKey{1, 1, 1}, {u}, &cache);
        ++rep.cases;
        if (!r2.empty()) rep.fail("delta-residual (1,1,1) " + u.str(), r2.str());
    });

    // pair relations: compatibility
    for_each_tuple(by_len, 2, max_len, true, [&](const std::vector<CycWord>& t) {
        const CycWord &u = t[0], &v = t[1];
        WordSum lhs(2);
        for (const auto& [w, c] : bracket(u, v).terms())
            lhs.add_sum(cobracket(w[0]), c);
        // u.Delta(v): [u,x](x)y + x(x)[u,y]
        auto dot = [&](const CycWord& a, const WordSum& dw, const Rational& scale) {
            for (const auto& [xy, c] : dw.terms()) {
                for (const auto& [z, c2] : bracket(a, xy[0]).terms())
                    lhs.add({z[0], xy[1]}, c * c2 * scale * Rational(-1));
                for (const auto& [z, c2] : bracket(a, xy[1]).terms())
                    lhs.add({xy[0], z[0]}, c * c2 * scale * Rational(-1));
            }
        };
        dot(u, cobracket(v), Rational(1));
        dot(v, cobracket(u), Rational(-1));
        ++rep.cases;
        if (!lhs.empty()) rep.fail("compatibility " + tuple_str(t), lhs.str());

        WordSum r = ibl_residual(family, GenKey{2, 2, 0}, t, &cache);
        ++rep.cases;
        if (!r.empty()) rep.fail("delta-residual (2,2,0) " + tuple_str(t), r.str());
    });

    // triple relations: Jacobi
    for_each_tuple(by_len, 3, max_len, true, [&](const std::vector<CycWord>& t) {
        WordSum jac(1);
        jac.add_sum(bracket_ws(family, &cache, bracket(t[0], t[1]), single(t[2])));
        jac.add_sum(bracket_ws(family, &cache, bracket(t[1], t[2]), single(t[0])));
        jac.add_sum(bracket_ws(family, &cache, bracket(t[2], t[0]), single(t[1])));
        ++rep.cases;
        if (!jac.empty()) rep.fail("jacobi " + tuple_str(t), jac.str());

        WordSum r = ibl_residual(family, GenKey{1, 3, 0}, t, &cache);
        ++rep.cases;
        if (!r.empty()) rep.fail("delta-residual (1,3,0) " + tuple_str(t), r.str());
    });

    return rep;
}

Report check_ibl_relations(const ThetaFamily& family, const std::vector<Letter>& alphabet,
                           int max_mna, int max_total_len, int graph_max_edges) {
    Report rep;
    rep.suite = "ibl";
    rep.params = {{"max_mna", std::to_string(max_mna)},
                  {"max_total_len", std::to_string(max_total_len)},
                  {"graph_max_edges", std::to_string(graph_max_edges)},
                  {"family", family.name()}};
    OpCache cache;
    auto by_len = pool_by_length(alphabet, max_total_len);

    std::vector<GenKey> keys;
    for (int m = 1; m <= max_mna - 1; ++m)
        for (int n = 1; m + n <= max_mna; ++n)
            for (int a = 0; m + n + 2 * a <= max_mna; ++a) {
                GenKey k{m, n, a};
                if (k.valid()) keys.push_back(k);
            }

    for (const GenKey& key : keys) {
        std::string keystr = "(" + std::to_string(key.m) + "," + std::to_string(key.n) + "," +
                             std::to_string(key.a) + ")";
        if (key.num_edges() <= graph_max_edges) {
            HSum image = graph_delta_image(key, family.d());
            ++rep.cases;
            if (!image.empty()) rep.fail("graph-level delta " + keystr, image.str());
            ++rep.cases;
            if (rho_generator(key, family.d()).empty())
                rep.fail("generator image trivial " + keystr, "0");
        }
        // nonempty words, exhaustive
        for_each_tuple(by_len, key.n, max_total_len, false, [&](const std::vector<CycWord>& t) {
            WordSum r = ibl_residual(family, key, t, &cache);
            ++rep.cases;
            if (!r.empty()) rep.fail("residual " + keystr + " " + tuple_str(t), r.str());
        });
        // tuples containing the empty word, small budget
        if (key.n >= 1) {
            for_each_tuple(by_len, key.n, std::min(max_total_len, key.n + 1), true,
                           [&](const std::vector<CycWord>& t) {
                               bool has_empty = false;
                               for (const auto& w : t) has_empty = has_empty || w.length() == 0;
                               if (!has_empty) return;
                               WordSum r = ibl_residual(family, key, t, &cache);
                               ++rep.cases;
                               if (!r.empty())
                                   rep.fail("residual " + keystr + " " + tuple_str(t), r.str());
                           });
        }
    }
    return rep;
}

namespace {

GraphTerm random_term(std::mt19937_64& rng, int edges, int d, int forced_vertex_count) {
    auto rand_perm = [&](int k) {
        std::vector<int> img(k);
        for (int i = 0; i < k; ++i) img[i] = i;
        std::shuffle(img.begin(), img.end(), rng);
        return Perm(img);
    };
    Perm s0 = rand_perm(edges);
    if (forced_vertex_count > 0) {
        for (int tries = 0; (int)s0.cycles().size() != forced_vertex_count; ++tries) {
            if (tries > 2000) throw std::runtime_error("random_term: cycle-count rejection stuck");
            s0 = rand_perm(edges);
        }
    }
    Perm s1 = rand_perm(edges);
    GraphTerm g;
    g.edges = edges;
    g.sigma0 = s0;
    g.sigma1 = s1;
    g.d = d;
    auto label = [&](const std::vector<std::vector<int>>& cycles, std::map<int, int>& out) {
        std::vector<int> labs(cycles.size());
        for (size_t i = 0; i < labs.size(); ++i) labs[i] = (int)i + 1;
        std::shuffle(labs.begin(), labs.end(), rng);
        for (size_t i = 0; i < cycles.size(); ++i) out[cycles[i].front()] = labs[i];
    };
    label(s0.cycles(), g.vertex_labels);
    label(compose(s0.inverse(), s1).cycles(), g.boundary_labels);
    if (d % 2 != 0) {
        g.orientation.resize(edges);
        for (int e = 0; e < edges; ++e) g.orientation[e] = e;
        std::shuffle(g.orientation.begin(), g.orientation.end(), rng);
    } else {
        for (const auto& c : s1.cycles()) g.orientation.push_back(c.front());
    }
    g.coeff = Rational(1);
    validate_term(g);
    return g;
}

}  // namespace

Report check_functoriality(const ThetaFamily& family, int samples, unsigned long long seed) {
    Report rep;
    rep.suite = "functoriality";
    rep.params = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)},
                  {"family", family.name()}};
    std::mt19937_64 rng(seed);
    const int d = family.d();
    auto alphabet = graded_alphabet(2, 1);

    // unit laws first
    {
        HSum u = prop_unit(d);
        GraphTerm g3 = build_term(
            3, Perm({1, 2, 0}), Perm({1, 0, 2}), {{0, 1}}, {{0, 1}, {1, 2}}, d,
            d % 2 ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 2}, Rational(1));
        HSum h(2, 1, d);
        h.add_term(g3);
        HSum left = vcompose(h, u);
        ++rep.cases;
        if (!(left == h)) rep.fail("unit law vcompose(g, unit)", left.str());
        HSum u2 = hcompose(u, u);
        HSum right = vcompose(u2, h);
        ++rep.cases;
        if (!(right == h)) rep.fail("unit law vcompose(units, g)", right.str());
    }

    std::uniform_int_distribution<int> edge_dist(1, 5);
    std::uniform_int_distribution<int> len_dist(0, 3);
    std::uniform_int_distribution<size_t> letter_dist(0, alphabet.size() - 1);

    for (int s = 0; s < samples; ++s) {
        GraphTerm g1 = random_term(rng, edge_dist(rng), d, 0);
        int mid = g1.m_out();
        if (mid > 5) {
            --s;
            continue;
        }
        GraphTerm g2;
        try {
            g2 = random_term(rng, std::max(mid, edge_dist(rng)), d, mid);
        } catch (const std::runtime_error&) {
            --s;
            continue;
        }

        std::vector<CycWord> words;
        int budget = 6;
        bool ok = true;
        for (int i = 0; i < g1.n_in(); ++i) {
            int L = std::min(budget, len_dist(rng));
            budget -= L;
            std::vector<Letter> seq;
            for (int q = 0; q < L; ++q) seq.push_back(alphabet[letter_dist(rng)]);
            auto canon = canonical_cyclic(seq);
            if (!canon) {
                ok = false;
                break;
            }
            words.push_back(canon->first);
        }
        if (!ok) {
            --s;
            continue;
        }

        HSum h1(g1.m_out(), g1.n_in(), d);
        h1.add_term(g1);
        HSum h2(g2.m_out(), g2.n_in(), d);
        h2.add_term(g2);

        WordSum lhs = eval_graph(vcompose(h2, h1), family, words);
        WordSum rhs = compose_operators(family, h2, h1, words);
        ++rep.cases;
        if (!(lhs == rhs))
            rep.fail("sample " + std::to_string(s) + " e1=" + std::to_string(g1.edges) +
                         " e2=" + std::to_string(g2.edges) + " words=" + tuple_str(words),
                     "lhs=" + lhs.str() + " rhs=" + rhs.str());
    }
    return rep;
}

Report check_schedler(int N, int max_len) {
    Report rep;
    rep.suite = "schedler";
    rep.params = {{"N", std::to_string(N)}, {"max_len", std::to_string(max_len)}};
    std::vector<Letter> alphabet;
    for (int a = 1; a <= N; ++a) alphabet.push_back(plain_letter(a, 0));
    auto words = basis_words_upto(alphabet, max_len, true);

    for (const auto& u : words) {
        WordSum lhs = necklace_cobracket(N, u);
        WordSum rhs = schedler_cobracket_direct(u);
        ++rep.cases;
        if (!(lhs == rhs))
            rep.fail("cobracket " + u.str(), "doubling=" + lhs.str() + " direct=" + rhs.str());
    }
    for (const auto& u : words)
        for (const auto& v : words) {
            WordSum lhs = necklace_bracket(N, u, v);
            WordSum rhs = schedler_bracket_direct(u, v);
            ++rep.cases;
            if (!(lhs == rhs))
                rep.fail("bracket " + u.str() + "," + v.str(),
                         "doubling=" + lhs.str() + " direct=" + rhs.str());
        }
    return rep;
}

Report check_closure_weight(int N, int max_mna, int max_plain_len, int pmax) {
    Report rep;
    rep.suite = "closure";
    rep.params = {{"N", std::to_string(N)}, {"max_mna", std::to_string(max_mna)},
                  {"max_plain_len", std::to_string(max_plain_len)},
                  {"pmax", std::to_string(pmax)}};
    std::vector<Letter> alphabet;
    for (int p = 0; p <= pmax; ++p)
        for (int a = 1; a <= N; ++a) alphabet.push_back(plain_letter(a, p));
    auto by_len = pool_by_length(alphabet, max_plain_len);

    std::vector<GenKey> keys;
    for (int m = 1; m <= max_mna - 1; ++m)
        for (int n = 1; m + n <= max_mna; ++n)
            for (int a = 0; m + n + 2 * a <= max_mna; ++a) {
                GenKey k{m, n, a};
                if (k.valid()) keys.push_back(k);
            }

    for (const GenKey& key : keys) {
        std::string keystr = "(" + std::to_string(key.m) + "," + std::to_string(key.n) + "," +
                             std::to_string(key.a) + ")";
        for_each_tuple(by_len, key.n, max_plain_len, false, [&](const std::vector<CycWord>& t) {
            int in_weight = 0, in_degree = 0;
            for (const auto& w : t) {
                in_weight += w.length();
                in_degree += w.degree();
            }
            ++rep.cases;
            WordSum out(key.m);
            try {
                out = graded_necklace_op(N, key, t);
            } catch (const ClosureViolation& e) {
                rep.fail("closure " + keystr + " " + tuple_str(t), e.what());
                return;
            }
            for (const auto& [tuple, c] : out.terms()) {
                int w = 0, deg = 0;
                for (const auto& word : tuple) {
                    w += word.length();
                    deg += word.degree();
                }
                if (w != in_weight - 1) {
                    rep.fail("weight " + keystr + " " + tuple_str(t),
                             "term " + tuple_str(tuple) + " weight " + std::to_string(w));
                    break;
                }
                if (deg - in_degree != 3 - (key.m + key.n + 2 * key.a)) {
                    rep.fail("degree " + keystr + " " + tuple_str(t),
                             "term " + tuple_str(tuple) + " shift " + std::to_string(deg - in_degree));
                    break;
                }
            }
        });
    }

    // degree-0 reduction to the necklace Lie bialgebra
    std::vector<Letter> flat;
    for (int a = 1; a <= N; ++a) flat.push_back(plain_letter(a, 0));
    auto flat_by_len = pool_by_length(flat, std::min(max_plain_len, 4));
    for_each_tuple(flat_by_len, 1, std::min(max_plain_len, 4), false,
                   [&](const std::vector<CycWord>& t) {
                       WordSum a = graded_necklace_op(N, GenKey{2, 1, 0}, t);
                       WordSum b = necklace_cobracket(N, t[0]);
                       ++rep.cases;
                       if (!(a == b)) rep.fail("schedler reduction cobracket " + tuple_str(t), a.str());
                   });
    for_each_tuple(flat_by_len, 2, std::min(max_plain_len, 4), false,
                   [&](const std::vector<CycWord>& t) {
                       WordSum a = graded_necklace_op(N, GenKey{1, 2, 0}, t);
                       WordSum b = necklace_bracket(N, t[0], t[1]);
                       ++rep.cases;
                       if (!(a == b)) rep.fail("schedler reduction bracket " + tuple_str(t), a.str());
                   });
    return rep;
}

Report check_mc_suite(unsigned long long seed) {
    Report rep;
    rep.suite = "mc";
    rep.params = {{"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);

    // mixed even/odd context, d = 1
    auto ctx = std::make_shared<const PolyContext>(
        1, std::vector<std::pair<std::string, int>>{{"1", 0}, {"2", 1}, {"3", 2}});
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> exp_dist(0, 2);
    auto random_poly = [&](int terms) {
        PolySeries f(ctx, 6, -1);
        for (int t = 0; t < terms; ++t) {
            Monomial m{std::vector<int>(ctx->var_count(), 0), 0};
            for (int v = 0; v < ctx->var_count(); ++v)
                m.exps[v] = ctx->var_odd(v) ? (exp_dist(rng) & 1) : exp_dist(rng);
            f.add(m, Rational(coeff_dist(rng)));
        }
        return f;
    };

    for (int s = 0; s < 50; ++s) {
        PolySeries f = random_poly(3), g = random_poly(3), h = random_poly(3);
        PolySeries lhs = star(star(f, g), h);
        PolySeries rhs = star(f, star(g, h));
        ++rep.cases;
        if (!(lhs == rhs)) rep.fail("associativity sample " + std::to_string(s), lhs.str());
        PolySeries one = poly_one(ctx, 6, -1);
        ++rep.cases;
        if (!(star(one, f) == f) || !(star(f, one) == f))
            rep.fail("unit sample " + std::to_string(s), "star with 1 differs");
    }

    // graded Jacobi on parity-homogeneous polynomials:
    // [f,[g,h]] = [[f,g],h] + (-1)^{|f||g|}[g,[f,h]]
    auto random_homog = [&](int parity, int terms) {
        PolySeries f(ctx, 6, -1);
        for (int t = 0; t < terms; ++t) {
            Monomial m{std::vector<int>(ctx->var_count(), 0), 0};
            for (int tries = 0; tries < 200; ++tries) {
                for (int v = 0; v < ctx->var_count(); ++v)
                    m.exps[v] = ctx->var_odd(v) ? (exp_dist(rng) & 1) : exp_dist(rng);
                int par = 0;
                for (int v = 0; v < ctx->var_count(); ++v)
                    if (ctx->var_odd(v)) par ^= m.exps[v] & 1;
                if (par == parity) break;
            }
            f.add(m, Rational(coeff_dist(rng)));
        }
        return f;
    };
    std::uniform_int_distribution<int> par_dist(0, 1);
    for (int s = 0; s < 50; ++s) {
        int pf = par_dist(rng), pg = par_dist(rng);
        PolySeries f = random_homog(pf, 2), g = random_homog(pg, 2), h = random_homog(par_dist(rng), 2);
        PolySeries lhs = hbar_bracket(f, hbar_bracket(g, h));
        PolySeries rhs = hbar_bracket(hbar_bracket(f, g), h);
        rhs.add_series(hbar_bracket(g, hbar_bracket(f, h)), Rational((pf && pg) ? -1 : 1));
        ++rep.cases;
        if (!(lhs == rhs)) rep.fail("jacobi sample " + std::to_string(s), lhs.str());
    }

    // [p, x] = 1 in the even case
    {
        PolySeries p = poly_var(ctx, ctx->p_var(0), 6, -1);
        PolySeries x = poly_var(ctx, ctx->x_var(0), 6, -1);
        PolySeries b = hbar_bracket(p, x);
        ++rep.cases;
        if (!(b == poly_one(ctx, 6, -1))) rep.fail("[p,x]=1", b.str());
    }

    // The Darboux necklace structure as a Maurer-Cartan element on the
    // weight <= 4 word basis.
    {
        McEncoding enc = darboux_mc_encoding(1, 4);
        McReport mc = check_mc(enc.gamma);
        PolySeries filtered = mc_residue_exact_part(enc, mc.residue, 4);
        ++rep.cases;
        if (!mc.support_ok || !filtered.is_zero())
            rep.fail("darboux MC element", filtered.str());

        // mutation: flipping one structure constant must break the equation
        PolySeries bad = enc.gamma;
        bool flipped = false;
        for (const auto& [mono, c] : enc.gamma.terms()) {
            bad.add(mono, c * Rational(-2));  // c -> -c
            flipped = true;
            break;
        }
        PolySeries bad_res = mc_residue_exact_part(enc, star(bad, bad), 4);
        ++rep.cases;
        if (!flipped || bad_res.is_zero())
            rep.fail("darboux MC mutation", "sign flip left the residue zero");
    }
    return rep;
}

McEncoding darboux_mc_encoding(int N, int max_weight) {
    McEncoding enc;
    enc.basis = basis_words_upto(doubled_alphabet(N), max_weight, true);
    std::vector<std::pair<std::string, int>> xvars;
    for (const auto& w : enc.basis) xvars.push_back({w.str(), w.degree() + 1});
    enc.ctx = std::make_shared<const PolyContext>(1, xvars);

    std::map<CycWord, int> index;
    for (size_t i = 0; i < enc.basis.size(); ++i) index[enc.basis[i]] = (int)i;

    ThetaFamily f = darboux_family(N);
    OpCache cache;
    PolySeries gamma(enc.ctx);
    const Rational half(1, 2);
    for (size_t ui = 0; ui < enc.basis.size(); ++ui) {
        for (size_t vi = 0; vi < enc.basis.size(); ++vi) {
            WordSum br = induced_op(f, GenKey{1, 2, 0}, {enc.basis[ui], enc.basis[vi]}, &cache);
            for (const auto& [w, c] : br.terms()) {
                auto it = index.find(w[0]);
                if (it == index.end()) continue;  // outside the weight truncation
                PolySeries term = poly_mul(
                    poly_mul(poly_var(enc.ctx, enc.ctx->x_var(it->second)),
                             poly_var(enc.ctx, enc.ctx->p_var((int)vi))),
                    poly_var(enc.ctx, enc.ctx->p_var((int)ui)));
                gamma.add_series(term, c * half);
            }
        }
        WordSum co = induced_op(f, GenKey{2, 1, 0}, {enc.basis[ui]}, &cache);
        for (const auto& [pair, c] : co.terms()) {
            auto i1 = index.find(pair[0]);
            auto i2 = index.find(pair[1]);
            if (i1 == index.end() || i2 == index.end()) continue;
            PolySeries term = poly_mul(
                poly_mul(poly_var(enc.ctx, enc.ctx->x_var(i1->second)),
                         poly_var(enc.ctx, enc.ctx->x_var(i2->second))),
                poly_var(enc.ctx, enc.ctx->p_var((int)ui)));
            gamma.add_series(term, c * half);
        }
    }
    enc.gamma = gamma;
    return enc;
}

PolySeries mc_residue_exact_part(const McEncoding& enc, const PolySeries& residue,
                                 int max_in_weight) {
    return residue.filter([&](const Monomial& m) {
        int w = 0;
        for (size_t i = 0; i < enc.basis.size(); ++i)
            w += m.exps[enc.ctx->p_var((int)i)] * enc.basis[i].length();
        return w <= max_in_weight;
    });
}

}  // namespace rhyper
