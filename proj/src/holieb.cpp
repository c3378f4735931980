#include "rhyper/holieb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rhyper {

namespace {

// Orientation of an enumerated generator term: edges along the sigma_1 cycle
// from edge 0; the label parities keep the rotation orbit of each labeled
// isomorphism class sign-coherent.
int label_parity(const std::map<int, int>& labels) {
    std::vector<int> seq;
    seq.reserve(labels.size());
    for (const auto& [k, v] : labels) seq.push_back(v);
    return sequence_parity(seq);
}

void all_permutations_with_cycles(int K, int ncycles, std::vector<Perm>& out) {
    std::vector<int> img(K);
    for (int i = 0; i < K; ++i) img[i] = i;
    do {
        Perm p{std::vector<int>(img)};
        if ((int)p.cycles().size() == ncycles) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
}

void all_labelings(int count, std::vector<std::vector<int>>& out) {
    std::vector<int> lab(count);
    for (int i = 0; i < count; ++i) lab[i] = i + 1;
    do {
        out.push_back(lab);
    } while (std::next_permutation(lab.begin(), lab.end()));
}

int shifted_word_parity(const CycWord& w, int d) { return (w.degree() + d) & 1; }

}  // namespace

const HSum& rho_generator(const GenKey& key, int d) {
    static std::map<std::pair<GenKey, int>, HSum> cache;
    auto it = cache.find({key, d});
    if (it != cache.end()) return it->second;
    if (!key.valid()) throw std::invalid_argument("invalid generator key");

    const int K = key.num_edges();
    std::vector<int> s1(K);
    for (int e = 0; e < K; ++e) s1[e] = (e + 1) % K;
    Perm sigma1{std::move(s1)};

    std::vector<int> carrier(K);
    for (int e = 0; e < K; ++e) carrier[e] = e;  // the sigma_1 cycle from edge 0
    std::vector<int> orientation =
        (d % 2 != 0) ? carrier : std::vector<int>{0};  // single hyperedge, key 0

    std::vector<Perm> sigma0s;
    all_permutations_with_cycles(K, key.n, sigma0s);
    std::vector<std::vector<int>> vlabs, blabs;
    all_labelings(key.n, vlabs);
    all_labelings(key.m, blabs);

    std::map<GraphTerm, std::pair<Rational, long>, TermLess> acc;
    for (const Perm& sigma0 : sigma0s) {
        GraphTerm g;
        g.edges = K;
        g.sigma0 = sigma0;
        g.sigma1 = sigma1;
        g.d = d;
        g.orientation = orientation;

        Perm sinf = compose(sigma0.inverse(), sigma1);
        auto bcycles = sinf.cycles();
        if ((int)bcycles.size() != key.m) continue;
        auto vcycles = sigma0.cycles();

        for (const auto& vl : vlabs) {
            g.vertex_labels.clear();
            for (size_t i = 0; i < vcycles.size(); ++i) g.vertex_labels[vcycles[i].front()] = vl[i];
            for (const auto& bl : blabs) {
                g.boundary_labels.clear();
                for (size_t i = 0; i < bcycles.size(); ++i)
                    g.boundary_labels[bcycles[i].front()] = bl[i];
                g.coeff = Rational(label_parity(g.vertex_labels) * label_parity(g.boundary_labels));

                CanonResult c = canonicalize(g);
                if (c.zero) continue;
                auto& slot = acc[c.term];
                slot.first += g.coeff * Rational(c.sign);
                slot.second += 1;
            }
        }
    }

    HSum out(key.m, key.n, d);
    for (const auto& [term, cw] : acc) {
        const auto& [c, t] = cw;
        if (c.is_zero()) continue;
        if (!(c == Rational(t)) && !(c == Rational(-t)))
            throw std::logic_error("rho_generator: incoherent orientation rule on a class");
        GraphTerm g = term;
        g.coeff = Rational(c.sign());
        out.add_term(g);
    }
    return cache.emplace(std::make_pair(key, d), std::move(out)).first->second;
}

WordSum induced_op(const ThetaFamily& f, const GenKey& key, const std::vector<CycWord>& words,
                   OpCache* cache) {
    if (!cache) return eval_graph(rho_generator(key, f.d()), f, words);
    auto memo_key = std::make_pair(key, words);
    auto it = cache->memo.find(memo_key);
    if (it != cache->memo.end()) return it->second;
    WordSum out = eval_graph(rho_generator(key, f.d()), f, words);
    cache->memo.emplace(std::move(memo_key), out);
    return out;
}

GenKey SplitRecord::lower(const GenKey&) const { return GenKey{(int)I1.size() + l, (int)J1.size(), b}; }
GenKey SplitRecord::upper(const GenKey&) const { return GenKey{(int)I2.size(), (int)J2.size() + l, c}; }

namespace {

void subsets(int n, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> in, rest;
        for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? in : rest).push_back(i + 1);
        out.push_back({std::move(in), std::move(rest)});
    }
}

}  // namespace

std::vector<SplitRecord> ibl_differential(const GenKey& key) {
    if (!key.valid()) throw std::invalid_argument("invalid generator key");
    std::vector<SplitRecord> records;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> msplits, nsplits;
    subsets(key.m, msplits);
    subsets(key.n, nsplits);
    for (int l = 1; l <= key.a + 1; ++l) {
        for (int b = 0; b + l - 1 <= key.a; ++b) {
            int c = key.a - b - l + 1;
            for (const auto& [I1, I2] : msplits)
                for (const auto& [J1, J2] : nsplits) {
                    SplitRecord r;
                    r.b = b;
                    r.c = c;
                    r.l = l;
                    r.I1 = I1;
                    r.I2 = I2;
                    r.J1 = J1;
                    r.J2 = J2;
                    if (r.lower(key).valid() && r.upper(key).valid()) records.push_back(std::move(r));
                }
        }
    }
    return records;
}

WordSum ibl_residual(const ThetaFamily& f, const GenKey& key, const std::vector<CycWord>& words,
                     OpCache* cache) {
    if ((int)words.size() != key.n) throw std::invalid_argument("arity mismatch");
    const int d = f.d();
    WordSum residual(key.m);

    for (const SplitRecord& r : ibl_differential(key)) {
        // epsilon_1: unshuffle the inputs into (J1 | J2), shifted word degrees.
        int eps1 = 0;
        for (int x : r.J2)
            for (int y : r.J1)
                if (x < y && shifted_word_parity(words[x - 1], d) &&
                    shifted_word_parity(words[y - 1], d))
                    ++eps1;

        std::vector<CycWord> lower_in;
        for (int j : r.J1) lower_in.push_back(words[j - 1]);
        WordSum inner = induced_op(f, r.lower(key), lower_in, cache);

        int j2_par = 0;
        for (int j : r.J2) j2_par ^= shifted_word_parity(words[j - 1], d);

        for (const auto& [v, ct] : inner.terms()) {
            const int n1 = (int)r.I1.size();
            // epsilon_2: move the l internal outputs past u_{J2}.
            int int_par = 0;
            for (int s = 0; s < r.l; ++s) int_par ^= shifted_word_parity(v[n1 + s], d);
            int eps2 = int_par & j2_par;
            // epsilon_3: the (odd) upper generator passes the I1 outputs.
            int eps3 = 0;
            for (int s = 0; s < n1; ++s) eps3 ^= shifted_word_parity(v[s], d);

            std::vector<CycWord> upper_in;
            for (int j : r.J2) upper_in.push_back(words[j - 1]);
            for (int s = 0; s < r.l; ++s) upper_in.push_back(v[n1 + s]);
            WordSum outer = induced_op(f, r.upper(key), upper_in, cache);

            for (const auto& [w, cs] : outer.terms()) {
                // epsilon_4: interleave (v_{I1}, w_{I2}) into label order.
                int eps4 = 0;
                for (size_t xi = 0; xi < r.I2.size(); ++xi)
                    for (size_t yi = 0; yi < r.I1.size(); ++yi)
                        if (r.I2[xi] < r.I1[yi] && shifted_word_parity(w[xi], d) &&
                            shifted_word_parity(v[yi], d))
                            ++eps4;

                std::vector<CycWord> tuple(key.m);
                for (size_t yi = 0; yi < r.I1.size(); ++yi) tuple[r.I1[yi] - 1] = v[yi];
                for (size_t xi = 0; xi < r.I2.size(); ++xi) tuple[r.I2[xi] - 1] = w[xi];

                int sign = ((eps1 + eps2 + eps3 + eps4) % 2 == 0) ? 1 : -1;
                residual.add(tuple, ct * cs * Rational(sign));
            }
        }
    }
    return residual;
}

HSum graph_delta_image(const GenKey& key, int d) {
    HSum acc(key.m, key.n, d);
    for (const SplitRecord& r : ibl_differential(key)) {
        const HSum& low = rho_generator(r.lower(key), d);
        const HSum& up = rho_generator(r.upper(key), d);
        const int n1 = (int)r.I1.size();
        const int j2 = (int)r.J2.size();

        HSum pads1 = low;
        for (int s = 0; s < j2; ++s) pads1 = hcompose(pads1, prop_unit(d));
        HSum pads2(0, 0, d);
        {
            HSum u(0, 0, d);
            bool first = true;
            for (int s = 0; s < n1; ++s) {
                u = first ? prop_unit(d) : hcompose(u, prop_unit(d));
                first = false;
            }
            pads2 = first ? up : hcompose(u, up);
        }

        // route labels: g1 boundaries line up with g2 vertices slot by slot
        std::vector<int> vperm1(key.n);
        for (size_t t = 0; t < r.J1.size(); ++t) vperm1[t] = r.J1[t];
        for (size_t t = 0; t < r.J2.size(); ++t) vperm1[r.J1.size() + t] = r.J2[t];
        std::vector<int> bperm1(n1 + r.l + j2);
        for (int t = 0; t < n1; ++t) bperm1[t] = t + 1;
        for (int t = 0; t < r.l; ++t) bperm1[n1 + t] = n1 + j2 + t + 1;
        for (int t = 0; t < j2; ++t) bperm1[n1 + r.l + t] = n1 + t + 1;
        std::vector<int> bperm2(key.m);
        for (size_t t = 0; t < r.I1.size(); ++t) bperm2[t] = r.I1[t];
        for (size_t t = 0; t < r.I2.size(); ++t) bperm2[r.I1.size() + t] = r.I2[t];

        HSum g1(n1 + r.l + j2, key.n, d);
        for (const auto& [t, c] : pads1.terms()) {
            GraphTerm g = relabel_boundaries(relabel_vertices(t, vperm1), bperm1);
            g.coeff = c;
            g1.add_term(g);
        }
        HSum g2(key.m, n1 + j2 + r.l, d);
        for (const auto& [t, c] : pads2.terms()) {
            GraphTerm g = relabel_boundaries(t, bperm2);
            g.coeff = c;
            g2.add_term(g);
        }
        acc.add_sum(vcompose(g2, g1));
    }
    return acc;
}

// ---- necklace / graded necklace ----

std::vector<Letter> expand_letter(const Letter& w) {
    if (!w.is_plain()) throw std::invalid_argument("expand_letter expects a plain letter");
    std::vector<Letter> out;
    for (int l = 0; l <= w.p + 1; ++l) out.push_back(expanded_letter(w.alpha, l, w.p));
    return out;
}

std::optional<std::pair<CycWord, int>> embed_u(const CycWord& plain) {
    std::vector<Letter> seq;
    for (const auto& w : plain.letters) {
        auto block = expand_letter(w);
        seq.insert(seq.end(), block.begin(), block.end());
    }
    return canonical_cyclic(seq);
}

namespace {

// Tries to read the letters as a concatenation of expansion blocks starting
// at position 0; returns the plain letters on success.
std::optional<std::vector<Letter>> read_blocks(const std::vector<Letter>& seq) {
    std::vector<Letter> plain;
    size_t i = 0;
    while (i < seq.size()) {
        const Letter& head = seq[i];
        if (head.is_plain() || head.l != 0) return std::nullopt;
        const int p = head.p;
        if (i + p + 2 > seq.size()) return std::nullopt;
        for (int l = 0; l <= p + 1; ++l) {
            const Letter& w = seq[i + l];
            if (w.is_plain() || w.alpha != head.alpha || w.p != p || w.l != l) return std::nullopt;
        }
        plain.push_back(plain_letter(head.alpha, p));
        i += p + 2;
    }
    return plain;
}

}  // namespace

std::optional<WordSum> project_u(const WordSum& ws) {
    WordSum out(ws.arity());
    for (const auto& [tuple, c] : ws.terms()) {
        std::vector<std::vector<Letter>> raw;
        Rational coeff = c;
        for (const CycWord& w : tuple) {
            const int L = w.length();
            std::vector<int> degs(L);
            for (int q = 0; q < L; ++q) degs[q] = w.letters[q].degree();
            bool found = L == 0;
            if (L == 0) raw.push_back({});
            for (int t = 0; t < L && !found; ++t) {
                std::vector<Letter> rot(w.letters.begin() + t, w.letters.end());
                rot.insert(rot.end(), w.letters.begin(), w.letters.begin() + t);
                auto plain = read_blocks(rot);
                if (plain) {
                    coeff *= Rational(rotation_sign(degs, t));
                    raw.push_back(std::move(*plain));
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
        out.add_raw(raw, coeff);
    }
    return out;
}

namespace {

void check_plain_alphabet(int N, const CycWord& w, bool degree_zero_only) {
    for (const auto& x : w.letters) {
        if (!x.is_plain() || x.alpha < 1 || x.alpha > N || x.p < 0 ||
            (degree_zero_only && x.p != 0))
            throw std::invalid_argument("letter outside the alphabet: " + x.str());
    }
}

WordSum necklace_via_doubling(int N, const GenKey& key, const std::vector<CycWord>& words) {
    ThetaFamily f = darboux_family(N);
    std::vector<CycWord> doubled;
    Rational sign(1);
    for (const auto& w : words) {
        auto e = embed_u(w);
        if (!e) return WordSum(key.m);
        doubled.push_back(e->first);
        sign *= Rational(e->second);
    }
    WordSum image = induced_op(f, key, doubled);
    auto back = project_u(image);
    if (!back) throw ClosureViolation("doubling-trick image left the (12)-subspace");
    WordSum out(key.m);
    out.add_sum(*back, sign);
    return out;
}

}  // namespace

WordSum necklace_bracket(int N, const CycWord& w1, const CycWord& w2) {
    check_plain_alphabet(N, w1, true);
    check_plain_alphabet(N, w2, true);
    return necklace_via_doubling(N, GenKey{1, 2, 0}, {w1, w2});
}

WordSum necklace_cobracket(int N, const CycWord& w) {
    check_plain_alphabet(N, w, true);
    return necklace_via_doubling(N, GenKey{2, 1, 0}, {w});
}

WordSum schedler_bracket_direct(const CycWord& u, const CycWord& v) {
    WordSum out(1);
    const int n = u.length(), m = v.length();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < m; ++t) {
            if (!(u.letters[s] == v.letters[t])) continue;
            std::vector<Letter> plus, minus;
            for (int q = 0; q < s; ++q) plus.push_back(u.letters[q]);
            for (int q = 1; q <= m; ++q) plus.push_back(v.letters[(t + q) % m]);
            for (int q = s + 1; q < n; ++q) plus.push_back(u.letters[q]);
            for (int q = 0; q < s; ++q) minus.push_back(u.letters[q]);
            for (int q = 0; q < m; ++q) minus.push_back(v.letters[(t + q) % m]);
            for (int q = s + 1; q < n; ++q) minus.push_back(u.letters[q]);
            out.add_raw({plus}, Rational(1));
            out.add_raw({minus}, Rational(-1));
        }
    return out;
}

WordSum schedler_cobracket_direct(const CycWord& u) {
    WordSum out(2);
    const int n = u.length();
    auto arc = [&](int from, int to) {  // positions from..to inclusive, cyclic; empty if span < 0
        std::vector<Letter> seq;
        int span = ((to - from) % n + n) % n;
        for (int q = 0; q <= span; ++q) seq.push_back(u.letters[(from + q) % n]);
        return seq;
    };
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t || !(u.letters[s] == u.letters[t])) continue;
            // (a_{s+1}..a_t) x (a_{t+1}..a_{s-1})  -  (a_{s+1}..a_{t-1}) x (a_{t+1}..a_s)
            std::vector<Letter> p1 = arc((s + 1) % n, t);
            std::vector<Letter> p2 = ((s - 1 - t) % n + n) % n == 0 ? std::vector<Letter>{}
                                                                    : arc((t + 1) % n, (s - 1 + n) % n);
            std::vector<Letter> m1 = ((t - 1 - s) % n + n) % n == 0 ? std::vector<Letter>{}
                                                                    : arc((s + 1) % n, (t - 1 + n) % n);
            std::vector<Letter> m2 = arc((t + 1) % n, s);
            out.add_raw({p1, p2}, Rational(1));
            out.add_raw({m1, m2}, Rational(-1));
        }
    // the empty-word correction: sum_i 1 ^ (u with letter i dropped)
    for (int i = 0; i < n; ++i) {
        std::vector<Letter> rest;
        for (int q = 0; q < n; ++q)
            if (q != i) rest.push_back(u.letters[q]);
        out.add_raw({{}, rest}, Rational(1));
        out.add_raw({rest, {}}, Rational(-1));
    }
    return out;
}

WordSum graded_necklace_op(int N, const GenKey& key, const std::vector<CycWord>& words) {
    for (const auto& w : words) check_plain_alphabet(N, w, false);
    ThetaFamily f = graded_family(N);
    std::vector<CycWord> expanded;
    Rational sign(1);
    for (const auto& w : words) {
        auto e = embed_u(w);
        if (!e) return WordSum(key.m);
        expanded.push_back(e->first);
        sign *= Rational(e->second);
    }
    WordSum image = induced_op(f, key, expanded);
    auto back = project_u(image);
    if (!back)
        throw ClosureViolation("graded necklace operation left the image of u");
    WordSum out(key.m);
    out.add_sum(*back, sign);
    return out;
}

}  // namespace rhyper
