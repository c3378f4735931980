#include "rhyper/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rhyper {

namespace {

struct VertexData {
    int label = 0;
    std::vector<int> cycle;  // edges in sigma_0 order from the key; empty = isolated
    int word_len = 0;
};

// Injective cyclic-order-preserving maps from an r-edge vertex into an
// L-letter word: anchor image q, then increasing offsets for the rest.
void enumerate_states(int r, int L, std::vector<std::vector<int>>& out) {
    if (r == 0) {
        out.push_back({});
        return;
    }
    std::vector<int> offs(r - 1);
    for (int q = 0; q < L; ++q) {
        std::function<void(int, int)> rec = [&](int idx, int lo) {
            if (idx == r - 1) {
                std::vector<int> pos(r);
                pos[0] = q;
                for (int t = 0; t < r - 1; ++t) pos[t + 1] = (q + offs[t]) % L;
                out.push_back(std::move(pos));
                return;
            }
            for (int o = lo; o <= L - 1 - (r - 2 - idx); ++o) {
                offs[idx] = o;
                rec(idx + 1, o + 1);
            }
        };
        rec(0, 1);
    }
}

int inversion_sign(const std::vector<int>& order, const std::vector<char>& odd) {
    int inv = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j] && odd[order[i]] && odd[order[j]]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

WordSum eval_graph(const GraphTerm& g, const ThetaFamily& f, const std::vector<CycWord>& words) {
    const int n = g.n_in();
    const int m = g.m_out();
    if ((int)words.size() != n) throw std::invalid_argument("arity mismatch");
    if (((f.d() - g.d) % 2) != 0) throw std::invalid_argument("parity mismatch");
    WordSum result(m);
    if (g.coeff.is_zero()) return result;

    // Vertices by label.
    std::vector<VertexData> verts(n);
    std::vector<int> edge_vertex(g.edges, -1);  // vertex index (label-1) of each edge
    std::vector<int> edge_slot(g.edges, -1);    // position of the edge in its cycle
    {
        auto cycles = g.edges > 0 ? g.sigma0.cycles() : std::vector<std::vector<int>>{};
        for (const auto& cyc : cycles) {
            int i = g.vertex_labels.at(cyc.front()) - 1;
            verts[i].cycle = cyc;
            for (size_t t = 0; t < cyc.size(); ++t) {
                edge_vertex[cyc[t]] = i;
                edge_slot[cyc[t]] = (int)t;
            }
        }
        for (int t = 0; t < g.isolated; ++t) {
            int i = g.vertex_labels.at(g.edges + t) - 1;
            verts[i].label = i + 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        verts[i].label = i + 1;
        verts[i].word_len = words[i].length();
        if ((int)verts[i].cycle.size() > verts[i].word_len) return result;  // zero rule
    }

    // Flattened input letters.
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + verts[i].word_len;
    const int total = offset[n];
    std::vector<char> odd_unshifted(total), odd_shifted(total);
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < verts[i].word_len; ++q) {
            int deg = words[i].letters[q].degree();
            odd_unshifted[offset[i] + q] = deg & 1;
            odd_shifted[offset[i] + q] = (deg - f.d()) & 1;
        }

    // Hyperedge blocks (sorted by min edge) and the orientation carrier as an
    // edge sequence.
    std::vector<std::vector<int>> blocks;
    if (g.edges > 0)
        blocks = g.sigma1.cycles();
    std::vector<int> carrier_edges;
    if (g.d % 2 != 0) {
        carrier_edges = g.orientation;
    } else {
        std::map<int, const std::vector<int>*> by_key;
        for (const auto& b : blocks) by_key[b.front()] = &b;
        for (int h : g.orientation)
            for (int e : *by_key.at(h)) carrier_edges.push_back(e);
    }

    // Boundary corner walks by label; -1 vertex key marks a phantom boundary.
    std::vector<std::vector<Corner>> walks(m);
    std::vector<int> phantom_vertex(m, -1);
    for (const auto& [key, label] : g.boundary_labels) {
        if (key >= g.edges)
            phantom_vertex[label - 1] = g.vertex_labels.at(key) - 1;
        else
            walks[label - 1] = boundary_corners(g, label);
    }

    // Per-vertex admissible states.
    std::vector<std::vector<std::vector<int>>> states(n);
    for (int i = 0; i < n; ++i)
        enumerate_states((int)verts[i].cycle.size(), verts[i].word_len, states[i]);

    std::vector<size_t> choice(n, 0);
    std::vector<int> sel_flat(g.edges);   // edge -> flat letter index
    std::vector<char> selected(total);

    while (true) {
        std::fill(selected.begin(), selected.end(), 0);
        for (int i = 0; i < n; ++i) {
            const auto& pos = states[i][choice[i]];
            for (size_t t = 0; t < pos.size(); ++t) {
                int flat = offset[i] + pos[t];
                sel_flat[verts[i].cycle[t]] = flat;
                selected[flat] = 1;
            }
        }

        // Weight: product of Theta over hyperedge blocks.
        Rational lambda(1);
        for (const auto& blk : blocks) {
            std::vector<Letter> args;
            args.reserve(blk.size());
            for (int e : blk) {
                int flat = sel_flat[e];
                int i = edge_vertex[e];
                args.push_back(words[i].letters[flat - offset[i]]);
            }
            lambda *= f.eval(args);
            if (lambda.is_zero()) break;
        }

        if (!lambda.is_zero()) {
            // Output words.
            std::vector<std::vector<Letter>> raw(m);
            std::vector<std::vector<int>> out_flat(m);
            for (int j = 0; j < m; ++j) {
                if (phantom_vertex[j] >= 0) {
                    int i = phantom_vertex[j];
                    for (int q = 0; q < verts[i].word_len; ++q) {
                        raw[j].push_back(words[i].letters[q]);
                        out_flat[j].push_back(offset[i] + q);
                    }
                    continue;
                }
                for (const Corner& c : walks[j]) {
                    int i = edge_vertex[c.edge_a];
                    int L = verts[i].word_len;
                    int from = sel_flat[c.edge_a] - offset[i];
                    int to = sel_flat[c.edge_b] - offset[i];
                    for (int q = (from + 1) % L; q != to; q = (q + 1) % L) {
                        raw[j].push_back(words[i].letters[q]);
                        out_flat[j].push_back(offset[i] + q);
                    }
                }
            }

            // kappa_1: inputs -> (carrier-ordered selections, outputs), unshifted.
            std::vector<int> order;
            order.reserve(total);
            for (int e : carrier_edges) order.push_back(sel_flat[e]);
            for (int j = 0; j < m; ++j)
                for (int flat : out_flat[j]) order.push_back(flat);
            int kappa1 = inversion_sign(order, odd_unshifted);

            // kappa_2: carrier order -> hyperedge blocks, shifted degrees.
            int kappa2 = 1;
            if (g.edges > 0) {
                std::vector<int> carrier_pos(g.edges);
                for (size_t t = 0; t < carrier_edges.size(); ++t)
                    carrier_pos[carrier_edges[t]] = (int)t;
                std::vector<int> order2;
                order2.reserve(g.edges);
                std::vector<char> odd2(g.edges);
                for (size_t t = 0; t < carrier_edges.size(); ++t)
                    odd2[t] = odd_shifted[sel_flat[carrier_edges[t]]];
                for (const auto& blk : blocks)
                    for (int e : blk) order2.push_back(carrier_pos[e]);
                kappa2 = inversion_sign(order2, odd2);
            }

            result.add_raw(raw, g.coeff * lambda * Rational(kappa1 * kappa2));
        }

        int i = 0;
        while (i < n) {
            if (++choice[i] < states[i].size()) break;
            choice[i++] = 0;
        }
        if (i == n) break;
    }
    return result;
}

WordSum eval_graph(const HSum& h, const ThetaFamily& f, const std::vector<CycWord>& words) {
    WordSum out(h.m_out());
    for (const auto& [t, c] : h.terms()) {
        GraphTerm g = t;
        g.coeff = c;
        out.add_sum(eval_graph(g, f, words));
    }
    return out;
}

WordSum eval_on_sum(const HSum& g, const ThetaFamily& f, const WordSum& input) {
    WordSum out(g.m_out());
    for (const auto& [tuple, c] : input.terms()) out.add_sum(eval_graph(g, f, tuple), c);
    return out;
}

WordSum compose_operators(const ThetaFamily& f, const HSum& g2, const HSum& g1,
                          const std::vector<CycWord>& words) {
    return eval_on_sum(g2, f, eval_graph(g1, f, words));
}

}  // namespace rhyper
