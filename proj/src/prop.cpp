#include "rhyper/prop.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rhyper {

HSum prop_unit(int d) {
    HSum out(1, 1, d);
    out.add_term(unit_term(d));
    return out;
}

GraphTerm hcompose_terms(const GraphTerm& a, const GraphTerm& b) {
    if (a.d != b.d) throw std::invalid_argument("parity mismatch");
    GraphTerm g;
    g.d = a.d;
    g.edges = a.edges + b.edges;
    g.isolated = a.isolated + b.isolated;
    g.coeff = a.coeff * b.coeff;

    std::vector<int> s0(g.edges), s1(g.edges);
    for (int e = 0; e < a.edges; ++e) {
        s0[e] = a.sigma0(e);
        s1[e] = a.sigma1(e);
    }
    for (int e = 0; e < b.edges; ++e) {
        s0[a.edges + e] = a.edges + b.sigma0(e);
        s1[a.edges + e] = a.edges + b.sigma1(e);
    }
    g.sigma0 = Perm(s0);
    g.sigma1 = Perm(s1);

    auto remap_key = [&](int key, bool from_b) {
        if (from_b) return key < b.edges ? a.edges + key : g.edges + a.isolated + (key - b.edges);
        return key < a.edges ? key : g.edges + (key - a.edges);
    };
    for (const auto& [k, v] : a.vertex_labels) g.vertex_labels[remap_key(k, false)] = v;
    for (const auto& [k, v] : b.vertex_labels) g.vertex_labels[remap_key(k, true)] = v + a.n_in();
    for (const auto& [k, v] : a.boundary_labels) g.boundary_labels[remap_key(k, false)] = v;
    for (const auto& [k, v] : b.boundary_labels)
        g.boundary_labels[remap_key(k, true)] = v + a.m_out();

    g.orientation = a.orientation;
    for (int t : b.orientation) g.orientation.push_back(t + a.edges);
    validate_term(g);
    return g;
}

HSum hcompose(const HSum& g1, const HSum& g2) {
    if (g1.d() != g2.d() && !g1.empty() && !g2.empty())
        throw std::invalid_argument("parity mismatch");
    HSum out(g1.m_out() + g2.m_out(), g1.n_in() + g2.n_in(), g1.d());
    for (const auto& [t1, c1] : g1.terms())
        for (const auto& [t2, c2] : g2.terms()) {
            GraphTerm a = t1;
            a.coeff = c1;
            GraphTerm b = t2;
            b.coeff = c2;
            out.add_term(hcompose_terms(a, b));
        }
    return out;
}

namespace {

// One way of attaching the edge cycle of a g2-vertex to the corners of a
// g1-boundary: arcs[j] lists the attached g2-edges for corner j, in the
// order they are spliced after the corner's defining edge.
struct Gluing {
    std::vector<std::vector<int>> arcs;  // indexed by corner, g2 edge ids (unshifted)
    bool isolated_into_phantom = false;
    bool realizes_phantom = false;       // g2 cycle becomes the vertex cycle
    std::vector<int> phantom_cycle;      // g2 edge ids when realizes_phantom
    int inherited_label = 0;             // g2 boundary label for untouched g1 boundaries
    bool untouched = false;
};

// All morphisms of cyclically ordered sets from an r-element cycle to a
// q-corner boundary: cut the cycle into q aligned arcs. Enumerated as
// divider positions p_0 in [0,r), p_0 <= p_1 <= ... <= p_{q-1} <= p_0 + r.
void enumerate_arcs(const std::vector<int>& cycle, int q, std::vector<std::vector<std::vector<int>>>& out) {
    const int r = (int)cycle.size();
    std::vector<int> p(q);
    std::function<void(int)> rec = [&](int j) {
        if (j == q) {
            std::vector<std::vector<int>> arcs(q);
            for (int c = 0; c < q; ++c) {
                int hi = (c + 1 < q) ? p[c + 1] : p[0] + r;
                for (int t = p[c]; t < hi; ++t) arcs[c].push_back(cycle[t % r]);
            }
            out.push_back(std::move(arcs));
            return;
        }
        int lo = (j == 0) ? 0 : p[j - 1];
        int hi = (j == 0) ? r - 1 : p[0] + r;
        for (int v = lo; v <= hi; ++v) {
            p[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
}

}  // namespace

std::vector<GraphTerm> vcompose_terms(const GraphTerm& g2, const GraphTerm& g1) {
    if (g1.d != g2.d) throw std::invalid_argument("parity mismatch");
    const int m = g1.m_out();
    if (g2.n_in() != m) throw std::invalid_argument("arity mismatch");
    const int k1 = g1.edges;

    // g2 vertex cycles by label
    std::vector<std::vector<int>> vcycle(m);       // empty = isolated
    std::vector<bool> viso(m, false);
    {
        std::vector<std::vector<int>> cycles = g2.edges > 0 ? g2.sigma0.cycles()
                                                            : std::vector<std::vector<int>>{};
        for (const auto& cyc : cycles) vcycle[g2.vertex_labels.at(cyc.front()) - 1] = cyc;
        for (int t = 0; t < g2.isolated; ++t) viso[g2.vertex_labels.at(g2.edges + t) - 1] = true;
    }
    // g2 boundary label per g2 edge; phantom labels per isolated g2 vertex label
    std::vector<int> g2_edge_blabel(g2.edges, 0);
    if (g2.edges > 0)
        for (const auto& cyc : g2.sigma_inf().cycles())
            for (int e : cyc) g2_edge_blabel[e] = g2.boundary_labels.at(cyc.front());
    std::vector<int> phantom_label(m, 0);
    for (int t = 0; t < g2.isolated; ++t)
        phantom_label[g2.vertex_labels.at(g2.edges + t) - 1] =
            g2.boundary_labels.at(g2.edges + t);

    // g1 boundary data by label
    std::vector<int> g1_edge_blabel(k1, 0);
    std::vector<std::vector<int>> g1_bcycle(m);
    std::vector<int> g1_phantom_vkey(m, -1);  // isolated g1 vertex owning the boundary
    {
        auto cycles = g1.edges > 0 ? g1.sigma_inf().cycles() : std::vector<std::vector<int>>{};
        for (const auto& cyc : cycles) {
            int lbl = g1.boundary_labels.at(cyc.front());
            g1_bcycle[lbl - 1] = cyc;
            for (int e : cyc) g1_edge_blabel[e] = lbl;
        }
        for (int t = 0; t < g1.isolated; ++t)
            g1_phantom_vkey[g1.boundary_labels.at(g1.edges + t) - 1] = g1.edges + t;
    }

    // Per-boundary gluing options.
    std::vector<std::vector<Gluing>> options(m);
    std::vector<std::vector<Corner>> corners(m);
    for (int i = 0; i < m; ++i) {
        bool phantom = g1_phantom_vkey[i] >= 0;
        if (!phantom) corners[i] = boundary_corners(g1, i + 1);
        if (viso[i]) {
            Gluing g;
            g.isolated_into_phantom = phantom;
            g.untouched = !phantom;
            g.inherited_label = phantom_label[i];
            options[i].push_back(std::move(g));
            continue;
        }
        const auto& cyc = vcycle[i];
        if (phantom) {
            Gluing g;
            g.realizes_phantom = true;
            g.phantom_cycle = cyc;
            options[i].push_back(std::move(g));
            continue;
        }
        std::vector<std::vector<std::vector<int>>> arcsets;
        enumerate_arcs(cyc, (int)corners[i].size(), arcsets);
        for (auto& arcs : arcsets) {
            Gluing g;
            g.arcs = std::move(arcs);
            options[i].push_back(std::move(g));
        }
    }

    std::vector<GraphTerm> results;
    std::vector<size_t> choice(m, 0);
    while (true) {
        GraphTerm r;
        r.d = g1.d;
        r.edges = k1 + g2.edges;
        r.coeff = g1.coeff * g2.coeff;

        std::vector<int> s0(r.edges, -1), s1(r.edges);
        for (int e = 0; e < k1; ++e) {
            s0[e] = g1.sigma0(e);
            s1[e] = g1.sigma1(e);
        }
        for (int e = 0; e < g2.edges; ++e) s1[k1 + e] = k1 + g2.sigma1(e);

        std::vector<int> untouched_label(m, 0);  // by old g1 boundary label - 1

        for (int i = 0; i < m; ++i) {
            const Gluing& gl = options[i][choice[i]];
            if (gl.realizes_phantom) {
                for (size_t t = 0; t < gl.phantom_cycle.size(); ++t) {
                    int e = gl.phantom_cycle[t];
                    int nxt = gl.phantom_cycle[(t + 1) % gl.phantom_cycle.size()];
                    s0[k1 + e] = k1 + nxt;
                }
            } else if (gl.isolated_into_phantom) {
                // recorded below via iso_pairs
            } else if (gl.untouched) {
                untouched_label[i] = gl.inherited_label;
            } else {
                for (size_t j = 0; j < gl.arcs.size(); ++j) {
                    const auto& arc = gl.arcs[j];
                    if (arc.empty()) continue;
                    int a = corners[i][j].edge_a;
                    int b = corners[i][j].edge_b;
                    s0[a] = k1 + arc.front();
                    for (size_t t = 0; t + 1 < arc.size(); ++t) s0[k1 + arc[t]] = k1 + arc[t + 1];
                    s0[k1 + arc.back()] = b;
                }
            }
        }

        std::vector<std::pair<int, int>> iso_pairs;  // (vertex label, boundary label)
        for (int i = 0; i < m; ++i) {
            const Gluing& gl = options[i][choice[i]];
            if (gl.isolated_into_phantom)
                iso_pairs.push_back({g1.vertex_labels.at(g1_phantom_vkey[i]), gl.inherited_label});
        }
        r.isolated = (int)iso_pairs.size();

        r.sigma0 = Perm(s0);
        r.sigma1 = Perm(s1);

        // vertex labels: every real cycle of s0 descends from a g1 vertex (its
        // minimal g1 edge) or from a realized phantom vertex (all edges >= k1).
        for (const auto& cyc : r.edges > 0 ? r.sigma0.cycles() : std::vector<std::vector<int>>{}) {
            int mn = cyc.front();
            if (mn < k1) {
                // min edge of the untouched g1 cycle portion
                r.vertex_labels[mn] = g1.vertex_labels.at(mn);
            } else {
                // realized phantom: find which boundary produced it
                int g2edge = mn - k1;
                int label = -1;
                for (int i = 0; i < m; ++i) {
                    const Gluing& gl = options[i][choice[i]];
                    if (gl.realizes_phantom &&
                        std::find(gl.phantom_cycle.begin(), gl.phantom_cycle.end(), g2edge) !=
                            gl.phantom_cycle.end())
                        label = g1.vertex_labels.at(g1_phantom_vkey[i]);
                }
                if (label < 0) throw std::logic_error("vcompose: unmatched spliced vertex");
                r.vertex_labels[mn] = label;
            }
        }
        for (int t = 0; t < r.isolated; ++t) r.vertex_labels[r.edges + t] = iso_pairs[t].first;

        // boundary labels: inherited from g2
        std::set<int> used;
        for (const auto& cyc : r.edges > 0 ? r.sigma_inf().cycles()
                                           : std::vector<std::vector<int>>{}) {
            int label = 0;
            bool has_g2 = false;
            for (int e : cyc) {
                if (e >= k1) {
                    int lb = g2_edge_blabel[e - k1];
                    if (has_g2 && lb != label)
                        throw std::logic_error("vcompose: boundary inherits two g2 labels");
                    label = lb;
                    has_g2 = true;
                }
            }
            if (!has_g2) {
                int old = g1_edge_blabel[cyc.front()];
                label = untouched_label[old - 1];
                if (label == 0) throw std::logic_error("vcompose: stray label-free boundary");
            }
            r.boundary_labels[cyc.front()] = label;
            if (!used.insert(label).second)
                throw std::logic_error("vcompose: duplicate boundary label");
        }
        for (int t = 0; t < r.isolated; ++t) {
            r.boundary_labels[r.edges + t] = iso_pairs[t].second;
            if (!used.insert(iso_pairs[t].second).second)
                throw std::logic_error("vcompose: duplicate boundary label");
        }
        if ((int)used.size() != g2.m_out())
            throw std::logic_error("vcompose: boundary count differs from p");

        r.orientation = g1.orientation;
        for (int t : g2.orientation) r.orientation.push_back(t + k1);
        validate_term(r);
        results.push_back(std::move(r));

        size_t i = 0;
        while (i < (size_t)m) {
            if (++choice[i] < options[i].size()) break;
            choice[i++] = 0;
        }
        if (i == (size_t)m) break;
    }
    return results;
}

HSum vcompose(const HSum& g2, const HSum& g1) {
    if (g1.d() != g2.d() && !g1.empty() && !g2.empty())
        throw std::invalid_argument("parity mismatch");
    if (g2.n_in() != g1.m_out() && !g1.empty() && !g2.empty())
        throw std::invalid_argument("arity mismatch");
    HSum out(g2.m_out(), g1.n_in(), g1.empty() ? g2.d() : g1.d());
    for (const auto& [t2, c2] : g2.terms())
        for (const auto& [t1, c1] : g1.terms()) {
            GraphTerm a = t2;
            a.coeff = c2;
            GraphTerm b = t1;
            b.coeff = c1;
            for (const auto& term : vcompose_terms(a, b)) out.add_term(term);
        }
    return out;
}

GraphTerm relabel_boundaries(const GraphTerm& g, const std::vector<int>& perm) {
    GraphTerm out = g;
    for (auto& [k, v] : out.boundary_labels) v = perm.at(v - 1);
    validate_term(out);
    return out;
}

GraphTerm relabel_vertices(const GraphTerm& g, const std::vector<int>& perm) {
    GraphTerm out = g;
    for (auto& [k, v] : out.vertex_labels) v = perm.at(v - 1);
    validate_term(out);
    return out;
}

}  // namespace rhyper
