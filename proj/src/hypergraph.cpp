#include "rhyper/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rhyper {

namespace {

std::vector<int> cycle_of(const Perm& p, int start) {
    std::vector<int> cyc;
    int j = start;
    do {
        cyc.push_back(j);
        j = p(j);
    } while (j != start);
    return cyc;
}

std::vector<int> cycle_keys(const Perm& p) {
    std::vector<int> keys;
    for (const auto& c : p.cycles()) keys.push_back(c.front());
    return keys;
}

void check_labels(const std::map<int, int>& labels, const std::vector<int>& keys, int iso_base,
                  int iso_count, const char* what) {
    std::set<int> expect(keys.begin(), keys.end());
    for (int t = 0; t < iso_count; ++t) expect.insert(iso_base + t);
    if (labels.size() != expect.size())
        throw std::invalid_argument(std::string(what) + " labels do not match cycle count");
    std::set<int> values;
    for (const auto& [key, label] : labels) {
        if (!expect.count(key))
            throw std::invalid_argument(std::string(what) + " label key " + std::to_string(key) +
                                        " is not a cycle key");
        values.insert(label);
    }
    for (int v = 1; v <= (int)expect.size(); ++v)
        if (!values.count(v))
            throw std::invalid_argument(std::string(what) + " labels are not a bijection onto 1.." +
                                        std::to_string(expect.size()));
}

}  // namespace

Perm GraphTerm::sigma_inf() const { return compose(sigma0.inverse(), sigma1); }

std::string GraphTerm::str() const {
    std::ostringstream os;
    os << coeff.str() << "*{E=" << edges;
    os << " s0=[";
    for (int i = 0; i < edges; ++i) os << (i ? "," : "") << sigma0(i);
    os << "] s1=[";
    for (int i = 0; i < edges; ++i) os << (i ? "," : "") << sigma1(i);
    os << "] V{";
    for (const auto& [k, v] : vertex_labels) os << k << ":" << v << " ";
    os << "} B{";
    for (const auto& [k, v] : boundary_labels) os << k << ":" << v << " ";
    os << "} d=" << d << " or=[";
    for (size_t i = 0; i < orientation.size(); ++i) os << (i ? "," : "") << orientation[i];
    os << "]}";
    return os.str();
}

void validate_term(const GraphTerm& g) {
    if (g.edges < 0 || g.isolated < 0) throw std::invalid_argument("negative counts");
    if (g.sigma0.size() != g.edges || g.sigma1.size() != g.edges)
        throw std::invalid_argument("permutation size does not match edge count");
    if (g.edges == 0 && g.isolated == 0)
        throw std::invalid_argument("graph needs at least one vertex");

    check_labels(g.vertex_labels, cycle_keys(g.sigma0), g.edges, g.isolated, "vertex");
    check_labels(g.boundary_labels, cycle_keys(g.sigma_inf()), g.edges, g.isolated, "boundary");

    std::vector<int> want;
    if (g.d % 2 != 0) {
        for (int e = 0; e < g.edges; ++e) want.push_back(e);
    } else {
        want = cycle_keys(g.sigma1);
    }
    std::vector<int> have = g.orientation;
    std::sort(have.begin(), have.end());
    if (have != want) throw std::invalid_argument("malformed orientation");
}

GraphTerm build_term(int edges, Perm sigma0, Perm sigma1, std::map<int, int> vertex_labels,
                     std::map<int, int> boundary_labels, int d, std::vector<int> orientation,
                     Rational coeff, int isolated) {
    GraphTerm g;
    g.edges = edges;
    g.sigma0 = std::move(sigma0);
    g.sigma1 = std::move(sigma1);
    g.isolated = isolated;
    g.vertex_labels = std::move(vertex_labels);
    g.boundary_labels = std::move(boundary_labels);
    g.d = d;
    g.orientation = std::move(orientation);
    g.coeff = coeff;
    validate_term(g);
    return g;
}

GraphTerm unit_term(int d) {
    GraphTerm g;
    g.edges = 0;
    g.isolated = 1;
    g.vertex_labels = {{0, 1}};
    g.boundary_labels = {{0, 1}};
    g.d = d;
    return g;
}

std::vector<std::vector<int>> boundaries(const GraphTerm& g) {
    std::vector<std::vector<int>> out;
    if (g.edges > 0) out = g.sigma_inf().cycles();
    for (int t = 0; t < g.isolated; ++t) out.emplace_back();
    return out;
}

int hyperedge_count(const GraphTerm& g) {
    return g.edges == 0 ? 0 : (int)g.sigma1.cycles().size();
}

int degree(const GraphTerm& g) { return (g.d + 1) * hyperedge_count(g) - g.d * g.edges; }

std::vector<Corner> vertex_corners(const GraphTerm& g, int vertex_key) {
    if (vertex_key >= g.edges) return {Corner{vertex_key, -1, -1}};
    std::vector<Corner> out;
    for (int a : cycle_of(g.sigma0, vertex_key)) out.push_back(Corner{vertex_key, a, g.sigma0(a)});
    return out;
}

std::vector<Corner> boundary_corners(const GraphTerm& g, int boundary_label) {
    int key = -1;
    for (const auto& [k, label] : g.boundary_labels)
        if (label == boundary_label) key = k;
    if (key < 0) throw std::invalid_argument("unknown boundary id");
    if (key >= g.edges) return {Corner{key, -1, -1}};

    Perm sinf = g.sigma_inf();
    std::vector<Corner> out;
    std::vector<int> vkey(g.edges, -1);
    for (const auto& cyc : g.sigma0.cycles())
        for (int e : cyc) vkey[e] = cyc.front();
    for (int e : cycle_of(sinf, key)) {
        int a = sinf(e);
        out.push_back(Corner{vkey[a], a, g.sigma0(a)});
    }
    return out;
}

CanonResult canonicalize(const GraphTerm& g) {
    validate_term(g);
    CanonResult res;
    res.term.edges = g.edges;
    res.term.isolated = g.isolated;
    res.term.d = g.d;
    res.term.coeff = Rational(1);

    // Isolated vertices: keep their (vertex label, boundary label) pairing,
    // slots ordered by vertex label.
    {
        std::vector<std::pair<int, int>> iso;
        for (int t = 0; t < g.isolated; ++t)
            iso.push_back({g.vertex_labels.at(g.edges + t), g.boundary_labels.at(g.edges + t)});
        std::sort(iso.begin(), iso.end());
        for (int t = 0; t < g.isolated; ++t) {
            res.term.vertex_labels[g.edges + t] = iso[t].first;
            res.term.boundary_labels[g.edges + t] = iso[t].second;
        }
    }

    if (g.edges == 0) {
        res.sign = 1;
        return res;
    }

    // Real vertices in label order become consecutive index blocks.
    std::vector<std::vector<int>> vcycles(g.vertex_labels.size());
    for (const auto& cyc : g.sigma0.cycles()) vcycles[g.vertex_labels.at(cyc.front()) - 1] = cyc;
    std::vector<std::vector<int>> blocks;
    std::vector<int> base;
    int pos = 0;
    for (const auto& cyc : vcycles) {
        if (cyc.empty()) continue;  // isolated label slot
        base.push_back(pos);
        blocks.push_back(cyc);
        pos += (int)cyc.size();
    }

    // Per-edge boundary label of the input graph.
    std::vector<int> blab(g.edges);
    for (const auto& cyc : g.sigma_inf().cycles())
        for (int e : cyc) blab[e] = g.boundary_labels.at(cyc.front());

    std::vector<int> new_sigma0(g.edges);
    for (size_t v = 0; v < blocks.size(); ++v) {
        int r = (int)blocks[v].size();
        for (int j = 0; j < r; ++j) new_sigma0[base[v] + j] = base[v] + (j + 1) % r;
    }

    std::vector<int> rot(blocks.size(), 0);
    std::vector<int> best_s1, best_bl;
    int best_sign = 0;
    bool zero = false;

    while (true) {
        // relabeling pi: old edge -> new index
        std::vector<int> pi(g.edges);
        for (size_t v = 0; v < blocks.size(); ++v) {
            int r = (int)blocks[v].size();
            for (int j = 0; j < r; ++j) pi[blocks[v][(rot[v] + j) % r]] = base[v] + j;
        }
        std::vector<int> s1(g.edges), bl(g.edges);
        for (int e = 0; e < g.edges; ++e) {
            s1[pi[e]] = pi[g.sigma1(e)];
            bl[pi[e]] = blab[e];
        }
        int sign;
        if (g.d % 2 != 0) {
            std::vector<int> img;
            img.reserve(g.orientation.size());
            for (int e : g.orientation) img.push_back(pi[e]);
            sign = sequence_parity(img);
        } else {
            Perm new_s1{std::vector<int>(s1)};
            std::vector<int> new_key(g.edges);
            for (const auto& cyc : new_s1.cycles())
                for (int e : cyc) new_key[e] = cyc.front();
            std::vector<int> img;
            img.reserve(g.orientation.size());
            for (int h : g.orientation) img.push_back(new_key[pi[h]]);
            sign = sequence_parity(img);
        }

        if (best_sign == 0 || std::make_pair(s1, bl) < std::make_pair(best_s1, best_bl)) {
            best_s1 = s1;
            best_bl = bl;
            best_sign = sign;
            zero = false;
        } else if (s1 == best_s1 && bl == best_bl && sign != best_sign) {
            zero = true;
        }

        // next rotation combo
        size_t v = 0;
        while (v < rot.size()) {
            if (++rot[v] < (int)blocks[v].size()) break;
            rot[v++] = 0;
        }
        if (v == rot.size()) break;
    }

    if (zero) {
        res.zero = true;
        return res;
    }

    res.term.sigma0 = Perm(new_sigma0);
    res.term.sigma1 = Perm(best_s1);
    for (size_t v = 0; v < blocks.size(); ++v) {
        int label = g.vertex_labels.at(blocks[v].front());
        res.term.vertex_labels[base[v]] = label;
    }
    for (const auto& cyc : res.term.sigma_inf().cycles())
        res.term.boundary_labels[cyc.front()] = best_bl[cyc.front()];
    if (g.d % 2 != 0) {
        for (int e = 0; e < g.edges; ++e) res.term.orientation.push_back(e);
    } else {
        res.term.orientation = cycle_keys(res.term.sigma1);
    }
    res.sign = best_sign;
    validate_term(res.term);
    return res;
}

bool TermLess::operator()(const GraphTerm& a, const GraphTerm& b) const {
    auto key = [](const GraphTerm& g) {
        return std::make_tuple(g.edges, g.isolated, g.d, std::cref(g.sigma0.images()),
                               std::cref(g.sigma1.images()), std::cref(g.vertex_labels),
                               std::cref(g.boundary_labels));
    };
    return key(a) < key(b);
}

void HSum::add_term(const GraphTerm& g) {
    if (g.n_in() != n_ || g.m_out() != m_ || g.d != d_)
        throw std::invalid_argument("term signature does not match HSum");
    if (g.coeff.is_zero()) return;
    CanonResult c = canonicalize(g);
    if (c.zero) return;
    Rational delta = g.coeff * Rational(c.sign);
    auto it = terms_.find(c.term);
    if (it == terms_.end()) {
        terms_.emplace(c.term, delta);
    } else {
        it->second += delta;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HSum::add_sum(const HSum& other, const Rational& scale) {
    if (other.empty()) return;
    if (other.m_ != m_ || other.n_ != n_ || other.d_ != d_)
        throw std::invalid_argument("HSum signature mismatch");
    for (const auto& [t, c] : other.terms_) {
        GraphTerm g = t;
        g.coeff = c * scale;
        add_term(g);
    }
}

void HSum::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [t, v] : terms_) v *= c;
}

bool operator==(const HSum& a, const HSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    TermLess less;
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

std::string HSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
        if (!out.empty()) out += "\n+ ";
        out += c.str() + " * " + t.str();
    }
    return out;
}

HSum hsum_normalize(const std::vector<GraphTerm>& terms) {
    if (terms.empty()) return HSum();
    HSum out(terms.front().m_out(), terms.front().n_in(), terms.front().d);
    for (const auto& t : terms) out.add_term(t);
    return out;
}

}  // namespace rhyper
