#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhyper/perm.hpp"
#include "rhyper/rational.hpp"

namespace rhyper {

// A corner of a vertex: the gap between edge_a and its sigma_0-successor
// edge_b. Boundaries traverse cyclic sequences of corners. An edgeless
// vertex has the single formal full-circle corner (edge_a == edge_b == -1).
struct Corner {
    int vertex_key;  // min edge of the sigma_0-cycle, or edges+t for isolated
    int edge_a;
    int edge_b;
};

// A labeled oriented ribbon hypergraph with a rational coefficient.
//
// Edges are 0..edges-1; sigma_0 cycles are the vertices, sigma_1 cycles the
// hyperedges, sigma_inf = sigma_0^-1 o sigma_1 cycles the boundaries.
// Vertices and boundaries are keyed by the minimal edge of their cycle.
//
// Edgeless vertices (the unit graph and horizontal products with it) are
// carried separately: isolated counts them, and both label maps use keys
// edges+0, ..., edges+isolated-1 for them. Each isolated vertex owns one
// phantom boundary under the same key.
//
// Orientation: for d odd a total order on edges, for d even a total order on
// hyperedge keys. Gamma = -Gamma^opp is imposed by canonicalize().
struct GraphTerm {
    int edges = 0;
    Perm sigma0;
    Perm sigma1;
    int isolated = 0;
    std::map<int, int> vertex_labels;    // key -> 1..n
    std::map<int, int> boundary_labels;  // key -> 1..m
    int d = 1;
    std::vector<int> orientation;
    Rational coeff = Rational(1);

    int n_in() const { return (int)vertex_labels.size(); }
    int m_out() const { return (int)boundary_labels.size(); }

    Perm sigma_inf() const;

    std::string str() const;
};

// Validating constructor; throws std::invalid_argument with a description.
GraphTerm build_term(int edges, Perm sigma0, Perm sigma1, std::map<int, int> vertex_labels,
                     std::map<int, int> boundary_labels, int d, std::vector<int> orientation,
                     Rational coeff, int isolated = 0);

void validate_term(const GraphTerm& g);

// The distinguished unit graph: one vertex, one boundary, no edges.
GraphTerm unit_term(int d);

// Cycles of sigma_inf in canonical order, then one empty cycle per isolated
// vertex. List length is m_out().
std::vector<std::vector<int>> boundaries(const GraphTerm& g);

// (d+1)*#H - d*#E
int degree(const GraphTerm& g);

int hyperedge_count(const GraphTerm& g);

// Vertex corners of the boundary with the given label, in boundary-walk
// order: edge e in the walk emits the corner (sigma_inf(e), sigma0(sigma_inf(e))).
std::vector<Corner> boundary_corners(const GraphTerm& g, int boundary_label);

// Corners of one vertex in sigma_0-cycle order starting at the key edge.
std::vector<Corner> vertex_corners(const GraphTerm& g, int vertex_key);

struct CanonResult {
    bool zero = false;
    GraphTerm term;  // canonical layout, canonical orientation, coeff 1
    int sign = 1;
};

// Canonical form under edge relabelings that preserve vertex labels and the
// sigma_0-cycle structure: vertices laid out in label order as consecutive
// index blocks, one rotation choice per vertex; the lexicographically
// minimal (sigma_1 images, boundary-label array) encoding wins. The sign
// relates the input orientation to the canonical one. zero is set when two
// relabelings reach the minimal encoding with opposite signs.
CanonResult canonicalize(const GraphTerm& g);

// Identity of a canonical term (coefficient and orientation stripped).
struct TermLess {
    bool operator()(const GraphTerm& a, const GraphTerm& b) const;
};

// Formal rational combination of canonical oriented hypergraphs sharing one
// (m, n, d) signature. The empty sum is the zero of RH_d(m, n).
class HSum {
public:
    HSum() = default;
    HSum(int m, int n, int d) : m_(m), n_(n), d_(d) {}

    int m_out() const { return m_; }
    int n_in() const { return n_; }
    int d() const { return d_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Canonicalizes the term and accumulates coeff * sign.
    void add_term(const GraphTerm& g);
    void add_sum(const HSum& other, const Rational& scale = Rational(1));
    void scale(const Rational& c);

    const std::map<GraphTerm, Rational, TermLess>& terms() const { return terms_; }

    friend bool operator==(const HSum& a, const HSum& b);

    std::string str() const;

private:
    int m_ = 0, n_ = 0, d_ = 1;
    std::map<GraphTerm, Rational, TermLess> terms_;
};

// Canonicalizes a list of terms into an HSum; throws on mixed signatures.
HSum hsum_normalize(const std::vector<GraphTerm>& terms);

}  // namespace rhyper
