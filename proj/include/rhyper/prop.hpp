#pragma once

#include <vector>

#include "rhyper/hypergraph.hpp"

namespace rhyper {

// The unit of RH_d: the single-white-vertex graph, signature (1,1).
HSum prop_unit(int d);

// Disjoint union: edge indices, vertex labels and boundary labels of the
// second factor are shifted; orientation carriers concatenate (g1 then g2).
HSum hcompose(const HSum& g1, const HSum& g2);
GraphTerm hcompose_terms(const GraphTerm& a, const GraphTerm& b);

// Vertical composition RH_d(p,m) x RH_d(m,n) -> RH_d(p,n): for every i the
// i-th vertex of g2 is erased and its half-edges are attached to the corners
// of the i-th boundary of g1, summing over all morphisms of cyclically
// ordered sets. Boundary labels are inherited from g2 and asserted.
HSum vcompose(const HSum& g2, const HSum& g1);
std::vector<GraphTerm> vcompose_terms(const GraphTerm& g2, const GraphTerm& g1);

// Pure label permutations (no sign; orientation is untouched).
// perm maps old label -> new label, 1-indexed: perm[old] = new.
GraphTerm relabel_boundaries(const GraphTerm& g, const std::vector<int>& perm);
GraphTerm relabel_vertices(const GraphTerm& g, const std::vector<int>& perm);

}  // namespace rhyper
