#pragma once

#include <vector>

#include "rhyper/hypergraph.hpp"
#include "rhyper/theta.hpp"
#include "rhyper/words.hpp"

namespace rhyper {

// The state sum: evaluates an oriented hypergraph as a multilinear operator
// on tuples of cyclic words.
//
// A state assigns to every edge of each vertex a letter position of that
// vertex's word, injectively and respecting both cyclic orders. Its weight
// is the product over hyperedges of Theta_{|h|} on the selected letters (in
// sigma_1-cycle order); the leftover letters, grouped by corner and read
// along each boundary walk, form the output words. The sign is the Koszul
// sign (unshifted letter degrees) of regrouping the flattened inputs into
// (selected letters in orientation-carrier order, then outputs), times the
// shifted-degree Koszul sign of rearranging the carrier order into
// hyperedge blocks.
WordSum eval_graph(const GraphTerm& g, const ThetaFamily& f, const std::vector<CycWord>& words);
WordSum eval_graph(const HSum& h, const ThetaFamily& f, const std::vector<CycWord>& words);

// Applies eval_graph(g, f, -) to every tuple of a WordSum, linearly.
WordSum eval_on_sum(const HSum& g, const ThetaFamily& f, const WordSum& input);

// Operator-side composition: evaluates g1 on the words, then feeds each
// output tuple into g2. The functoriality oracle compares this against
// eval_graph(vcompose(g2, g1), f, words).
WordSum compose_operators(const ThetaFamily& f, const HSum& g2, const HSum& g1,
                          const std::vector<CycWord>& words);

}  // namespace rhyper
