#pragma once

#include <map>
#include <string>
#include <vector>

#include "rhyper/holieb.hpp"
#include "rhyper/mcstar.hpp"
#include "rhyper/theta.hpp"
#include "rhyper/words.hpp"

namespace rhyper {

struct Failure {
    std::string instance;
    std::string residue;
};

struct Report {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::string> params;

    bool pass() const { return failures.empty(); }
    void fail(const std::string& instance, const std::string& residue);
};

// All distinct nonzero canonical cyclic words of exactly the given length.
std::vector<CycWord> basis_words(const std::vector<Letter>& alphabet, int length);
// Length 0..max_len (the empty word included when include_empty).
std::vector<CycWord> basis_words_upto(const std::vector<Letter>& alphabet, int max_len,
                                      bool include_empty);

// The doubled degree-0 alphabet of the Darboux family / the graded alphabet
// with shifts up to pmax.
std::vector<Letter> doubled_alphabet(int N);
std::vector<Letter> graded_alphabet(int N, int pmax);

// Lie bialgebra axioms for a d=1 family on the doubled alphabet: co-Jacobi,
// Jacobi, the 5-term compatibility and involutivity, as classical residues
// and as differential residues of the keys (3,1,0), (1,3,0), (2,2,0),
// (1,1,1). Exhaustive over word tuples of total length <= max_len.
Report check_lieb_axioms(const ThetaFamily& family, int N, int max_len);

// Operator-level chain map: ibl_residual must vanish for every key with
// m+n+2a <= max_mna on word tuples of total length <= max_total_len over the
// given alphabet. Graph-level: graph_delta_image must be the empty HSum for
// keys with at most graph_max_edges generator edges.
Report check_ibl_relations(const ThetaFamily& family, const std::vector<Letter>& alphabet,
                           int max_mna, int max_total_len, int graph_max_edges);

// eval_graph(vcompose(g2,g1)) vs compose_operators on random pairs.
Report check_functoriality(const ThetaFamily& family, int samples, unsigned long long seed);

// Schedler equivalence: doubling-trick bracket/cobracket against the direct
// formulas on all plain degree-0 words of total length <= max_len.
Report check_schedler(int N, int max_len);

// Closure, weight drop 1, homological shift (m+n+2a)-3 and the degree-0
// Schedler reduction for the graded necklace structure.
Report check_closure_weight(int N, int max_mna, int max_plain_len, int pmax);

// Star-product axioms and the Darboux-encoded Maurer-Cartan element.
Report check_mc_suite(unsigned long long seed);

// The Darboux bracket/cobracket encoded as structure constants on the word
// basis of weight <= max_weight: a degree-3 series whose Maurer-Cartan
// residue must vanish in the exactly-computed components.
struct McEncoding {
    PolyContextPtr ctx;
    std::vector<CycWord> basis;  // variable i is x_{basis[i]}
    PolySeries gamma;
};
McEncoding darboux_mc_encoding(int N, int max_weight);
// residue restricted to components with total input weight <= max_in_weight,
// where the truncated encoding agrees with the full structure
PolySeries mc_residue_exact_part(const McEncoding& enc, const PolySeries& residue,
                                 int max_in_weight);

}  // namespace rhyper
