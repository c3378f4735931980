#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rhyper/hypergraph.hpp"
#include "rhyper/prop.hpp"
#include "rhyper/rep.hpp"
#include "rhyper/theta.hpp"
#include "rhyper/words.hpp"

namespace rhyper {

// A generator corolla of the homotopy involutive Lie bialgebra prop:
// m outputs, n inputs, weight a; valid when m,n >= 1, a >= 0 and
// (m,n,a) != (1,1,0). Degree 1 - d(m+n+2a-2).
struct GenKey {
    int m = 1, n = 1, a = 0;

    bool valid() const { return m >= 1 && n >= 1 && a >= 0 && m + n + a >= 3; }
    int degree(int d) const { return 1 - d * (m + n + 2 * a - 2); }
    int num_edges() const { return n + m + 2 * a - 1; }

    friend bool operator<(const GenKey& x, const GenKey& y) {
        return std::tie(x.m, x.n, x.a) < std::tie(y.m, y.n, y.a);
    }
    friend bool operator==(const GenKey& x, const GenKey& y) {
        return x.m == y.m && x.n == y.n && x.a == y.a;
    }
};

// The generator image: all one-hyperedge hypergraphs with n+m+2a-1 edges,
// n vertices (every vertex hit) and exactly m boundaries, over all vertex
// and boundary labelings in the shifted sign convention. Memoized.
const HSum& rho_generator(const GenKey& key, int d);

// Single-family memo for repeated generator-operation evaluations.
struct OpCache {
    std::map<std::pair<GenKey, std::vector<CycWord>>, WordSum> memo;
};

// eval_graph(rho_generator(key), f, words)
WordSum induced_op(const ThetaFamily& f, const GenKey& key, const std::vector<CycWord>& words,
                   OpCache* cache = nullptr);

// One summand of the differential: the lower corolla (|I1|+l, |J1|, b) feeds
// l of its outputs into the upper corolla (|I2|, |J2|+l, c).
struct SplitRecord {
    int b = 0, c = 0, l = 1;
    std::vector<int> I1, I2;  // partition of 1..m (sorted)
    std::vector<int> J1, J2;  // partition of 1..n (sorted)

    GenKey lower(const GenKey&) const;
    GenKey upper(const GenKey&) const;
};

// All splittings with l >= 1, a = b+c+l-1, [m] = I1|I2, [n] = J1|J2 whose
// two corollas are valid generators.
std::vector<SplitRecord> ibl_differential(const GenKey& key);

// Operator-level differential residue: the signed sum over all splitting
// records of the composite operator applied to the words. Must be the zero
// WordSum for every Theta family (the chain-map property).
WordSum ibl_residual(const ThetaFamily& f, const GenKey& key, const std::vector<CycWord>& words,
                     OpCache* cache = nullptr);

// Graph-level image of the differential: vcompose-substituted generator
// images summed over records, all coefficients +1; must be the empty HSum.
HSum graph_delta_image(const GenKey& key, int d);

// ---- cyclic words in N letters: the necklace Lie bialgebra ----

// Expansion of one letter along u: a plain x_alpha[-p] becomes the block
// e^{0_p}_alpha ... e^{(p+1)_p}_alpha of p+2 expanded letters.
std::vector<Letter> expand_letter(const Letter& w);

// u on cyclic words; the result is canonicalized (sign folded in).
std::optional<std::pair<CycWord, int>> embed_u(const CycWord& plain);

// Detects whether every word of every tuple is, up to rotation, a
// concatenation of expansion blocks and inverts u; nullopt = NOT_IN_IMAGE.
std::optional<WordSum> project_u(const WordSum& ws);

// Necklace bracket/cobracket on Cyc(W_N) (degree-0 plain letters) computed
// by the doubling trick: double each letter, apply the Darboux-family
// bracket/cobracket in Cyc(W-hat), pull back along u.
WordSum necklace_bracket(int N, const CycWord& w1, const CycWord& w2);
WordSum necklace_cobracket(int N, const CycWord& w);

// Independent direct implementations (the oracle): Schedler's formulas plus
// the empty-word correction on the cobracket.
WordSum schedler_bracket_direct(const CycWord& w1, const CycWord& w2);
WordSum schedler_cobracket_direct(const CycWord& w);

struct ClosureViolation : std::runtime_error {
    explicit ClosureViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// The graded necklace operation: embed plain graded words via u, apply the
// graded-family generator operation, project back. Throws ClosureViolation
// if a term leaves the image of u. d = 1 only.
WordSum graded_necklace_op(int N, const GenKey& key, const std::vector<CycWord>& words);

}  // namespace rhyper
