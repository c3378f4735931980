#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhyper/rational.hpp"
#include "rhyper/words.hpp"

namespace rhyper {

// A family Theta_* of cyclically (skew)invariant higher products on letters.
// The invariance law uses shifted degrees |w| - d per letter:
//   eval(rotate(seq)) = kappa_shifted(rotation) * eval(seq).
// eval(seq of length r) can be nonzero only when sum |w_i| = d*r - d - 1.
class ThetaFamily {
public:
    using EvalFn = std::function<Rational(const std::vector<Letter>&)>;
    using AlphabetFn = std::function<bool(const Letter&)>;

    ThetaFamily() = default;
    ThetaFamily(int d, std::string name, EvalFn eval, AlphabetFn alphabet)
        : d_(d), name_(std::move(name)), eval_(std::move(eval)), alphabet_(std::move(alphabet)) {}

    int d() const { return d_; }
    const std::string& name() const { return name_; }

    bool in_alphabet(const Letter& w) const { return alphabet_ ? alphabet_(w) : true; }

    // Throws std::invalid_argument on letters outside the alphabet.
    Rational eval(const std::vector<Letter>& seq) const;

private:
    int d_ = 1;
    std::string name_;
    EvalFn eval_;
    AlphabetFn alphabet_;
    std::vector<Rational> lambdas_;  // rescale factors, index = arity - 1

    friend ThetaFamily rescale(const ThetaFamily& f, const std::vector<Rational>& lambdas);
};

// Identically zero family.
ThetaFamily zero_family(int d);

// The Darboux pairing on the doubled degree-0 alphabet
// {e^{0_0}_a, e^{1_0}_a : 1 <= a <= N}: Theta_2(e^{0_0}_a, e^{1_0}_a) = 1,
// skew, all other pairs zero. d = 1.
ThetaFamily darboux_family(int N);

// The graded family: Theta_{k+2} is nonzero only on sequences with all
// alphabet indices equal, all p-tags equal to k, and l-tags cyclically
// descending mod k+2; the value on (j, j-1, ..., 1, 0, k+1, ..., j+1) is
// (-1)^{j(k+1)}. d = 1. Its k = 0 slice is the Darboux family.
ThetaFamily graded_family(int N);

// Finite table on canonical cyclic representatives, extended to all
// rotations by the shifted-degree sign rule (invariant by construction).
ThetaFamily custom_family(int d, const std::vector<std::pair<std::vector<Letter>, Rational>>& entries);

// Scales length-k inputs by lambdas[k-1] (missing entries act as 1).
ThetaFamily rescale(const ThetaFamily& f, const std::vector<Rational>& lambdas);

// Canonical representative of a letter sequence under rotation with
// shifted-degree Koszul signs; nullopt when the orbit is killed.
std::optional<std::pair<std::vector<Letter>, int>> canonical_cyclic_shifted(
    const std::vector<Letter>& seq, int d);

struct InvarianceReport {
    long cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the invariance law on every rotation of every sequence over the
// given alphabet up to max_len, plus the degree-support condition.
InvarianceReport check_cyclic_invariance(const ThetaFamily& f, const std::vector<Letter>& alphabet,
                                         int max_len);

}  // namespace rhyper
