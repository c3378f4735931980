#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rhyper/perm.hpp"
#include "rhyper/rational.hpp"

namespace rhyper {

// A graded letter. Two alphabets appear:
//   plain     x_alpha[-p]   (l == kPlain), homological degree p
//   expanded  e^{l_p}_alpha (0 <= l <= p+1), degree p when l == 0, else 0
struct Letter {
    static constexpr int kPlain = -1;

    int alpha = 1;
    int p = 0;
    int l = kPlain;

    bool is_plain() const { return l == kPlain; }
    int degree() const { return is_plain() ? p : (l == 0 ? p : 0); }

    std::string str() const;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.alpha == b.alpha && a.p == b.p && a.l == b.l;
    }
    friend bool operator<(const Letter& a, const Letter& b) {
        return std::tie(a.alpha, a.p, a.l) < std::tie(b.alpha, b.p, b.l);
    }
};

Letter plain_letter(int alpha, int p = 0);
Letter expanded_letter(int alpha, int l, int p);

// Koszul sign of reordering (x_0,...,x_{k-1}) into (x_{perm(0)},...,x_{perm(k-1)}):
// -1 for every crossing of two odd-degree letters.
int koszul_sign(const Perm& perm, const std::vector<int>& degrees);

// Sign of rotating (x_0..x_{L-1}) left by t steps, i.e. moving the first t
// letters past the rest.
int rotation_sign(const std::vector<int>& degrees, int t);

// A cyclic word stored in its canonical rotation (lexicographically minimal
// by letter keys).
struct CycWord {
    std::vector<Letter> letters;

    int length() const { return (int)letters.size(); }
    int degree() const;  // sum of letter degrees
    std::string str() const;

    friend bool operator==(const CycWord& a, const CycWord& b) { return a.letters == b.letters; }
    friend bool operator<(const CycWord& a, const CycWord& b) { return a.letters < b.letters; }
};

// Canonical rotation together with the Koszul sign (unshifted degrees) of
// rotating into it. nullopt when a stabilizing rotation acts by -1: such a
// word is zero in Cyc(W).
std::optional<std::pair<CycWord, int>> canonical_cyclic(const std::vector<Letter>& letters);

// Formal rational combination of m-tuples of cyclic words.
class WordSum {
public:
    WordSum() : arity_(0) {}
    explicit WordSum(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Adds coeff * tuple; canonicalization is the caller's job.
    void add(const std::vector<CycWord>& tuple, const Rational& coeff);
    // Adds coeff * (canonical form of each raw letter sequence), folding the
    // rotation signs into the coefficient; drops tuples with a zero word.
    void add_raw(const std::vector<std::vector<Letter>>& raw, const Rational& coeff);

    void add_sum(const WordSum& other, const Rational& scale = Rational(1));

    const std::map<std::vector<CycWord>, Rational>& terms() const { return terms_; }

    friend bool operator==(const WordSum& a, const WordSum& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int arity_;
    std::map<std::vector<CycWord>, Rational> terms_;
};

}  // namespace rhyper
