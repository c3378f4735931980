#include "rhyper/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhyper {

Letter plain_letter(int alpha, int p) {
    Letter w;
    w.alpha = alpha;
    w.p = p;
    w.l = Letter::kPlain;
    return w;
}

Letter expanded_letter(int alpha, int l, int p) {
    if (l < 0 || l > p + 1) throw std::invalid_argument("expanded letter needs 0 <= l <= p+1");
    Letter w;
    w.alpha = alpha;
    w.p = p;
    w.l = l;
    return w;
}

std::string Letter::str() const {
    if (is_plain()) return "x" + std::to_string(alpha) + "[-" + std::to_string(p) + "]";
    return "e" + std::to_string(alpha) + "{" + std::to_string(l) + "_" + std::to_string(p) + "}";
}

int koszul_sign(const Perm& perm, const std::vector<int>& degrees) {
    if (perm.size() != (int)degrees.size()) throw std::invalid_argument("length mismatch");
    int inv = 0;
    for (int i = 0; i < perm.size(); ++i)
        for (int j = i + 1; j < perm.size(); ++j)
            if (perm(i) > perm(j) && (degrees[perm(i)] & 1) && (degrees[perm(j)] & 1)) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int rotation_sign(const std::vector<int>& degrees, int t) {
    const int L = (int)degrees.size();
    if (L == 0) return 1;
    t = ((t % L) + L) % L;
    int head = 0, tail = 0;
    for (int i = 0; i < t; ++i) head += degrees[i] & 1;
    for (int i = t; i < L; ++i) tail += degrees[i] & 1;
    return (head * tail) % 2 == 0 ? 1 : -1;
}

int CycWord::degree() const {
    int s = 0;
    for (const auto& w : letters) s += w.degree();
    return s;
}

std::string CycWord::str() const {
    std::string out = "(";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += letters[i].str();
    }
    return out + ")";
}

std::optional<std::pair<CycWord, int>> canonical_cyclic(const std::vector<Letter>& letters) {
    const int L = (int)letters.size();
    if (L == 0) return std::make_pair(CycWord{}, 1);

    std::vector<int> degs(L);
    for (int i = 0; i < L; ++i) degs[i] = letters[i].degree();

    std::vector<Letter> best;
    int best_sign = 0;
    bool killed = false;
    for (int t = 0; t < L; ++t) {
        std::vector<Letter> rot(letters.begin() + t, letters.end());
        rot.insert(rot.end(), letters.begin(), letters.begin() + t);
        int s = rotation_sign(degs, t);
        if (best.empty() || rot < best) {
            best = std::move(rot);
            best_sign = s;
        } else if (rot == best && s != best_sign) {
            killed = true;  // stabilizing rotation with sign -1
        }
    }
    if (killed) return std::nullopt;
    return std::make_pair(CycWord{std::move(best)}, best_sign);
}

void WordSum::add(const std::vector<CycWord>& tuple, const Rational& coeff) {
    if ((int)tuple.size() != arity_) throw std::invalid_argument("word tuple arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(tuple);
    if (it == terms_.end()) {
        terms_.emplace(tuple, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WordSum::add_raw(const std::vector<std::vector<Letter>>& raw, const Rational& coeff) {
    std::vector<CycWord> tuple;
    tuple.reserve(raw.size());
    Rational c = coeff;
    for (const auto& seq : raw) {
        auto canon = canonical_cyclic(seq);
        if (!canon) return;
        tuple.push_back(std::move(canon->first));
        c *= Rational(canon->second);
    }
    add(tuple, c);
}

void WordSum::add_sum(const WordSum& other, const Rational& scale) {
    if (other.arity_ != arity_ && !other.terms_.empty())
        throw std::invalid_argument("word sum arity mismatch");
    for (const auto& [tuple, c] : other.terms_) add(tuple, c * scale);
}

std::string WordSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [tuple, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (const auto& w : tuple) out += "*" + w.str();
    }
    return out;
}

}  // namespace rhyper
