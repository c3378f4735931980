#include "rhyper/theta.hpp"

#include <memory>
#include <stdexcept>

namespace rhyper {

namespace {

int shifted_rotation_sign(const std::vector<Letter>& seq, int t, int d) {
    std::vector<int> degs(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) degs[i] = seq[i].degree() - d;
    return rotation_sign(degs, t);
}

std::vector<Letter> rotated(const std::vector<Letter>& seq, int t) {
    std::vector<Letter> out(seq.begin() + t, seq.end());
    out.insert(out.end(), seq.begin(), seq.begin() + t);
    return out;
}

}  // namespace

Rational ThetaFamily::eval(const std::vector<Letter>& seq) const {
    for (const auto& w : seq)
        if (!in_alphabet(w)) throw std::invalid_argument("unknown letter " + w.str());
    if (!eval_) return Rational(0);
    Rational v = eval_(seq);
    if (!v.is_zero() && !lambdas_.empty() && seq.size() >= 1 && seq.size() <= lambdas_.size())
        v *= lambdas_[seq.size() - 1];
    return v;
}

ThetaFamily zero_family(int d) {
    return ThetaFamily(d, "zero", [](const std::vector<Letter>&) { return Rational(0); },
                       [](const Letter&) { return true; });
}

namespace {

// Shared rule for the graded family; the Darboux family is its k = 0 slice.
Rational graded_eval(const std::vector<Letter>& seq) {
    const int r = (int)seq.size();
    if (r < 2) return Rational(0);
    const int k = r - 2;
    for (const auto& w : seq) {
        if (w.is_plain() || w.p != k) return Rational(0);
        if (w.alpha != seq.front().alpha) return Rational(0);
    }
    for (int i = 0; i < r; ++i) {
        int expect = ((seq[i].l - 1) % r + r) % r;
        if (seq[(i + 1) % r].l != expect) return Rational(0);
    }
    const int j = seq.front().l;
    return Rational((j * (k + 1)) % 2 == 0 ? 1 : -1);
}

}  // namespace

ThetaFamily darboux_family(int N) {
    return ThetaFamily(
        1, "darboux(" + std::to_string(N) + ")",
        [](const std::vector<Letter>& seq) {
            if (seq.size() != 2) return Rational(0);
            return graded_eval(seq);
        },
        [N](const Letter& w) {
            return !w.is_plain() && w.p == 0 && w.alpha >= 1 && w.alpha <= N;
        });
}

ThetaFamily graded_family(int N) {
    return ThetaFamily(1, "graded(" + std::to_string(N) + ")", graded_eval, [N](const Letter& w) {
        return !w.is_plain() && w.alpha >= 1 && w.alpha <= N;
    });
}

std::optional<std::pair<std::vector<Letter>, int>> canonical_cyclic_shifted(
    const std::vector<Letter>& seq, int d) {
    const int L = (int)seq.size();
    if (L == 0) return std::make_pair(std::vector<Letter>{}, 1);
    std::vector<Letter> best;
    int best_sign = 0;
    for (int t = 0; t < L; ++t) {
        auto rot = rotated(seq, t);
        int s = shifted_rotation_sign(seq, t, d);
        if (best.empty() || rot < best) {
            best = std::move(rot);
            best_sign = s;
        } else if (rot == best && s != best_sign) {
            return std::nullopt;
        }
    }
    return std::make_pair(best, best_sign);
}

ThetaFamily custom_family(int d,
                          const std::vector<std::pair<std::vector<Letter>, Rational>>& entries) {
    auto table = std::make_shared<std::map<std::vector<Letter>, Rational>>();
    for (const auto& [seq, value] : entries) {
        auto canon = canonical_cyclic_shifted(seq, d);
        if (!canon) {
            if (!value.is_zero())
                throw std::invalid_argument("custom family entry on a rotation-killed sequence");
            continue;
        }
        Rational v = value * Rational(canon->second);
        auto [it, inserted] = table->emplace(canon->first, v);
        if (!inserted && !(it->second == v))
            throw std::invalid_argument("conflicting custom family entries on one cyclic orbit");
    }
    return ThetaFamily(
        d, "custom",
        [table, d](const std::vector<Letter>& seq) {
            auto canon = canonical_cyclic_shifted(seq, d);
            if (!canon) return Rational(0);
            auto it = table->find(canon->first);
            if (it == table->end()) return Rational(0);
            return it->second * Rational(canon->second);
        },
        [](const Letter&) { return true; });
}

ThetaFamily rescale(const ThetaFamily& f, const std::vector<Rational>& lambdas) {
    ThetaFamily out = f;
    out.name_ = f.name_ + "/rescaled";
    if (out.lambdas_.size() < lambdas.size()) out.lambdas_.resize(lambdas.size(), Rational(1));
    for (size_t i = 0; i < lambdas.size(); ++i) out.lambdas_[i] *= lambdas[i];
    return out;
}

InvarianceReport check_cyclic_invariance(const ThetaFamily& f, const std::vector<Letter>& alphabet,
                                         int max_len) {
    InvarianceReport rep;
    std::vector<Letter> seq;
    // depth-first enumeration of all sequences up to max_len
    std::function<void()> recurse = [&]() {
        if (!seq.empty()) {
            const int L = (int)seq.size();
            Rational base = f.eval(seq);
            ++rep.cases;
            if (!base.is_zero()) {
                int total = 0;
                for (const auto& w : seq) total += w.degree();
                if (total != f.d() * L - f.d() - 1)
                    rep.violations.push_back("degree support violated on " + CycWord{seq}.str());
            }
            for (int t = 1; t < L; ++t) {
                Rational lhs = f.eval(rotated(seq, t));
                Rational rhs = base * Rational(shifted_rotation_sign(seq, t, f.d()));
                if (!(lhs == rhs)) {
                    rep.violations.push_back("rotation " + std::to_string(t) + " of " +
                                             CycWord{seq}.str() + ": " + lhs.str() +
                                             " != " + rhs.str());
                }
            }
        }
        if ((int)seq.size() >= max_len) return;
        for (const auto& w : alphabet) {
            seq.push_back(w);
            recurse();
            seq.pop_back();
        }
    };
    recurse();
    return rep;
}

}  // namespace rhyper
