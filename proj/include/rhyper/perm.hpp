#pragma once

#include <vector>

namespace rhyper {

// Finite permutation of {0,...,k-1} in image form: images()[i] is the image
// of i. Substrate for the sigma_0 / sigma_1 / sigma_infinity triple.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int k);

    int size() const { return (int)images_.size(); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;

    // Orbits, each reported starting at its minimal element, sorted by that
    // element. Bit-stable for serialization.
    std::vector<std::vector<int>> cycles() const;

    // (-1)^(k - #cycles)
    int parity() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

private:
    std::vector<int> images_;
};

// r(i) = p(q(i)). Throws std::invalid_argument("arity mismatch") on size mismatch.
Perm compose(const Perm& p, const Perm& q);

// Sign of a sequence of distinct values 0..k-1 relative to ascending order.
int sequence_parity(const std::vector<int>& seq);

}  // namespace rhyper
