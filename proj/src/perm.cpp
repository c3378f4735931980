#include "rhyper/perm.hpp"

#include <stdexcept>
#include <string>

namespace rhyper {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int k = (int)images_.size();
    std::vector<char> seen(k, 0);
    for (int v : images_) {
        if (v < 0 || v >= k || seen[v])
            throw std::invalid_argument("not a bijection of {0,...," + std::to_string(k - 1) + "}");
        seen[v] = 1;
    }
}

Perm Perm::identity(int k) {
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = i;
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < (int)images_.size(); ++i) inv[images_[i]] = i;
    return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
    const int k = size();
    std::vector<char> seen(k, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            seen[j] = 1;
            j = images_[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;  // scan order from minimal elements keeps cycles sorted
}

int Perm::parity() const {
    return (size() - (int)cycles().size()) % 2 == 0 ? 1 : -1;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("arity mismatch");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Perm(std::move(img));
}

int sequence_parity(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace rhyper
