#include "zkt/crypto/merkle.hpp"

#include <array>
#include <string>

#include "zkt/crypto/hash.hpp"
#include "zkt/error.hpp"

namespace zkt {

Digest merkleNode(const Digest& left, const Digest& right) {
    std::array<std::uint8_t, 64> buf;
    std::copy(left.bytes.begin(), left.bytes.end(), buf.begin());
    std::copy(right.bytes.begin(), right.bytes.end(), buf.begin() + 32);
    return taggedHash(domain::kMerkleNode, buf);
}

const Digest& zeroSubtree(unsigned height) {
    static const std::vector<Digest> zeros = [] {
        std::vector<Digest> z(CommitmentTree::kMaxDepth + 1);
        for (unsigned k = 0; k < CommitmentTree::kMaxDepth; ++k) z[k + 1] = merkleNode(z[k], z[k]);
        return z;
    }();
    return zeros.at(height);
}

Digest getRoot(const Digest& value, const MerklePath& path) {
    Digest h = value;
    for (const auto& step : path.steps) {
        h = step.at_left ? merkleNode(step.sibling_hash, h) : merkleNode(h, step.sibling_hash);
    }
    return h;
}

Digest getRoot(const Digest& value, const MerklePath& path, unsigned depth) {
    if (path.steps.size() != depth) {
        throw Error(Errc::PathLengthMismatch, "path has " + std::to_string(path.steps.size()) +
                                                  " steps, tree depth is " + std::to_string(depth));
    }
    return getRoot(value, path);
}

CommitmentTree::CommitmentTree(unsigned depth) : depth_(depth), levels_(depth + 1) {
    if (depth > kMaxDepth) throw std::invalid_argument("tree depth above " + std::to_string(kMaxDepth));
}

Digest CommitmentTree::append(std::span<const Digest> leaves) {
    if (leaves.empty()) return root();
    if (!canAppend(leaves.size())) {
        throw Error(Errc::TreeFull, std::to_string(size()) + " of " + std::to_string(capacity()) +
                                        " leaves used, batch of " + std::to_string(leaves.size()));
    }
    for (const auto& leaf : leaves) {
        std::uint64_t idx = levels_[0].size();
        levels_[0].push_back(leaf);
        leaf_set_.insert(leaf);
        for (unsigned k = 0; k < depth_; ++k) {
            std::uint64_t left = idx & ~std::uint64_t{1};
            const auto& level = levels_[k];
            const Digest& l = level[left];
            const Digest& r = left + 1 < level.size() ? level[left + 1] : zeroSubtree(k);
            Digest parent = merkleNode(l, r);
            idx >>= 1;
            auto& up = levels_[k + 1];
            if (idx < up.size()) {
                up[idx] = parent;
            } else {
                up.push_back(parent);
            }
        }
    }
    Digest r = root();
    roots_.push_back(r);
    root_set_.insert(r);
    return r;
}

Digest CommitmentTree::root() const {
    const auto& top = levels_[depth_];
    return top.empty() ? zeroSubtree(depth_) : top[0];
}

MerklePath CommitmentTree::proofFor(std::uint64_t leaf_index) const {
    if (leaf_index >= size()) {
        throw Error(Errc::IndexOutOfRange,
                    "leaf " + std::to_string(leaf_index) + " of " + std::to_string(size()));
    }
    MerklePath path;
    path.steps.reserve(depth_);
    std::uint64_t idx = leaf_index;
    for (unsigned k = 0; k < depth_; ++k) {
        std::uint64_t sib = idx ^ 1;
        const auto& level = levels_[k];
        path.steps.push_back({sib < level.size() ? level[sib] : zeroSubtree(k), (idx & 1) == 1});
        idx >>= 1;
    }
    return path;
}

}  // namespace zkt
