#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "zkt/crypto/digest.hpp"

namespace zkt {

struct MerkleStep {
    Digest sibling_hash;
    bool at_left = false;  // sibling occupies the left slot of the parent
    auto operator<=>(const MerkleStep&) const = default;
};

struct MerklePath {
    std::vector<MerkleStep> steps;
    auto operator<=>(const MerklePath&) const = default;
};

Digest merkleNode(const Digest& left, const Digest& right);

/// Root of the subtree of the given height whose leaves are all zero.
const Digest& zeroSubtree(unsigned height);

/// Folds value up the path.
Digest getRoot(const Digest& value, const MerklePath& path);
/// Same, but throws PathLengthMismatch unless the path has `depth` steps.
Digest getRoot(const Digest& value, const MerklePath& path, unsigned depth);

/// Append-only binary Merkle tree over commitments, padded with zero leaves,
/// that remembers every root it has had.
class CommitmentTree {
public:
    static constexpr unsigned kDefaultDepth = 32;
    static constexpr unsigned kMaxDepth = 48;

    explicit CommitmentTree(unsigned depth = kDefaultDepth);

    unsigned depth() const noexcept { return depth_; }
    std::uint64_t size() const noexcept { return levels_[0].size(); }
    std::uint64_t capacity() const noexcept { return std::uint64_t{1} << depth_; }
    bool canAppend(std::size_t n) const noexcept { return n <= capacity() - size(); }

    /// Appends in order and records the new root. An empty batch changes
    /// nothing. Throws TreeFull before touching state if the batch does not fit.
    Digest append(std::span<const Digest> leaves);
    Digest append(const Digest& leaf) { return append(std::span<const Digest>(&leaf, 1)); }

    Digest root() const;
    MerklePath proofFor(std::uint64_t leaf_index) const;

    bool contains(const Digest& leaf) const { return leaf_set_.contains(leaf); }
    bool hasRoot(const Digest& root) const { return root_set_.contains(root); }
    const std::vector<Digest>& leaves() const noexcept { return levels_[0]; }
    /// Every root recorded by append, oldest first.
    const std::vector<Digest>& roots() const noexcept { return roots_; }

private:
    unsigned depth_;
    std::vector<std::vector<Digest>> levels_;  // levels_[0] = leaves
    std::set<Digest> leaf_set_;
    std::vector<Digest> roots_;
    std::set<Digest> root_set_;
};

}  // namespace zkt
