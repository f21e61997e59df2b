#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qtorus {

/// A set partition of {1..l}. Blocks are sorted and ordered by their minimum.
class PartitionI {
public:
    PartitionI() = default;
    /// Throws std::invalid_argument unless the blocks partition {1..l}.
    explicit PartitionI(std::vector<std::vector<int>> blocks);

    /// One block per index.
    static PartitionI discrete(int ell);
    /// A single block {1..l}.
    static PartitionI full(int ell);
    /// Parses "[[1,2],[3]]".
    static PartitionI parse(std::string_view text);

    [[nodiscard]] int ell() const { return ell_; }
    [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    [[nodiscard]] std::size_t size() const { return blocks_.size(); }
    /// Zero-based index of the block containing p (1-based).
    [[nodiscard]] std::size_t block_of(int p) const;
    [[nodiscard]] bool related(int p, int r) const { return block_of(p) == block_of(r); }

    /// {k*l + S : 0 <= k < m, S in blocks}.
    [[nodiscard]] PartitionI power(int m) const;
    /// Applies a permutation: index p moves to perm[p-1].
    [[nodiscard]] PartitionI permuted(const std::vector<int>& perm) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const PartitionI&, const PartitionI&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<std::size_t> owner_;
    int ell_ = 0;
};

}  // namespace qtorus
