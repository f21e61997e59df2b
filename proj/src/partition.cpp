#include "qtorus/partition.hpp"

#include <algorithm>
#include "json.hpp"
#include <stdexcept>

namespace qtorus {

PartitionI::PartitionI(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("partition has an empty block");
        std::sort(b.begin(), b.end());
        total += static_cast<int>(b.size());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    ell_ = total;
    owner_.assign(static_cast<std::size_t>(ell_), blocks_.size());
    for (std::size_t r = 0; r < blocks_.size(); ++r) {
        for (int p : blocks_[r]) {
            if (p < 1 || p > ell_ || owner_[p - 1] != blocks_.size())
                throw std::invalid_argument("blocks do not partition {1..l}");
            owner_[p - 1] = r;
        }
    }
}

PartitionI PartitionI::discrete(int ell) {
    std::vector<std::vector<int>> b;
    for (int p = 1; p <= ell; ++p) b.push_back({p});
    return PartitionI(std::move(b));
}

PartitionI PartitionI::full(int ell) {
    std::vector<int> b(static_cast<std::size_t>(ell));
    for (int p = 1; p <= ell; ++p) b[p - 1] = p;
    return PartitionI({b});
}

PartitionI PartitionI::parse(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        return PartitionI(j.get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    }
}

std::size_t PartitionI::block_of(int p) const {
    if (p < 1 || p > ell_) throw std::out_of_range("index outside partition");
    return owner_[p - 1];
}

PartitionI PartitionI::power(int m) const {
    std::vector<std::vector<int>> out;
    for (int k = 0; k < m; ++k)
        for (const auto& b : blocks_) {
            std::vector<int> s;
            for (int p : b) s.push_back(k * ell_ + p);
            out.push_back(std::move(s));
        }
    return PartitionI(std::move(out));
}

PartitionI PartitionI::permuted(const std::vector<int>& perm) const {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks_) {
        std::vector<int> s;
        for (int p : b) s.push_back(perm.at(p - 1));
        out.push_back(std::move(s));
    }
    return PartitionI(std::move(out));
}

std::string PartitionI::str() const {
    return nlohmann::json(blocks_).dump();
}

}  // namespace qtorus
