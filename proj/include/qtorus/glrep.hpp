#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtorus/partition.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

using Weight = std::vector<long>;

struct IncompatiblePartitions : std::invalid_argument {
    explicit IncompatiblePartitions(const std::string& what) : std::invalid_argument(what) {}
};

/// An integer tuple, weakly decreasing within each block of a partition.
struct DominantWeight {
    Weight mu;
    PartitionI blocks;

    /// Throws std::invalid_argument when mu is not dominant for the blocks.
    DominantWeight(Weight mu, PartitionI blocks);

    /// Entries of mu on block r, in increasing index order.
    [[nodiscard]] Weight on_block(std::size_t r) const;

    [[nodiscard]] std::string str() const;
    static DominantWeight parse(std::string_view text);

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

/// Number of Littlewood-Richardson tableaux of shape nu/lambda and content mu.
long lr_coeff(const Weight& lambda, const Weight& mu, const Weight& nu);

/// Partitions nu with at most max_len parts and c^nu_{lambda,mu} > 0.
std::map<Weight, long> lr_product(const Weight& lambda, const Weight& mu, std::size_t max_len);

/// Dimension of the irreducible GL_n module of highest weight mu (n = mu.size()).
long weyl_dim(const Weight& mu);
/// Product of weyl_dim over the blocks.
long weyl_dim(const DominantWeight& mu);

/// Restriction multiplicities from GL_{I_(a,b)} to GL_{I_a} x GL_{I_b}; the
/// second factor occupies indices l+1..l+l'.
std::map<std::pair<Weight, Weight>, long> levi_branch_D(const DominantWeight& xi, const PartitionI& Ia,
                                                        const PartitionI& Ib);

/// Multiplicities in the tensor product of modules over a common Levi subgroup.
std::map<Weight, long> tensor_mult_C(const std::vector<DominantWeight>& mus);

/// Highest-weight data (mu, a, N) at a given q.
struct EtaFunctional {
    Weight mu;
    std::vector<Scalar> a;
    int N = 2;
    Scalar q;
};

/// mu = dot * N + ddot with 1 <= ddot <= N.
std::pair<long, int> mu_decompose(long mu, int N);

Scalar eta_eval(const EtaFunctional& eta, int i, long n);
bool eta_equiv(const EtaFunctional& e1, const EtaFunctional& e2);

std::string weight_str(const Weight& w);

}  // namespace qtorus
