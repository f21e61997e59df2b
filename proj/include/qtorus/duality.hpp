#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qtorus/fock.hpp"
#include "qtorus/glrep.hpp"
#include "qtorus/partition.hpp"
#include "qtorus/report.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

struct PartitionMismatch : std::invalid_argument {
    explicit PartitionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct FixedSpaceQuery {
    PartitionI partition;
    Weight weight;
    long degree = 0;
    ParameterSet params;
};

using FockOperator = std::function<FockVector(const FockVector&)>;

/// Monomials of the given degree and gl_l weight.
std::vector<FockMonomial> weight_space(const FockSpace& F, long degree, const Weight& mu);

/// Basis of the common kernel of the operators inside span(space).
std::vector<FockVector> common_kernel(const std::vector<FockVector>& space, const std::vector<FockOperator>& ops);

/// E_{r,s} for r < s in a common block.
std::vector<FockOperator> raising_operators(const FockSpace& F, const PartitionI& I);

/// Vectors of weight mu and the given degree killed by the raising operators.
std::vector<FockVector> fixed_space(const FixedSpaceQuery& query);

/// Joint highest weight vectors of weight (eta_{mu,a}, mu) at the degree of v_mu.
std::vector<FockVector> joint_hw_space(const DominantWeight& mu, const ParameterSet& params);
std::size_t joint_hw_dim(const DominantWeight& mu, const ParameterSet& params);

DecompositionReport verify_skew_duality(const ParameterSet& params, long n_max);
/// Second factor parameters b, with l' = b.size().
DecompositionReport verify_tensor_branching(const ParameterSet& params, const std::vector<Scalar>& b, long n_max);
/// params.N is ignored; the rank is the sum of bfN.
DecompositionReport verify_levi_branching(const std::vector<int>& bfN, const ParameterSet& params, long n_max);
DecompositionReport verify_lattice_intertwiner(const ParameterSet& params, int M0, int M1, long n_max,
                                               std::uint64_t seed = 1);

/// ((aq)_{M0}^{M1})_{kl+r} = (a_r q^{-k})^{M1}.
std::vector<Scalar> lattice_parameters(const std::vector<Scalar>& a, const Scalar& q, int M0, int M1);

}  // namespace qtorus
