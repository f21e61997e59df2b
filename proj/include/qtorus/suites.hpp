#pragma once

#include <cstdint>

#include "qtorus/liealg.hpp"
#include "qtorus/report.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// Seeded sampler for basis elements of the trace-zero algebra: matrix units
/// with exponents in [-range, range], the simple diagonal differences in
/// place of degree-zero diagonal units, and k0, k1.
class BasisSampler {
public:
    BasisSampler(int N, long range, std::uint64_t seed);
    GlqElement next();
    std::uint64_t below(std::uint64_t n);

private:
    int N_;
    long range_;
    std::uint64_t state_;
};

/// Antisymmetry and Jacobi identity on sampled basis triples.
DecompositionReport verify_bracket_axioms(int N, const Scalar& q, int samples, std::uint64_t seed, long range = 3);

/// Bracket preservation by theta on sampled pairs, the central instances, and
/// both composites of theta with its inverse on the basis window.
DecompositionReport verify_theta(int N, const Scalar& q, int samples, std::uint64_t seed, long range = 3);

/// [rho(x), rho(y)] = rho([x, y]) on every basis vector of degree <= max_degree.
DecompositionReport verify_module(const ParameterSet& params, int pairs, std::uint64_t seed, long max_degree = 2,
                                  long range = 2);

/// Highest weight relations of v_mu for every dominant mu with entries in
/// [-weight_range, weight_range].
DecompositionReport verify_hw(const ParameterSet& params, long weight_range = 2, long m1_range = 2, long n_range = 3);

/// Vanishing of the squared coefficient sums of E_{i,j} t1^{m1} fields (l = 1).
DecompositionReport verify_nilpotency(const ParameterSet& params, long max_degree = 2, long m1_range = 2);

}  // namespace qtorus
