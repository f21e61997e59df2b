#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtorus/liealg.hpp"
#include "qtorus/lincomb.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// psi_i^p(mode) or psibar_i^p(mode).
struct CliffordGen {
    int p = 1;
    bool bar = false;
    int i = 1;
    long mode = 0;

    static CliffordGen psi(int i, int p, long mode) { return {p, false, i, mode}; }
    static CliffordGen psibar(int i, int p, long mode) { return {p, true, i, mode}; }

    [[nodiscard]] bool creates() const { return bar ? mode <= -1 : mode <= 0; }
    friend bool operator==(const CliffordGen&, const CliffordGen&) = default;
};

/// Index of a generator in the single-index labelling
/// phi_{nN-i} = psi_i(n), phibar_{nN+i-1} = psibar_i(n).
long phi_index(const CliffordGen& g, int N);
CliffordGen from_phi(int p, bool bar, long index, int N);

/// Sorted creation generators applied to the vacuum. Generators are ordered
/// by (p, psi before psibar, phi index).
struct FockMonomial {
    std::vector<std::int64_t> codes;
    friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
};

using FockVector = LinComb<FockMonomial>;

inline FockVector vacuum() { return FockVector(FockMonomial{}); }

enum class NormalOrdering { ModeCompare, AnnihilatorRight };

/// Left factor first: (psi, psibar, +1) or (psibar, psi, -1).
struct OrderedPair {
    CliffordGen left, right;
    int sign;
};

OrderedPair normal_order_pair(int i, int p, long m, int j, int nu, long n,
                              NormalOrdering rule = NormalOrdering::ModeCompare);

/// The Fock space of l copies of N pairs of charged fermions.
class FockSpace {
public:
    FockSpace(int N, int ell);

    [[nodiscard]] int N() const { return N_; }
    [[nodiscard]] int ell() const { return ell_; }

    [[nodiscard]] std::int64_t encode(const CliffordGen& g) const;
    [[nodiscard]] CliffordGen decode(std::int64_t code) const;
    [[nodiscard]] std::vector<CliffordGen> gens(const FockMonomial& m) const;

    /// Left multiplication by a single generator.
    [[nodiscard]] FockVector apply(const CliffordGen& g, const FockVector& v) const;
    void apply_to(const CliffordGen& g, const FockMonomial& m, const Scalar& c, FockVector& out) const;

    /// :psi_i^p(m) psibar_j^nu(n): on a vector.
    [[nodiscard]] FockVector normal_ordered(int i, int p, long m, int j, int nu, long n, const FockVector& v,
                                            NormalOrdering rule = NormalOrdering::ModeCompare) const;

    /// sum_k c(k) :psi_i^pr(total - k) psibar_j^ps(k): on a monomial, expanding
    /// only the finitely many k that survive.
    void bilinear_sum(int i, int pr, int j, int ps, long total, const std::function<Scalar(long)>& coeff,
                      const FockMonomial& m, const Scalar& c, FockVector& out,
                      NormalOrdering rule = NormalOrdering::ModeCompare) const;

    /// The operator by which E_{i,j} t0^m0 t1^m1 (or k0, k1) acts.
    [[nodiscard]] FockVector rho(const GlqElement& x, const ParameterSet& params, const FockVector& v,
                                 NormalOrdering rule = NormalOrdering::ModeCompare) const;
    [[nodiscard]] FockVector rho(const BasisKey& x, const ParameterSet& params, const FockVector& v,
                                 NormalOrdering rule = NormalOrdering::ModeCompare) const;

    /// E_{r,s} of gl_l.
    [[nodiscard]] FockVector gl_ell(int r, int s, const FockVector& v) const;
    /// E_{mrow,ncol} of the centrally extended gl-infinity, summed over p in block
    /// (all p when block is empty).
    [[nodiscard]] FockVector glbar(long mrow, long ncol, const FockVector& v,
                                   const std::vector<int>& block = {}) const;

    /// Joint highest weight vector A^1(mu_1)...A^l(mu_l)|0>.
    [[nodiscard]] FockVector hw_vector(const std::vector<long>& mu) const;

    [[nodiscard]] long degree(const FockMonomial& m) const;
    /// (#psi^p - #psibar^p) for p = 1..l.
    [[nodiscard]] std::vector<long> weight(const FockMonomial& m) const;

    /// All monomials of the given degree, sorted.
    [[nodiscard]] std::vector<FockMonomial> basis(long degree) const;

    [[nodiscard]] std::string to_string(const CliffordGen& g) const;
    [[nodiscard]] std::string to_string(const FockMonomial& m) const;
    [[nodiscard]] nlohmann::json to_json(const FockVector& v) const;
    [[nodiscard]] FockVector from_json(const nlohmann::json& j) const;
    [[nodiscard]] FockMonomial parse_monomial(const std::string& s) const;

private:
    int N_, ell_;
};

/// Apply a monomial-wise operator linearly.
FockVector apply_linear(const FockVector& v, const std::function<void(const FockMonomial&, const Scalar&, FockVector&)>& f);

/// Coefficient of x^n in 2^{Nl} prod_{m>=1} (1+x^m)^{2Nl}.
mpz_class graded_dim(long n, int N, int ell);

}  // namespace qtorus
