#include "qtorus/suites.hpp"

#include <functional>

#include "qtorus/covariant.hpp"
#include "qtorus/duality.hpp"
#include "qtorus/fock.hpp"
#include "qtorus/glrep.hpp"

namespace qtorus {

using nlohmann::json;

BasisSampler::BasisSampler(int N, long range, std::uint64_t seed) : N_(N), range_(range), state_(seed) {}

std::uint64_t BasisSampler::below(std::uint64_t n) {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z % n;
}

GlqElement BasisSampler::next() {
    const auto kind = below(20);
    if (kind == 0) return K0();
    if (kind == 1) return K1();
    const auto span = static_cast<std::uint64_t>(2 * range_ + 1);
    const int i = static_cast<int>(below(static_cast<std::uint64_t>(N_))) + 1;
    const int j = static_cast<int>(below(static_cast<std::uint64_t>(N_))) + 1;
    const long m0 = static_cast<long>(below(span)) - range_;
    const long m1 = static_cast<long>(below(span)) - range_;
    if (i == j && m0 == 0 && m1 == 0) {
        const int r = static_cast<int>(below(static_cast<std::uint64_t>(N_ - 1))) + 1;
        return E(r, r) - E(r + 1, r + 1);
    }
    return E(i, j, m0, m1);
}

DecompositionReport verify_bracket_axioms(int N, const Scalar& q, int samples, std::uint64_t seed, long range) {
    DecompositionReport rep;
    rep.config = {{"suite", "bracket"}, {"N", N}, {"q", q.str()}, {"samples", samples}, {"seed", seed}, {"range", range}};
    check_q(q);
    BasisSampler S(N, range, seed);
    for (int t = 0; t < samples; ++t) {
        const GlqElement x = S.next(), y = S.next(), z = S.next();
        const GlqElement xy = bracket(x, y, q);
        rep.check("antisymmetry", xy == -bracket(y, x, q), {{"x", to_string(x)}, {"y", to_string(y)}});
        const GlqElement jac = bracket(x, bracket(y, z, q), q) + bracket(y, bracket(z, x, q), q) +
                               bracket(z, xy, q);
        rep.check("jacobi", jac.is_zero(), {{"x", to_string(x)}, {"y", to_string(y)}, {"z", to_string(z)}});
        rep.check("closure", in_sl(xy), {{"x", to_string(x)}, {"y", to_string(y)}});
        const auto gx = grade(x), gy = grade(y);
        if (gx.size() == 1 && gy.size() == 1 && !xy.is_zero()) {
            const auto g = grade(xy);
            rep.check("grading", g.size() == 1 && g.begin()->first == gx.begin()->first + gy.begin()->first,
                      {{"x", to_string(x)}, {"y", to_string(y)}});
        }
    }
    return rep;
}

DecompositionReport verify_theta(int N, const Scalar& q, int samples, std::uint64_t seed, long range) {
    DecompositionReport rep;
    rep.config = {{"suite", "theta"}, {"N", N}, {"q", q.str()}, {"samples", samples}, {"seed", seed}, {"range", range}};
    check_q(q);
    BasisSampler S(N, range, seed);
    for (int t = 0; t < samples; ++t) {
        const GlqElement x = S.next(), y = S.next();
        const bool ok = theta(bracket(x, y, q), N, q) == cov_bracket(theta(x, N, q), theta(y, N, q), N, q);
        rep.check("homomorphism", ok, {{"x", to_string(x)}, {"y", to_string(y)}});
    }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (long m0 = -range; m0 <= range; ++m0)
                for (long m1 = -range; m1 <= range; ++m1) {
                    if (i == j && m0 == 0 && m1 == 0) continue;
                    const Scalar f = q.pow(-m1 * m0);
                    const GlqElement x = E(i, j, m0, m1), y = E(j, i, -m0, -m1);
                    GlqElement expect = E(i, i) - E(j, j);
                    expect.add(BasisKey::k0(), Scalar(m0));
                    expect.add(BasisKey::k1(), Scalar(m1));
                    expect *= f;
                    const GlqElement xy = bracket(x, y, q);
                    rep.check("central_instance", xy == expect, {{"x", to_string(x)}});
                    // The same instance on the covariant side, for the basis pair
                    // e_{i,j}(m0,m1), e_{j,i}(-m0,-m1).
                    CovElement cov = relabel(E(i, i) - E(j, j), N);
                    cov.add(CovKey::kprime(), Scalar(m1));
                    cov *= f;
                    cov.add(CovKey::k(), Scalar(m0) * f);
                    const auto u = CovKey::e(i, j, m0, m1), v = CovKey::e(j, i, -m0, -m1);
                    rep.check("central_instance_covariant", cov_bracket(u, v, N, q) == cov, {{"u", to_string(u)}});
                    rep.check("central_instance_image",
                              theta(xy, N, q) == cov_bracket(theta(x, N, q), theta(y, N, q), N, q),
                              {{"x", to_string(x)}});
                }
    // theta o theta^-1 on the covariant basis window, and the reverse on the
    // trace-zero basis window.
    std::vector<CovKey> keys{CovKey::k(), CovKey::kprime()};
    for (int r = 1; r < N; ++r) keys.push_back(CovKey::hbar(r));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (long m0 = -range; m0 <= range; ++m0)
                for (long m1 = -range; m1 <= range; ++m1)
                    if (!(i == j && m0 == 0 && m1 == 0)) keys.push_back(CovKey::e(i, j, m0, m1));
    for (const auto& k : keys) {
        const CovElement u(k);
        rep.check("theta_theta_inv", theta(theta_inv(u, N, q), N, q) == u, {{"key", to_string(k)}});
        const GlqElement x = theta_inv(u, N, q);
        rep.check("theta_inv_theta", theta_inv(theta(x, N, q), N, q) == x, {{"key", to_string(k)}});
        rep.check("basis_to_basis", theta(x, N, q).size() == 1, {{"key", to_string(k)}});
    }
    return rep;
}

DecompositionReport verify_module(const ParameterSet& params, int pairs, std::uint64_t seed, long max_degree,
                                  long range) {
    params.validate();
    DecompositionReport rep;
    json aj = json::array();
    for (const auto& a : params.a) aj.push_back(a.str());
    rep.config = {{"suite", "module"}, {"N", params.N}, {"ell", params.ell()}, {"q", params.q.str()}, {"a", aj},
                  {"pairs", pairs}, {"seed", seed}, {"max_degree", max_degree}, {"range", range}};
    const FockSpace F(params.N, params.ell());
    std::vector<FockVector> basis;
    for (long n = 0; n <= max_degree; ++n)
        for (const auto& m : F.basis(n)) basis.emplace_back(m);
    BasisSampler S(params.N, range, seed);
    for (int t = 0; t < pairs; ++t) {
        const GlqElement x = S.next(), y = S.next();
        const GlqElement xy = bracket(x, y, params.q);
        for (const auto& v : basis) {
            const FockVector lhs = F.rho(xy, params, v);
            const FockVector rhs = F.rho(x, params, F.rho(y, params, v)) - F.rho(y, params, F.rho(x, params, v));
            rep.check("module", lhs == rhs,
                      {{"x", to_string(x)}, {"y", to_string(y)}, {"vector", F.to_string(v.begin()->first)}});
        }
    }
    for (const auto& v : basis) {
        rep.check("k0_is_level", F.rho(K0(), params, v) == Scalar(params.ell()) * v);
        rep.check("k1_is_zero", F.rho(K1(), params, v).is_zero());
    }
    return rep;
}

DecompositionReport verify_hw(const ParameterSet& params, long weight_range, long m1_range, long n_range) {
    params.validate();
    const PartitionI I = validate_spectrum(params.a, params.q);
    DecompositionReport rep;
    json aj = json::array();
    for (const auto& a : params.a) aj.push_back(a.str());
    rep.config = {{"suite", "highest-weight"}, {"N", params.N}, {"ell", params.ell()}, {"q", params.q.str()},
                  {"a", aj}, {"partition", I.str()}, {"weight_range", weight_range}};
    const int N = params.N, ell = params.ell();
    const FockSpace F(N, ell);
    const auto raising = raising_operators(F, I);

    Weight mu(static_cast<std::size_t>(ell));
    std::function<void(int)> rec = [&](int p) {
        if (p < ell) {
            for (long v = -weight_range; v <= weight_range; ++v) {
                mu[p] = v;
                rec(p + 1);
            }
            return;
        }
        try {
            DominantWeight(mu, I);
        } catch (const std::invalid_argument&) {
            return;
        }
        const FockVector v = F.hw_vector(mu);
        const json where = {{"weight", weight_str(mu)}};
        for (long m0 = 0; m0 <= 2; ++m0)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    if (m0 == 0 && i >= j) continue;
                    for (long m1 = -m1_range; m1 <= m1_range; ++m1)
                        rep.check("plus_kills", F.rho(E(i, j, m0, m1), params, v).is_zero(),
                                  {{"weight", weight_str(mu)}, {"element", to_string(BasisKey::mat(i, j, m0, m1))}});
                }
        const EtaFunctional eta{mu, params.a, N, params.q};
        for (int i = 1; i <= N; ++i)
            for (long n = -n_range; n <= n_range; ++n)
                rep.check("cartan_eigenvalue", F.rho(h_gen(i, n, N, params.q), params, v) == eta_eval(eta, i, n) * v,
                          {{"weight", weight_str(mu)}, {"i", i}, {"n", n}});
        for (const auto& op : raising) rep.check("levi_fixed", op(v).is_zero(), where);
        for (int p = 1; p <= ell; ++p)
            rep.check("gl_weight", F.gl_ell(p, p, v) == Scalar(mu[p - 1]) * v, where);
    };
    rec(0);
    return rep;
}

DecompositionReport verify_nilpotency(const ParameterSet& params, long max_degree, long m1_range) {
    params.validate();
    if (params.ell() != 1) throw InvalidParams("the squared-field check is stated for l = 1");
    DecompositionReport rep;
    rep.config = {{"suite", "nilpotency"}, {"N", params.N}, {"q", params.q.str()}, {"a", params.a[0].str()},
                  {"max_degree", max_degree}, {"m1_range", m1_range}};
    const FockSpace F(params.N, 1);
    for (long n = 0; n <= max_degree; ++n)
        for (const auto& m : F.basis(n)) {
            const FockVector v(m);
            for (int i = 1; i <= params.N; ++i)
                for (int j = 1; j <= params.N; ++j) {
                    if (i == j) continue;
                    for (long m1 = -m1_range; m1 <= m1_range; ++m1) {
                        auto psi = [&](long k, const FockVector& w) { return F.rho(E(i, j, k, m1), params, w); };
                        // Psi(k1) Psi(k2) v can only survive for k2 <= n and k1 <= 2n.
                        for (long K = -3; K <= n; ++K) {
                            FockVector sum;
                            for (long k2 = K - 2 * n - 1; k2 <= n + 1; ++k2) sum += psi(K - k2, psi(k2, v));
                            rep.check("square_vanishes", sum.is_zero(),
                                      {{"vector", F.to_string(m)}, {"i", i}, {"j", j}, {"m1", m1}, {"K", K}});
                        }
                        for (long k1 = -2; k1 <= 2; ++k1)
                            for (long k2 = k1 + 1; k2 <= 2; ++k2)
                                rep.check("family_commutes", psi(k1, psi(k2, v)) == psi(k2, psi(k1, v)),
                                          {{"vector", F.to_string(m)}, {"k1", k1}, {"k2", k2}});
                    }
                }
        }
    return rep;
}

}  // namespace qtorus
