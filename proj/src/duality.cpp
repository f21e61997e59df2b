#include "qtorus/duality.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qtorus/linalg.hpp"

namespace qtorus {

namespace {

using nlohmann::json;

json scalars_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

std::vector<FockVector> as_vectors(const std::vector<FockMonomial>& ms) {
    std::vector<FockVector> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.emplace_back(m);
    return out;
}

bool dominant_for(const Weight& mu, const PartitionI& I) {
    for (const auto& blk : I.blocks())
        for (std::size_t t = 1; t < blk.size(); ++t)
            if (mu[blk[t] - 1] > mu[blk[t - 1] - 1]) return false;
    return true;
}

std::set<Weight> weights_at(const std::vector<FockMonomial>& basis, const FockSpace& F) {
    std::set<Weight> out;
    for (const auto& m : basis) out.insert(F.weight(m));
    return out;
}

std::vector<FockMonomial> with_weight(const std::vector<FockMonomial>& basis, const FockSpace& F, const Weight& mu) {
    std::vector<FockMonomial> out;
    for (const auto& m : basis)
        if (F.weight(m) == mu) out.push_back(m);
    return out;
}

// Dimensions of fixed spaces for every dominant weight occurring at degree n.
std::map<Weight, long> fixed_dims(const FockSpace& F, const PartitionI& I, long n) {
    const auto basis = F.basis(n);
    const auto ops = raising_operators(F, I);
    std::map<Weight, long> out;
    for (const auto& w : weights_at(basis, F)) {
        if (!dominant_for(w, I)) continue;
        const auto k = common_kernel(as_vectors(with_weight(basis, F, w)), ops);
        if (!k.empty()) out[w] = static_cast<long>(k.size());
    }
    return out;
}

json to_json_num(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::uint64_t next(std::mt19937_64& rng, std::uint64_t range) { return rng() % range; }

}  // namespace

std::vector<FockMonomial> weight_space(const FockSpace& F, long degree, const Weight& mu) {
    return with_weight(F.basis(degree), F, mu);
}

std::vector<FockVector> common_kernel(const std::vector<FockVector>& space, const std::vector<FockOperator>& ops) {
    std::vector<FockVector> K = space;
    for (const auto& op : ops) {
        if (K.empty()) break;
        std::vector<FockVector> images;
        images.reserve(K.size());
        bool all_zero = true;
        for (const auto& v : K) {
            images.push_back(op(v));
            all_zero = all_zero && images.back().is_zero();
        }
        if (all_zero) continue;
        std::map<FockMonomial, std::vector<Scalar>> rows;
        for (std::size_t t = 0; t < images.size(); ++t)
            for (const auto& [m, c] : images[t]) {
                auto& row = rows[m];
                row.resize(K.size());
                row[t] = c;
            }
        IntegerEchelon e(K.size());
        for (auto& [m, row] : rows) {
            row.resize(K.size());
            e.add_row(row);
            if (e.rank() == K.size()) break;
        }
        std::vector<FockVector> next;
        for (const auto& combo : e.nullspace()) {
            FockVector v;
            for (std::size_t t = 0; t < K.size(); ++t)
                if (combo[t] != 0) v.add(K[t], Scalar(mpq_class(combo[t])));
            next.push_back(std::move(v));
        }
        K = std::move(next);
    }
    return K;
}

std::vector<FockOperator> raising_operators(const FockSpace& F, const PartitionI& I) {
    std::vector<FockOperator> ops;
    for (const auto& blk : I.blocks())
        for (std::size_t x = 0; x < blk.size(); ++x)
            for (std::size_t y = x + 1; y < blk.size(); ++y) {
                const int r = blk[x], s = blk[y];
                ops.emplace_back([&F, r, s](const FockVector& v) { return F.gl_ell(r, s, v); });
            }
    return ops;
}

std::vector<FockVector> fixed_space(const FixedSpaceQuery& query) {
    const FockSpace F(query.params.N, query.partition.ell());
    if (static_cast<int>(query.weight.size()) != F.ell()) throw InvalidParams("weight length does not match l");
    return common_kernel(as_vectors(weight_space(F, query.degree, query.weight)), raising_operators(F, query.partition));
}

std::vector<FockVector> joint_hw_space(const DominantWeight& mu, const ParameterSet& params) {
    params.validate();
    const PartitionI I = validate_spectrum(params.a, params.q);
    if (!(mu.blocks == I)) throw PartitionMismatch("weight partition differs from the spectrum partition");
    const FockSpace F(params.N, params.ell());
    const FockVector v = F.hw_vector(mu.mu);
    const long d = F.degree(v.begin()->first);
    const long s = static_cast<long>(I.size());
    // Every operator below restricted to the weight space is an exponential
    // polynomial in m1 (or n) with at most T distinct nodes, so sampling
    // 0..T-1 spans the same operators as all integers.
    const long T = 2 * s * (2 * d + 3) + 2 * params.ell() + 2;
    const EtaFunctional eta{mu.mu, params.a, params.N, params.q};

    std::vector<FockOperator> ops = raising_operators(F, I);
    for (int i = 1; i <= params.N; ++i)
        for (long n = 0; n < T; ++n) {
            const GlqElement h = h_gen(i, n, params.N, params.q);
            const Scalar ev = eta_eval(eta, i, n);
            ops.emplace_back([&F, &params, h, ev](const FockVector& w) {
                FockVector out = F.rho(h, params, w);
                out.add(w, -ev);
                return out;
            });
        }
    for (long m0 = 0; m0 <= d; ++m0)
        for (int i = 1; i <= params.N; ++i)
            for (int j = 1; j <= params.N; ++j) {
                if (m0 == 0 && i >= j) continue;
                for (long m1 = 0; m1 < T; ++m1) {
                    const BasisKey x = BasisKey::mat(i, j, m0, m1);
                    ops.emplace_back([&F, &params, x](const FockVector& w) { return F.rho(x, params, w); });
                }
            }
    return common_kernel(as_vectors(weight_space(F, d, mu.mu)), ops);
}

std::size_t joint_hw_dim(const DominantWeight& mu, const ParameterSet& params) {
    return joint_hw_space(mu, params).size();
}

DecompositionReport verify_skew_duality(const ParameterSet& params, long n_max) {
    params.validate();
    const PartitionI I = validate_spectrum(params.a, params.q);
    DecompositionReport rep;
    rep.config = {{"suite", "skew-duality"}, {"N", params.N}, {"ell", params.ell()}, {"q", params.q.str()},
                  {"a", scalars_json(params.a)}, {"n_max", n_max}, {"partition", I.str()}};
    const FockSpace F(params.N, params.ell());
    const auto ops = raising_operators(F, I);
    std::set<Weight> seen;
    for (long n = 0; n <= n_max; ++n) {
        DecompositionReport::Degree deg;
        deg.n = n;
        const auto basis = F.basis(n);
        long lhs = 0;
        for (const auto& w : weights_at(basis, F)) {
            if (!dominant_for(w, I)) continue;
            const auto fixed = common_kernel(as_vectors(with_weight(basis, F, w)), ops);
            if (fixed.empty()) continue;
            const long mult = static_cast<long>(fixed.size());
            const long dim = weyl_dim(DominantWeight(w, I));
            lhs += mult * dim;
            deg.table.push_back({{"weight", weight_str(w)}, {"mult", mult}, {"dim", dim}});
            for (const auto& v : fixed) {
                bool killed = true;
                for (const auto& op : ops) killed = killed && op(v).is_zero();
                rep.check("fixed_vectors_killed", killed, {{"n", n}, {"weight", weight_str(w)}});
            }
            if (seen.insert(w).second) {
                const auto j = joint_hw_dim(DominantWeight(w, I), params);
                rep.check("joint_hw_dim_is_one", j == 1,
                          {{"n", n}, {"weight", weight_str(w)}, {"joint_hw_dim", j}});
            }
        }
        const mpz_class rhs = graded_dim(n, params.N, params.ell());
        deg.lhs = lhs;
        deg.rhs = to_json_num(rhs);
        rep.check("completeness", mpz_class(lhs) == rhs, {{"n", n}, {"lhs", lhs}, {"rhs", to_json_num(rhs)}});
        rep.degrees.push_back(std::move(deg));
    }
    return rep;
}

DecompositionReport verify_tensor_branching(const ParameterSet& params, const std::vector<Scalar>& b, long n_max) {
    params.validate();
    const int la = params.ell(), lb = static_cast<int>(b.size());
    std::vector<Scalar> ab = params.a;
    ab.insert(ab.end(), b.begin(), b.end());
    ParameterSet joint{params.q, ab, params.N};
    joint.validate();
    const PartitionI Iab = validate_spectrum(ab, params.q);
    const PartitionI Ia = validate_spectrum(params.a, params.q);
    const PartitionI Ib = validate_spectrum(b, params.q);
    std::vector<std::vector<int>> split = Ia.blocks();
    for (auto blk : Ib.blocks()) {
        for (auto& p : blk) p += la;
        split.push_back(blk);
    }
    const PartitionI Isplit(split);

    DecompositionReport rep;
    rep.config = {{"suite", "tensor-branching"}, {"N", params.N}, {"ell", la}, {"ell2", lb},
                  {"q", params.q.str()}, {"a", scalars_json(params.a)}, {"b", scalars_json(b)},
                  {"n_max", n_max}, {"partition", Iab.str()}, {"split", Isplit.str()}};
    const FockSpace F(params.N, la + lb);
    for (long n = 0; n <= n_max; ++n) {
        const auto lhs = fixed_dims(F, Isplit, n);
        const auto whole = fixed_dims(F, Iab, n);
        std::map<Weight, long> rhs;
        for (const auto& [xi, fix] : whole)
            for (const auto& [key, D] : levi_branch_D(DominantWeight(xi, Iab), Ia, Ib)) {
                if (lb == 1) rep.check("multiplicity_free", D == 0 || D == 1, {{"xi", weight_str(xi)}, {"D", D}});
                Weight w = key.first;
                w.insert(w.end(), key.second.begin(), key.second.end());
                rhs[w] += D * fix;
            }
        std::set<Weight> keys;
        for (const auto& kv : lhs) keys.insert(kv.first);
        for (const auto& kv : rhs) keys.insert(kv.first);
        DecompositionReport::Degree deg;
        deg.n = n;
        long tl = 0, tr = 0;
        for (const auto& w : keys) {
            const long l = lhs.count(w) ? lhs.at(w) : 0, r = rhs.count(w) ? rhs.at(w) : 0;
            tl += l;
            tr += r;
            const Weight mu(w.begin(), w.begin() + la), nu(w.begin() + la, w.end());
            deg.table.push_back({{"weight", weight_str(mu) + "x" + weight_str(nu)}, {"lhs", l}, {"rhs", r}});
            rep.check("branching", l == r, {{"n", n}, {"mu", weight_str(mu)}, {"nu", weight_str(nu)}, {"lhs", l}, {"rhs", r}});
        }
        deg.lhs = tl;
        deg.rhs = tr;
        rep.degrees.push_back(std::move(deg));
    }
    return rep;
}

DecompositionReport verify_levi_branching(const std::vector<int>& bfN, const ParameterSet& params, long n_max) {
    if (bfN.empty()) throw InvalidParams("need at least one block size");
    int N = 0;
    for (int n : bfN) {
        if (n < 2) throw InvalidParams("block sizes must be at least 2");
        N += n;
    }
    ParameterSet full{params.q, params.a, N};
    full.validate();
    const PartitionI I = validate_spectrum(params.a, params.q);
    const int ell = params.ell();
    const std::size_t d = bfN.size();

    DecompositionReport rep;
    json bj = json::array();
    for (int n : bfN) bj.push_back(n);
    rep.config = {{"suite", "levi-branching"}, {"bfN", bj}, {"N", N}, {"ell", ell}, {"q", params.q.str()},
                  {"a", scalars_json(params.a)}, {"n_max", n_max}, {"partition", I.str()}};

    const FockSpace F(N, ell);
    std::vector<FockSpace> factors;
    for (int n : bfN) factors.emplace_back(n, ell);
    std::vector<std::vector<std::map<Weight, long>>> tables(d);
    for (std::size_t r = 0; r < d; ++r)
        for (long n = 0; n <= n_max; ++n) tables[r].push_back(fixed_dims(factors[r], I, n));

    for (long n = 0; n <= n_max; ++n) {
        const auto lhs = fixed_dims(F, I, n);
        std::map<Weight, long> rhs;
        // Compositions n_1 + ... + n_d = n, then weight tuples.
        std::vector<long> comp(d, 0);
        std::function<void(std::size_t, long)> over_degrees = [&](std::size_t r, long left) {
            if (r + 1 == d) {
                comp[r] = left;
                std::vector<DominantWeight> mus;
                std::function<void(std::size_t, long)> over_weights = [&](std::size_t t, long prod) {
                    if (t == d) {
                        for (const auto& [xi, c] : tensor_mult_C(mus)) rhs[xi] += c * prod;
                        return;
                    }
                    for (const auto& [w, m] : tables[t][comp[t]]) {
                        mus.emplace_back(w, I);
                        over_weights(t + 1, prod * m);
                        mus.pop_back();
                    }
                };
                over_weights(0, 1);
                return;
            }
            for (long k = 0; k <= left; ++k) {
                comp[r] = k;
                over_degrees(r + 1, left - k);
            }
        };
        over_degrees(0, n);

        std::set<Weight> keys;
        for (const auto& kv : lhs) keys.insert(kv.first);
        for (const auto& kv : rhs) keys.insert(kv.first);
        DecompositionReport::Degree deg;
        deg.n = n;
        long tl = 0, tr = 0;
        for (const auto& w : keys) {
            const long l = lhs.count(w) ? lhs.at(w) : 0, r = rhs.count(w) ? rhs.at(w) : 0;
            tl += l;
            tr += r;
            deg.table.push_back({{"weight", weight_str(w)}, {"lhs", l}, {"rhs", r}});
            rep.check("branching", l == r, {{"n", n}, {"xi", weight_str(w)}, {"lhs", l}, {"rhs", r}});
        }
        deg.lhs = tl;
        deg.rhs = tr;
        rep.degrees.push_back(std::move(deg));
    }

    // The Clifford identification relabels psi_i of factor r to psi_{i+offset_r}
    // and commutes with gl_l; checked on products of degree at most one.
    std::vector<int> offset(d, 0);
    for (std::size_t r = 1; r < d; ++r) offset[r] = offset[r - 1] + bfN[r - 1];
    using Tuple = std::vector<FockMonomial>;
    auto embed = [&](const Tuple& parts) {
        FockVector v = vacuum();
        for (std::size_t r = d; r-- > 0;) {
            const auto gs = factors[r].gens(parts[r]);
            for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
                CliffordGen g = *it;
                g.i += offset[r];
                v = F.apply(g, v);
            }
        }
        return v;
    };
    const long probe = std::min<long>(n_max, 1);
    std::vector<Tuple> tuples{Tuple{}};
    for (std::size_t r = 0; r < d; ++r) {
        std::vector<Tuple> next;
        for (const auto& t : tuples)
            for (long n = 0; n <= probe; ++n)
                for (const auto& m : factors[r].basis(n)) {
                    Tuple u = t;
                    u.push_back(m);
                    long total = 0;
                    for (std::size_t x = 0; x < u.size(); ++x) total += factors[x].degree(u[x]);
                    if (total <= probe) next.push_back(std::move(u));
                }
        tuples = std::move(next);
    }
    for (int r = 1; r <= ell; ++r)
        for (int s = 1; s <= ell; ++s)
            for (const auto& t : tuples) {
                FockVector lhs;
                for (std::size_t f = 0; f < d; ++f)
                    for (const auto& [m, c] : factors[f].gl_ell(r, s, FockVector(t[f]))) {
                        Tuple u = t;
                        u[f] = m;
                        lhs.add(embed(u), c);
                    }
                const FockVector rhs = F.gl_ell(r, s, embed(t));
                rep.check("identification_equivariant", lhs == rhs, {{"r", r}, {"s", s}});
            }
    return rep;
}

std::vector<Scalar> lattice_parameters(const std::vector<Scalar>& a, const Scalar& q, int M0, int M1) {
    std::vector<Scalar> out;
    for (int k = 0; k < M0; ++k)
        for (const auto& ar : a) out.push_back((ar * q.pow(-k)).pow(M1));
    return out;
}

DecompositionReport verify_lattice_intertwiner(const ParameterSet& params, int M0, int M1, long n_max,
                                               std::uint64_t seed) {
    params.validate();
    if (M0 < 1 || M1 < 1) throw InvalidParams("M0 and M1 must be positive");
    const int N = params.N, ell = params.ell();
    const PartitionI Ia = validate_spectrum(params.a, params.q);
    const ParameterSet big{params.q.pow(static_cast<long>(M0) * M1), lattice_parameters(params.a, params.q, M0, M1), N};
    big.validate();
    const PartitionI Ibig = validate_spectrum(big.a, big.q);
    if (!(Ibig == Ia.power(M0)))
        throw PartitionMismatch("partition " + Ibig.str() + " differs from " + Ia.power(M0).str());

    DecompositionReport rep;
    rep.config = {{"suite", "lattice-intertwiner"}, {"N", N}, {"ell", ell}, {"M0", M0}, {"M1", M1},
                  {"q", params.q.str()}, {"a", scalars_json(params.a)}, {"n_max", n_max}, {"seed", seed},
                  {"lattice_q", big.q.str()}, {"lattice_a", scalars_json(big.a)}, {"partition", Ibig.str()}};

    const FockSpace small(N, ell), large(N, M0 * ell);
    auto phi = [&](const CliffordGen& g) {
        const int k = (g.p - 1) / ell, p = (g.p - 1) % ell + 1;
        return g.bar ? CliffordGen::psibar(g.i, p, static_cast<long>(M0) * g.mode + k)
                     : CliffordGen::psi(g.i, p, static_cast<long>(M0) * g.mode - k);
    };
    auto Phi = [&](const FockVector& w) {
        FockVector out;
        for (const auto& [m, c] : w) {
            FockVector v = vacuum();
            const auto gs = large.gens(m);
            for (auto it = gs.rbegin(); it != gs.rend(); ++it) v = small.apply(phi(*it), v);
            out.add(v, c);
        }
        return out;
    };

    // (i) anticommutation relations on seeded generator pairs
    std::mt19937_64 rng(seed);
    std::vector<FockVector> probes;
    for (long n = 0; n <= n_max; ++n)
        for (const auto& m : small.basis(n)) probes.emplace_back(m);
    auto sample_gen = [&] {
        const int p = static_cast<int>(next(rng, static_cast<std::uint64_t>(M0 * ell))) + 1;
        const bool bar = next(rng, 2) == 1;
        const int i = static_cast<int>(next(rng, static_cast<std::uint64_t>(N))) + 1;
        const long mode = static_cast<long>(next(rng, 5)) - 2;
        return CliffordGen{p, bar, i, mode};
    };
    for (int t = 0; t < 100; ++t) {
        const CliffordGen g = sample_gen();
        CliffordGen h = sample_gen();
        if (t % 3 == 0) {  // force a contracting pair every third sample
            h = g;
            h.bar = !g.bar;
            h.mode = -g.mode;
        }
        const bool contract = g.bar != h.bar && g.p == h.p && g.i == h.i && g.mode + h.mode == 0;
        const CliffordGen pg = phi(g), ph = phi(h);
        for (const auto& v : probes) {
            FockVector lhs = small.apply(pg, small.apply(ph, v)) + small.apply(ph, small.apply(pg, v));
            const FockVector rhs = contract ? v : FockVector{};
            rep.check("clifford_relations", lhs == rhs,
                      {{"g", large.to_string(g)}, {"h", large.to_string(h)}, {"phi_g", small.to_string(pg)},
                       {"phi_h", small.to_string(ph)}});
        }
    }

    // (ii) intertwining and (iii) equivariance on bounded-degree vectors
    for (long n = 0; n <= n_max; ++n) {
        DecompositionReport::Degree deg;
        deg.n = n;
        const auto basis = large.basis(n);
        long evaluated = 0, held = 0;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (long m0 = -2; m0 <= 2; ++m0)
                    for (long m1 = -2; m1 <= 2; ++m1) {
                        if (i == j && m0 == 0) continue;
                        const BasisKey xb = BasisKey::mat(i, j, m0, m1);
                        const BasisKey xs = BasisKey::mat(i, j, M0 * m0, M1 * m1);
                        for (const auto& m : basis) {
                            const FockVector w(m);
                            const bool ok = Phi(large.rho(xb, big, w)) == small.rho(xs, params, Phi(w));
                            ++evaluated;
                            held += ok;
                            rep.check("intertwining", ok,
                                      {{"n", n}, {"element", to_string(xb)}, {"vector", large.to_string(m)}});
                        }
                    }
        for (const auto& blk : Ia.blocks())
            for (int p : blk)
                for (int pp : blk)
                    for (const auto& m : basis) {
                        const FockVector w(m);
                        FockVector lhs;
                        for (int k = 0; k < M0; ++k) lhs += large.gl_ell(k * ell + p, k * ell + pp, w);
                        const bool ok = Phi(lhs) == small.gl_ell(p, pp, Phi(w));
                        rep.check("gl_equivariance", ok, {{"n", n}, {"p", p}, {"pp", pp}, {"vector", large.to_string(m)}});
                    }
        deg.table.push_back({{"weight", "*"}, {"evaluated", evaluated}, {"held", held}});
        deg.lhs = held;
        deg.rhs = evaluated;
        rep.degrees.push_back(std::move(deg));
    }

    // (iv) restriction along the diagonal GL_I -> GL_I^{M0}
    std::vector<Weight> singles;
    {
        Weight cur(static_cast<std::size_t>(ell));
        std::function<void(int)> rec = [&](int p) {
            if (p == ell) {
                if (dominant_for(cur, Ia)) singles.push_back(cur);
                return;
            }
            for (long v = -2; v <= 2; ++v) {
                cur[p] = v;
                rec(p + 1);
            }
        };
        rec(0);
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(M0), 0);
    while (true) {
        std::vector<DominantWeight> mus;
        long prod = 1;
        for (auto t : idx) {
            mus.emplace_back(singles[t], Ia);
            prod *= weyl_dim(mus.back());
        }
        long sum = 0;
        for (const auto& [xi, E] : tensor_mult_C(mus)) sum += E * weyl_dim(DominantWeight(xi, Ia));
        json desc = json::array();
        for (const auto& m : mus) desc.push_back(weight_str(m.mu));
        rep.check("multiplicity_dimensions", sum == prod, {{"mu", desc}, {"lhs", sum}, {"rhs", prod}});
        std::size_t t = 0;
        while (t < idx.size() && ++idx[t] == singles.size()) idx[t++] = 0;
        if (t == idx.size()) break;
    }
    return rep;
}

}  // namespace qtorus
