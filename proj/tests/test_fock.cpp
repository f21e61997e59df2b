#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "qtorus/fock.hpp"
#include "qtorus/glrep.hpp"
#include "qtorus/suites.hpp"

using namespace qtorus;

namespace {

FockVector mono(const FockSpace& F, std::vector<CliffordGen> gs) {
    FockVector v = vacuum();
    std::reverse(gs.begin(), gs.end());
    for (const auto& g : gs) v = F.apply(g, v);
    return v;
}

std::vector<FockVector> basis_upto(const FockSpace& F, long n) {
    std::vector<FockVector> out;
    for (long d = 0; d <= n; ++d)
        for (const auto& m : F.basis(d)) out.emplace_back(m);
    return out;
}

long degree_of(const FockSpace& F, const FockVector& v) {
    long d = -1;
    for (const auto& [m, c] : v) {
        const long e = F.degree(m);
        if (d >= 0 && d != e) return -2;
        d = e;
    }
    return d;
}

}  // namespace

TEST_CASE("Clifford generators on the vacuum") {
    const FockSpace F(2, 1);
    CHECK(F.apply(CliffordGen::psibar(1, 1, 0), vacuum()).is_zero());
    CHECK(F.apply(CliffordGen::psi(1, 1, 1), vacuum()).is_zero());
    const FockVector one = F.apply(CliffordGen::psi(1, 1, 0), vacuum());
    CHECK(F.apply(CliffordGen::psi(1, 1, 0), one).is_zero());
    CHECK(F.apply(CliffordGen::psibar(1, 1, 0), one) == vacuum());
    CHECK(F.apply(CliffordGen::psibar(2, 1, 0), one).is_zero());
}

TEST_CASE("anticommutation relations on basis vectors") {
    const FockSpace F(2, 2);
    std::vector<CliffordGen> gens;
    for (int p = 1; p <= 2; ++p)
        for (int i = 1; i <= 2; ++i)
            for (long m = -2; m <= 2; ++m) {
                gens.push_back(CliffordGen::psi(i, p, m));
                gens.push_back(CliffordGen::psibar(i, p, m));
            }
    const auto vs = basis_upto(F, 1);
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            const auto &g = gens[a], &h = gens[b];
            const bool dual = g.bar != h.bar && g.p == h.p && g.i == h.i && g.mode + h.mode == 0;
            for (std::size_t t = 0; t < vs.size(); t += 3) {
                const auto& v = vs[t];
                const FockVector ac = F.apply(g, F.apply(h, v)) + F.apply(h, F.apply(g, v));
                CHECK(ac == (dual ? v : FockVector()));
            }
        }
}

TEST_CASE("normal ordering of a pair") {
    const auto a = normal_order_pair(1, 1, 0, 1, 1, 0);
    CHECK(a.sign == 1);
    CHECK_FALSE(a.left.bar);
    const auto b = normal_order_pair(1, 1, 1, 1, 1, 0);
    CHECK(b.sign == -1);
    CHECK(b.left.bar);
    const auto c = normal_order_pair(1, 1, -2, 1, 1, -1);
    CHECK(c.sign == 1);
    CHECK_FALSE(c.left.bar);
}

TEST_CASE("normal ordering rules agree on every action") {
    for (int ell : {1, 2}) {
        const FockSpace F(2, ell);
        const ParameterSet P{Scalar(2), ell == 1 ? std::vector<Scalar>{3} : std::vector<Scalar>{3, 5}, 2};
        const auto vs = basis_upto(F, ell == 1 ? 2 : 1);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (long m0 = -2; m0 <= 2; ++m0)
                    for (long m1 = -1; m1 <= 1; ++m1)
                        for (const auto& v : vs)
                            CHECK(F.rho(E(i, j, m0, m1), P, v, NormalOrdering::ModeCompare) ==
                                  F.rho(E(i, j, m0, m1), P, v, NormalOrdering::AnnihilatorRight));
        for (int i = 1; i <= 2; ++i)
            for (long m = -2; m <= 2; ++m)
                for (long n = -2; n <= 2; ++n)
                    for (const auto& v : vs)
                        CHECK(F.normal_ordered(i, 1, m, i, 1, n, v, NormalOrdering::ModeCompare) ==
                              F.normal_ordered(i, 1, m, i, 1, n, v, NormalOrdering::AnnihilatorRight));
    }
}

TEST_CASE("rho examples") {
    const FockSpace F(2, 1);
    const ParameterSet P{Scalar(2), {Scalar(3)}, 2};
    CHECK(F.rho(E(1, 1, 0, 1), P, vacuum()) == Scalar(-6) * vacuum());
    const FockVector v = mono(F, {CliffordGen::psi(1, 1, 0)});
    CHECK(F.rho(K0(), P, v) == v);
    CHECK(F.rho(E(1, 2, 1, 1), P, vacuum()).is_zero());
    const FockSpace F2(2, 2);
    const ParameterSet P2{Scalar(2), {Scalar(3), Scalar(5)}, 2};
    CHECK(F2.rho(K0(), P2, vacuum()) == Scalar(2) * vacuum());
    CHECK(F2.rho(K1(), P2, vacuum()).is_zero());
}

TEST_CASE("rho on l = 2 is the tensor product of two l = 1 actions") {
    const FockSpace F1(2, 1), F2(2, 2);
    const Scalar q(2);
    const Scalar a1(3), a2(5);
    const ParameterSet P1{q, {a1}, 2}, Q1{q, {a2}, 2}, P2{q, {a1, a2}, 2};
    auto embed = [&](const FockMonomial& x, const FockMonomial& y) {
        FockMonomial out;
        for (auto g : F1.gens(x)) out.codes.push_back(F2.encode(g));
        for (auto g : F1.gens(y)) {
            g.p = 2;
            out.codes.push_back(F2.encode(g));
        }
        return out;
    };
    std::vector<FockMonomial> small;
    for (long d = 0; d <= 1; ++d)
        for (const auto& m : F1.basis(d)) small.push_back(m);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (long m0 = -1; m0 <= 1; ++m0)
                for (long m1 = -2; m1 <= 2; ++m1) {
                    const auto x = E(i, j, m0, m1);
                    for (const auto& u : small)
                        for (const auto& w : small) {
                            const FockVector lhs = F2.rho(x, P2, FockVector(embed(u, w)));
                            FockVector rhs;
                            for (const auto& [m, c] : F1.rho(x, P1, FockVector(u))) rhs.add(embed(m, w), c);
                            for (const auto& [m, c] : F1.rho(x, Q1, FockVector(w))) rhs.add(embed(u, m), c);
                            CHECK(lhs == rhs);
                        }
                }
}

TEST_CASE("gl_l action") {
    const FockSpace F(2, 2);
    CHECK(F.gl_ell(1, 2, mono(F, {CliffordGen::psi(1, 2, 0)})) == mono(F, {CliffordGen::psi(1, 1, 0)}));
    CHECK(F.gl_ell(1, 2, vacuum()).is_zero());
    CHECK(F.gl_ell(2, 1, vacuum()).is_zero());
    const FockVector v = mono(F, {CliffordGen::psi(1, 1, 0)});
    CHECK(F.gl_ell(1, 1, v) == v);
    for (const auto& m : F.basis(2)) {
        const auto w = F.weight(m);
        CHECK(F.gl_ell(1, 1, FockVector(m)) == Scalar(w[0]) * FockVector(m));
        CHECK(F.gl_ell(2, 2, FockVector(m)) == Scalar(w[1]) * FockVector(m));
    }
}

TEST_CASE("gl-infinity action") {
    const FockSpace F(2, 1);
    CHECK(F.glbar(1, 2, mono(F, {CliffordGen::psi(2, 1, 0)})) == mono(F, {CliffordGen::psi(1, 1, 0)}));
    // Level of the central extension: [E_ab, E_ba] - E_aa + E_bb on the vacuum.
    const FockSpace G(2, 3);
    for (const std::vector<int>& S : {std::vector<int>{1, 3}, std::vector<int>{2}, std::vector<int>{}})
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b) {
                if (a == b) continue;
                const FockVector c = G.glbar(a, b, G.glbar(b, a, vacuum(), S), S) -
                                     G.glbar(b, a, G.glbar(a, b, vacuum(), S), S) - G.glbar(a, a, vacuum(), S) +
                                     G.glbar(b, b, vacuum(), S);
                const long level = S.empty() ? 3 : static_cast<long>(S.size());
                const long expect = (a <= 0 && b >= 1) ? level : (b <= 0 && a >= 1) ? -level : 0;
                CHECK(c == Scalar(expect) * vacuum());
            }
    for (long m = 1; m <= 3; ++m)
        for (long n = 1; n <= 3; ++n) CHECK(F.glbar(m * 2 + 1, n * 2 + 2, vacuum()).is_zero());
}

TEST_CASE("dual actions commute") {
    // rho_a commutes with gl_l only along the blocks of I_a.
    const FockSpace F(2, 2);
    const ParameterSet Pfull{Scalar(2), {Scalar(3), Scalar(3)}, 2};
    const ParameterSet Psplit{Scalar(2), {Scalar(3), Scalar(5)}, 2};
    const auto vs = basis_upto(F, 1);
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (const auto& v : vs) {
                const ParameterSet& P = r == s ? Psplit : Pfull;
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j)
                        for (long m0 = -1; m0 <= 1; ++m0)
                            for (long m1 = -1; m1 <= 1; ++m1) {
                                const auto x = E(i, j, m0, m1);
                                CHECK(F.gl_ell(r, s, F.rho(x, P, v)) == F.rho(x, P, F.gl_ell(r, s, v)));
                            }
                for (long a = -2; a <= 2; ++a)
                    for (long b = -2; b <= 2; ++b)
                        CHECK(F.gl_ell(r, s, F.glbar(a, b, v)) == F.glbar(a, b, F.gl_ell(r, s, v)));
            }
}

TEST_CASE("rho respects the grading") {
    const FockSpace F(2, 1);
    const ParameterSet P{Scalar(3), {Scalar(2)}, 2};
    for (const auto& v : basis_upto(F, 2)) {
        const long n = degree_of(F, v);
        for (long m0 = -2; m0 <= 2; ++m0)
            for (long m1 = -1; m1 <= 1; ++m1) {
                const auto w = F.rho(E(1, 2, m0, m1), P, v);
                if (!w.is_zero()) CHECK(degree_of(F, w) == n - m0);
            }
        CHECK(degree_of(F, F.gl_ell(1, 1, v)) == (F.gl_ell(1, 1, v).is_zero() ? -1 : n));
    }
}

TEST_CASE("module property on small truncations") {
    const auto rep = verify_module({Scalar(2), {Scalar(3)}, 2}, 25, 17);
    CHECK_MESSAGE(rep.pass, rep.to_json().dump());
    const auto rep2 = verify_module({Scalar(5, 2), {Scalar(3), Scalar(3)}, 2}, 8, 4, 1);
    CHECK_MESSAGE(rep2.pass, rep2.to_json().dump());
}

TEST_CASE("vacuum weight") {
    for (int N : {2, 3})
        for (int ell : {1, 2}) {
            const FockSpace F(N, ell);
            std::vector<Scalar> a{Scalar(3), Scalar(5)};
            a.resize(static_cast<std::size_t>(ell));
            const ParameterSet P{Scalar(2), a, N};
            for (int i = 1; i < N; ++i) CHECK(F.rho(h_gen(i, 0, N, P.q), P, vacuum()).is_zero());
            CHECK(F.rho(h_gen(N, 0, N, P.q), P, vacuum()) == Scalar(ell) * vacuum());
            const EtaFunctional eta{Weight(static_cast<std::size_t>(ell), 0), a, N, P.q};
            CHECK(eta_eval(eta, N, 0) == Scalar(ell));
        }
}

TEST_CASE("highest weight vectors") {
    const FockSpace F(2, 1);
    CHECK(F.hw_vector({0}) == vacuum());
    CHECK(F.hw_vector({1}) == mono(F, {CliffordGen::psi(1, 1, 0)}));
    CHECK(F.hw_vector({-1}) == mono(F, {CliffordGen::psibar(2, 1, -1)}));
    CHECK(FockSpace(3, 2).hw_vector({0, 0}) == vacuum());
    for (long m = -4; m <= 4; ++m) {
        const auto v = F.hw_vector({m});
        REQUIRE(v.size() == 1);
        CHECK(F.weight(v.begin()->first) == Weight{m});
    }
}

TEST_CASE("highest weight relations") {
    const auto rep = verify_hw({Scalar(2), {Scalar(3)}, 2}, 3);
    CHECK_MESSAGE(rep.pass, rep.to_json().dump());
    const auto rep2 = verify_hw({Scalar(5, 2), {Scalar(3), Scalar(3)}, 2}, 1, 1, 2);
    CHECK_MESSAGE(rep2.pass, rep2.to_json().dump());
}

TEST_CASE("squares of fields vanish at level one") {
    const auto rep = verify_nilpotency({Scalar(3), {Scalar(2)}, 2}, 1, 1);
    CHECK_MESSAGE(rep.pass, rep.to_json().dump());
    CHECK_THROWS_AS(verify_nilpotency({Scalar(3), {Scalar(2), Scalar(5)}, 2}), InvalidParams);
}

TEST_CASE("graded dimensions") {
    CHECK(graded_dim(0, 2, 1) == 4);
    CHECK(graded_dim(1, 2, 1) == 16);
    for (int N = 2; N <= 3; ++N)
        for (int ell = 1; ell <= 2; ++ell) {
            CHECK(graded_dim(0, N, ell) == mpz_class(1) << (N * ell));
            for (long n = 0; n <= 4; ++n) CHECK(graded_dim(n, N, ell) == oracle::graded_dim(n, N, ell));
            for (long n = 0; n <= (N * ell > 4 ? 1 : 3); ++n)
                CHECK(mpz_class(static_cast<unsigned long>(FockSpace(N, ell).basis(n).size())) == graded_dim(n, N, ell));
        }
}

TEST_CASE("phi coordinates") {
    for (int N : {2, 3})
        for (long n = -3; n <= 3; ++n)
            for (int i = 1; i <= N; ++i) {
                const auto g = CliffordGen::psi(i, 1, n), h = CliffordGen::psibar(i, 1, n);
                CHECK(phi_index(g, N) == n * N - i);
                CHECK(phi_index(h, N) == n * N + i - 1);
                CHECK(from_phi(1, false, phi_index(g, N), N) == g);
                CHECK(from_phi(1, true, phi_index(h, N), N) == h);
                CHECK(g.creates() == (phi_index(g, N) < 0));
                CHECK(h.creates() == (phi_index(h, N) < 0));
            }
}

TEST_CASE("text and JSON forms") {
    const FockSpace F(2, 2);
    for (const auto& m : F.basis(2)) CHECK(F.parse_monomial(F.to_string(m)) == m);
    CHECK(F.to_string(FockMonomial{}) == "|0>");
    const FockVector v = Scalar(2) * mono(F, {CliffordGen::psi(1, 1, 0), CliffordGen::psibar(2, 2, -1)}) -
                         Scalar(1, 3) * vacuum();
    CHECK(F.from_json(F.to_json(v)) == v);
}
