#include <set>

#include "doctest.h"
#include "qtorus/covariant.hpp"
#include "qtorus/suites.hpp"

using namespace qtorus;

namespace {

std::vector<CovKey> window(int N, long r) {
    std::vector<CovKey> keys{CovKey::k(), CovKey::kprime()};
    for (int s = 1; s < N; ++s) keys.push_back(CovKey::hbar(s));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (long m0 = -r; m0 <= r; ++m0)
                for (long m1 = -r; m1 <= r; ++m1)
                    if (!(i == j && m0 == 0 && m1 == 0)) keys.push_back(CovKey::e(i, j, m0, m1));
    return keys;
}

}  // namespace

TEST_CASE("canonical representatives") {
    const Scalar q(3);
    const auto [c1, k1] = canonicalize(5, 3, 2, 2, q);
    CHECK(c1 == q.pow(-2));
    CHECK(k1 == CovKey::e(1, 1, 2, 1));
    const auto [c2, k2] = canonicalize(1, 2, 0, 2, q);
    CHECK(c2 == Scalar(1));
    CHECK(k2 == CovKey::e(1, 2, 0, 0));
    RawElement d;
    d.add(RawKey::unit(3, 3, 0), Scalar(1));
    d.add(RawKey::unit(1, 1, 0), Scalar(-1));
    CHECK(canonicalize(d, 2, q) == CovElement(CovKey::kprime()));
    RawElement single;
    single.add(RawKey::unit(2, 2, 0), Scalar(1));
    CHECK_THROWS_AS(canonicalize(single, 2, q), NotInSlInfinity);
}

TEST_CASE("canonicalize respects the shift relation and is idempotent") {
    const Scalar q(5, 2);
    for (int N : {2, 3})
        for (long m = -7; m <= 7; ++m)
            for (long n = -7; n <= 7; ++n) {
                if (m == n) continue;
                for (long k = -3; k <= 3; ++k) {
                    const auto [c, key] = canonicalize(m, n, k, N, q);
                    const auto [c2, key2] = canonicalize(m + N, n + N, k, N, q);
                    CHECK(key == key2);
                    CHECK(c == q.pow(k) * c2);
                    CHECK(canonicalize(lift(key, N, q), N, q) == CovElement(key));
                }
            }
}

TEST_CASE("covariant bracket examples") {
    const Scalar q(2);
    const auto [ca, ka] = canonicalize(3, 2, 1, 2, q);
    const auto [cb, kb] = canonicalize(0, 1, -1, 2, q);
    CovElement expect;
    expect.add(CovKey::hbar(1), q.inverse());
    expect.add(CovKey::kprime(), q.inverse());
    expect.add(CovKey::k(), q.inverse());
    CHECK(ca * cb * cov_bracket(ka, kb, 2, q) == expect);
    for (const auto& key : window(2, 1)) CHECK(cov_bracket(CovKey::k(), key, 2, q).is_zero());
    CHECK(cov_bracket(CovKey::e(1, 2, 0, 0), CovKey::e(2, 1, 0, 0), 2, q) == CovElement(CovKey::hbar(1)));
}

TEST_CASE("covariant bracket is antisymmetric and satisfies Jacobi on the window") {
    const Scalar q(3);
    const auto keys = window(2, 1);
    for (std::size_t a = 0; a < keys.size(); a += 3)
        for (std::size_t b = 0; b < keys.size(); b += 2) {
            const auto ab = cov_bracket(keys[a], keys[b], 2, q);
            CHECK(ab == -cov_bracket(keys[b], keys[a], 2, q));
            const auto& c = keys[(a + 5 * b) % keys.size()];
            const CovElement x(keys[a]), y(keys[b]), z(c);
            const auto jac = cov_bracket(x, cov_bracket(y, z, 2, q), 2, q) + cov_bracket(y, cov_bracket(z, x, 2, q), 2, q) +
                             cov_bracket(z, ab, 2, q);
            CHECK(jac.is_zero());
        }
}

TEST_CASE("orbit sums have at most two terms per pair of matrix units") {
    const Scalar q(2);
    for (int N : {2, 3}) {
        const auto keys = window(N, 2);
        for (const auto& u : keys)
            for (const auto& v : keys) {
                const RawElement lu = lift(u, N, q), lv = lift(v, N, q);
                for (const auto& [ku, cu] : lu)
                    for (const auto& [kv, cv] : lv) CHECK(orbit_terms(ku, kv, N) <= 2);
            }
    }
}

TEST_CASE("theta on the basis") {
    const Scalar q(2);
    CHECK(theta(E(1, 2, 2, 3), 2, q) == q.pow(-6) * CovElement(CovKey::e(1, 2, 2, -3)));
    CHECK(theta(K1(), 2, q) == -CovElement(CovKey::kprime()));
    CHECK(theta(K0(), 2, q) == CovElement(CovKey::k()));
    CHECK(theta(E(1, 1, 2), 2, q) == CovElement(CovKey::e(1, 1, 2, 0)));
    CHECK(theta(E(1, 1) - E(2, 2), 2, q) == CovElement(CovKey::hbar(1)));
    CHECK_THROWS_AS(theta(E(1, 1), 2, q), NotInSl);
    RawElement l;
    l.add(RawKey::unit(1, 1, 2), Scalar(4, 3));
    l.add(RawKey::unit(3, 3, 2), Scalar(-4, 3));
    CHECK(lift(CovKey::e(1, 1, 2, 0), 2, q) == l);

    CHECK(theta_inv(CovElement(CovKey::e(1, 2, 2, 3)), 2, q) == q.pow(-6) * E(1, 2, 2, -3));
    CHECK(theta_inv(CovElement(CovKey::k()), 2, q) == K0());
    CHECK(theta_inv(CovElement(CovKey::hbar(1)), 2, q) == E(1, 1) - E(2, 2));
}

TEST_CASE("the plain relabeling does not preserve brackets") {
    // [E12 t0, E21 t1] = E11 t0 t1 - q E22 t0 t1, while the covariant bracket of
    // e12(1,0) and e21(0,1) is q e11(1,1) - e22(1,1).
    const Scalar q(2);
    const GlqElement x = E(1, 2, 1, 0), y = E(2, 1, 0, 1);
    CHECK(relabel(bracket(x, y, q), 2) == CovElement(CovKey::e(1, 1, 1, 1)) - q * CovElement(CovKey::e(2, 2, 1, 1)));
    CHECK(cov_bracket(relabel(x, 2), relabel(y, 2), 2, q) ==
          q * CovElement(CovKey::e(1, 1, 1, 1)) - CovElement(CovKey::e(2, 2, 1, 1)));
    CHECK(theta(bracket(x, y, q), 2, q) == cov_bracket(theta(x, 2, q), theta(y, 2, q), 2, q));
}

TEST_CASE("theta is a bijection between the bases") {
    const Scalar q(3);
    for (int N : {2, 3}) {
        std::set<CovKey> images;
        const auto keys = window(N, 3);
        for (const auto& k : keys) {
            const GlqElement x = theta_inv(CovElement(k), N, q);
            const CovElement u = theta(x, N, q);
            REQUIRE(u.size() == 1);
            images.insert(u.begin()->first);
        }
        CHECK(images.size() == keys.size());
    }
}

TEST_CASE("theta suite") {
    for (int N : {2, 3})
        for (const auto& q : {Scalar(2), Scalar(3), Scalar(5, 2)}) {
            const auto rep = verify_theta(N, q, 60, 9, 2);
            CHECK_MESSAGE(rep.pass, rep.to_json().dump());
        }
}

TEST_CASE("covariant text form") {
    const CovElement u = Scalar(2) * CovElement(CovKey::e(1, 2, -1, 3)) - CovElement(CovKey::kprime()) +
                         Scalar(1, 2) * CovElement(CovKey::hbar(1)) + CovElement(CovKey::k());
    CHECK(parse_cov(to_string(u)) == u);
    CHECK(to_string(CovKey::e(2, 1, 0, -1)) == "e[2,1](0,-1)");
    CHECK_THROWS(CovKey::e(1, 1, 0, 0));
}
