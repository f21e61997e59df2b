#include "qtorus/covariant.hpp"

#include <map>
#include <regex>
#include <set>
#include <vector>

#include "qtorus/textform.hpp"

namespace qtorus {

namespace {

long floor_div(long a, long b) {
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

// a = N*block(a) + residue(a) with residue in 1..N.
long block(long a, int N) { return floor_div(a - 1, N); }
int residue(long a, int N) { return static_cast<int>(a - static_cast<long>(N) * block(a, N)); }

}  // namespace

CovKey CovKey::e(int i, int j, long m0, long m1) {
    if (i == j && m0 == 0 && m1 == 0) throw std::invalid_argument("e[i,i](0,0) is not a basis element");
    return {Kind::Eij, i, j, m0, m1};
}

std::pair<Scalar, CovKey> canonicalize(long m, long n, long k, int N, const Scalar& q) {
    if (m == n) throw NotInSlInfinity();
    const long n1 = block(n, N), m1 = block(m, N);
    return {q.pow(-k * n1), CovKey::e(residue(m, N), residue(n, N), k, m1 - n1)};
}

CovElement canonicalize(const RawElement& x, int N, const Scalar& q) {
    CovElement out;
    std::map<long, std::vector<std::pair<long, Scalar>>> diag;
    for (const auto& [key, c] : x) {
        if (key.central) {
            out.add(CovKey::k(), c);
        } else if (key.a != key.b) {
            auto [f, ck] = canonicalize(key.a, key.b, key.m, N, q);
            out.add(ck, f * c);
        } else {
            diag[key.m].emplace_back(key.a, c);
        }
    }
    for (const auto& [k, units] : diag) {
        Scalar trace;
        for (const auto& u : units) trace += u.second;
        if (!trace.is_zero()) throw NotInSlInfinity();
        if (k != 0) {
            for (const auto& [a, c] : units) {
                const int i = residue(a, N);
                out.add(CovKey::e(i, i, k, 0), c * q.pow(-k * block(a, N)));
            }
            continue;
        }
        std::vector<Scalar> d(static_cast<std::size_t>(N));
        Scalar kp;
        for (const auto& [a, c] : units) {
            d[residue(a, N) - 1] += c;
            kp += c * Scalar(block(a, N));
        }
        Scalar partial;
        for (int r = 1; r < N; ++r) {
            partial += d[r - 1];
            out.add(CovKey::hbar(r), partial);
        }
        out.add(CovKey::kprime(), kp);
    }
    return out;
}

RawElement lift(const CovKey& key, int N, const Scalar& q) {
    RawElement out;
    switch (key.kind) {
        case CovKey::Kind::K:
            out.add(RawKey::k(), 1);
            break;
        case CovKey::Kind::Kprime:
            out.add(RawKey::unit(N + 1, N + 1, 0), 1);
            out.add(RawKey::unit(1, 1, 0), -1);
            break;
        case CovKey::Kind::Hbar:
            out.add(RawKey::unit(key.i, key.i, 0), 1);
            out.add(RawKey::unit(key.i + 1, key.i + 1, 0), -1);
            break;
        case CovKey::Kind::Eij:
            if (key.i == key.j && key.m1 == 0) {
                const Scalar f = (Scalar(1) - q.pow(-key.m0)).inverse();
                out.add(RawKey::unit(key.i, key.i, key.m0), f);
                out.add(RawKey::unit(N + key.i, N + key.i, key.m0), -f);
            } else {
                out.add(RawKey::unit(static_cast<long>(N) * key.m1 + key.i, key.j, key.m0), 1);
            }
            break;
    }
    return out;
}

namespace {

std::set<long> orbit_candidates(const RawKey& u, const RawKey& v, int N) {
    std::set<long> rs;
    if (u.central || v.central) return rs;
    if ((v.a - u.b) % N == 0) rs.insert((v.a - u.b) / N);
    if ((v.b - u.a) % N == 0) rs.insert((v.b - u.a) / N);
    return rs;
}

RawElement orbit_term(const RawKey& u, const RawKey& v, long r, int N, const Scalar& q) {
    RawElement out;
    const long A = u.a + N * r, B = u.b + N * r;
    const Scalar chi = q.pow(r * u.m);
    if (B == v.a) out.add(RawKey::unit(A, v.b, u.m + v.m), chi);
    if (v.b == A) out.add(RawKey::unit(v.a, B, u.m + v.m), -chi);
    if (u.m + v.m == 0 && B == v.a && A == v.b) out.add(RawKey::k(), chi * Scalar(u.m));
    return out;
}

}  // namespace

RawElement orbit_bracket(const RawKey& u, const RawKey& v, int N, const Scalar& q) {
    RawElement out;
    for (long r : orbit_candidates(u, v, N)) out.add(orbit_term(u, v, r, N, q));
    return out;
}

int orbit_terms(const RawKey& u, const RawKey& v, int N) {
    int count = 0;
    for (long r : orbit_candidates(u, v, N))
        if (!orbit_term(u, v, r, N, Scalar(2)).is_zero()) ++count;
    return count;
}

CovElement cov_bracket(const CovKey& u, const CovKey& v, int N, const Scalar& q) {
    RawElement sum;
    const RawElement lu = lift(u, N, q), lv = lift(v, N, q);
    for (const auto& [ku, cu] : lu)
        for (const auto& [kv, cv] : lv) sum.add(orbit_bracket(ku, kv, N, q), cu * cv);
    return canonicalize(sum, N, q);
}

CovElement cov_bracket(const CovElement& u, const CovElement& v, int N, const Scalar& q) {
    CovElement out;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v) out.add(cov_bracket(ku, kv, N, q), cu * cv);
    return out;
}

CovElement relabel(const GlqElement& x, int N) {
    if (!in_sl(x)) throw NotInSl();
    CovElement out;
    std::vector<Scalar> d(static_cast<std::size_t>(N));
    for (const auto& [k, c] : x) {
        switch (k.kind) {
            case BasisKey::Kind::K0: out.add(CovKey::k(), c); break;
            case BasisKey::Kind::K1: out.add(CovKey::kprime(), c); break;
            case BasisKey::Kind::Mat:
                if (k.i == k.j && k.m0 == 0 && k.m1 == 0) d[k.i - 1] += c;
                else out.add(CovKey::e(k.i, k.j, k.m0, k.m1), c);
                break;
        }
    }
    Scalar partial;
    for (int r = 1; r < N; ++r) {
        partial += d[r - 1];
        out.add(CovKey::hbar(r), partial);
    }
    return out;
}

CovElement theta(const GlqElement& x, int N, const Scalar& q) {
    if (!in_sl(x)) throw NotInSl();
    CovElement out;
    std::vector<Scalar> d(static_cast<std::size_t>(N));
    for (const auto& [k, c] : x) {
        switch (k.kind) {
            case BasisKey::Kind::K0: out.add(CovKey::k(), c); break;
            case BasisKey::Kind::K1: out.add(CovKey::kprime(), -c); break;
            case BasisKey::Kind::Mat:
                if (k.i == k.j && k.m0 == 0 && k.m1 == 0) d[k.i - 1] += c;
                else out.add(CovKey::e(k.i, k.j, k.m0, -k.m1), c * q.pow(-k.m0 * k.m1));
                break;
        }
    }
    Scalar partial;
    for (int r = 1; r < N; ++r) {
        partial += d[r - 1];
        out.add(CovKey::hbar(r), partial);
    }
    return out;
}

GlqElement theta_inv(const CovElement& u, int N, const Scalar& q) {
    GlqElement out;
    for (const auto& [k, c] : u) {
        switch (k.kind) {
            case CovKey::Kind::K: out.add(BasisKey::k0(), c); break;
            case CovKey::Kind::Kprime: out.add(BasisKey::k1(), -c); break;
            case CovKey::Kind::Hbar:
                if (k.i < 1 || k.i >= N) throw std::out_of_range("hbar index outside 1..N-1");
                out.add(BasisKey::mat(k.i, k.i), c);
                out.add(BasisKey::mat(k.i + 1, k.i + 1), -c);
                break;
            case CovKey::Kind::Eij: out.add(BasisKey::mat(k.i, k.j, k.m0, -k.m1), c * q.pow(-k.m0 * k.m1)); break;
        }
    }
    return out;
}

std::string to_string(const CovKey& k) {
    switch (k.kind) {
        case CovKey::Kind::K: return "k";
        case CovKey::Kind::Kprime: return "kprime";
        case CovKey::Kind::Hbar: return "hbar[" + std::to_string(k.i) + "]";
        case CovKey::Kind::Eij: break;
    }
    return "e[" + std::to_string(k.i) + "," + std::to_string(k.j) + "](" + std::to_string(k.m0) + "," +
           std::to_string(k.m1) + ")";
}

std::string to_string(const CovElement& x) {
    std::vector<std::string> terms;
    for (const auto& [k, c] : x) terms.push_back(text::term(c, to_string(k)));
    return text::join(terms);
}

CovElement parse_cov(std::string_view s) {
    static const std::regex eij(R"(e\[\s*(\d+)\s*,\s*(\d+)\s*\]\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    static const std::regex hb(R"(hbar\[\s*(\d+)\s*\])");
    CovElement out;
    for (auto& [c, key] : text::split_terms(s)) {
        std::smatch m;
        if (key == "k") out.add(CovKey::k(), c);
        else if (key == "kprime") out.add(CovKey::kprime(), c);
        else if (std::regex_match(key, m, hb)) out.add(CovKey::hbar(std::stoi(m[1])), c);
        else if (std::regex_match(key, m, eij))
            out.add(CovKey::e(std::stoi(m[1]), std::stoi(m[2]), std::stol(m[3]), std::stol(m[4])), c);
        else throw std::invalid_argument("unknown covariant basis element '" + key + "'");
    }
    return out;
}

}  // namespace qtorus
