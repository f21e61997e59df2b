#include "qtorus/liealg.hpp"

#include <regex>

#include "qtorus/textform.hpp"

namespace qtorus {

GlqElement bracket(const BasisKey& x, const BasisKey& y, const Scalar& q) {
    GlqElement out;
    if (!x.is_mat() || !y.is_mat()) return out;
    const long s0 = x.m0 + y.m0, s1 = x.m1 + y.m1;
    if (x.j == y.i) {
        const Scalar c = q.pow(x.m1 * y.m0);
        out.add(BasisKey::mat(x.i, y.j, s0, s1), c);
        if (x.i == y.j && s0 == 0 && s1 == 0) {
            out.add(BasisKey::k0(), c * Scalar(x.m0));
            out.add(BasisKey::k1(), c * Scalar(x.m1));
        }
    }
    if (x.i == y.j) out.add(BasisKey::mat(y.i, x.j, s0, s1), -q.pow(y.m1 * x.m0));
    return out;
}

GlqElement bracket(const GlqElement& x, const GlqElement& y, const Scalar& q) {
    GlqElement out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) out.add(bracket(kx, ky, q), cx * cy);
    return out;
}

GlqElement h_gen(int i, long n, int N, const Scalar& q) {
    if (i < 1 || i > N) throw std::out_of_range("h_gen index outside 1..N");
    GlqElement h;
    if (i < N) {
        h.add(BasisKey::mat(i, i, 0, n), 1);
        h.add(BasisKey::mat(i + 1, i + 1, 0, n), -1);
    } else if (n != 0) {
        h.add(BasisKey::mat(1, 1, 0, n), -q.pow(n));
        h.add(BasisKey::mat(N, N, 0, n), 1);
    } else {
        h.add(BasisKey::k0(), 1);
        h.add(BasisKey::mat(1, 1), -1);
        h.add(BasisKey::mat(N, N), 1);
    }
    return h;
}

bool in_sl(const GlqElement& x) {
    Scalar trace;
    for (const auto& [k, c] : x)
        if (k.is_mat() && k.i == k.j && k.m0 == 0 && k.m1 == 0) trace += c;
    return trace.is_zero();
}

bool is_plus(const BasisKey& k) { return k.is_mat() && (k.m0 >= 1 || (k.m0 == 0 && k.i < k.j)); }
bool is_minus(const BasisKey& k) { return k.is_mat() && (k.m0 <= -1 || (k.m0 == 0 && k.i > k.j)); }

HCoords cartan_coordinates(const GlqElement& x, int N, const Scalar& q) {
    HCoords out;
    std::map<long, std::vector<Scalar>> diag;
    Scalar k0;
    for (const auto& [k, c] : x) {
        if (k.kind == BasisKey::Kind::K0) {
            k0 = c;
        } else if (k.kind == BasisKey::Kind::K1) {
            out.k1 = c;
        } else {
            if (k.m0 != 0 || k.i != k.j) throw std::invalid_argument("not a Cartan element");
            auto& v = diag[k.m1];
            v.resize(static_cast<std::size_t>(N));
            v[k.i - 1] = c;
        }
    }
    if (!k0.is_zero()) diag[0].resize(static_cast<std::size_t>(N));
    for (auto& [n, c] : diag) {
        std::vector<Scalar> xs(static_cast<std::size_t>(N));
        if (n != 0) {
            Scalar total;
            for (const auto& v : c) total += v;
            xs[N - 1] = total / (Scalar(1) - q.pow(n));
            xs[0] = c[0] + q.pow(n) * xs[N - 1];
        } else {
            xs[N - 1] = k0;
            xs[0] = c[0] + k0;
        }
        for (int r = 2; r < N; ++r) xs[r - 1] = c[r - 1] + xs[r - 2];
        for (int r = 1; r <= N; ++r)
            if (!xs[r - 1].is_zero()) out.h[{r, n}] = xs[r - 1];
    }
    if (from_cartan_coordinates(out, N, q) != x) throw NotInSl();
    return out;
}

GlqElement from_cartan_coordinates(const HCoords& c, int N, const Scalar& q) {
    GlqElement out;
    for (const auto& [key, v] : c.h) out.add(h_gen(key.first, key.second, N, q), v);
    out.add(BasisKey::k1(), c.k1);
    return out;
}

TriangularSplit triangular_split(const GlqElement& x, int N, const Scalar& q) {
    if (!in_sl(x)) throw NotInSl();
    TriangularSplit s;
    for (const auto& [k, c] : x) {
        if (is_plus(k)) s.plus.add(k, c);
        else if (is_minus(k)) s.minus.add(k, c);
        else s.zero.add(k, c);
    }
    s.zero_coords = cartan_coordinates(s.zero, N, q);
    return s;
}

std::map<long, GlqElement> grade(const GlqElement& x) {
    std::map<long, GlqElement> out;
    for (const auto& [k, c] : x) out[k.degree()].add(k, c);
    return out;
}

std::string to_string(const BasisKey& k) {
    switch (k.kind) {
        case BasisKey::Kind::K0: return "k0";
        case BasisKey::Kind::K1: return "k1";
        default: break;
    }
    return "E[" + std::to_string(k.i) + "," + std::to_string(k.j) + "]*t0^" + std::to_string(k.m0) +
           "*t1^" + std::to_string(k.m1);
}

std::string to_string(const GlqElement& x) {
    std::vector<std::string> terms;
    for (const auto& [k, c] : x) terms.push_back(text::term(c, to_string(k)));
    return text::join(terms);
}

GlqElement parse_glq(std::string_view s) {
    static const std::regex mat(R"(E\[\s*(\d+)\s*,\s*(\d+)\s*\]((?:\*t[01]\^-?\d+)*))");
    static const std::regex power(R"(\*t([01])\^(-?\d+))");
    GlqElement out;
    for (auto& [c, key] : text::split_terms(s)) {
        if (key == "k0") { out.add(BasisKey::k0(), c); continue; }
        if (key == "k1") { out.add(BasisKey::k1(), c); continue; }
        std::smatch m;
        if (!std::regex_match(key, m, mat)) throw std::invalid_argument("unknown basis element '" + key + "'");
        long e[2] = {0, 0};
        const std::string tail = m[3];
        for (auto it = std::sregex_iterator(tail.begin(), tail.end(), power); it != std::sregex_iterator(); ++it)
            e[(*it)[1] == "1"] += std::stol((*it)[2]);
        out.add(BasisKey::mat(std::stoi(m[1]), std::stoi(m[2]), e[0], e[1]), c);
    }
    return out;
}

}  // namespace qtorus
