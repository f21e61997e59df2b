#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtorus/liealg.hpp"
#include "qtorus/lincomb.hpp"

namespace qtorus {

/// Basis of the covariant algebra: e[i,j](m0,m1), hbar[r], kprime, k.
struct CovKey {
    enum class Kind { Eij, Hbar, Kprime, K };
    Kind kind = Kind::Eij;
    int i = 0, j = 0;
    long m0 = 0, m1 = 0;

    static CovKey e(int i, int j, long m0, long m1);
    static CovKey hbar(int r) { return {Kind::Hbar, r, 0, 0, 0}; }
    static CovKey kprime() { return {Kind::Kprime, 0, 0, 0, 0}; }
    static CovKey k() { return {Kind::K, 0, 0, 0, 0}; }

    friend auto operator<=>(const CovKey&, const CovKey&) = default;
};

using CovElement = LinComb<CovKey>;

/// E_{a,b} (t^m) in affine gl-infinity, or the central k.
struct RawKey {
    bool central = false;
    long a = 0, b = 0, m = 0;
    static RawKey unit(long a, long b, long m) { return {false, a, b, m}; }
    static RawKey k() { return {true, 0, 0, 0}; }
    friend auto operator<=>(const RawKey&, const RawKey&) = default;
};

using RawElement = LinComb<RawKey>;

struct NotInSlInfinity : std::invalid_argument {
    NotInSlInfinity() : std::invalid_argument("diagonal part is not traceless") {}
};

/// Class of E_{m,n} (t^k), m != n, as coefficient times basis key.
std::pair<Scalar, CovKey> canonicalize(long m, long n, long k, int N, const Scalar& q);

/// Class of an arbitrary element of affine sl-infinity. Throws
/// NotInSlInfinity if a diagonal slice has nonzero trace.
CovElement canonicalize(const RawElement& x, int N, const Scalar& q);

/// A fixed representative in affine sl-infinity whose class is the key.
RawElement lift(const CovKey& key, int N, const Scalar& q);

/// Sum over the group orbit of the affine bracket, for single units.
RawElement orbit_bracket(const RawKey& u, const RawKey& v, int N, const Scalar& q);
/// Number of group elements contributing a nonzero term.
int orbit_terms(const RawKey& u, const RawKey& v, int N);

CovElement cov_bracket(const CovKey& u, const CovKey& v, int N, const Scalar& q);
CovElement cov_bracket(const CovElement& u, const CovElement& v, int N, const Scalar& q);

/// The isomorphism onto the covariant algebra:
///   E_{i,j} t0^m0 t1^m1 -> q^{-m0 m1} e_{i,j}(m0, -m1),  k0 -> k,  k1 -> -k',
///   E_{r,r} - E_{r+1,r+1} -> hbar_r.
/// The plain relabeling E_{i,j} t0^m0 t1^m1 -> e_{i,j}(m0, m1) is not bracket
/// preserving: the two brackets carry inverse commutator bicharacters
/// q^{m1 n0 - m0 n1} and q^{m0 n1 - m1 n0}. Throws NotInSl.
CovElement theta(const GlqElement& x, int N, const Scalar& q);
GlqElement theta_inv(const CovElement& u, int N, const Scalar& q);

/// The plain relabeling above, kept for comparison.
CovElement relabel(const GlqElement& x, int N);

std::string to_string(const CovKey& k);
std::string to_string(const CovElement& x);
CovElement parse_cov(std::string_view text);

}  // namespace qtorus
