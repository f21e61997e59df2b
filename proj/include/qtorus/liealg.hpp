#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtorus/lincomb.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

/// E[i,j]*t0^m0*t1^m1, or one of the central elements k0, k1.
struct BasisKey {
    enum class Kind { Mat, K0, K1 };
    Kind kind = Kind::Mat;
    int i = 0, j = 0;
    long m0 = 0, m1 = 0;

    static BasisKey mat(int i, int j, long m0 = 0, long m1 = 0) { return {Kind::Mat, i, j, m0, m1}; }
    static BasisKey k0() { return {Kind::K0, 0, 0, 0, 0}; }
    static BasisKey k1() { return {Kind::K1, 0, 0, 0, 0}; }

    [[nodiscard]] bool is_mat() const { return kind == Kind::Mat; }
    /// Degree for the -d0 grading.
    [[nodiscard]] long degree() const { return is_mat() ? -m0 : 0; }

    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

using GlqElement = LinComb<BasisKey>;

struct NotInSl : std::invalid_argument {
    NotInSl() : std::invalid_argument("element does not lie in the trace-zero subalgebra") {}
};

inline GlqElement E(int i, int j, long m0 = 0, long m1 = 0) { return GlqElement(BasisKey::mat(i, j, m0, m1)); }
inline GlqElement K0() { return GlqElement(BasisKey::k0()); }
inline GlqElement K1() { return GlqElement(BasisKey::k1()); }

GlqElement bracket(const BasisKey& x, const BasisKey& y, const Scalar& q);
GlqElement bracket(const GlqElement& x, const GlqElement& y, const Scalar& q);

/// The generators h_{i,n} of the Cartan part, 1 <= i <= N.
GlqElement h_gen(int i, long n, int N, const Scalar& q);

/// True when the (0,0)-degree diagonal part is traceless.
bool in_sl(const GlqElement& x);

/// Coordinates of a Cartan element in the basis {h_{i,n}} plus k1.
struct HCoords {
    std::map<std::pair<int, long>, Scalar> h;
    Scalar k1;
    friend bool operator==(const HCoords&, const HCoords&) = default;
};

struct TriangularSplit {
    GlqElement plus, zero, minus;
    HCoords zero_coords;
};

/// Throws NotInSl.
TriangularSplit triangular_split(const GlqElement& x, int N, const Scalar& q);

/// Cartan element -> h coordinates. Throws std::invalid_argument if x has
/// terms outside m0 = 0 diagonal, k0, k1.
HCoords cartan_coordinates(const GlqElement& x, int N, const Scalar& q);
GlqElement from_cartan_coordinates(const HCoords& c, int N, const Scalar& q);

/// Homogeneous components by degree.
std::map<long, GlqElement> grade(const GlqElement& x);

bool is_plus(const BasisKey& k);
bool is_minus(const BasisKey& k);

std::string to_string(const BasisKey& k);
std::string to_string(const GlqElement& x);
/// Parses "3/2*E[1,2]*t0^1*t1^-1 + -1*k0"; "0" is the zero element.
GlqElement parse_glq(std::string_view text);

}  // namespace qtorus
