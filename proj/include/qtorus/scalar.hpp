#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtorus/partition.hpp"

namespace qtorus {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : v_(static_cast<long>(v)) {}  // NOLINT
    Scalar(long num, long den);
    explicit Scalar(mpq_class v);

    /// Parses "p", "-p" or "p/r". Throws std::invalid_argument.
    static Scalar parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] const mpq_class& raw() const { return v_; }
    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    /// Integer power; negative exponents invert. Throws on 0^(negative).
    [[nodiscard]] Scalar pow(long e) const;
    [[nodiscard]] Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.v_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class v_{0};
};

struct InvalidQ : std::invalid_argument {
    explicit InvalidQ(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a_i = q^n a_j with n != 0 (1-based indices, n > 0).
struct NotGeneric : std::runtime_error {
    NotGeneric(std::size_t i, std::size_t j, long n);
    std::size_t i;
    std::size_t j;
    long n;
};

/// Throws InvalidQ unless q is outside {0, 1, -1}.
void check_q(const Scalar& q);

/// Returns n with x = q^n if it exists. The search window is bounded by the
/// bit lengths of x's numerator and denominator.
std::optional<long> gamma_q_exponent(const Scalar& x, const Scalar& q);

/// Checks that every pair of entries is either equal or outside each other's
/// q-orbit, and returns the partition of {1..l} by equality.
PartitionI validate_spectrum(const std::vector<Scalar>& a, const Scalar& q);

/// The specialization (q, a_1..a_l) together with the rank N.
struct ParameterSet {
    Scalar q;
    std::vector<Scalar> a;
    int N = 2;

    [[nodiscard]] int ell() const { return static_cast<int>(a.size()); }

    /// Throws InvalidQ / InvalidParams when the invariants fail.
    void validate() const;
};

}  // namespace qtorus
