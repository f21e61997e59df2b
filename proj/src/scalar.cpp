#include "qtorus/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qtorus {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string_view t = trim(text);
    std::string_view p = t, r = "1";
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        p = trim(t.substr(0, slash));
        r = trim(t.substr(slash + 1));
    }
    if (!is_int(p, true) || !is_int(r, false))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    std::string ps(p);
    if (ps.front() == '+') ps.erase(0, 1);
    mpz_class n(ps), d{std::string(r)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class v(n, d);
    v.canonicalize();
    return Scalar(std::move(v));
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(mpq_class(n, d));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Scalar(mpq_class(1 / v_));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

NotGeneric::NotGeneric(std::size_t i_, std::size_t j_, long n_)
    : std::runtime_error("parameters not generic: a_" + std::to_string(i_) + " = q^" +
                         std::to_string(n_) + " a_" + std::to_string(j_)),
      i(i_), j(j_), n(n_) {}

void check_q(const Scalar& q) {
    if (q.is_zero() || q == Scalar(1) || q == Scalar(-1))
        throw InvalidQ("q must lie outside {0, 1, -1}, got " + q.str());
}

std::optional<long> gamma_q_exponent(const Scalar& x, const Scalar& q) {
    check_q(q);
    if (x.is_zero()) throw std::invalid_argument("gamma_q_exponent of zero");
    // max(|num|, den) of q^n is at least 2^|n|.
    mpz_class xn = abs(x.num());
    const long bound = static_cast<long>(std::max(mpz_sizeinbase(xn.get_mpz_t(), 2),
                                                  mpz_sizeinbase(x.den().get_mpz_t(), 2)));
    Scalar up(1), down(1);
    const Scalar qi = q.inverse();
    if (x.is_one()) return 0L;
    for (long n = 1; n <= bound; ++n) {
        up *= q;
        down *= qi;
        if (up == x) return n;
        if (down == x) return -n;
    }
    return std::nullopt;
}

PartitionI validate_spectrum(const std::vector<Scalar>& a, const Scalar& q) {
    check_q(q);
    for (const auto& v : a)
        if (v.is_zero()) throw InvalidParams("a_p must be nonzero");
    const std::size_t ell = a.size();
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j) {
            if (a[i] == a[j]) continue;
            if (auto n = gamma_q_exponent(a[i] / a[j], q)) {
                if (*n > 0) throw NotGeneric(i + 1, j + 1, *n);
                throw NotGeneric(j + 1, i + 1, -*n);
            }
        }
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(ell, false);
    for (std::size_t i = 0; i < ell; ++i) {
        if (seen[i]) continue;
        std::vector<int> b;
        for (std::size_t j = i; j < ell; ++j)
            if (!seen[j] && a[j] == a[i]) {
                seen[j] = true;
                b.push_back(static_cast<int>(j + 1));
            }
        blocks.push_back(std::move(b));
    }
    return PartitionI(std::move(blocks));
}

void ParameterSet::validate() const {
    check_q(q);
    if (N < 2) throw InvalidParams("N must be at least 2");
    if (a.empty()) throw InvalidParams("at least one parameter a_p is required");
    for (const auto& v : a)
        if (v.is_zero()) throw InvalidParams("a_p must be nonzero");
}

}  // namespace qtorus
