#pragma once

#include <map>
#include <utility>

#include "qtorus/scalar.hpp"

namespace qtorus {

/// Finite linear combination of ordered keys with exact coefficients.
/// Zero coefficients are never stored.
template <class Key>
class LinComb {
public:
    using map_type = std::map<Key, Scalar>;

    LinComb() = default;
    explicit LinComb(const Key& k, Scalar c = Scalar(1)) { add(k, c); }

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    [[nodiscard]] Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    [[nodiscard]] const map_type& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Scalar(-1)); return *this; }
    LinComb& operator*=(const Scalar& c) {
        if (c.is_zero()) terms_.clear();
        else for (auto& kv : terms_) kv.second *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
    friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

}  // namespace qtorus
