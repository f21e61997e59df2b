#include "qtorus/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtorus {

namespace {

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& v : row) {
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::size_t leading(const IntRow& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return c;
    return row.size();
}

}  // namespace

bool IntegerEchelon::add_row(IntRow row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    make_primitive(row);
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const std::size_t p = pivots_[t];
        if (row[p] == 0) continue;
        const mpz_class a = rows_[t][p], b = row[p];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const mpz_class fa = a / g, fb = b / g;
        for (std::size_t c = 0; c < cols_; ++c) row[c] = fa * row[c] - fb * rows_[t][c];
        make_primitive(row);
    }
    const std::size_t lead = leading(row);
    if (lead == cols_) return false;
    if (row[lead] < 0)
        for (auto& v : row) v = -v;
    // Keep rows sorted by pivot so back substitution can run bottom-up.
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

bool IntegerEchelon::add_row(const std::vector<Scalar>& row) {
    mpz_class l = 1;
    for (const auto& v : row)
        if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    IntRow ir(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
        mpq_class x = row[c].raw() * l;
        ir[c] = x.get_num();
    }
    return add_row(std::move(ir));
}

std::vector<IntRow> IntegerEchelon::nullspace() const {
    // Echelon, not reduced: back substitute from the last pivot upwards.
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<IntRow> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(cols_, 0);
        x[f] = 1;
        for (std::size_t t = rows_.size(); t-- > 0;) {
            const std::size_t p = pivots_[t];
            mpq_class s = 0;
            for (std::size_t c = p + 1; c < cols_; ++c)
                if (rows_[t][c] != 0 && x[c] != 0) s += mpq_class(rows_[t][c]) * x[c];
            x[p] = -s / mpq_class(rows_[t][p]);
        }
        mpz_class l = 1;
        for (const auto& v : x)
            if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        IntRow r(cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            mpq_class y = x[c] * l;
            r[c] = y.get_num();
        }
        make_primitive(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IntRow> nullspace(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    IntegerEchelon e(cols);
    for (const auto& r : rows) e.add_row(r);
    return e.nullspace();
}

std::size_t rank(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    IntegerEchelon e(cols);
    for (const auto& r : rows) e.add_row(r);
    return e.rank();
}

}  // namespace qtorus
