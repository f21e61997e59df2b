#include "qtorus/fock.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace qtorus {

namespace {

constexpr int kShift = 40;
constexpr std::int64_t kOffset = std::int64_t{1} << 39;

long floor_div(long a, long b) {
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

long phi_index(const CliffordGen& g, int N) {
    return g.bar ? g.mode * N + g.i - 1 : g.mode * N - g.i;
}

CliffordGen from_phi(int p, bool bar, long index, int N) {
    if (bar) {
        const long n = floor_div(index, N);
        return CliffordGen::psibar(static_cast<int>(index - n * N + 1), p, n);
    }
    const long n = -floor_div(-(index + 1), N);
    return CliffordGen::psi(static_cast<int>(n * N - index), p, n);
}

OrderedPair normal_order_pair(int i, int p, long m, int j, int nu, long n, NormalOrdering rule) {
    const CliffordGen a = CliffordGen::psi(i, p, m), b = CliffordGen::psibar(j, nu, n);
    const bool keep = rule == NormalOrdering::ModeCompare ? m <= n : n >= 0;
    return keep ? OrderedPair{a, b, 1} : OrderedPair{b, a, -1};
}

FockSpace::FockSpace(int N, int ell) : N_(N), ell_(ell) {
    if (N < 1 || ell < 1) throw InvalidParams("Fock space needs N >= 1 and l >= 1");
}

std::int64_t FockSpace::encode(const CliffordGen& g) const {
    if (g.p < 1 || g.p > ell_ || g.i < 1 || g.i > N_) throw std::out_of_range("generator index out of range");
    return (static_cast<std::int64_t>((g.p - 1) * 2 + (g.bar ? 1 : 0)) << kShift) + phi_index(g, N_) + kOffset;
}

CliffordGen FockSpace::decode(std::int64_t code) const {
    const auto head = static_cast<int>(code >> kShift);
    const long index = static_cast<long>((code & ((std::int64_t{1} << kShift) - 1)) - kOffset);
    return from_phi(head / 2 + 1, head % 2 == 1, index, N_);
}

std::vector<CliffordGen> FockSpace::gens(const FockMonomial& m) const {
    std::vector<CliffordGen> out;
    out.reserve(m.codes.size());
    for (auto c : m.codes) out.push_back(decode(c));
    return out;
}

namespace {

// Acts in place; returns false when the result is zero.
bool act(const FockSpace& F, const CliffordGen& g, FockMonomial& m, int& sign) {
    auto& v = m.codes;
    if (g.creates()) {
        const auto code = F.encode(g);
        auto it = std::lower_bound(v.begin(), v.end(), code);
        if (it != v.end() && *it == code) return false;
        if ((it - v.begin()) % 2) sign = -sign;
        v.insert(it, code);
        return true;
    }
    CliffordGen partner = g;
    partner.bar = !g.bar;
    partner.mode = -g.mode;
    const auto code = F.encode(partner);
    auto it = std::lower_bound(v.begin(), v.end(), code);
    if (it == v.end() || *it != code) return false;
    if ((it - v.begin()) % 2) sign = -sign;
    v.erase(it);
    return true;
}

}  // namespace

void FockSpace::apply_to(const CliffordGen& g, const FockMonomial& m, const Scalar& c, FockVector& out) const {
    FockMonomial w = m;
    int sign = 1;
    if (act(*this, g, w, sign)) out.add(w, sign > 0 ? c : -c);
}

FockVector FockSpace::apply(const CliffordGen& g, const FockVector& v) const {
    FockVector out;
    for (const auto& [m, c] : v) apply_to(g, m, c, out);
    return out;
}

FockVector FockSpace::normal_ordered(int i, int p, long m, int j, int nu, long n, const FockVector& v,
                                     NormalOrdering rule) const {
    const OrderedPair op = normal_order_pair(i, p, m, j, nu, n, rule);
    FockVector out;
    for (const auto& [mono, c] : v) {
        FockMonomial w = mono;
        int sign = op.sign;
        if (act(*this, op.right, w, sign) && act(*this, op.left, w, sign)) out.add(w, sign > 0 ? c : -c);
    }
    return out;
}

void FockSpace::bilinear_sum(int i, int pr, int j, int ps, long total, const std::function<Scalar(long)>& coeff,
                             const FockMonomial& m, const Scalar& c, FockVector& out, NormalOrdering rule) const {
    std::set<long> ks;
    for (auto code : m.codes) {
        const CliffordGen g = decode(code);
        if (!g.bar && g.p == ps && g.i == j) ks.insert(-g.mode);        // psibar_j(k) contracts
        if (g.bar && g.p == pr && g.i == i) ks.insert(g.mode + total);  // psi_i(total-k) contracts
    }
    for (long k = total; k <= -1; ++k) ks.insert(k);  // both factors create
    for (long k : ks) {
        const OrderedPair op = normal_order_pair(i, pr, total - k, j, ps, k, rule);
        FockMonomial w = m;
        int sign = op.sign;
        if (!act(*this, op.right, w, sign) || !act(*this, op.left, w, sign)) continue;
        Scalar f = coeff(k);
        if (f.is_zero()) continue;
        f *= c;
        out.add(w, sign > 0 ? f : -f);
    }
}

FockVector FockSpace::rho(const BasisKey& x, const ParameterSet& params, const FockVector& v,
                          NormalOrdering rule) const {
    if (params.ell() != ell_ || params.N != N_) throw InvalidParams("parameters do not match the Fock space");
    switch (x.kind) {
        case BasisKey::Kind::K0: return Scalar(ell_) * v;
        case BasisKey::Kind::K1: return {};
        case BasisKey::Kind::Mat: break;
    }
    const Scalar qstep = params.q.pow(-x.m1);
    std::vector<Scalar> ap;
    Scalar asum;
    for (const auto& a : params.a) {
        ap.push_back(a.pow(x.m1));
        asum += ap.back();
    }
    FockVector out;
    for (const auto& [m, c] : v)
        for (int p = 1; p <= ell_; ++p) {
            const Scalar& weight = ap[p - 1];
            bilinear_sum(x.i, p, x.j, p, x.m0, [&](long k) { return weight * qstep.pow(k); }, m, c, out, rule);
        }
    if (x.m0 == 0 && x.i == x.j && x.m1 != 0) {
        const Scalar qm = params.q.pow(x.m1);
        out.add(v, asum * qm / (Scalar(1) - qm));
    }
    return out;
}

FockVector FockSpace::rho(const GlqElement& x, const ParameterSet& params, const FockVector& v,
                          NormalOrdering rule) const {
    FockVector out;
    for (const auto& [k, c] : x) out.add(rho(k, params, v, rule), c);
    return out;
}

FockVector FockSpace::gl_ell(int r, int s, const FockVector& v) const {
    FockVector out;
    const auto one = [](long) { return Scalar(1); };
    for (const auto& [m, c] : v)
        for (int i = 1; i <= N_; ++i) bilinear_sum(i, r, i, s, 0, one, m, c, out);
    return out;
}

FockVector FockSpace::glbar(long mrow, long ncol, const FockVector& v, const std::vector<int>& block) const {
    const long m = floor_div(mrow - 1, N_), n = floor_div(ncol - 1, N_);
    const int i = static_cast<int>(mrow - m * N_), j = static_cast<int>(ncol - n * N_);
    FockVector out;
    if (block.empty()) {
        for (int p = 1; p <= ell_; ++p) out += normal_ordered(i, p, -m, j, p, n, v);
    } else {
        for (int p : block) out += normal_ordered(i, p, -m, j, p, n, v);
    }
    return out;
}

FockVector FockSpace::hw_vector(const std::vector<long>& mu) const {
    if (static_cast<int>(mu.size()) != ell_) throw InvalidParams("weight length does not match l");
    FockVector v = vacuum();
    for (int p = ell_; p >= 1; --p) {
        const long m = mu[p - 1];
        if (m >= 1)
            for (long t = -1; t >= -m; --t) v = apply(from_phi(p, false, t, N_), v);
        else
            for (long t = -1; t >= m; --t) v = apply(from_phi(p, true, t, N_), v);
    }
    return v;
}

long FockSpace::degree(const FockMonomial& m) const {
    long d = 0;
    for (auto c : m.codes) d -= decode(c).mode;
    return d;
}

std::vector<long> FockSpace::weight(const FockMonomial& m) const {
    std::vector<long> w(static_cast<std::size_t>(ell_));
    for (auto c : m.codes) {
        const CliffordGen g = decode(c);
        w[g.p - 1] += g.bar ? -1 : 1;
    }
    return w;
}

std::vector<FockMonomial> FockSpace::basis(long degree) const {
    std::vector<std::int64_t> positive;  // creators of positive degree, with degree
    std::vector<long> pdeg;
    for (long d = 1; d <= degree; ++d)
        for (int p = 1; p <= ell_; ++p)
            for (int i = 1; i <= N_; ++i) {
                positive.push_back(encode(CliffordGen::psi(i, p, -d)));
                pdeg.push_back(d);
                positive.push_back(encode(CliffordGen::psibar(i, p, -d)));
                pdeg.push_back(d);
            }
    std::vector<std::int64_t> zeros;
    for (int p = 1; p <= ell_; ++p)
        for (int i = 1; i <= N_; ++i) zeros.push_back(encode(CliffordGen::psi(i, p, 0)));

    std::vector<std::vector<std::int64_t>> heads;
    std::vector<std::int64_t> cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t from, long left) {
        if (left == 0) {
            heads.push_back(cur);
            return;
        }
        for (std::size_t t = from; t < positive.size(); ++t) {
            if (pdeg[t] > left) continue;
            cur.push_back(positive[t]);
            rec(t + 1, left - pdeg[t]);
            cur.pop_back();
        }
    };
    rec(0, degree);

    std::vector<FockMonomial> out;
    const std::size_t nz = zeros.size();
    for (const auto& h : heads)
        for (std::size_t mask = 0; mask < (std::size_t{1} << nz); ++mask) {
            FockMonomial m{h};
            for (std::size_t b = 0; b < nz; ++b)
                if (mask >> b & 1) m.codes.push_back(zeros[b]);
            std::sort(m.codes.begin(), m.codes.end());
            out.push_back(std::move(m));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FockSpace::to_string(const CliffordGen& g) const {
    return std::string(g.bar ? "psibar[" : "psi[") + std::to_string(g.i) + "," + std::to_string(g.p) + "](" +
           std::to_string(g.mode) + ")";
}

std::string FockSpace::to_string(const FockMonomial& m) const {
    if (m.codes.empty()) return "|0>";
    std::string out;
    for (auto c : m.codes) {
        if (!out.empty()) out += "*";
        out += to_string(decode(c));
    }
    return out;
}

FockMonomial FockSpace::parse_monomial(const std::string& s) const {
    FockMonomial m;
    if (s == "|0>") return m;
    static const std::regex gen(R"((psibar|psi)\[(\d+),(\d+)\]\((-?\d+)\))");
    std::size_t pos = 0;
    std::vector<CliffordGen> gs;
    while (pos < s.size()) {
        if (!gs.empty()) {
            if (s[pos] != '*') throw std::invalid_argument("bad monomial '" + s + "'");
            ++pos;
        }
        std::smatch mt;
        const std::string rest = s.substr(pos);
        if (!std::regex_search(rest, mt, gen, std::regex_constants::match_continuous))
            throw std::invalid_argument("bad monomial '" + s + "'");
        CliffordGen g{std::stoi(mt[3]), mt[1] == "psibar", std::stoi(mt[2]), std::stol(mt[4])};
        if (!g.creates()) throw std::invalid_argument("monomial contains an annihilator: '" + s + "'");
        gs.push_back(g);
        pos += static_cast<std::size_t>(mt.length(0));
    }
    for (const auto& g : gs) m.codes.push_back(encode(g));
    std::sort(m.codes.begin(), m.codes.end());
    if (std::adjacent_find(m.codes.begin(), m.codes.end()) != m.codes.end())
        throw std::invalid_argument("repeated generator in '" + s + "'");
    return m;
}

nlohmann::json FockSpace::to_json(const FockVector& v) const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, c] : v) j[to_string(m)] = c.str();
    return j;
}

FockVector FockSpace::from_json(const nlohmann::json& j) const {
    FockVector v;
    for (const auto& [k, c] : j.items()) {
        // The product may be written in any order; reorder with signs.
        FockVector w = vacuum();
        if (k != "|0>") {
            std::vector<std::string> parts;
            std::size_t start = 0;
            while (true) {
                auto star = k.find('*', start);
                parts.push_back(k.substr(start, star == std::string::npos ? std::string::npos : star - start));
                if (star == std::string::npos) break;
                start = star + 1;
            }
            for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                w = apply(decode(parse_monomial(*it).codes.front()), w);
        }
        v.add(w, Scalar::parse(c.get<std::string>()));
    }
    return v;
}

FockVector apply_linear(const FockVector& v,
                        const std::function<void(const FockMonomial&, const Scalar&, FockVector&)>& f) {
    FockVector out;
    for (const auto& [m, c] : v) f(m, c, out);
    return out;
}

mpz_class graded_dim(long n, int N, int ell) {
    if (n < 0) return 0;
    const long e = 2L * N * ell;
    std::vector<mpz_class> poly(static_cast<std::size_t>(n + 1));
    poly[0] = 1;
    for (long m = 1; m <= n; ++m)
        for (long rep = 0; rep < e; ++rep)
            for (long d = n; d >= m; --d) poly[d] += poly[d - m];
    mpz_class factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), 2, static_cast<unsigned long>(N * ell));
    return factor * poly[n];
}

}  // namespace qtorus
