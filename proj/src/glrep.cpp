#include "qtorus/glrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qtorus/textform.hpp"

namespace qtorus {

namespace {

Weight trimmed(Weight w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

bool is_partition(const Weight& w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 0) return false;
        if (k > 0 && w[k] > w[k - 1]) return false;
    }
    return true;
}

long size_of(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0L); }

// Partitions of n with at most len parts and k-th part at most outer[k].
void partitions_inside(const Weight& outer, std::size_t len, long n, std::vector<Weight>& out) {
    Weight cur;
    std::function<void(long, long)> rec = [&](long left, long cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        const std::size_t k = cur.size();
        if (k >= len) return;
        const long hi = std::min({cap, left, k < outer.size() ? outer[k] : 0L});
        for (long v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
}

}  // namespace

DominantWeight::DominantWeight(Weight m, PartitionI b) : mu(std::move(m)), blocks(std::move(b)) {
    if (static_cast<int>(mu.size()) != blocks.ell())
        throw std::invalid_argument("weight length does not match the partition");
    for (const auto& blk : blocks.blocks())
        for (std::size_t t = 1; t < blk.size(); ++t)
            if (mu[blk[t] - 1] > mu[blk[t - 1] - 1])
                throw std::invalid_argument("weight " + weight_str(mu) + " is not dominant for " + blocks.str());
}

Weight DominantWeight::on_block(std::size_t r) const {
    Weight w;
    for (int p : blocks.blocks().at(r)) w.push_back(mu[p - 1]);
    return w;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + ")";
}

std::string DominantWeight::str() const { return weight_str(mu) + " blocks=" + blocks.str(); }

DominantWeight DominantWeight::parse(std::string_view text) {
    std::string s(text);
    auto pos = s.find("blocks=");
    std::string head = s.substr(0, pos);
    while (!head.empty() && head.back() == ' ') head.pop_back();
    Weight mu = text::int_tuple(head, '(', ')');
    PartitionI I = pos == std::string::npos ? PartitionI::full(static_cast<int>(mu.size()))
                                            : PartitionI::parse(s.substr(pos + 7));
    return {mu, I};
}

long lr_coeff(const Weight& lambda_in, const Weight& mu_in, const Weight& nu_in) {
    const Weight lambda = trimmed(lambda_in), mu = trimmed(mu_in), nu = trimmed(nu_in);
    if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu))
        throw std::invalid_argument("lr_coeff needs partitions");
    if (size_of(lambda) + size_of(mu) != size_of(nu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        if (lambda[r] > nu[r]) return 0;
    if (mu.empty()) return lambda == nu ? 1 : 0;

    // Skew cells in reading order: rows top to bottom, right to left.
    struct Cell { std::size_t row; long col; };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < nu.size(); ++r) {
        const long start = r < lambda.size() ? lambda[r] : 0;
        for (long c = nu[r] - 1; c >= start; --c) cells.push_back({r, c});
    }
    std::vector<std::vector<int>> fill(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) fill[r].assign(static_cast<std::size_t>(nu[r]), 0);
    std::vector<long> count(mu.size() + 1, 0);
    const int letters = static_cast<int>(mu.size());
    long total = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[t];
        int hi = letters;
        if (c + 1 < nu[r] && fill[r][c + 1] != 0) hi = std::min(hi, fill[r][c + 1]);  // rows weakly increase
        int lo = 1;
        if (r > 0 && c < nu[r - 1] && fill[r - 1][c] != 0) lo = fill[r - 1][c] + 1;     // columns strictly increase
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= mu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
            ++count[v];
            fill[r][c] = v;
            rec(t + 1);
            fill[r][c] = 0;
            --count[v];
        }
    };
    rec(0);
    return total;
}

std::map<Weight, long> lr_product(const Weight& lambda_in, const Weight& mu_in, std::size_t max_len) {
    const Weight lambda = trimmed(lambda_in), mu = trimmed(mu_in);
    std::map<Weight, long> out;
    const long n = size_of(lambda) + size_of(mu);
    const std::size_t len = std::min(max_len, lambda.size() + mu.size());
    const long first = (lambda.empty() ? 0 : lambda[0]) + (mu.empty() ? 0 : mu[0]);
    Weight outer(len, first);
    std::vector<Weight> cands;
    partitions_inside(outer, len, n, cands);
    for (const auto& nu : cands) {
        const long c = lr_coeff(lambda, mu, nu);
        if (c != 0) out[nu] = c;
    }
    return out;
}

long weyl_dim(const Weight& mu) {
    mpq_class d = 1;
    const long n = static_cast<long>(mu.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            if (mu[i] < mu[j]) throw std::invalid_argument("weyl_dim needs a weakly decreasing weight");
            d *= mpq_class(mu[i] - mu[j] + j - i, j - i);
        }
    d.canonicalize();
    return d.get_num().get_si();
}

long weyl_dim(const DominantWeight& mu) {
    long d = 1;
    for (std::size_t r = 0; r < mu.blocks.size(); ++r) d *= weyl_dim(mu.on_block(r));
    return d;
}

namespace {

Weight shifted(const Weight& w, long c) {
    Weight out = w;
    for (auto& v : out) v += c;
    return out;
}

Weight padded(Weight w, std::size_t len) {
    w.resize(len, 0);
    return w;
}

// Branching GL_{s+t} -> GL_s x GL_t for one block.
std::map<std::pair<Weight, Weight>, long> branch_block(const Weight& xi, std::size_t s, std::size_t t) {
    std::map<std::pair<Weight, Weight>, long> out;
    if (s == 0 || t == 0) {
        out[{s ? xi : Weight{}, s ? Weight{} : xi}] = 1;
        return out;
    }
    const long c = -*std::min_element(xi.begin(), xi.end());
    const Weight x = shifted(xi, c);  // a partition
    const long total = size_of(x);
    std::vector<Weight> inner;
    for (long k = 0; k <= total; ++k) partitions_inside(x, s, k, inner);
    for (const auto& lam : inner) {
        const long rest = total - size_of(lam);
        std::vector<Weight> others;
        partitions_inside(x, t, rest, others);
        for (const auto& nu : others) {
            const long v = lr_coeff(lam, nu, x);
            if (v == 0) continue;
            out[{shifted(padded(lam, s), -c), shifted(padded(nu, t), -c)}] = v;
        }
    }
    return out;
}

}  // namespace

std::map<std::pair<Weight, Weight>, long> levi_branch_D(const DominantWeight& xi, const PartitionI& Ia,
                                                        const PartitionI& Ib) {
    const int la = Ia.ell(), lb = Ib.ell();
    if (xi.blocks.ell() != la + lb) throw IncompatiblePartitions("partition sizes do not add up");
    std::map<std::pair<Weight, Weight>, long> acc{{{Weight(la, 0), Weight(lb, 0)}, 1}};
    for (std::size_t r = 0; r < xi.blocks.size(); ++r) {
        std::vector<int> A, B;
        for (int p : xi.blocks.blocks()[r]) (p <= la ? A : B).push_back(p <= la ? p : p - la);
        auto check = [&](const std::vector<int>& part, const PartitionI& I) {
            if (part.empty()) return;
            if (I.blocks()[I.block_of(part.front())] != part)
                throw IncompatiblePartitions("block " + weight_str(Weight(part.begin(), part.end())) + " does not match " + I.str());
        };
        check(A, Ia);
        check(B, Ib);
        const auto local = branch_block(xi.on_block(r), A.size(), B.size());
        std::map<std::pair<Weight, Weight>, long> next;
        for (const auto& [key, m] : acc)
            for (const auto& [lk, lm] : local) {
                auto k2 = key;
                for (std::size_t t = 0; t < A.size(); ++t) k2.first[A[t] - 1] = lk.first[t];
                for (std::size_t t = 0; t < B.size(); ++t) k2.second[B[t] - 1] = lk.second[t];
                next[k2] += m * lm;
            }
        acc = std::move(next);
    }
    return acc;
}

std::map<Weight, long> tensor_mult_C(const std::vector<DominantWeight>& mus) {
    if (mus.empty()) throw std::invalid_argument("tensor_mult_C needs at least one weight");
    const PartitionI& I = mus.front().blocks;
    for (const auto& m : mus)
        if (!(m.blocks == I)) throw IncompatiblePartitions("weights live on different partitions");
    std::map<Weight, long> acc{{Weight(static_cast<std::size_t>(I.ell()), 0), 1}};
    for (std::size_t r = 0; r < I.size(); ++r) {
        const std::size_t s = I.blocks()[r].size();
        long shift = 0;
        std::map<Weight, long> local{{Weight{}, 1}};
        for (const auto& m : mus) {
            Weight w = m.on_block(r);
            const long c = -w.back();  // entries are decreasing along the block
            shift += c;
            const Weight part = trimmed(shifted(w, c));
            std::map<Weight, long> next;
            for (const auto& [lam, mult] : local)
                for (const auto& [nu, v] : lr_product(lam, part, s)) next[nu] += mult * v;
            local = std::move(next);
        }
        std::map<Weight, long> next;
        for (const auto& [key, m] : acc)
            for (const auto& [nu, v] : local) {
                Weight k2 = key;
                const Weight full = shifted(padded(nu, s), -shift);
                for (std::size_t t = 0; t < s; ++t) k2[I.blocks()[r][t] - 1] = full[t];
                next[k2] += m * v;
            }
        acc = std::move(next);
    }
    return acc;
}

std::pair<long, int> mu_decompose(long mu, int N) {
    long dot = (mu - 1) / N;
    if ((mu - 1) % N != 0 && mu - 1 < 0) --dot;
    return {dot, static_cast<int>(mu - dot * N)};
}

Scalar eta_eval(const EtaFunctional& eta, int i, long n) {
    Scalar out;
    for (std::size_t k = 0; k < eta.mu.size(); ++k) {
        auto [dot, ddot] = mu_decompose(eta.mu[k], eta.N);
        if (ddot == i) out += (eta.a[k] * eta.q.pow(-dot)).pow(n);
    }
    return out;
}

bool eta_equiv(const EtaFunctional& e1, const EtaFunctional& e2) {
    if (e1.N != e2.N || !(e1.q == e2.q) || e1.mu.size() != e2.mu.size()) return false;
    auto pairs = [](const EtaFunctional& e) {
        std::vector<std::pair<int, Scalar>> out;
        for (std::size_t k = 0; k < e.mu.size(); ++k) {
            auto [dot, ddot] = mu_decompose(e.mu[k], e.N);
            out.emplace_back(ddot, e.a[k] * e.q.pow(-dot));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return pairs(e1) == pairs(e2);
}

}  // namespace qtorus
