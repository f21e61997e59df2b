#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtorus/duality.hpp"
#include "qtorus/fock.hpp"
#include "qtorus/glrep.hpp"
#include "qtorus/partition.hpp"
#include "qtorus/scalar.hpp"
#include "qtorus/suites.hpp"
#include "qtorus/textform.hpp"

using namespace qtorus;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kNotGeneric = 3 };

struct Common {
    int N = 2;
    int ell = 0;
    std::string q = "2";
    std::string a;
    long n_max = 2;
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "json";
};

std::vector<Scalar> scalar_list(const std::string& s) {
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
    return out;
}

ParameterSet make_params(const Common& c) {
    if (c.a.empty()) throw InvalidParams("--a is required");
    ParameterSet p{Scalar::parse(c.q), scalar_list(c.a), c.N};
    if (c.ell != 0 && c.ell != p.ell()) throw InvalidParams("--ell does not match the length of --a");
    p.validate();
    return p;
}

void emit(const std::string& text, const Common& c) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw std::runtime_error("cannot write " + c.output);
    f << text;
}

int finish(const DecompositionReport& rep, const Common& c) {
    emit(c.format == "tsv" ? rep.to_tsv() : rep.to_json().dump(2) + "\n", c);
    return rep.pass ? kPass : kFail;
}

void add_common(CLI::App* sub, Common& c, bool with_a = true) {
    sub->add_option("--N", c.N, "rank N")->check(CLI::Range(2, 64));
    sub->add_option("--q", c.q, "q as p/r");
    if (with_a) {
        sub->add_option("--ell", c.ell, "level l (must match --a)")->check(CLI::Range(1, 16));
        sub->add_option("--a", c.a, "comma separated a_1..a_l");
    }
    sub->add_option("--n-max", c.n_max, "largest degree")->check(CLI::Range(0L, 64L));
    sub->add_option("--seed", c.seed, "sampling seed");
    sub->add_option("--output", c.output, "report path (stdout if absent)");
    sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

Weight weight_arg(const std::string& s) { return text::int_tuple(s, '(', ')'); }

json weight_table(const std::map<Weight, long>& t) {
    json out = json::object();
    for (const auto& [w, m] : t)
        if (m != 0) out[weight_str(w)] = m;
    return out;
}

// Dominant weights on `merged` bounded below by min(0, entries of mu, nu).
// For polynomial mu, nu this is the Littlewood-Richardson range; without the
// bound a split GL_1 x GL_1 weight sits in infinitely many GL_2 modules.
std::vector<DominantWeight> candidates(const PartitionI& merged, const Weight& both) {
    long lo = 0, excess = 0;
    for (long v : both) lo = std::min(lo, v);
    for (long v : both) excess += v - lo;
    long total = 0;
    for (long v : both) total += v;
    std::vector<DominantWeight> out;
    Weight xi(both.size());
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == xi.size()) {
            long s = 0;
            for (long v : xi) s += v;
            if (s != total) return;
            try {
                out.emplace_back(xi, merged);
            } catch (const std::invalid_argument&) {
            }
            return;
        }
        for (long v = lo; v <= lo + excess; ++v) {
            xi[p] = v;
            rec(p + 1);
        }
    };
    rec(0);
    return out;
}

int run_branch(const std::string& mode, const std::string& I_text, const std::string& merged_text,
               const std::string& mu_text, const std::string& nu_text, int ell, const Common& c) {
    const PartitionI I = PartitionI::parse(I_text);
    const Weight mu = weight_arg(mu_text);
    json out = {{"mode", mode}, {"I", I.str()}, {"mu", weight_str(mu)}};
    if (mode == "diagonal") {
        std::vector<DominantWeight> ws{DominantWeight(mu, I)};
        if (!nu_text.empty()) ws.emplace_back(weight_arg(nu_text), I);
        if (!nu_text.empty()) out["nu"] = weight_str(ws.back().mu);
        out["table"] = weight_table(tensor_mult_C(ws));
        emit(out.dump(2) + "\n", c);
        return kPass;
    }
    // The split partition lives on {1..l+l'}; the first factor is {1..l}.
    const int la = mode == "tensor" ? static_cast<int>(mu.size()) : ell;
    if (la <= 0 || la >= I.ell()) throw InvalidParams("cannot split the partition at l = " + std::to_string(la));
    std::vector<std::vector<int>> A, B;
    for (const auto& b : I.blocks()) {
        if (b.back() <= la) {
            A.push_back(b);
        } else if (b.front() > la) {
            B.emplace_back();
            for (int p : b) B.back().push_back(p - la);
        } else {
            throw IncompatiblePartitions("block straddles the split at l = " + std::to_string(la));
        }
    }
    const PartitionI Ia(A), Ib(B);
    const PartitionI merged = merged_text.empty() ? PartitionI::full(I.ell()) : PartitionI::parse(merged_text);
    out["merged"] = merged.str();
    if (mode == "restrict") {
        json table = json::object();
        for (const auto& [key, m] : levi_branch_D(DominantWeight(mu, merged), Ia, Ib))
            if (m != 0) table[weight_str(key.first) + "x" + weight_str(key.second)] = m;
        out["table"] = table;
        emit(out.dump(2) + "\n", c);
        return kPass;
    }
    if (mode != "tensor") throw InvalidParams("unknown mode " + mode);
    const Weight nu = weight_arg(nu_text);
    out["nu"] = weight_str(nu);
    const DominantWeight dmu(mu, Ia), dnu(nu, Ib);
    Weight both = mu;
    both.insert(both.end(), nu.begin(), nu.end());
    std::map<Weight, long> table;
    for (const auto& xi : candidates(merged, both)) {
        const auto d = levi_branch_D(xi, Ia, Ib);
        const auto it = d.find({dmu.mu, dnu.mu});
        if (it != d.end() && it->second != 0) table[xi.mu] = it->second;
    }
    out["table"] = weight_table(table);
    emit(out.dump(2) + "\n", c);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qtorus: verification suites for sl_N over a quantum torus and its Fock modules"};
    app.require_subcommand(1);
    Common c;
    int samples = 200, pairs = 100;
    long max_degree = 2, weight_range = 2, n = 0;
    std::string b_text, bfN_text, mode, I_text, merged_text, mu_text, nu_text;
    int M0 = 2, M1 = 1;

    auto* br = app.add_subcommand("verify-bracket", "antisymmetry and Jacobi on sampled triples");
    add_common(br, c, false);
    br->add_option("--samples", samples)->check(CLI::PositiveNumber);
    auto* th = app.add_subcommand("verify-theta", "theta against the covariant bracket");
    add_common(th, c, false);
    th->add_option("--samples", samples)->check(CLI::PositiveNumber);
    auto* mo = app.add_subcommand("verify-module", "module property of rho_a");
    add_common(mo, c);
    mo->add_option("--pairs", pairs)->check(CLI::PositiveNumber);
    mo->add_option("--max-degree", max_degree)->check(CLI::Range(0L, 8L));
    auto* hw = app.add_subcommand("verify-hw", "highest weight relations of v_mu");
    add_common(hw, c);
    hw->add_option("--weight-range", weight_range)->check(CLI::Range(0L, 8L));
    auto* du = app.add_subcommand("verify-duality", "skew duality tables");
    add_common(du, c);
    auto* te = app.add_subcommand("verify-tensor", "tensor product branching");
    add_common(te, c);
    te->add_option("--b", b_text, "second factor parameters")->required();
    auto* le = app.add_subcommand("verify-levi", "Levi branching for N = N_1 + ... + N_s");
    add_common(le, c);
    le->add_option("--bfN", bfN_text, "comma separated ranks")->required();
    auto* la = app.add_subcommand("verify-lattice", "sublattice intertwiner");
    add_common(la, c);
    la->add_option("--M0", M0)->check(CLI::Range(1, 8));
    la->add_option("--M1", M1)->check(CLI::Range(1, 8));
    auto* di = app.add_subcommand("dims", "graded dimension of the Fock space");
    di->add_option("--N", c.N)->check(CLI::Range(1, 64));
    di->add_option("--ell", c.ell)->required()->check(CLI::Range(1, 64));
    di->add_option("--n", n)->required()->check(CLI::Range(0L, 400L));
    auto* bc = app.add_subcommand("branch", "branching tables");
    bc->add_option("--mode", mode)->required()->check(CLI::IsMember({"tensor", "restrict", "diagonal"}));
    bc->add_option("--I", I_text, "partition, e.g. [[1],[2]]")->required();
    bc->add_option("--merged", merged_text, "merged partition (default: one block)");
    bc->add_option("--mu", mu_text)->required();
    bc->add_option("--nu", nu_text);
    bc->add_option("--ell", c.ell, "size of the first factor (restrict)");
    bc->add_option("--output", c.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*br) return finish(verify_bracket_axioms(c.N, Scalar::parse(c.q), samples, c.seed), c);
        if (*th) return finish(verify_theta(c.N, Scalar::parse(c.q), samples, c.seed), c);
        if (*mo) return finish(verify_module(make_params(c), pairs, c.seed, max_degree), c);
        if (*hw) return finish(verify_hw(make_params(c), weight_range), c);
        if (*du) return finish(verify_skew_duality(make_params(c), c.n_max), c);
        if (*te) return finish(verify_tensor_branching(make_params(c), scalar_list(b_text), c.n_max), c);
        if (*le) {
            std::vector<int> bfN;
            for (const auto& s : scalar_list(bfN_text)) {
                if (!s.is_integer() || s.sign() <= 0) throw InvalidParams("--bfN entries must be positive integers");
                bfN.push_back(static_cast<int>(s.num().get_si()));
            }
            return finish(verify_levi_branching(bfN, make_params(c), c.n_max), c);
        }
        if (*la) return finish(verify_lattice_intertwiner(make_params(c), M0, M1, c.n_max, c.seed), c);
        if (*di) {
            emit(graded_dim(n, c.N, c.ell).get_str() + "\n", c);
            return kPass;
        }
        if (*bc) return run_branch(mode, I_text, merged_text, mu_text, nu_text, c.ell, c);
    } catch (const NotGeneric& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotGeneric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
